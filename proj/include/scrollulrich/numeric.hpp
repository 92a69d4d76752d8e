#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace scrollulrich {

// All engine arithmetic is exact: arbitrary-precision integers and rationals.
// Floating point never appears anywhere in the library.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// A degree-3 pairing (or any quantity contracted to an integer) came out with a
// nontrivial denominator. This signals an internal relation/convention bug, not
// bad user input, except where a caller deliberately probes non-realizable
// formal classes.
struct NonIntegralChi : std::runtime_error {
    explicit NonIntegralChi(const std::string& what) : std::runtime_error(what) {}
};

// Two independent computation routes that must agree, disagreed.
struct OracleMismatch : std::runtime_error {
    explicit OracleMismatch(const std::string& what) : std::runtime_error(what) {}
};

inline bool is_integral(const Rat& q) {
    return boost::multiprecision::denominator(q) == 1;
}

inline Int to_integer(const Rat& q, const char* context = "value") {
    if (!is_integral(q))
        throw NonIntegralChi(std::string(context) + " is not an integer: " + q.str());
    return boost::multiprecision::numerator(q);
}

inline Int imin(const Int& a, const Int& b) { return a < b ? a : b; }
inline Int imax(const Int& a, const Int& b) { return a > b ? a : b; }

}  // namespace scrollulrich
