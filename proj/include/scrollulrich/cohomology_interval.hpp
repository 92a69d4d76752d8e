#pragma once

#include <scrollulrich/numeric.hpp>

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace scrollulrich {

// One cohomology dimension, known exactly (lo == hi) or only within [lo, hi].
struct CohBound {
    Int lo{};
    Int hi{};

    static CohBound exact(Int n) { return {n, n}; }
    bool is_exact() const { return lo == hi; }
    bool contains(const Int& n) const { return lo <= n && n <= hi; }
    friend bool operator==(const CohBound&, const CohBound&) = default;
};

inline std::string to_string(const CohBound& b) {
    if (b.is_exact()) return b.lo.str();
    return "[" + b.lo.str() + "," + b.hi.str() + "]";
}

// Cohomology profile in degrees 0..N-1 with an always-exact Euler characteristic.
template <std::size_t N>
struct CohProfile {
    std::array<CohBound, N> h{};
    Int chi{};

    bool all_exact() const {
        for (const auto& x : h)
            if (!x.is_exact()) return false;
        return true;
    }
    bool all_zero() const {
        for (const auto& x : h)
            if (!(x.lo == 0 && x.hi == 0)) return false;
        return true;
    }
    friend bool operator==(const CohProfile&, const CohProfile&) = default;
};

using CohInterval3 = CohProfile<3>;
using CohInterval4 = CohProfile<4>;

// Bound propagation for 0 -> sub -> ext -> quot -> 0:
//   h^i(ext) = h^i(sub) + h^i(quot) - rank(d^{i-1}) - rank(d^i),
// where d^i : H^i(quot) -> H^{i+1}(sub) is the connecting map, so
// rank(d^i) <= min(h^i(quot), h^{i+1}(sub)). Upper bounds add; lower bounds
// subtract the largest possible connecting ranks (clamped at 0).
template <std::size_t N>
CohProfile<N> les_extend(const CohProfile<N>& sub, const CohProfile<N>& quot) {
    CohProfile<N> out;
    out.chi = sub.chi + quot.chi;
    auto dmax = [&](std::size_t i) -> Int {
        if (i + 1 >= N) return 0;
        return imin(quot.h[i].hi, sub.h[i + 1].hi);
    };
    for (std::size_t i = 0; i < N; ++i) {
        Int hi = sub.h[i].hi + quot.h[i].hi;
        Int lo = sub.h[i].lo + quot.h[i].lo - dmax(i);
        if (i > 0) lo -= dmax(i - 1);
        out.h[i] = {imax(lo, 0), hi};
    }
    return out;
}

// Tighten every degree against the exact chi and nonnegativity, iterating to a
// fixpoint. Since chi = sum (-1)^i h_i is exact, each h_i is pinched by the
// bounds of all the others; in particular a profile with a single non-exact
// degree always collapses to exact. Throws std::logic_error if the constraints
// are unsatisfiable - that would mean an engine bug, not bad input.
template <std::size_t N>
CohProfile<N> normalize(CohProfile<N> v) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < N; ++i) {
            // Bounds for R = chi - sum_{j != i} (-1)^j h_j = (-1)^i h_i.
            Int rmin = v.chi, rmax = v.chi;
            for (std::size_t j = 0; j < N; ++j) {
                if (j == i) continue;
                if (j % 2 == 0) {
                    rmin -= v.h[j].hi;
                    rmax -= v.h[j].lo;
                } else {
                    rmin += v.h[j].lo;
                    rmax += v.h[j].hi;
                }
            }
            Int nlo = (i % 2 == 0) ? rmin : -rmax;
            Int nhi = (i % 2 == 0) ? rmax : -rmin;
            nlo = imax(imax(nlo, v.h[i].lo), 0);
            nhi = imin(nhi, v.h[i].hi);
            if (nlo > nhi)
                throw std::logic_error(
                    "cohomology bounds inconsistent with chi (engine bug): degree " +
                    std::to_string(i));
            if (nlo != v.h[i].lo || nhi != v.h[i].hi) {
                v.h[i] = {nlo, nhi};
                changed = true;
            }
        }
    }
    return v;
}

}  // namespace scrollulrich
