#pragma once

#include <scrollulrich/numeric.hpp>

#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace scrollulrich {

struct FormulaError : std::runtime_error {
    explicit FormulaError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

// Recursive-descent evaluator for integer-polynomial expressions in t and r
// over exact rationals. Grammar:
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := ('+' | '-')* power
//   power  := atom ('^' digits)?
//   atom   := digits | 't' | 'r' | '(' expr ')'
class FormulaParser {
  public:
    FormulaParser(std::string_view src, const Rat& t, const std::optional<Rat>& r)
        : src_(src), t_(t), r_(r) {}

    Rat run() {
        Rat v = expr();
        skip_ws();
        if (pos_ != src_.size()) fail("unexpected trailing input");
        return v;
    }

  private:
    std::string_view src_;
    std::size_t pos_ = 0;
    Rat t_;
    std::optional<Rat> r_;

    [[noreturn]] void fail(const std::string& why) const {
        throw FormulaError("formula error at offset " + std::to_string(pos_) + " in \"" +
                           std::string(src_) + "\": " + why);
    }
    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    Rat expr() {
        Rat v = term();
        for (;;) {
            if (eat('+'))
                v += term();
            else if (eat('-'))
                v -= term();
            else
                return v;
        }
    }

    Rat term() {
        Rat v = unary();
        for (;;) {
            if (eat('*')) {
                v *= unary();
            } else if (eat('/')) {
                Rat d = unary();
                if (d == 0) fail("division by zero");
                v /= d;
            } else {
                return v;
            }
        }
    }

    Rat unary() {
        bool neg = false;
        for (;;) {
            if (eat('-'))
                neg = !neg;
            else if (eat('+'))
                ;
            else
                break;
        }
        Rat v = power();
        return neg ? -v : v;
    }

    Rat power() {
        Rat base = atom();
        if (!eat('^')) return base;
        skip_ws();
        if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
            fail("exponent must be a nonnegative integer literal");
        unsigned long exp = 0;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            exp = exp * 10 + static_cast<unsigned long>(src_[pos_] - '0');
            if (exp > 64) fail("exponent too large");
            ++pos_;
        }
        Rat v = 1;
        for (unsigned long i = 0; i < exp; ++i) v *= base;
        return v;
    }

    Rat atom() {
        skip_ws();
        if (pos_ >= src_.size()) fail("unexpected end of input");
        char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int n = 0;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                n = n * 10 + (src_[pos_] - '0');
                ++pos_;
            }
            return Rat(n);
        }
        if (c == 't') {
            ++pos_;
            return t_;
        }
        if (c == 'r') {
            if (!r_) fail("variable r is not available for this claim");
            ++pos_;
            return *r_;
        }
        if (c == '(') {
            ++pos_;
            Rat v = expr();
            if (!eat(')')) fail("missing ')'");
            return v;
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

}  // namespace detail

inline Rat eval_formula(std::string_view src, const Rat& t,
                        const std::optional<Rat>& r = std::nullopt) {
    return detail::FormulaParser(src, t, r).run();
}

// Evaluate and require an integer result; the closed forms in the registry
// are integer-valued on their domains even when subterms are not.
inline Int eval_int_formula(std::string_view src, int t, std::optional<int> r = std::nullopt) {
    std::optional<Rat> rr;
    if (r) rr = Rat(*r);
    Rat v = eval_formula(src, Rat(t), rr);
    if (!is_integral(v))
        throw FormulaError("formula \"" + std::string(src) + "\" is not integral at t=" +
                           std::to_string(t) + (r ? ", r=" + std::to_string(*r) : "") + ": " +
                           v.str());
    return boost::multiprecision::numerator(v);
}

}  // namespace scrollulrich
