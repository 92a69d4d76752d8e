#pragma once

#include <scrollulrich/numeric.hpp>
#include <scrollulrich/scroll_params.hpp>

#include <string>
#include <tuple>
#include <utility>

namespace scrollulrich {

// alpha*C + beta*f in Num(F_e); C the section class (C^2 = -e), f the fibre.
struct SurfaceClass {
    Int alpha{};
    Int beta{};

    SurfaceClass() = default;
    SurfaceClass(Int a, Int b) : alpha(std::move(a)), beta(std::move(b)) {}

    friend SurfaceClass operator+(SurfaceClass l, const SurfaceClass& r) {
        l.alpha += r.alpha;
        l.beta += r.beta;
        return l;
    }
    friend SurfaceClass operator-(SurfaceClass l, const SurfaceClass& r) {
        l.alpha -= r.alpha;
        l.beta -= r.beta;
        return l;
    }
    SurfaceClass operator-() const { return {-alpha, -beta}; }
    friend SurfaceClass operator*(const Int& n, SurfaceClass c) {
        c.alpha *= n;
        c.beta *= n;
        return c;
    }
    friend bool operator==(const SurfaceClass&, const SurfaceClass&) = default;
};

// x*xi + phi^*(surf) in Num(X), xi the tautological class of P(E).
struct DivisorClass {
    Int x{};
    SurfaceClass surf{};

    DivisorClass() = default;
    DivisorClass(Int xi_coeff, SurfaceClass s) : x(std::move(xi_coeff)), surf(std::move(s)) {}

    friend DivisorClass operator+(DivisorClass l, const DivisorClass& r) {
        l.x += r.x;
        l.surf = l.surf + r.surf;
        return l;
    }
    friend DivisorClass operator-(DivisorClass l, const DivisorClass& r) {
        l.x -= r.x;
        l.surf = l.surf - r.surf;
        return l;
    }
    DivisorClass operator-() const { return {-x, -surf}; }
    friend DivisorClass operator*(const Int& n, DivisorClass c) {
        c.x *= n;
        c.surf = n * c.surf;
        return c;
    }
    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
    friend bool operator<(const DivisorClass& l, const DivisorClass& r) {
        return std::tie(l.x, l.surf.alpha, l.surf.beta) <
               std::tie(r.x, r.surf.alpha, r.surf.beta);
    }
};

// p*(xi.phi^*C) + q*(xi.phi^*f) + s*F, where F = phi^*[pt] is the fibre class.
struct Codim2Class {
    Int p{};
    Int q{};
    Int s{};

    Codim2Class() = default;
    Codim2Class(Int p_, Int q_, Int s_) : p(std::move(p_)), q(std::move(q_)), s(std::move(s_)) {}

    friend Codim2Class operator+(Codim2Class l, const Codim2Class& r) {
        l.p += r.p;
        l.q += r.q;
        l.s += r.s;
        return l;
    }
    friend Codim2Class operator-(Codim2Class l, const Codim2Class& r) {
        l.p -= r.p;
        l.q -= r.q;
        l.s -= r.s;
        return l;
    }
    friend bool operator==(const Codim2Class&, const Codim2Class&) = default;
};

inline std::string to_string(const SurfaceClass& c) {
    return "(" + c.alpha.str() + "," + c.beta.str() + ")";
}

inline std::string to_string(const DivisorClass& d) {
    std::string out;
    if (d.x != 0) {
        if (d.x == 1)
            out = "xi";
        else if (d.x == -1)
            out = "-xi";
        else
            out = d.x.str() + "xi";
    }
    if (d.surf.alpha != 0 || d.surf.beta != 0) {
        if (!out.empty()) out += "+";
        out += to_string(d.surf);
    }
    if (out.empty()) out = "0";
    return out;
}

inline std::string to_string(const Codim2Class& c) {
    return "(" + c.p.str() + "," + c.q.str() + "," + c.s.str() + ")";
}

// --- distinguished classes -------------------------------------------------

inline SurfaceClass surface_canonical(int e) { return {-2, -(2 + e)}; }

inline SurfaceClass bundle_c1(const ScrollParams& P) { return {3, P.b}; }

// The sub/quotient classes of the fixed filtration 0 -> A -> E -> B -> 0;
// A + B = c1(E) and A.B = c2(E) = k.
inline SurfaceClass filtration_sub(const ScrollParams& P) {
    return {2, 2 * Int(P.b) - P.k - 2 * Int(P.e)};
}
inline SurfaceClass filtration_quot(const ScrollParams& P) {
    return {1, Int(P.k) - P.b + 2 * Int(P.e)};
}

inline DivisorClass xi_class() { return {1, {}}; }

// K_X = -2 xi + phi^*(K_S + c1(E))
inline DivisorClass canonical_class(const ScrollParams& P) {
    return {-2, {1, Int(P.b) - 2 - P.e}};
}

// The four Ulrich line-bundle classes on the e = 0 scrolls. L1/L2 make sense
// for any valid (0, b, k); M1/M2 exist only on the sporadic family.
inline DivisorClass ulrich_L1() { return {1, {2, -1}}; }

inline DivisorClass ulrich_L2(const ScrollParams& P) { return {1, {-1, Int(P.b) - 1}}; }

inline DivisorClass sporadic_M1(const ScrollParams& P) {
    int t = P.require_sporadic_t("M1");
    return {2, {-1, -Int(t) - 1}};
}

inline DivisorClass sporadic_M2(const ScrollParams& P) {
    int t = P.require_sporadic_t("M2");
    return {0, {2, 3 * Int(t) - 1}};
}

}  // namespace scrollulrich
