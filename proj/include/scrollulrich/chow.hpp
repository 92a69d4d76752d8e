#pragma once

#include <scrollulrich/classes.hpp>
#include <scrollulrich/numeric.hpp>
#include <scrollulrich/scroll_params.hpp>

#include <array>

namespace scrollulrich {

// Graded numerical class on X with rational coefficients:
//   deg0 + deg1 over (xi, h1, h2) + deg2 over (xi.h1, xi.h2, F) + deg3*[pt],
// where h1 = phi^*C, h2 = phi^*f, F = h1.h2 the fibre class.
//
// The ring structure is Z[xi, h1, h2] modulo
//   h1^2 = -e*F,  h2^2 = 0,  h1.h2 = F,  xi^2 = 3 xi.h1 + b xi.h2 - k*F,
// everything of degree 4 vanishing, and top pairings
//   xi.F = 1, xi^2.h1 = b-3e, xi^2.h2 = 3, xi^3 = 6b-9e-k, xi.h1^2 = -e,
// with pure pullback triple products = 0.
struct GradedClass {
    Rat d0{};
    std::array<Rat, 3> d1{};
    std::array<Rat, 3> d2{};
    Rat d3{};

    static GradedClass one() {
        GradedClass g;
        g.d0 = 1;
        return g;
    }
    static GradedClass of_divisor(const DivisorClass& D) {
        GradedClass g;
        g.d1 = {Rat(D.x), Rat(D.surf.alpha), Rat(D.surf.beta)};
        return g;
    }
    static GradedClass of_codim2(const Codim2Class& c) {
        GradedClass g;
        g.d2 = {Rat(c.p), Rat(c.q), Rat(c.s)};
        return g;
    }
    static GradedClass of_point(Rat v) {
        GradedClass g;
        g.d3 = std::move(v);
        return g;
    }

    friend GradedClass operator+(GradedClass l, const GradedClass& r) {
        l.d0 += r.d0;
        for (int i = 0; i < 3; ++i) {
            l.d1[i] += r.d1[i];
            l.d2[i] += r.d2[i];
        }
        l.d3 += r.d3;
        return l;
    }
    friend GradedClass operator-(GradedClass l, const GradedClass& r) {
        l.d0 -= r.d0;
        for (int i = 0; i < 3; ++i) {
            l.d1[i] -= r.d1[i];
            l.d2[i] -= r.d2[i];
        }
        l.d3 -= r.d3;
        return l;
    }
    friend GradedClass operator*(const Rat& c, GradedClass g) {
        g.d0 *= c;
        for (int i = 0; i < 3; ++i) {
            g.d1[i] *= c;
            g.d2[i] *= c;
        }
        g.d3 *= c;
        return g;
    }
    friend bool operator==(const GradedClass&, const GradedClass&) = default;
};

// deg1 x deg1 product, already reduced to the (xi.h1, xi.h2, F) basis.
inline std::array<Rat, 3> mul11(const ScrollParams& P, const std::array<Rat, 3>& u,
                                const std::array<Rat, 3>& v) {
    const Rat e{P.e}, b{P.b}, k{P.k};
    const Rat &x = u[0], &a = u[1], &be = u[2];
    const Rat &x2 = v[0], &a2 = v[1], &be2 = v[2];
    return {
        3 * x * x2 + x * a2 + x2 * a,
        b * x * x2 + x * be2 + x2 * be,
        -k * x * x2 - e * a * a2 + a * be2 + a2 * be,
    };
}

// deg1 x deg2 pairing into the point class.
inline Rat mul12(const ScrollParams& P, const std::array<Rat, 3>& u,
                 const std::array<Rat, 3>& w) {
    const Rat e{P.e}, b{P.b};
    const Rat &x = u[0], &a = u[1], &be = u[2];
    const Rat &p = w[0], &q = w[1], &s = w[2];
    return x * (p * (b - 3 * e) + 3 * q + s) + a * (q - e * p) + be * p;
}

inline GradedClass multiply(const GradedClass& A, const GradedClass& B, const ScrollParams& P) {
    GradedClass out;
    out.d0 = A.d0 * B.d0;
    for (int i = 0; i < 3; ++i) out.d1[i] = A.d0 * B.d1[i] + B.d0 * A.d1[i];
    auto cross = mul11(P, A.d1, B.d1);
    for (int i = 0; i < 3; ++i) out.d2[i] = A.d0 * B.d2[i] + B.d0 * A.d2[i] + cross[i];
    out.d3 = A.d0 * B.d3 + B.d0 * A.d3 + mul12(P, A.d1, B.d2) + mul12(P, B.d1, A.d2);
    return out;
}

inline Rat degree3(const GradedClass& g) { return g.d3; }

// --- integer intersection helpers -------------------------------------------

inline Codim2Class intersect(const ScrollParams& P, const DivisorClass& D1,
                             const DivisorClass& D2) {
    auto w = mul11(P, GradedClass::of_divisor(D1).d1, GradedClass::of_divisor(D2).d1);
    return {to_integer(w[0]), to_integer(w[1]), to_integer(w[2])};
}

inline Int intersect(const ScrollParams& P, const DivisorClass& D, const Codim2Class& c) {
    return to_integer(
        mul12(P, GradedClass::of_divisor(D).d1, GradedClass::of_codim2(c).d2));
}

inline Int intersect(const ScrollParams& P, const DivisorClass& D1, const DivisorClass& D2,
                     const DivisorClass& D3) {
    return intersect(P, D1, intersect(P, D2, D3));
}

// deg X = xi^3 = 6b - 9e - k
inline Int scroll_degree(const ScrollParams& P) {
    return 6 * Int(P.b) - 9 * Int(P.e) - P.k;
}

// sectional genus g = 2b - 3e - 2 (satisfies 2g-2 = (K_X + 2 xi).xi^2)
inline Int sectional_genus(const ScrollParams& P) {
    return 2 * Int(P.b) - 3 * Int(P.e) - 2;
}

// --- tangent bundle and Todd class -----------------------------------------

struct TangentChern {
    DivisorClass c1;
    Codim2Class c2;
    Int c3;
};

// c(T_X) = (1 + rho) . phi^*c(T_S) with rho = 2 xi - phi^*c1(E) the relative
// tangent class, c1(T_S) = (2, 2+e), c2(T_S) = 4F.
inline TangentChern tangent_chern(const ScrollParams& P) {
    DivisorClass rho{2, -bundle_c1(P)};
    DivisorClass c1s{0, {2, Int(P.e) + 2}};
    Codim2Class c2s{0, 0, 4};
    TangentChern tc;
    tc.c1 = rho + c1s;
    tc.c2 = intersect(P, rho, c1s) + c2s;
    tc.c3 = intersect(P, rho, c2s);
    return tc;
}

// td = 1 + c1/2 + (c1^2 + c2)/12 + c1.c2/24
inline GradedClass todd_class(const ScrollParams& P) {
    TangentChern tc = tangent_chern(P);
    GradedClass c1 = GradedClass::of_divisor(tc.c1);
    GradedClass c2 = GradedClass::of_codim2(tc.c2);
    auto c1sq = mul11(P, c1.d1, c1.d1);
    Rat c1c2 = mul12(P, c1.d1, c2.d2);

    GradedClass td = GradedClass::one();
    for (int i = 0; i < 3; ++i) {
        td.d1[i] = c1.d1[i] / 2;
        td.d2[i] = (c1sq[i] + c2.d2[i]) / 12;
    }
    td.d3 = c1c2 / 24;
    return td;
}

}  // namespace scrollulrich
