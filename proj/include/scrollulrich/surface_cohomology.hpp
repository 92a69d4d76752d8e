#pragma once

#include <scrollulrich/classes.hpp>
#include <scrollulrich/cohomology_interval.hpp>
#include <scrollulrich/numeric.hpp>
#include <scrollulrich/scroll_params.hpp>

#include <stdexcept>

namespace scrollulrich {

// Exact cohomology of O_{P^1}(d).
inline Int h0_p1(const Int& d) { return d >= 0 ? d + 1 : Int(0); }
inline Int h1_p1(const Int& d) { return d <= -2 ? -d - 1 : Int(0); }

struct CohVector3 {
    Int h0{};
    Int h1{};
    Int h2{};
    friend bool operator==(const CohVector3&, const CohVector3&) = default;
};

// chi(L) = 1 + L.(L - K)/2 on F_e, always exact.
inline Int chi_line_fe(int e, const SurfaceClass& L) {
    const Int &a = L.alpha, &b = L.beta;
    Int self = 2 * a * b - Int(e) * a * a;        // L^2
    Int lk = (Int(e) - 2) * a - 2 * b;            // L.K
    return 1 + to_integer(Rat(self - lk) / 2, "surface chi");
}

// H^i(F_e, alpha C + beta f), exact for every line bundle:
//   alpha >= 0 : pushforward to P^1 splits as  + O(beta - j e), j = 0..alpha,
//                and the higher direct images vanish;
//   alpha = -1 : both direct images vanish;
//   alpha <= -2: Serre duality against K = -2C - (2+e) f.
inline CohVector3 coh_line_fe(int e, const SurfaceClass& L) {
    if (L.alpha >= 0) {
        if (L.alpha > 5'000'000)
            throw std::invalid_argument("surface class too large: alpha = " + L.alpha.str());
        CohVector3 v;
        for (Int j = 0; j <= L.alpha; ++j) {
            Int d = L.beta - j * e;
            v.h0 += h0_p1(d);
            v.h1 += h1_p1(d);
        }
        return v;
    }
    if (L.alpha == -1) return {};
    CohVector3 w = coh_line_fe(e, surface_canonical(e) - L);  // alpha >= 0 now
    return {w.h2, w.h1, w.h0};
}

// H^i(F_e, Sym^n(E) x L) with interval semantics. The fixed filtration of
// Sym^n(E) has line-bundle pieces  j*A + (n-j)*B + L  for A the sub and B the
// quotient class of E; pieces are folded in from j = n down to 0, each step an
// extension with the accumulated bundle as sub. Entries are exact whenever the
// connecting maps are forced by adjacent zeros; chi is exact always.
inline CohInterval3 coh_sym_twist(const ScrollParams& P, int n, const SurfaceClass& L) {
    if (n < 0) throw std::invalid_argument("Sym power must be >= 0");
    const SurfaceClass A = filtration_sub(P), B = filtration_quot(P);
    auto piece = [&](int j) { return Int(j) * A + Int(n - j) * B + L; };
    auto lift = [&](const SurfaceClass& c) {
        CohVector3 v = coh_line_fe(P.e, c);
        CohInterval3 out;
        out.h = {CohBound::exact(v.h0), CohBound::exact(v.h1), CohBound::exact(v.h2)};
        out.chi = v.h0 - v.h1 + v.h2;
        return out;
    };
    CohInterval3 acc = lift(piece(n));
    for (int j = n - 1; j >= 0; --j) acc = normalize(les_extend(acc, lift(piece(j))));
    return acc;
}

inline Int chi_sym_twist(const ScrollParams& P, int n, const SurfaceClass& L) {
    if (n < 0) throw std::invalid_argument("Sym power must be >= 0");
    const SurfaceClass A = filtration_sub(P), B = filtration_quot(P);
    Int chi = 0;
    for (int j = 0; j <= n; ++j) chi += chi_line_fe(P.e, Int(j) * A + Int(n - j) * B + L);
    return chi;
}

}  // namespace scrollulrich
