#pragma once

#include <scrollulrich/classes.hpp>
#include <scrollulrich/cohomology_interval.hpp>
#include <scrollulrich/surface_cohomology.hpp>

#include <span>
#include <stdexcept>
#include <vector>

namespace scrollulrich {

namespace detail {
inline int xi_degree_as_int(const Int& x) {
    if (x > 1'000'000 || x < -1'000'000)
        throw std::invalid_argument("xi-coefficient out of supported range: " + x.str());
    return static_cast<int>(x);
}
}  // namespace detail

// H^i(X, x*xi + phi^*L) for the 3-fold scroll, via the Leray pushforward:
//   x >= 0 : H^i(X, D) = H^i(F_e, Sym^x(E) x L), degree 3 vanishes;
//   x = -1 : everything vanishes (no direct images);
//   x <= -2: Serre duality against K_X, whose reduction has xi-degree >= 0.
// chi is exact even when individual degrees are intervals.
inline CohInterval4 coh_scroll_line(const ScrollParams& P, const DivisorClass& D) {
    int x = detail::xi_degree_as_int(D.x);
    if (x >= 0) {
        CohInterval3 s = coh_sym_twist(P, x, D.surf);
        CohInterval4 out;
        out.h = {s.h[0], s.h[1], s.h[2], CohBound::exact(0)};
        out.chi = s.chi;
        return out;
    }
    if (x == -1) return {};
    CohInterval4 w = coh_scroll_line(P, canonical_class(P) - D);
    CohInterval4 out;
    for (int i = 0; i < 4; ++i) out.h[i] = w.h[3 - i];
    out.chi = -w.chi;
    return out;
}

// Exact Euler characteristic by the same pushforward route, skipping all
// interval bookkeeping. (The Todd-class route lives in riemann_roch and is
// cross-checked against this one.)
inline Int chi_scroll_line(const ScrollParams& P, const DivisorClass& D) {
    int x = detail::xi_degree_as_int(D.x);
    if (x >= 0) return chi_sym_twist(P, x, D.surf);
    if (x == -1) return 0;
    return -chi_scroll_line(P, canonical_class(P) - D);
}

// Cohomology of (iterated extension of line bundles) x O(twist): fold the
// constituents in listed order, the accumulated bundle always the sub.
inline CohInterval4 coh_tower_twist(const ScrollParams& P, std::span<const DivisorClass> layers,
                                    const DivisorClass& twist) {
    if (layers.empty()) throw std::invalid_argument("tower must have at least one constituent");
    CohInterval4 acc = coh_scroll_line(P, layers[0] + twist);
    for (std::size_t i = 1; i < layers.size(); ++i)
        acc = normalize(les_extend(acc, coh_scroll_line(P, layers[i] + twist)));
    return acc;
}

// Serre duality probe: h^i(D) = h^{3-i}(K_X - D) wherever both sides are
// exact, and chi(D) = -chi(K_X - D) unconditionally.
inline bool serre_check(const ScrollParams& P, const DivisorClass& D) {
    CohInterval4 lhs = coh_scroll_line(P, D);
    CohInterval4 rhs = coh_scroll_line(P, canonical_class(P) - D);
    if (lhs.chi != -rhs.chi) return false;
    for (int i = 0; i < 4; ++i) {
        const CohBound &a = lhs.h[i], &b = rhs.h[3 - i];
        if (a.is_exact() && b.is_exact() && a.lo != b.lo) return false;
    }
    return true;
}

}  // namespace scrollulrich
