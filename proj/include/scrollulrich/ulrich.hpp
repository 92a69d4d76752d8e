#pragma once

#include <scrollulrich/chow.hpp>
#include <scrollulrich/classes.hpp>
#include <scrollulrich/parallel.hpp>
#include <scrollulrich/riemann_roch.hpp>
#include <scrollulrich/scroll_cohomology.hpp>

#include <array>
#include <string_view>
#include <vector>

namespace scrollulrich {

enum class UlrichStatus { Ulrich, NotUlrich, Undecided };

inline std::string_view to_string(UlrichStatus s) {
    switch (s) {
        case UlrichStatus::Ulrich: return "ULRICH";
        case UlrichStatus::NotUlrich: return "NOT_ULRICH";
        case UlrichStatus::Undecided: return "UNDECIDED";
    }
    return "?";
}

// Verdict for the twelve vanishing conditions H^i(D - j xi) = 0, i = 0..3,
// j = 1..3. ULRICH iff all twelve are exactly 0; NOT_ULRICH iff some lower
// bound is positive; UNDECIDED otherwise. A verdict may instead be reached by
// chi alone (chi(D - j xi) = 0 is necessary); then `pruned` is set and the
// cohomology certificate is absent.
struct UlrichVerdict {
    UlrichStatus status{UlrichStatus::Undecided};
    std::array<CohInterval4, 3> twists{};  // index j-1
    bool pruned = false;
    int pruned_j = 0;
    Int pruned_chi{};
};

// Full-certificate classification of a line-bundle class.
inline UlrichVerdict is_ulrich_line(const ScrollParams& P, const DivisorClass& D) {
    UlrichVerdict v;
    bool all_zero = true, some_positive = false;
    for (int j = 1; j <= 3; ++j) {
        DivisorClass twisted = D - Int(j) * xi_class();
        v.twists[j - 1] = coh_scroll_line(P, twisted);
        for (const CohBound& hb : v.twists[j - 1].h) {
            if (!(hb.is_exact() && hb.lo == 0)) all_zero = false;
            if (hb.lo > 0) some_positive = true;
        }
    }
    v.status = all_zero    ? UlrichStatus::Ulrich
               : some_positive ? UlrichStatus::NotUlrich
                               : UlrichStatus::Undecided;
    return v;
}

// Ulrich involution D -> K_X + 4 xi - D.
inline DivisorClass ulrich_dual(const ScrollParams& P, const DivisorClass& D) {
    return canonical_class(P) + Int(4) * xi_class() - D;
}

// slope = c1.xi^2 / rank
inline Rat slope(const ScrollParams& P, const FormalSheafClass& F) {
    Codim2Class xi2 = intersect(P, xi_class(), xi_class());
    return Rat(intersect(P, F.c1, xi2)) / Rat(F.rank);
}

// Every Ulrich sheaf has slope deg(X) + g - 1.
inline Int ulrich_slope(const ScrollParams& P) {
    return scroll_degree(P) + sectional_genus(P) - 1;
}

struct ScanBox {
    int x_lo = -2;
    int x_hi = 4;
    int alpha_abs = 8;
    int beta_abs = 8;
};

struct ScanHit {
    DivisorClass cls;
    UlrichVerdict verdict;
};

// Classify every class in the box. chi-pruning runs first: if some
// chi(D - j xi) != 0 the class is NOT_ULRICH without touching cohomology.
// Cells are independent; the result is ordered by (x, alpha, beta) regardless
// of scheduling.
inline std::vector<ScanHit> ulrich_scan(const ScrollParams& P, const ScanBox& box = {}) {
    if (box.x_lo > box.x_hi || box.alpha_abs < 0 || box.beta_abs < 0)
        throw std::invalid_argument("empty scan box");
    const std::size_t nx = static_cast<std::size_t>(box.x_hi - box.x_lo + 1);
    const std::size_t na = static_cast<std::size_t>(2 * box.alpha_abs + 1);
    const std::size_t nb = static_cast<std::size_t>(2 * box.beta_abs + 1);
    std::vector<ScanHit> out(nx * na * nb);

    parallel_for(out.size(), [&](std::size_t idx) {
        std::size_t rest = idx;
        int x = box.x_lo + static_cast<int>(rest / (na * nb));
        rest %= na * nb;
        int alpha = -box.alpha_abs + static_cast<int>(rest / nb);
        int beta = -box.beta_abs + static_cast<int>(rest % nb);
        DivisorClass D{Int(x), {Int(alpha), Int(beta)}};

        UlrichVerdict v;
        for (int j = 1; j <= 3; ++j) {
            Int c = chi_scroll_line(P, D - Int(j) * xi_class());
            if (c != 0) {
                v.status = UlrichStatus::NotUlrich;
                v.pruned = true;
                v.pruned_j = j;
                v.pruned_chi = c;
                break;
            }
        }
        if (!v.pruned) v = is_ulrich_line(P, D);
        out[idx] = {D, std::move(v)};
    });
    return out;
}

}  // namespace scrollulrich
