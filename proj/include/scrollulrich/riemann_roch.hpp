#pragma once

#include <scrollulrich/chow.hpp>
#include <scrollulrich/classes.hpp>
#include <scrollulrich/scroll_cohomology.hpp>

#include <span>
#include <string>

namespace scrollulrich {

// Numerical shadow of a sheaf: rank and Chern classes up to degree 3.
struct FormalSheafClass {
    Int rank{1};
    DivisorClass c1{};
    Codim2Class c2{};
    Int c3{};

    static FormalSheafClass structure_sheaf() { return {}; }
    static FormalSheafClass line(DivisorClass D) { return {1, std::move(D), {}, 0}; }
    friend bool operator==(const FormalSheafClass&, const FormalSheafClass&) = default;
};

inline FormalSheafClass dual(FormalSheafClass F) {
    F.c1 = -F.c1;
    F.c3 = -F.c3;
    return F;
}

// ch = r + c1 + (c1^2 - 2 c2)/2 + (c1^3 - 3 c1.c2 + 3 c3)/6
inline GradedClass chern_character(const ScrollParams& P, const FormalSheafClass& F) {
    GradedClass ch;
    ch.d0 = Rat(F.rank);
    std::array<Rat, 3> c1 = GradedClass::of_divisor(F.c1).d1;
    std::array<Rat, 3> c2 = GradedClass::of_codim2(F.c2).d2;
    std::array<Rat, 3> c1sq = mul11(P, c1, c1);
    Rat c1cube = mul12(P, c1, c1sq);
    Rat c1c2 = mul12(P, c1, c2);
    ch.d1 = c1;
    for (int i = 0; i < 3; ++i) ch.d2[i] = (c1sq[i] - 2 * c2[i]) / 2;
    ch.d3 = (c1cube - 3 * c1c2 + 3 * Rat(F.c3)) / 6;
    return ch;
}

// chi = deg3(ch . td). Throws NonIntegralChi when the pairing has a
// denominator - possible only for formal classes that are not realizable in
// the K-group (integer combinations of actual sheaf classes always land on an
// integer).
inline Int chi(const ScrollParams& P, const GradedClass& ch) {
    return to_integer(degree3(multiply(ch, todd_class(P), P)), "Euler characteristic pairing");
}

inline Int chi(const ScrollParams& P, const FormalSheafClass& F) {
    return chi(P, chern_character(P, F));
}

inline Int chi_line_hrr(const ScrollParams& P, const DivisorClass& D) {
    return chi(P, FormalSheafClass::line(D));
}

// Whitney sum of line classes: the numerical class of + O(D_i), which is also
// the class of any iterated extension of the D_i.
inline FormalSheafClass direct_sum_lines(const ScrollParams& P,
                                         std::span<const DivisorClass> Ds) {
    FormalSheafClass F;
    F.rank = 0;
    for (const DivisorClass& D : Ds) {
        F.c3 += intersect(P, D, F.c2);
        F.c2 = F.c2 + intersect(P, F.c1, D);
        F.c1 = F.c1 + D;
        F.rank += 1;
    }
    return F;
}

// chi of the endomorphism class of an iterated extension of line bundles,
// computed two independent ways:
//   (a) Todd pairing against ch(F).ch(F dual),
//   (b) pushforward sum  sum_{i,j} chi(D_i - D_j).
// The routes share no code beyond the Chow basis, so agreement is a strong
// convention check; disagreement raises OracleMismatch.
inline Int chi_end_lines(const ScrollParams& P, std::span<const DivisorClass> Ds) {
    FormalSheafClass F = direct_sum_lines(P, Ds);
    GradedClass ch =
        multiply(chern_character(P, F), chern_character(P, dual(F)), P);
    Int via_todd = chi(P, ch);

    Int via_pushforward = 0;
    for (const DivisorClass& Di : Ds)
        for (const DivisorClass& Dj : Ds) via_pushforward += chi_scroll_line(P, Di - Dj);

    if (via_todd != via_pushforward)
        throw OracleMismatch("chi(End) routes disagree: Todd pairing " + via_todd.str() +
                             " vs pushforward sum " + via_pushforward.str());
    return via_todd;
}

}  // namespace scrollulrich
