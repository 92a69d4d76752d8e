#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace scrollulrich {

// Numerical input data for the 3-fold scroll X = P(E) -> F_e: a Hirzebruch
// surface F_e and a rank-2 bundle E with c1(E) = 3C + b*f, c2(E) = k.
//
// The admissible range b-e < k < 2b-4e together with b >= 3e+2 keeps the
// filtration classes A, B effective and the polarization very ample; outside
// it the geometric setup breaks down, so the checked constructors reject.
struct ScrollParams {
    int e = 0;
    int b = 0;
    int k = 0;

    // Present exactly when (e, b, k) = (0, 2t, 3t): the one-parameter family
    // carrying the extra pair of Ulrich line bundles M1, M2.
    std::optional<int> sporadic_t;

    static ScrollParams make(int e, int b, int k) {
        auto tag = [&] {
            return "(e,b,k)=(" + std::to_string(e) + "," + std::to_string(b) + "," +
                   std::to_string(k) + ")";
        };
        if (e < 0)
            throw std::invalid_argument("scroll params: e must be >= 0, got " + tag());
        if (!(b - e < k && k < 2 * b - 4 * e))
            throw std::invalid_argument("scroll params: need b-e < k < 2b-4e, got " + tag());
        if (b < 3 * e + 2)
            throw std::invalid_argument("scroll params: need b >= 3e+2, got " + tag());
        return with_detection(e, b, k);
    }

    static ScrollParams sporadic(int t) {
        if (t < 1)
            throw std::invalid_argument("sporadic family needs t >= 1, got t=" + std::to_string(t));
        return make(0, 2 * t, 3 * t);
    }

    // Bypasses the admissibility checks (sporadic detection still runs).
    // For probing boundary cells in tests; the CLI never calls this.
    static ScrollParams unchecked(int e, int b, int k) { return with_detection(e, b, k); }

    bool is_sporadic() const { return sporadic_t.has_value(); }

    int require_sporadic_t(const char* who) const {
        if (!sporadic_t)
            throw std::invalid_argument(std::string(who) +
                                        " requires the sporadic family (e=0, b=2t, k=3t)");
        return *sporadic_t;
    }

    friend bool operator==(const ScrollParams&, const ScrollParams&) = default;

  private:
    static ScrollParams with_detection(int e, int b, int k) {
        ScrollParams p;
        p.e = e;
        p.b = b;
        p.k = k;
        if (e == 0 && b >= 2 && b % 2 == 0 && k == 3 * (b / 2)) p.sporadic_t = b / 2;
        return p;
    }
};

}  // namespace scrollulrich
