#pragma once

// Test-only reference implementations, kept independent of the production
// scan in wallkit/enumerate.hpp: the triple loop below walks the same
// scaled lattice but evaluates every condition through the exact-rational
// predicates, with no modular arithmetic and no threading.

#include <optional>
#include <vector>

#include "wallkit/chern.hpp"
#include "wallkit/conditions.hpp"
#include "wallkit/rational.hpp"

namespace oracle {

struct Group {
    wallkit::Rat c, d, e;
    std::vector<long long> ranks;

    bool operator==(const Group&) const = default;
};

inline std::vector<Group> enumerate(const wallkit::TargetClass& target,
                                    const wallkit::TwistParameter& twist,
                                    std::optional<wallkit::Rat> min_alpha0_sq = {},
                                    bool strict_upper = false) {
    using wallkit::CandidateQuad;
    using wallkit::Rat;
    const long long k = twist.lattice_k();
    const long long den_c = twist.den_c(), den_d = twist.den_d(), den_e = twist.den_e();
    const Rat D(target.D);
    std::vector<Group> out;
    for (long long m_d = 1; m_d < 2 * k * k * target.D; ++m_d) {
        const Rat d(m_d, den_d);
        const Rat m4 = 4 * d * d;
        const Rat m4b = 4 * (D - d) * (D - d);
        const Rat bound = m4 < m4b ? m4 : m4b;
        for (long long m_c = 1;; ++m_c) {
            const Rat c(m_c, den_c);
            if (c * 6 * Rat(1, den_e) > bound) break;  // even m_e = 1 fails N2
            // alpha0^2 = 6e/c >= q is e >= qc/6, i.e. m_e >= den_e * qc/6
            long long e_start = 1;
            if (min_alpha0_sq) {
                const wallkit::BigInt lo = (*min_alpha0_sq * c / 6 * Rat(den_e)).ceil();
                if (lo > 1) e_start = lo.convert_to<long long>();
            }
            for (long long m_e = e_start;; ++m_e) {
                const Rat e(m_e, den_e);
                const Rat ce6 = c * 6 * e;
                const bool within = strict_upper ? ce6 < bound : ce6 <= bound;
                if (!within) break;
                if (min_alpha0_sq && wallkit::alpha0_squared(c, e) < *min_alpha0_sq) continue;
                const auto iv = wallkit::rank_interval(c, d, e, target);
                if (iv.empty()) continue;
                // N1 and N2 do not depend on r, and N3 is exactly
                // membership in iv; cross-check the predicate once at each
                // end of the window, then test integrality per rank.
                const long long lo = iv.lo.convert_to<long long>();
                const long long hi = iv.hi.convert_to<long long>();
                if (!wallkit::check_numerical({lo, c, d, e}, target, strict_upper)) continue;
                if (!wallkit::check_numerical({hi, c, d, e}, target, strict_upper)) continue;
                std::vector<long long> ranks;
                if (twist.is_zero()) {
                    if (wallkit::check_integral_beta0(c, d, e))
                        for (long long r = lo; r <= hi; ++r) ranks.push_back(r);
                } else {
                    for (long long r = lo; r <= hi; ++r)
                        if (wallkit::check_integral_betak({r, c, d, e}, twist)) ranks.push_back(r);
                }
                if (!ranks.empty()) out.push_back({c, d, e, ranks});
            }
        }
    }
    return out;
}

/// The support quadratic form evaluated the long way: assemble B_{alpha,K}
/// as an explicit 4x4 matrix and compute ch . B . ch^T.
inline wallkit::Rat quadratic_form_matrix(const wallkit::ChernVector& ch,
                                          const wallkit::Rat& alpha_sq, const wallkit::Rat& K) {
    using wallkit::Rat;
    const Rat ka = K * alpha_sq;
    const Rat B[4][4] = {
        {Rat(0), Rat(0), -ka, Rat(0)},
        {Rat(0), ka, Rat(0), Rat(-3)},
        {-ka, Rat(0), Rat(4), Rat(0)},
        {Rat(0), Rat(-3), Rat(0), Rat(0)},
    };
    const auto v = ch.as_array();
    Rat total(0);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) total += v[i] * B[i][j] * v[j];
    return total;
}

}  // namespace oracle
