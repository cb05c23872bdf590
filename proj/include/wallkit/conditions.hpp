#pragma once

#include <stdexcept>

#include "wallkit/chern.hpp"
#include "wallkit/rational.hpp"

namespace wallkit {

/// The target class (R, D) of the twisted character v = (-R, 0, D, 0).
struct TargetClass {
    long long R;
    long long D;

    TargetClass(long long R_, long long D_) : R(R_), D(D_) {
        if (R < 0) throw std::invalid_argument("TargetClass: R must be >= 0");
        if (D < 1) throw std::invalid_argument("TargetClass: D must be >= 1");
    }

    bool operator==(const TargetClass&) const = default;
};

/// Twisted character (r, c, d, e) of a potential destabilizing subobject.
/// All predicates below assume c > 0 (the quotient side c <= 0 is never
/// enumerated).
struct CandidateQuad {
    long long r;
    Rat c, d, e;
};

/// alpha_0^2 = 6e/c, the squared alpha-axis intercept of the wall cut out
/// by a subobject with ch1 = c and ch3 = e.
inline Rat alpha0_squared(const Rat& c, const Rat& e) {
    if (c.sign() <= 0) throw std::domain_error("alpha0_squared: c must be > 0");
    return 6 * e / c;
}

/// Numerical conditions on (r, c, d, e) against the class (R, D):
///   0 < 2d < 2D
///   0 < c(6e) <= min{4d^2, 4(D-d)^2}
///   -c(2D-2d)/6e - R <= r <= c(2d)/6e
/// strict_upper turns the middle "<=" into "<". The default keeps the
/// equality cases, which the maximal-wall construction needs and which the
/// published wall tables contain.
inline bool check_numerical(const CandidateQuad& q, const TargetClass& t,
                            bool strict_upper = false) {
    const Rat D(t.D);
    // N1
    if (!(q.d.sign() > 0 && q.d < D)) return false;
    // N2
    const Rat ce6 = q.c * 6 * q.e;
    if (ce6.sign() <= 0) return false;
    const Rat lhs = 4 * q.d * q.d;
    const Rat rhs = 4 * (D - q.d) * (D - q.d);
    const Rat bound = lhs < rhs ? lhs : rhs;
    if (strict_upper ? !(ce6 < bound) : !(ce6 <= bound)) return false;
    // N3 (e > 0 is guaranteed by N2's lower bound once c > 0)
    const Rat r(q.r);
    return -q.c * (2 * D - 2 * q.d) / (6 * q.e) - Rat(t.R) <= r && r <= q.c * (2 * q.d) / (6 * q.e);
}

/// The three integrality residuals; a quad is admissible when all three are
/// integers.
struct IntegralResiduals {
    Rat i1, i2, i3;

    bool all_integral() const {
        return i1.is_integer() && i2.is_integer() && i3.is_integer();
    }
};

/// beta = 0 residuals: d - c^2/2, 2e - cd + c^3/6, e - c/6. These do not
/// depend on the rank.
inline IntegralResiduals integral_residuals_beta0(const Rat& c, const Rat& d, const Rat& e) {
    return {
        d - c * c / 2,
        2 * e - c * d + c * c * c / 6,
        e - c / 6,
    };
}

inline bool check_integral_beta0(const Rat& c, const Rat& d, const Rat& e) {
    return integral_residuals_beta0(c, d, e).all_integral();
}

/// beta = 1/k residuals, rank-dependent:
///   d - c^2/2 + b(1-r)(br/2 + c)
///   e - c/6 + b(d - r/6) + (b^2/2)c + (b^3/6)r
///   2e - cd + c^3/6 + b(d(2-r) + c^2(3r-1)) + (b^2/2)c(2 + r(r-3))
///     + (b^3/6)r(r-1)(r-2)
inline IntegralResiduals integral_residuals_betak(const CandidateQuad& q,
                                                  const TwistParameter& tw) {
    if (tw.is_zero())
        throw std::invalid_argument("integral_residuals_betak: needs beta = 1/k, got beta = 0");
    const Rat b = tw.beta();
    const Rat b2 = b * b, b3 = b * b * b;
    const Rat r(q.r);
    const Rat& c = q.c;
    const Rat& d = q.d;
    const Rat& e = q.e;
    return {
        d - c * c / 2 + b * (1 - r) * (b * r / 2 + c),
        e - c / 6 + b * (d - r / 6) + b2 / 2 * c + b3 / 6 * r,
        2 * e - c * d + c * c * c / 6 + b * (d * (2 - r) + c * c * (3 * r - 1)) +
            b2 / 2 * c * (2 + r * (r - 3)) + b3 / 6 * r * (r - 1) * (r - 2),
    };
}

inline bool check_integral_betak(const CandidateQuad& q, const TwistParameter& tw) {
    return integral_residuals_betak(q, tw).all_integral();
}

/// Closed integer interval, possibly empty (lo > hi).
struct RankInterval {
    BigInt lo, hi;

    bool empty() const { return lo > hi; }
    BigInt size() const { return empty() ? BigInt(0) : hi - lo + 1; }
    bool contains(const BigInt& r) const { return lo <= r && r <= hi; }
};

/// Integer ranks allowed by the third numerical condition:
/// [ceil(-c(2D-2d)/6e - R), floor(2cd/6e)].
inline RankInterval rank_interval(const Rat& c, const Rat& d, const Rat& e,
                                  const TargetClass& t) {
    if (c.sign() <= 0) throw std::domain_error("rank_interval: c must be > 0");
    if (e.sign() <= 0) throw std::domain_error("rank_interval: e must be > 0");
    const Rat lo_rat = -c * (2 * Rat(t.D) - 2 * d) / (6 * e) - Rat(t.R);
    const Rat hi_rat = c * (2 * d) / (6 * e);
    return {lo_rat.ceil(), hi_rat.floor()};
}

}  // namespace wallkit
