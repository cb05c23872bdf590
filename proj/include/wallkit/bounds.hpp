#pragma once

#include <stdexcept>
#include <string>

#include "wallkit/rational.hpp"

namespace wallkit {

/// Closed-form bounds on the wall structure for the class (0, 0, D, 0),
/// all in alpha0^2 units unless noted. max_wall_sq and killing_wall_sq are
/// beta = 0 statements; cap_sq and rank_zero_threshold_sq hold for every
/// admissible twist.
struct BoundReport {
    long long D;
    Rat max_wall_sq;                  // largest numerical wall at beta = 0
    Rat cap_sq;                       // 4D^2: no walls at all above this
    Rat rank_zero_threshold_sq;       // 2D: above this every candidate has rank 0
    Rat killing_wall_sq;              // 1 (beta = 0)
    Rat gieseker_region_threshold;    // (s + 1/6) alpha^2 value above which no beta = 0 wall exists
};

namespace detail {
inline void require_positive_degree(long long D, const char* who) {
    if (D < 1) throw std::invalid_argument(std::string(who) + ": D must be >= 1");
}
}  // namespace detail

/// alpha_infinity^2 for beta = 0: the largest numerical wall of (-R,0,D,0),
/// independent of R. For odd D the maximizing group is c = 1, d = D/2,
/// 6e = D^2 - k with k the least value restoring integrality (k = 2 exactly
/// when D = 3 mod 6); even D reduces to D - 1. The even reduction is stated
/// for D >= 4 and extends to D = 2, where direct enumeration of the three
/// lattice cells also gives 1.
inline Rat max_wall_beta0(long long D) {
    detail::require_positive_degree(D, "max_wall_beta0");
    if (D % 2 == 0) return max_wall_beta0(D - 1 > 0 ? D - 1 : 1);
    const long long drop = (D % 6 == 3) ? 2 : 0;
    return Rat(D * D - drop);
}

/// (s + 1/6) alpha^2 > D^2/6 puts every Gieseker semistable sheaf of class
/// (0,0,D,0) in the semistable locus at beta = 0.
inline Rat gieseker_region_beta0(long long D) {
    detail::require_positive_degree(D, "gieseker_region_beta0");
    return Rat(D * D, 6);
}

struct NoWallCap {
    Rat cap_sq;            // 4D^2
    Rat region_threshold;  // 2D^2/3 in (s + 1/6) alpha^2 units
};

/// The twist-independent cap: no numerical wall has alpha0 > 2D, i.e. the
/// region (s + 1/6) alpha^2 > 2D^2/3 is wall-free.
inline NoWallCap no_wall_cap(long long D) {
    detail::require_positive_degree(D, "no_wall_cap");
    return {Rat(4 * D * D), Rat(2 * D * D, 3)};
}

/// Above alpha0^2 = 2D (region (s + 1/6) alpha^2 > D/3) every destabilizing
/// candidate has rank zero.
inline Rat rank_zero_threshold(long long D) {
    detail::require_positive_degree(D, "rank_zero_threshold");
    return Rat(2 * D);
}

struct LowerCutoff {
    Rat alpha0_sq;     // (1 - beta)^2
    Rat region_value;  // (1 - beta)^2 / 6 in (s + 1/6) alpha^2 units
};

/// Walls destabilizing a Gieseker semistable sheaf satisfy
/// alpha0 >= 1 - beta, provided every such sheaf has O(1) as a subobject
/// (true for the catalogued low-degree moduli; the caller owns the
/// hypothesis).
inline LowerCutoff lower_cutoff(const Rat& beta) {
    if (beta.sign() < 0 || beta >= Rat(1))
        throw std::invalid_argument("lower_cutoff: needs 0 <= beta < 1");
    const Rat a = (1 - beta) * (1 - beta);
    return {a, a / 6};
}

inline BoundReport bound_report(long long D) {
    detail::require_positive_degree(D, "bound_report");
    return {
        D,
        max_wall_beta0(D),
        no_wall_cap(D).cap_sq,
        rank_zero_threshold(D),
        Rat(1),
        gieseker_region_beta0(D),
    };
}

}  // namespace wallkit
