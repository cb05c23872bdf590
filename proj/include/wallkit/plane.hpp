#pragma once

#include <stdexcept>

#include "wallkit/chern.hpp"
#include "wallkit/rational.hpp"

namespace wallkit {

/// Chern character (r, c, d) on the plane P^2.
struct PlaneChern {
    Rat r, c, d;

    bool operator==(const PlaneChern&) const = default;

    PlaneChern operator+(const PlaneChern& o) const { return {r + o.r, c + o.c, d + o.d}; }
};

/// Chern character of the pushforward along a hyperplane embedding
/// P^2 -> P^3: (0, r, c - r/2, d - c/2 + r/6). Additive in the input.
inline ChernVector pushforward_chern(const PlaneChern& p) {
    return {Rat(0), p.r, p.c - p.r / 2, p.d - p.c / 2 + p.r / 6};
}

/// Parameter dictionary transporting tilt walls of the rank-zero plane
/// character w = (0, c, d) to walls of v = (0, 0, c, d - c/2) in the
/// (alpha, s)-slice: tilt parameters (s_bar, t) with
/// t^2 = (2s + 1/3) alpha^2 - 1/12 match the slice point (alpha, s) at
/// twist beta_bar.
struct Dictionary {
    PlaneChern w;      // (0, c, d)
    ChernVector v;     // pushforward of w
    Rat s_bar;         // d/c
    Rat beta_bar;      // d/c - 1/2
};

inline Dictionary build_dictionary(const Rat& c, const Rat& d) {
    if (c.is_zero()) throw std::domain_error("build_dictionary: c must be nonzero");
    const PlaneChern w{Rat(0), c, d};
    return {w, pushforward_chern(w), d / c, d / c - Rat(1, 2)};
}

/// The plane tilt parameter squared matched to a slice point; negative
/// values mean the point sits below the valid slice.
inline Rat t_squared(const Rat& alpha_sq, const Rat& s) {
    return (2 * s + Rat(1, 3)) * alpha_sq - Rat(1, 12);
}

/// Twisted tilt slope on P^2 at twist b and parameter t^2:
/// (ch2^b - (t^2/2) ch0^b) / ch1^b = (d - bc + ((b^2 - t^2)/2) r) / (c - br),
/// +infinity when the denominator vanishes.
inline ExtRat plane_tilt_slope(const PlaneChern& p, const Rat& b, const Rat& t_sq) {
    const Rat den = p.c - b * p.r;
    if (den.is_zero()) return ExtRat::infinity();
    return (p.d - b * p.c + (b * b - t_sq) / 2 * p.r) / den;
}

}  // namespace wallkit
