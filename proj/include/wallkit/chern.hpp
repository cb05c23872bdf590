#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>

#include "wallkit/rational.hpp"

namespace wallkit {

/// Chern character on P^3 written in powers of the hyperplane class H
/// (H^3 = 1): (ch0, ch1, ch2, ch3). The same type houses plain and
/// beta-twisted vectors; which one you hold is a convention of the call
/// site.
struct ChernVector {
    Rat ch0, ch1, ch2, ch3;

    bool operator==(const ChernVector&) const = default;

    ChernVector operator+(const ChernVector& o) const {
        return {ch0 + o.ch0, ch1 + o.ch1, ch2 + o.ch2, ch3 + o.ch3};
    }
    ChernVector operator-(const ChernVector& o) const {
        return {ch0 - o.ch0, ch1 - o.ch1, ch2 - o.ch2, ch3 - o.ch3};
    }

    std::array<Rat, 4> as_array() const { return {ch0, ch1, ch2, ch3}; }
};

/// The twist parameter of the enumeration lattice: either beta = 0 or
/// beta = 1/k with k >= 1. Carries the lattice denominators (1, k, 2k^2,
/// 6k^3) for the scaled-integer search ((1, 1, 2, 6) when beta = 0).
///
/// beta = 1 (k = 1) is a valid, distinct input; it is not an alias for
/// beta = 0.
class TwistParameter {
public:
    static TwistParameter zero() { return TwistParameter(0); }

    static TwistParameter unit_fraction(long long k) {
        if (k < 1) throw std::invalid_argument("TwistParameter: k must be >= 1");
        // 6k^3 (the widest lattice denominator) has to fit in 64 bits.
        if (k > 1000000) throw std::invalid_argument("TwistParameter: k too large (max 10^6)");
        return TwistParameter(k);
    }

    /// Accepts "0", "1", or "1/k".
    static TwistParameter parse(std::string_view s) {
        const Rat b = Rat::parse(s);
        if (b.is_zero()) return zero();
        if (b.numerator() != 1)
            throw std::invalid_argument("TwistParameter: beta must be 0 or 1/k, got " + b.str());
        const BigInt den = b.denominator();
        if (den > BigInt(1000000))
            throw std::invalid_argument("TwistParameter: k too large (max 10^6)");
        return unit_fraction(den.convert_to<long long>());
    }

    bool is_zero() const { return k_ == 0; }

    Rat beta() const { return is_zero() ? Rat(0) : Rat(1, k_); }

    long long k() const {
        if (is_zero()) throw std::domain_error("TwistParameter: beta = 0 has no k");
        return k_;
    }

    /// k for the lattice denominators: actual k for beta = 1/k, 1 for beta = 0.
    long long lattice_k() const { return is_zero() ? 1 : k_; }

    long long den_c() const { return lattice_k(); }
    long long den_d() const { return 2 * lattice_k() * lattice_k(); }
    long long den_e() const { return 6 * lattice_k() * lattice_k() * lattice_k(); }

    bool operator==(const TwistParameter&) const = default;

private:
    explicit TwistParameter(long long k) : k_(k) {}
    long long k_ = 0;  // 0 encodes beta = 0
};

/// A point of the (alpha, s)-slice. alpha is stored as alpha^2 so everything
/// stays rational; every formula downstream consumes alpha^2 only.
struct StabilityPoint {
    Rat alpha_sq;
    Rat s;

    StabilityPoint(Rat alpha_sq_, Rat s_) : alpha_sq(std::move(alpha_sq_)), s(std::move(s_)) {
        if (alpha_sq.sign() <= 0) throw std::domain_error("StabilityPoint: alpha^2 must be > 0");
        if (s.sign() <= 0) throw std::domain_error("StabilityPoint: s must be > 0");
    }
};

/// exp(-beta H) * ch, componentwise.
inline ChernVector twist(const ChernVector& ch, const Rat& beta) {
    const Rat b2 = beta * beta;
    const Rat b3 = b2 * beta;
    return {
        ch.ch0,
        ch.ch1 - beta * ch.ch0,
        ch.ch2 - beta * ch.ch1 + b2 / 2 * ch.ch0,
        ch.ch3 - beta * ch.ch2 + b2 / 2 * ch.ch1 - b3 / 6 * ch.ch0,
    };
}

/// Inverse of twist: untwist(twist(v, b), b) = v. Twisting is a group
/// action in beta, so this is just the twist by -beta.
inline ChernVector untwist(const ChernVector& chb, const Rat& beta) {
    return twist(chb, -beta);
}

/// ch1/ch0, or +infinity on rank zero.
inline ExtRat mumford_slope(const ChernVector& chb) {
    if (chb.ch0.is_zero()) return ExtRat::infinity();
    return chb.ch1 / chb.ch0;
}

/// (ch2 - (alpha^2/2) ch0) / ch1, or +infinity when ch1 = 0.
inline ExtRat tilt_slope(const ChernVector& chb, const Rat& alpha_sq) {
    if (chb.ch1.is_zero()) return ExtRat::infinity();
    return (chb.ch2 - alpha_sq / 2 * chb.ch0) / chb.ch1;
}

/// (ch3 - (s + 1/6) alpha^2 ch1) / (ch2 - (alpha^2/2) ch0), or +infinity
/// when the denominator vanishes.
inline ExtRat bridgeland_slope(const ChernVector& chb, const StabilityPoint& p) {
    const Rat den = chb.ch2 - p.alpha_sq / 2 * chb.ch0;
    if (den.is_zero()) return ExtRat::infinity();
    return (chb.ch3 - (p.s + Rat(1, 6)) * p.alpha_sq * chb.ch1) / den;
}

/// The support-property quadratic form ch^b . B_{alpha,K} . (ch^b)^T,
/// expanded: K alpha^2 (ch1^2 - 2 ch0 ch2) + 4 ch2^2 - 6 ch1 ch3.
/// Intended domain is K >= 1 (with K < 6s + 1 enforced by callers); the
/// expression itself is total.
inline Rat quadratic_form(const ChernVector& chb, const Rat& alpha_sq, const Rat& K) {
    return K * alpha_sq * (chb.ch1 * chb.ch1 - 2 * chb.ch0 * chb.ch2) + 4 * chb.ch2 * chb.ch2 -
           6 * chb.ch1 * chb.ch3;
}

/// Discriminant ch1^2 - 2 ch0 ch2.
inline Rat discriminant(const ChernVector& ch) {
    return ch.ch1 * ch.ch1 - 2 * ch.ch0 * ch.ch2;
}

}  // namespace wallkit
