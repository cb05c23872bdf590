#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace wallkit {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number. Always reduced, denominator > 0, sign on the
/// numerator; zero is 0/1. Backed by arbitrary-precision integers so large
/// parameter sweeps cannot overflow.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long long n) : v_(n) {}  // NOLINT: implicit on purpose
    explicit Rat(const BigInt& n) : v_(n) {}

    Rat(const BigInt& num, const BigInt& den) {
        if (den == 0) throw std::domain_error("Rat: zero denominator");
        if (den < 0) {
            v_ = boost::multiprecision::cpp_rational(-num, -den);
        } else {
            v_ = boost::multiprecision::cpp_rational(num, den);
        }
    }

    Rat(long long num, long long den) : Rat(BigInt(num), BigInt(den)) {}

    /// Parses "p" or "p/q" with optional sign on p. Non-canonical input
    /// ("6/4") is accepted and reduced.
    static Rat parse(std::string_view s) {
        auto bad = [&] {
            throw std::invalid_argument("Rat: cannot parse \"" + std::string(s) + "\"");
        };
        if (s.empty()) bad();
        const auto slash = s.find('/');
        std::string_view num_part = s.substr(0, slash);
        std::string_view den_part =
            slash == std::string_view::npos ? std::string_view() : s.substr(slash + 1);
        if (num_part.empty()) bad();
        bool neg = false;
        if (num_part.front() == '+' || num_part.front() == '-') {
            neg = num_part.front() == '-';
            num_part.remove_prefix(1);
        }
        if (!all_digits(num_part)) bad();
        BigInt num{std::string(num_part)};
        if (neg) num = -num;
        if (slash == std::string_view::npos) return Rat(num);
        if (den_part.empty() || !all_digits(den_part)) bad();
        BigInt den{std::string(den_part)};
        if (den == 0) bad();
        return Rat(num, den);
    }

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return v_ == 0 ? 0 : (v_ < 0 ? -1 : 1); }

    /// Largest integer <= value.
    BigInt floor() const {
        BigInt n = numerator(), d = denominator();
        BigInt q = n / d;  // truncates toward zero
        if (n < 0 && q * d != n) --q;
        return q;
    }

    /// Smallest integer >= value.
    BigInt ceil() const { return -(-*this).floor(); }

    /// "p" when integral, otherwise "p/q"; canonical for equal values.
    std::string str() const {
        std::string out = numerator().str();
        if (!is_integer()) {
            out += '/';
            out += denominator().str();
        }
        return out;
    }

    double approx() const { return static_cast<double>(v_); }

    Rat operator-() const { return Rat(-v_); }

    // Non-member so that integer literals convert on either side.
    friend Rat operator+(const Rat& a, const Rat& b) { return Rat(a.v_ + b.v_); }
    friend Rat operator-(const Rat& a, const Rat& b) { return Rat(a.v_ - b.v_); }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(a.v_ * b.v_); }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.v_ == 0) throw std::domain_error("Rat: division by zero");
        return Rat(a.v_ / b.v_);
    }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        if (a.v_ < b.v_) return std::strong_ordering::less;
        if (a.v_ > b.v_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    explicit Rat(boost::multiprecision::cpp_rational v) : v_(std::move(v)) {}

    static bool all_digits(std::string_view s) {
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    }

    boost::multiprecision::cpp_rational v_;
};

inline Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

/// A rational or +infinity. The slope conventions only ever need +infinity,
/// which compares greater than every finite value.
class ExtRat {
public:
    ExtRat(Rat v) : v_(std::move(v)) {}  // NOLINT: implicit on purpose
    ExtRat(long long v) : v_(Rat(v)) {}  // NOLINT

    static ExtRat infinity() { return ExtRat(); }

    bool is_finite() const { return v_.has_value(); }
    const Rat& finite() const {
        if (!v_) throw std::domain_error("ExtRat: infinite value");
        return *v_;
    }

    std::string str() const { return v_ ? v_->str() : "inf"; }

    bool operator==(const ExtRat& o) const { return v_ == o.v_; }
    std::strong_ordering operator<=>(const ExtRat& o) const {
        if (!v_ && !o.v_) return std::strong_ordering::equal;
        if (!v_) return std::strong_ordering::greater;
        if (!o.v_) return std::strong_ordering::less;
        return *v_ <=> *o.v_;
    }

private:
    ExtRat() = default;
    std::optional<Rat> v_;
};

}  // namespace wallkit
