#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <exception>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "wallkit/chern.hpp"
#include "wallkit/conditions.hpp"
#include "wallkit/rational.hpp"

namespace wallkit {

/// The scan ran out of its work budget. Enumeration never returns truncated
/// catalogs; it either finishes or throws this.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Candidate quad in lattice units: m_r = r, m_c = kc, m_d = 2k^2 d,
/// m_e = 6k^3 e (k = 1 when beta = 0). Bijective with CandidateQuad for a
/// fixed twist.
struct ScaledQuad {
    long long m_r, m_c, m_d, m_e;

    bool operator==(const ScaledQuad&) const = default;
};

inline CandidateQuad unscale(const ScaledQuad& q, const TwistParameter& tw) {
    return {q.m_r, Rat(q.m_c, tw.den_c()), Rat(q.m_d, tw.den_d()), Rat(q.m_e, tw.den_e())};
}

/// Inverse of unscale; rejects quads that are not on the twist's lattice.
inline ScaledQuad scale(const CandidateQuad& q, const TwistParameter& tw) {
    const Rat mc = q.c * Rat(tw.den_c());
    const Rat md = q.d * Rat(tw.den_d());
    const Rat me = q.e * Rat(tw.den_e());
    if (!mc.is_integer() || !md.is_integer() || !me.is_integer())
        throw std::invalid_argument("scale: quad is not on the lattice of the given twist");
    return {q.r, mc.numerator().convert_to<long long>(), md.numerator().convert_to<long long>(),
            me.numerator().convert_to<long long>()};
}

struct EnumerationOptions {
    std::optional<Rat> min_alpha0_sq;  // inclusive lower bound on 6e/c
    bool strict_upper_n2 = false;
    unsigned workers = 1;
    std::uint64_t budget = 2'000'000'000;  // scan work units (cells + rank tests)
};

/// One admissible (c, d, e) group: the ranks that passed every condition,
/// the wall it cuts out, and the untwisted Chern character per rank.
struct WallCandidate {
    Rat c, d, e;
    std::vector<long long> ranks;
    Rat alpha0_sq;
    std::vector<ChernVector> chern_untwisted;
};

struct WallCatalog {
    TargetClass target;
    TwistParameter twist;
    EnumerationOptions options;
    std::vector<WallCandidate> candidates;               // sorted by (d, c, e)
    std::map<Rat, std::vector<std::size_t>> walls;       // alpha0^2 -> candidate indices
};

/// Distinct alpha0^2 values, largest first.
inline std::vector<Rat> distinct_walls(const WallCatalog& cat) {
    std::vector<Rat> out;
    out.reserve(cat.walls.size());
    for (auto it = cat.walls.rbegin(); it != cat.walls.rend(); ++it) out.push_back(it->first);
    return out;
}

namespace detail {

using i128 = __int128;

inline long long mod_norm(i128 x, long long m) {
    long long r = static_cast<long long>(x % m);
    return r < 0 ? r + m : r;
}

inline long long mul_mod(long long a, long long b, long long m) {
    return static_cast<long long>(static_cast<i128>(a) * b % m);
}

/// Integrality congruences for beta = 1/k in scaled units. The three
/// residuals of integral_residuals_betak have denominators 2k^2, 6k^3,
/// 6k^3; each numerator is a polynomial in (m_c, m_d, m_e, r) with integer
/// coefficients, so membership in Z is a congruence.
struct BetaKTests {
    long long k;
    long long mod1;  // 2k^2
    long long mod2;  // 6k^3
    long long k_sq;

    explicit BetaKTests(long long k_) : k(k_), mod1(2 * k_ * k_), mod2(6 * k_ * k_ * k_), k_sq(k_ * k_) {}

    // (m_d - m_c^2 + (1-r)(r + 2 m_c)) mod 2k^2
    bool i1(long long m_c, long long m_d, long long r) const {
        const long long rc = mod_norm(r, mod1);
        const long long one_minus_r = mod_norm(1 - static_cast<i128>(r), mod1);
        const long long inner = mod_norm(static_cast<i128>(rc) + 2 * static_cast<i128>(m_c), mod1);
        i128 acc = static_cast<i128>(mod_norm(m_d, mod1)) -
                   mul_mod(mod_norm(m_c, mod1), mod_norm(m_c, mod1), mod1) +
                   mul_mod(one_minus_r, inner, mod1);
        return mod_norm(acc, mod1) == 0;
    }

    // (m_e - k^2 m_c + 3 m_d - k^2 r + 3 m_c + r) mod 6k^3
    bool i2(long long m_c, long long m_d, long long m_e, long long r) const {
        const long long rc = mod_norm(r, mod2);
        i128 acc = static_cast<i128>(mod_norm(m_e, mod2)) -
                   mul_mod(mod_norm(k_sq, mod2), mod_norm(m_c, mod2), mod2) +
                   3 * static_cast<i128>(mod_norm(m_d, mod2)) -
                   mul_mod(mod_norm(k_sq, mod2), rc, mod2) +
                   3 * static_cast<i128>(mod_norm(m_c, mod2)) + rc;
        return mod_norm(acc, mod2) == 0;
    }

    // (2 m_e - 3 m_c m_d + m_c^3 + 3 m_d (2 - r) + 6 m_c^2 (3r - 1)
    //  + 3 m_c (2 + r(r-3)) + r(r-1)(r-2)) mod 6k^3
    bool i3(long long m_c, long long m_d, long long m_e, long long r) const {
        const long long m = mod2;
        const long long mc = mod_norm(m_c, m);
        const long long md = mod_norm(m_d, m);
        const long long me = mod_norm(m_e, m);
        const long long rc = mod_norm(r, m);
        const long long mc2 = mul_mod(mc, mc, m);
        const long long two_minus_r = mod_norm(2 - static_cast<i128>(r), m);
        const long long r_minus_3 = mod_norm(static_cast<i128>(r) - 3, m);
        const long long r_minus_1 = mod_norm(static_cast<i128>(r) - 1, m);
        const long long r_minus_2 = mod_norm(static_cast<i128>(r) - 2, m);
        i128 acc = 2 * static_cast<i128>(me);
        acc -= 3 * static_cast<i128>(mul_mod(mc, md, m));
        acc += mul_mod(mc2, mc, m);
        acc += 3 * static_cast<i128>(mul_mod(md, two_minus_r, m));
        acc += 6 * static_cast<i128>(mul_mod(mc2, mod_norm(3 * static_cast<i128>(rc) - 1, m), m));
        acc += 3 * static_cast<i128>(mul_mod(mc, mod_norm(2 + static_cast<i128>(mul_mod(rc, r_minus_3, m)), m), m));
        acc += mul_mod(mul_mod(rc, r_minus_1, m), r_minus_2, m);
        return mod_norm(acc, m) == 0;
    }

    bool all(long long m_c, long long m_d, long long m_e, long long r) const {
        return i1(m_c, m_d, r) && i2(m_c, m_d, m_e, r) && i3(m_c, m_d, m_e, r);
    }
};

/// beta = 0 congruences: m_c = c, m_d = 2d, m_e = 6e, so
///   I1: d - c^2/2 in Z    <=> m_d = m_c (mod 2)
///   I2: 2e - cd + c^3/6   <=> 2 m_e - 3 m_c m_d + m_c^3 = 0 (mod 6)
///   I3: e - c/6 in Z      <=> m_e = m_c (mod 6)
inline bool beta0_tests(long long m_c, long long m_d, long long m_e) {
    if ((m_d - m_c) % 2 != 0) return false;
    if ((m_e - m_c) % 6 != 0) return false;
    const i128 n = 2 * static_cast<i128>(m_e) - 3 * static_cast<i128>(m_c) * m_d +
                   static_cast<i128>(m_c) * m_c * m_c;
    return mod_norm(n, 6) == 0;
}

inline long long isqrt_floor(i128 x) {
    if (x <= 0) return 0;
    auto guess = static_cast<long long>(std::sqrt(static_cast<double>(x)));
    while (static_cast<i128>(guess) * guess > x) --guess;
    while (static_cast<i128>(guess + 1) * (guess + 1) <= x) ++guess;
    return guess;
}

}  // namespace detail

/// Per-m_d slice of the search lattice.
struct SearchRow {
    long long m_d;
    Rat d;                    // m_d / (2k^2)
    Rat bound;                // M(d) = min{4d^2, 4(D-d)^2}
    long long scaled_bound;   // k^4 M(d) = min(m_d, 2k^2 D - m_d)^2, caps m_c and m_c*m_e
    long long c_max;          // last m_c with a nonempty m_e range
};

/// Finite description of the (m_d, m_c, m_e) lattice scanned for a target
/// and twist: m_d in [1, 2k^2 D - 1]; for each m_d, m_c in [1, k^4 M(d)] and
/// m_e in [e_min(m_c), floor(k^4 M(d) / m_c)], where e_min comes from the
/// min_alpha0_sq cutoff (alpha0^2 = m_e / (k^2 m_c), so m_e >=
/// ceil(min_alpha0_sq * k^2 * m_c)).
class SearchSpace {
public:
    SearchSpace(const TargetClass& target, const TwistParameter& twist,
                const EnumerationOptions& opts)
        : target_(target), twist_(twist), strict_(opts.strict_upper_n2) {
        const long long k = twist.lattice_k();
        const detail::i128 dm = 2 * static_cast<detail::i128>(k) * k * target.D;
        if (dm > (static_cast<detail::i128>(1) << 62))
            throw BudgetExceeded("search space has more m_d slices than any budget allows");
        m_d_end_ = static_cast<long long>(dm);
        if (opts.min_alpha0_sq) {
            if (opts.min_alpha0_sq->sign() > 0)
                min_scaled_ = *opts.min_alpha0_sq * Rat(k * k);
        }
    }

    /// One past the last m_d (= 2k^2 D).
    long long m_d_end() const { return m_d_end_; }

    SearchRow row(long long m_d) const {
        if (m_d < 1 || m_d >= m_d_end_)
            throw std::out_of_range("SearchSpace::row: m_d outside [1, 2k^2 D - 1]");
        const long long k = twist_.lattice_k();
        const long long side = std::min(m_d, m_d_end_ - m_d);
        const detail::i128 b = static_cast<detail::i128>(side) * side;
        if (b > std::numeric_limits<long long>::max())
            throw BudgetExceeded("SearchSpace: per-slice lattice bound exceeds 2^63");
        const long long bound = static_cast<long long>(b);
        const Rat d(m_d, 2 * k * k);
        const Rat k4(static_cast<long long>(k) * k * k * k);
        return {m_d, d, Rat(bound) / k4, bound, c_cut(bound)};
    }

    /// Smallest admissible m_e for a given m_c (the min_alpha0_sq prefilter).
    long long e_min(long long m_c) const {
        if (!min_scaled_) return 1;
        const Rat lo = *min_scaled_ * Rat(m_c);
        const BigInt c = lo.ceil();
        if (c <= 1) return 1;
        if (c > std::numeric_limits<long long>::max())
            return std::numeric_limits<long long>::max();  // empty range, e_max is below this
        return c.convert_to<long long>();
    }

    /// Largest admissible m_e for a given m_c under the N2 cap.
    long long e_max(long long m_c, long long scaled_bound) const {
        if (strict_) return (scaled_bound + m_c - 1) / m_c - 1;
        return scaled_bound / m_c;
    }

    /// Number of (m_d, m_c, m_e) cells; stops counting at cap and returns
    /// cap + 1 when the space is at least that large.
    std::uint64_t cells(std::uint64_t cap) const {
        std::uint64_t total = 0;
        for (long long m_d = 1; m_d < m_d_end_; ++m_d) {
            const SearchRow r = row(m_d);
            for (long long m_c = 1; m_c <= r.c_max; ++m_c) {
                const long long lo = e_min(m_c);
                const long long hi = e_max(m_c, r.scaled_bound);
                if (lo > hi) continue;
                total += static_cast<std::uint64_t>(hi - lo + 1);
                if (total > cap) return cap + 1;
            }
            if (total > cap) return cap + 1;  // rows with zero cells still count toward nothing
        }
        return total;
    }

private:
    // Last m_c whose m_e range can be nonempty: m_c <= bound, and with a
    // cutoff q also q * k^2 * m_c <= bound / m_c.
    long long c_cut(long long bound) const {
        if (!min_scaled_) return bound;
        const BigInt lim = (BigInt(bound) * min_scaled_->denominator()) / min_scaled_->numerator();
        if (lim > std::numeric_limits<long long>::max()) return bound;
        const long long by_filter =
            detail::isqrt_floor(static_cast<detail::i128>(lim.convert_to<long long>())) + 1;
        return std::min(bound, by_filter);
    }

    TargetClass target_;
    TwistParameter twist_;
    bool strict_;
    long long m_d_end_ = 0;
    std::optional<Rat> min_scaled_;  // min_alpha0_sq * k^2
};

inline SearchSpace search_space(const TargetClass& target, const TwistParameter& twist,
                                const EnumerationOptions& opts = {}) {
    return SearchSpace(target, twist, opts);
}

namespace detail {

struct RawCandidate {
    long long m_d, m_c, m_e;
    long long rank_lo, rank_hi;
    std::vector<long long> ranks;  // explicit survivors (beta = 1/k); empty = full interval (beta = 0)
};

/// Shared scan state. Workers pull one m_d at a time off an atomic counter
/// and append into private buffers; nothing else is shared while scanning.
struct ScanContext {
    const SearchSpace& space;
    const TargetClass& target;
    const TwistParameter& twist;
    std::uint64_t budget;
    std::atomic<long long> next_m_d{1};
    std::atomic<std::uint64_t> work{0};
    std::atomic<bool> over_budget{false};

    // Flushes a local work tally; returns false once the budget is blown.
    bool charge(std::uint64_t units) {
        if (work.fetch_add(units, std::memory_order_relaxed) + units > budget) {
            over_budget.store(true, std::memory_order_relaxed);
            return false;
        }
        return !over_budget.load(std::memory_order_relaxed);
    }
};

inline void scan_worker(ScanContext& ctx, std::vector<RawCandidate>& out) {
    const long long k = ctx.twist.lattice_k();
    const bool beta_zero = ctx.twist.is_zero();
    const BetaKTests tests(beta_zero ? 1 : k);
    const long long dm_end = ctx.space.m_d_end();
    const long long R = ctx.target.R;
    std::uint64_t local_work = 0;
    constexpr std::uint64_t kFlushEvery = 8192;

    auto flush = [&]() -> bool {
        const std::uint64_t w = local_work;
        local_work = 0;
        return ctx.charge(w);
    };

    for (;;) {
        const long long m_d = ctx.next_m_d.fetch_add(1, std::memory_order_relaxed);
        if (m_d >= dm_end) break;
        const SearchRow row = ctx.space.row(m_d);
        const long long rest = dm_end - m_d;  // 2k^2 D - m_d
        for (long long m_c = 1; m_c <= row.c_max; ++m_c) {
            const long long e_lo = ctx.space.e_min(m_c);
            const long long e_hi = ctx.space.e_max(m_c, row.scaled_bound);
            if (e_lo > e_hi) continue;
            for (long long m_e = e_lo; m_e <= e_hi; ++m_e) {
                ++local_work;
                if (local_work >= kFlushEvery && !flush()) return;
                // N3 in scaled units: c*2d/6e = m_c m_d / m_e,
                // c(2D-2d)/6e = m_c (2k^2 D - m_d) / m_e.
                const i128 hi128 = static_cast<i128>(m_c) * m_d / m_e;
                const i128 lo128 = -(static_cast<i128>(m_c) * rest / m_e) - R;
                const i128 width128 = hi128 - lo128 + 1;
                if (beta_zero) {
                    if (!beta0_tests(m_c, m_d, m_e)) continue;
                    // The catalog will materialize the full interval, so
                    // that is the cost of this cell.
                    if (width128 > static_cast<i128>(ctx.budget)) {
                        ctx.over_budget.store(true, std::memory_order_relaxed);
                        return;
                    }
                    local_work += static_cast<std::uint64_t>(width128);
                    if (!flush()) return;
                    out.push_back({m_d, m_c, m_e, static_cast<long long>(lo128),
                                   static_cast<long long>(hi128),
                                   {}});
                } else {
                    if (width128 > static_cast<i128>(ctx.budget)) {
                        ctx.over_budget.store(true, std::memory_order_relaxed);
                        return;
                    }
                    local_work += static_cast<std::uint64_t>(width128);
                    if (!flush()) return;  // also keeps lo/hi within long long
                    const long long lo = static_cast<long long>(lo128);
                    const long long hi = static_cast<long long>(hi128);
                    std::vector<long long> ranks;
                    for (long long r = lo; r <= hi; ++r) {
                        if (tests.all(m_c, m_d, m_e, r)) ranks.push_back(r);
                    }
                    if (!ranks.empty()) out.push_back({m_d, m_c, m_e, lo, hi, std::move(ranks)});
                }
            }
        }
        if (!flush()) return;
    }
    flush();
}

}  // namespace detail

/// Scans the whole lattice for the target class and twist and returns the
/// canonical catalog: every (c, d, e) group passing the numerical conditions
/// N1-N3 and then the integrality conditions, with its surviving ranks (the
/// full N3 interval when beta = 0), sorted by (d, c, e) ascending and
/// indexed by wall. Output does not depend on the worker count.
inline WallCatalog enumerate_walls(const TargetClass& target, const TwistParameter& twist,
                                   const EnumerationOptions& opts = {}) {
    if (opts.workers < 1) throw std::invalid_argument("enumerate_walls: workers must be >= 1");
    const SearchSpace space(target, twist, opts);
    if (static_cast<std::uint64_t>(space.m_d_end()) > opts.budget)
        throw BudgetExceeded("enumerate_walls: m_d axis alone exceeds the work budget");

    detail::ScanContext ctx{space, target, twist, opts.budget};
    const unsigned workers = static_cast<unsigned>(
        std::min<long long>(opts.workers, space.m_d_end() - 1));
    std::vector<std::vector<detail::RawCandidate>> buffers(workers);
    if (workers == 1) {
        detail::scan_worker(ctx, buffers[0]);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&ctx, &buffers, w] { detail::scan_worker(ctx, buffers[w]); });
        for (auto& th : pool) th.join();
    }
    if (ctx.over_budget.load() || ctx.work.load() > opts.budget)
        throw BudgetExceeded("enumerate_walls: work budget exceeded (" +
                             std::to_string(opts.budget) + " units)");

    std::vector<detail::RawCandidate> raw;
    for (auto& b : buffers)
        for (auto& r : b) raw.push_back(std::move(r));
    std::sort(raw.begin(), raw.end(), [](const detail::RawCandidate& a, const detail::RawCandidate& b) {
        if (a.m_d != b.m_d) return a.m_d < b.m_d;
        if (a.m_c != b.m_c) return a.m_c < b.m_c;
        return a.m_e < b.m_e;
    });

    WallCatalog cat{target, twist, opts, {}, {}};
    cat.candidates.reserve(raw.size());
    const Rat beta = twist.beta();
    for (const auto& r : raw) {
        WallCandidate cand;
        cand.c = Rat(r.m_c, twist.den_c());
        cand.d = Rat(r.m_d, twist.den_d());
        cand.e = Rat(r.m_e, twist.den_e());
        cand.alpha0_sq = alpha0_squared(cand.c, cand.e);
        if (r.ranks.empty()) {
            cand.ranks.reserve(static_cast<std::size_t>(r.rank_hi - r.rank_lo + 1));
            for (long long rank = r.rank_lo; rank <= r.rank_hi; ++rank) cand.ranks.push_back(rank);
        } else {
            cand.ranks = r.ranks;
        }
        cand.chern_untwisted.reserve(cand.ranks.size());
        for (long long rank : cand.ranks)
            cand.chern_untwisted.push_back(untwist({Rat(rank), cand.c, cand.d, cand.e}, beta));
        cat.candidates.push_back(std::move(cand));
    }
    for (std::size_t i = 0; i < cat.candidates.size(); ++i)
        cat.walls[cat.candidates[i].alpha0_sq].push_back(i);
    return cat;
}

}  // namespace wallkit
