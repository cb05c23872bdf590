#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "wallkit/chern.hpp"
#include "wallkit/conditions.hpp"
#include "wallkit/plane.hpp"

using namespace wallkit;

namespace {

Rat rand_rat(std::mt19937_64& rng, long long lo = -12, long long hi = 12) {
    std::uniform_int_distribution<long long> num(lo, hi);
    std::uniform_int_distribution<long long> den(1, 8);
    return Rat(num(rng), den(rng));
}

}  // namespace

TEST_CASE("pushforward of plane characters", "[plane]") {
    CHECK(pushforward_chern({Rat(1), Rat(2), Rat(2)}) ==
          ChernVector{Rat(0), Rat(1), Rat(3, 2), Rat(7, 6)});
    CHECK(pushforward_chern({Rat(0), Rat(4), Rat(2)}) ==
          ChernVector{Rat(0), Rat(0), Rat(4), Rat(0)});
    CHECK(pushforward_chern({Rat(1), Rat(0), Rat(0)}) ==
          ChernVector{Rat(0), Rat(1), Rat(-1, 2), Rat(1, 6)});
}

TEST_CASE("pushforward is additive", "[plane]") {
    std::mt19937_64 rng(31001);
    for (int i = 0; i < 200; ++i) {
        const PlaneChern a{rand_rat(rng), rand_rat(rng), rand_rat(rng)};
        const PlaneChern b{rand_rat(rng), rand_rat(rng), rand_rat(rng)};
        CHECK(pushforward_chern(a + b) == pushforward_chern(a) + pushforward_chern(b));
    }
}

TEST_CASE("dictionary records", "[plane]") {
    const Dictionary plane_cubic = build_dictionary(Rat(3), Rat(3, 2));
    CHECK(plane_cubic.v == ChernVector{Rat(0), Rat(0), Rat(3), Rat(0)});
    CHECK(plane_cubic.s_bar == Rat(1, 2));
    CHECK(plane_cubic.beta_bar == Rat(0));

    const Dictionary quartic = build_dictionary(Rat(4), Rat(2));
    CHECK(quartic.v == ChernVector{Rat(0), Rat(0), Rat(4), Rat(0)});
    CHECK(quartic.s_bar == Rat(1, 2));
    CHECK(quartic.beta_bar == Rat(0));

    const Dictionary shifted = build_dictionary(Rat(4), Rat(1));
    CHECK(shifted.v == ChernVector{Rat(0), Rat(0), Rat(4), Rat(-1)});
    CHECK(shifted.s_bar == Rat(1, 4));
    CHECK(shifted.beta_bar == Rat(-1, 4));

    CHECK_THROWS_AS(build_dictionary(Rat(0), Rat(1)), std::domain_error);
}

TEST_CASE("t_squared", "[plane]") {
    CHECK(t_squared(Rat(1), Rat(1, 4)) == Rat(3, 4));
    // on the wall (s + 1/6) alpha^2 = 7/6: t^2 = 2*(7/6) - 1/12 = 9/4
    CHECK(t_squared(Rat(1), Rat(1)) == Rat(9, 4));
    CHECK(t_squared(Rat(7, 6), Rat(5, 6)) == Rat(9, 4));
    // boundary of validity
    CHECK(t_squared(Rat(1, 4), Rat(0)) == Rat(0));
}

TEST_CASE("plane tilt slope", "[plane]") {
    CHECK(plane_tilt_slope({Rat(0), Rat(3), Rat(3, 2)}, Rat(1, 2), Rat(10)) == ExtRat(Rat(0)));
    CHECK(plane_tilt_slope({Rat(1), Rat(2), Rat(2)}, Rat(1, 2), Rat(9, 4)) == ExtRat(Rat(0)));
    CHECK(plane_tilt_slope({Rat(1), Rat(1), Rat(0)}, Rat(0), Rat(1)) == ExtRat(Rat(-1, 2)));
    CHECK(plane_tilt_slope({Rat(0), Rat(0), Rat(5)}, Rat(2), Rat(1)) == ExtRat::infinity());
}

TEST_CASE("zero locus transport: the worked degree-3 instance", "[plane]") {
    // A = (1,2,2) against w = (0,3,3/2): the t^2 = 9/4 tilt wall on the plane
    // maps to (s + 1/6) alpha^2 = 7/6, the alpha0^2 = 7 wall.
    const Dictionary dict = build_dictionary(Rat(3), Rat(3, 2));
    const PlaneChern a{Rat(1), Rat(2), Rat(2)};
    REQUIRE(plane_tilt_slope(a, dict.s_bar, Rat(9, 4)) == ExtRat(Rat(0)));

    const StabilityPoint p(Rat(1), Rat(1));  // (s + 1/6) alpha^2 = 7/6
    REQUIRE(t_squared(p.alpha_sq, p.s) == Rat(9, 4));
    const ChernVector v = twist(pushforward_chern(a), dict.beta_bar);
    CHECK(bridgeland_slope(v, p) == ExtRat(Rat(0)));
    CHECK(alpha0_squared(v.ch1, v.ch3) == Rat(7));
}

TEST_CASE("zero locus transport on random instances", "[plane]") {
    std::mt19937_64 rng(31002);
    int checked = 0;
    while (checked < 250) {
        PlaneChern a{rand_rat(rng), rand_rat(rng), rand_rat(rng)};
        const Rat s_bar = rand_rat(rng);
        Rat t_sq;
        if (a.r.is_zero()) {
            if (a.c.is_zero()) continue;
            a.d = s_bar * a.c;  // put the rank-zero character on the wall
            t_sq = abs(rand_rat(rng)) + Rat(1, 5);
        } else {
            // solve nu = 0 for t^2: t^2 = 2(d - s_bar c)/r + s_bar^2
            t_sq = 2 * (a.d - s_bar * a.c) / a.r + s_bar * s_bar;
            if (t_sq.sign() <= 0) continue;
        }
        if ((a.c - s_bar * a.r).is_zero()) continue;
        REQUIRE(plane_tilt_slope(a, s_bar, t_sq) == ExtRat(Rat(0)));

        // match a slice point: (s + 1/6) alpha^2 = t^2/2 + 1/24, take
        // alpha^2 = 3q so s = 1/6 > 0
        const Rat q = t_sq / 2 + Rat(1, 24);
        const StabilityPoint p(3 * q, Rat(1, 6));
        REQUIRE(t_squared(p.alpha_sq, p.s) == t_sq);

        const Rat beta_bar = s_bar - Rat(1, 2);
        const ChernVector v = twist(pushforward_chern(a), beta_bar);
        // the wall equation itself: lambda's numerator vanishes exactly
        REQUIRE(v.ch3 - (p.s + Rat(1, 6)) * p.alpha_sq * v.ch1 == Rat(0));
        const ExtRat lambda = bridgeland_slope(v, p);
        if (lambda.is_finite()) CHECK(lambda.finite() == Rat(0));
        ++checked;
    }
    REQUIRE(checked == 250);
}
