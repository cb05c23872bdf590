#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "wallkit/bounds.hpp"
#include "wallkit/enumerate.hpp"

using namespace wallkit;

TEST_CASE("maximal wall closed form", "[bounds]") {
    CHECK(max_wall_beta0(1) == Rat(1));
    CHECK(max_wall_beta0(2) == Rat(1));
    CHECK(max_wall_beta0(3) == Rat(7));
    CHECK(max_wall_beta0(4) == Rat(7));
    CHECK(max_wall_beta0(5) == Rat(25));
    CHECK(max_wall_beta0(6) == Rat(25));
    CHECK(max_wall_beta0(9) == Rat(79));   // 9 = 3 mod 6 drops 2
    CHECK(max_wall_beta0(15) == Rat(223));
    CHECK_THROWS_AS(max_wall_beta0(0), std::invalid_argument);
}

TEST_CASE("maximal wall equals the enumerated maximum and obeys the bracket", "[bounds]") {
    for (long long D = 1; D <= 10; ++D) {
        for (long long R = 0; R <= 2; ++R) {
            const WallCatalog cat = enumerate_walls(TargetClass(R, D), TwistParameter::zero(), {});
            const std::vector<Rat> walls = distinct_walls(cat);
            REQUIRE(!walls.empty());
            INFO("R=" << R << " D=" << D);
            CHECK(walls.front() == max_wall_beta0(D));
            if (D >= 3) {
                CHECK(Rat((D - 2) * (D - 2)) < walls.front());
                CHECK(walls.front() <= Rat(D * D));
            }
        }
    }
}

TEST_CASE("the maximizing candidate has the predicted shape", "[bounds]") {
    for (long long D = 3; D <= 9; ++D) {
        const WallCatalog cat = enumerate_walls(TargetClass(0, D), TwistParameter::zero(), {});
        const Rat top = distinct_walls(cat).front();
        bool found = false;
        for (const auto& c : cat.candidates) {
            if (c.alpha0_sq != top) continue;
            if (c.c == Rat(1) && (c.d == Rat(D, 2) || c.d == Rat(D - 1, 2)) &&
                6 * c.e == top) {
                found = true;
                CHECK(std::find(c.ranks.begin(), c.ranks.end(), 0) != c.ranks.end());
            }
        }
        INFO("D = " << D);
        CHECK(found);
    }
}

TEST_CASE("gieseker region threshold", "[bounds]") {
    CHECK(gieseker_region_beta0(3) == Rat(3, 2));
    CHECK(gieseker_region_beta0(4) == Rat(8, 3));
    for (long long D = 1; D <= 50; ++D) CHECK(max_wall_beta0(D) / 6 <= gieseker_region_beta0(D));
}

TEST_CASE("no-wall cap", "[bounds]") {
    CHECK(no_wall_cap(3).cap_sq == Rat(36));
    CHECK(no_wall_cap(3).region_threshold == Rat(6));
    CHECK(no_wall_cap(4).cap_sq == Rat(64));
    CHECK(no_wall_cap(4).region_threshold == Rat(32, 3));
}

TEST_CASE("rank zero threshold", "[bounds]") {
    CHECK(rank_zero_threshold(1) == Rat(2));
    CHECK(rank_zero_threshold(3) == Rat(6));
    CHECK(rank_zero_threshold(4) == Rat(8));
    // the largest beta = 1/4 wall at D = 4 sits above 2D = 8, so the
    // threshold already forces its rank list to {0}
    CHECK(Rat(151, 16) > rank_zero_threshold(4));
    // at D = 3 the wall alpha0^2 = 7 exceeds 6 and indeed carries rank 0 only
    const WallCatalog cat = enumerate_walls(TargetClass(0, 3), TwistParameter::zero(), {});
    for (const auto& c : cat.candidates)
        if (c.alpha0_sq > rank_zero_threshold(3)) CHECK(c.ranks == std::vector<long long>{0});
}

TEST_CASE("lower cutoff from the O(1) subobject", "[bounds]") {
    CHECK(lower_cutoff(Rat(1, 3)).alpha0_sq == Rat(4, 9));
    CHECK(lower_cutoff(Rat(1, 3)).region_value == Rat(2, 27));
    CHECK(lower_cutoff(Rat(1, 4)).alpha0_sq == Rat(9, 16));
    CHECK(lower_cutoff(Rat(1, 4)).region_value == Rat(3, 32));
    CHECK(lower_cutoff(Rat(0)).alpha0_sq == Rat(1));
    CHECK_THROWS_AS(lower_cutoff(Rat(1)), std::invalid_argument);
    CHECK_THROWS_AS(lower_cutoff(Rat(-1, 2)), std::invalid_argument);
}

TEST_CASE("bound report assembles the right fields", "[bounds]") {
    const BoundReport rep = bound_report(3);
    CHECK(rep.D == 3);
    CHECK(rep.max_wall_sq == Rat(7));
    CHECK(rep.cap_sq == Rat(36));
    CHECK(rep.rank_zero_threshold_sq == Rat(6));
    CHECK(rep.killing_wall_sq == Rat(1));
    CHECK(rep.gieseker_region_threshold == Rat(3, 2));
    CHECK(rep.max_wall_sq <= rep.cap_sq);
}
