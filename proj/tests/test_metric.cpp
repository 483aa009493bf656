#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lexiepist/metric.hpp"
#include "lexiepist/transform.hpp"
#include "testkit.hpp"

using namespace lexiepist;
using testkit::pm;

TEST_CASE("squared euclidean distance") {
    Game g = testkit::load_game("table7.json");
    IncompleteModel m = testkit::load_in("ex41_in.json", g);
    const UtilityFunction u2 = g.utility_of(Player::P2);
    CHECK(sq_euclid(u2, u2) == 0);
    CHECK(sq_euclid(m.utility_of("th22"), u2) == 4);
    CHECK(sq_euclid(m.utility_of("th23"), u2) == 20);
    CHECK(sq_euclid(m.utility_of("th12"), g.utility_of(Player::P1)) == 1);
    CHECK(sq_euclid(m.utility_of("th13"), g.utility_of(Player::P1)) == 10);

    UtilityFunction wrong{Player::P1, Matrix(2, std::vector<Rational>(3, Rational(0)))};
    CHECK_THROWS_AS(sq_euclid(u2, wrong), std::invalid_argument);
}

TEST_CASE("single-cell bump keeps the promised distance") {
    Game g5 = testkit::load_game("table5.json");
    const UtilityFunction u1 = g5.utility_of(Player::P1);
    for (const Rational& d : {Rational(1), Rational(1, 2), Rational(7, 3)}) {
        UtilityFunction v = u1;
        v.values[1][0] += d / 2;  // (B, D)
        CHECK(sq_euclid(v, u1) == d * d / 4);
        CHECK(sq_euclid(v, u1) < d * d);
    }
}

TEST_CASE("ordinal distance counts flipped pairwise verdicts") {
    Game g5 = testkit::load_game("table5.json");
    const UtilityFunction u1 = g5.utility_of(Player::P1);
    LexBelief beta = pm({{"D", "x"}, {"E", "x"}, {"F", "x"}});
    // The belief only needs choice marginals here; give it a dummy type space.

    CHECK(ordinal_distance(g5.form, beta, u1, u1) == 0);

    UtilityLadder ladder = utility_ladder(g5.form, u1, beta);
    REQUIRE(ladder.rungs.size() == 3);
    CHECK(ordinal_distance(g5.form, beta, ladder.rungs[1], u1) == 1);  // (A,B,C) vs (B,A,C)
    CHECK(ordinal_distance(g5.form, beta, ladder.rungs[2], u1) == 3);  // (A,B,C) vs (C,B,A)
}
