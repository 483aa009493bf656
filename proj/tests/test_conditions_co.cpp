#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lexiepist/conditions_co.hpp"
#include "lexiepist/lexpref.hpp"
#include "testkit.hpp"

using namespace lexiepist;
using testkit::pm;

namespace {

CompleteModel drop_f_model(const Game& g7) {
    CompleteModel m;
    m.game = g7;
    m.types = {{{"t1"}, {"t2"}}};
    m.beliefs["t1"] = pm({{"D", "t2"}, {"E", "t2"}});
    m.beliefs["t2"] = pm({{"C", "t1"}, {"B", "t1"}, {"A", "t1"}});
    validate_model(m);
    return m;
}

// Player-2 side of the iterated-admissibility intro game, embedded with a
// flat player 1: two supporter types for C and E plus a player-1 type whose
// belief puts the supported pairs first.
CompleteModel table2_embedded(const Game& g2) {
    CompleteModel m;
    m.game = g2;
    m.types = {{{"t1"}, {"t2C", "t2E"}}};
    m.beliefs["t2C"] = pm({{"A", "t1"}, {"B", "t1"}});
    m.beliefs["t2E"] = pm({{"B", "t1"}, {"A", "t1"}});
    LexBelief b1;
    b1.levels = {
        {{"C", "t2C", Rational(1, 2)}, {"E", "t2E", Rational(1, 2)}},
        {{"D", "t2C", Rational(1, 2)}, {"D", "t2E", Rational(1, 2)}},
        {{"C", "t2E", Rational(1, 2)}, {"E", "t2C", Rational(1, 2)}},
    };
    m.beliefs["t1"] = b1;
    validate_model(m);
    return m;
}

}  // namespace

TEST_CASE("caution") {
    Game g9 = testkit::load_game("table9.json");
    CompleteModel ex42 = testkit::load_co("ex42_co.json", g9);
    CHECK(is_cautious_co(ex42, "t1").holds());
    CHECK(is_cautious_co(ex42, "t2").holds());

    Game g7 = testkit::load_game("table7.json");
    CompleteModel ex41 = testkit::load_co("ex41_co.json", g7);
    CHECK(is_cautious_co(ex41, "t1").holds());

    CompleteModel broken = drop_f_model(g7);
    ConditionVerdict v = is_cautious_co(broken, "t1");
    CHECK(!v.holds());
    REQUIRE(v.witness);
    CHECK(v.witness->pairs.front() == WitnessPair{"F", "t2"});
}

TEST_CASE("weak caution") {
    Game g7 = testkit::load_game("table7.json");
    CompleteModel ex41 = testkit::load_co("ex41_co.json", g7);
    CHECK(is_weakly_cautious_co(ex41, "t1").holds());

    CompleteModel broken = drop_f_model(g7);
    ConditionVerdict v = is_weakly_cautious_co(broken, "t1");
    CHECK(!v.holds());
    REQUIRE(v.witness);
    CHECK(v.witness->pairs.front().choice == "F");

    // Choice covered through a different type than the one it is missing
    // with: weakly cautious but not cautious.
    CompleteModel two;
    two.game = g7;
    two.types = {{{"t1"}, {"ta", "tb"}}};
    two.beliefs["ta"] = pm({{"C", "t1"}, {"B", "t1"}, {"A", "t1"}});
    two.beliefs["tb"] = pm({{"C", "t1"}, {"B", "t1"}, {"A", "t1"}});
    two.beliefs["t1"] = pm({{"D", "ta"}, {"E", "ta"}, {"F", "tb"}});
    validate_model(two);
    CHECK(is_weakly_cautious_co(two, "t1").holds());
    CHECK(!is_cautious_co(two, "t1").holds());
}

TEST_CASE("primary belief in rationality") {
    Game g9 = testkit::load_game("table9.json");
    CompleteModel ex42 = testkit::load_co("ex42_co.json", g9);
    CHECK(primarily_believes_rationality(ex42, "t2").holds());
    CHECK(primarily_believes_rationality(ex42, "t1").holds());

    Game g7 = testkit::load_game("table7.json");
    CompleteModel ex41 = testkit::load_co("ex41_co.json", g7);
    CHECK(primarily_believes_rationality(ex41, "t1").holds());

    // Level-1 support on a strictly worst choice fails with that witness.
    CompleteModel bad;
    bad.game = g7;
    bad.types = {{{"t1"}, {"t2"}}};
    bad.beliefs["t1"] = pm({{"F", "t2"}, {"D", "t2"}, {"E", "t2"}});
    bad.beliefs["t2"] = pm({{"C", "t1"}, {"B", "t1"}, {"A", "t1"}});
    validate_model(bad);
    ConditionVerdict v = primarily_believes_rationality(bad, "t1");
    CHECK(!v.holds());
    REQUIRE(v.witness);
    CHECK(v.witness->pairs.front() == WitnessPair{"F", "t2"});
}

TEST_CASE("respect of the opponent's preferences") {
    Game g7 = testkit::load_game("table7.json");
    CompleteModel ex41 = testkit::load_co("ex41_co.json", g7);
    CHECK(respects_preferences(ex41, "t2").holds());
    CHECK(respects_preferences(ex41, "t1").holds());

    CompleteModel ex51 = testkit::load_co("ex51_co.json", g7);
    ConditionVerdict v = respects_preferences(ex51, "t1");
    CHECK(v.status == ConditionVerdict::Status::Fails);
    REQUIRE(v.witness);
    // t2 prefers E to F under u_2, but the belief lists F first.
    CHECK(v.witness->pairs[0] == WitnessPair{"E", "t2"});
    CHECK(v.witness->pairs[1] == WitnessPair{"F", "t2"});

    // Swapping the most preferred choice to the back breaks it too.
    CompleteModel swapped = ex41;
    swapped.beliefs["t2"] = pm({{"B", "t1"}, {"A", "t1"}, {"C", "t1"}});
    CHECK(!respects_preferences(swapped, "t2").holds());

    // Non-cautious type: distinguished precondition verdict.
    CompleteModel partial = ex41;
    partial.beliefs["t1"] = pm({{"D", "t2"}, {"E", "t2"}});
    CHECK(respects_preferences(partial, "t1").status ==
          ConditionVerdict::Status::Precondition);
}

TEST_CASE("one-fold assumption of rationality on the intro game") {
    Game g2 = testkit::load_game("table2.json");
    CompleteModel m = table2_embedded(g2);
    CHECK(is_cautious_co(m, "t1").holds());
    CHECK(assumes_rationality_nfold(m, "t1", 1).holds());

    // Putting D in front of the supported pairs breaks clause (b).
    CompleteModel bad = m;
    LexBelief b1;
    b1.levels = {
        {{"D", "t2C", Rational(1, 2)}, {"D", "t2E", Rational(1, 2)}},
        {{"C", "t2C", Rational(1, 2)}, {"E", "t2E", Rational(1, 2)}},
        {{"C", "t2E", Rational(1, 2)}, {"E", "t2C", Rational(1, 2)}},
    };
    bad.beliefs["t1"] = b1;
    validate_model(bad);
    CHECK(!assumes_rationality_nfold(bad, "t1", 1).holds());
}

TEST_CASE("one-fold assumption holds vacuously when every pair qualifies") {
    Game flat = parse_game(R"({"choices":{"1":["A","B"],"2":["C","D"]},
                               "utilities":{"1":[[1,1],[1,1]],"2":[[2,2],[2,2]]}})");
    CompleteModel m;
    m.game = flat;
    m.types = {{{"t1"}, {"t2"}}};
    LexBelief b1, b2;
    b1.levels = {{{"C", "t2", Rational(1, 2)}, {"D", "t2", Rational(1, 2)}}};
    b2.levels = {{{"A", "t1", Rational(1, 2)}, {"B", "t1", Rational(1, 2)}}};
    m.beliefs["t1"] = b1;
    m.beliefs["t2"] = b2;
    validate_model(m);
    CHECK(assumes_rationality_nfold(m, "t1", 1).holds());
}

TEST_CASE("one-fold assumption on the 3x3 game needs D in front") {
    Game g7 = testkit::load_game("table7.json");
    CompleteModel ex41 = testkit::load_co("ex41_co.json", g7);
    CHECK(assumes_rationality_nfold(ex41, "t1", 1).holds());

    CompleteModel bad = ex41;
    bad.beliefs["t1"] = pm({{"E", "t2"}, {"D", "t2"}, {"F", "t2"}});
    CHECK(!assumes_rationality_nfold(bad, "t1", 1).holds());

    // t2's side fails: A and B survive round 1 but have no supporter.
    CHECK(!assumes_rationality_nfold(ex41, "t2", 1).holds());
}

TEST_CASE("degenerate single-choice game") {
    Game tiny = parse_game(R"({"choices":{"1":["A"],"2":["B"]},
                               "utilities":{"1":[[0]],"2":[[0]]}})");
    CompleteModel m;
    m.game = tiny;
    m.types = {{{"t1"}, {"t2"}}};
    m.beliefs["t1"] = pm({{"B", "t2"}});
    m.beliefs["t2"] = pm({{"A", "t1"}});
    validate_model(m);
    for (std::size_t n = 1; n <= 3; ++n) CHECK(assumes_rationality_nfold(m, "t1", n).holds());
    CHECK(common_assumption_rationality(m) == std::vector<std::string>{"t1", "t2"});
}

TEST_CASE("common full belief fixpoints") {
    Game g9 = testkit::load_game("table9.json");
    CompleteModel ex42 = testkit::load_co("ex42_co.json", g9);
    CHECK(common_full_belief_co(ex42, CoCondition::Caution) ==
          std::vector<std::string>{"t1", "t2"});

    Game g7 = testkit::load_game("table7.json");
    CompleteModel ex41 = testkit::load_co("ex41_co.json", g7);
    CHECK(common_full_belief_co(ex41, CoCondition::RespectPreferences) ==
          std::vector<std::string>{"t1", "t2"});

    // One failing type deemed possible by everyone collapses the fixpoint.
    CompleteModel poisoned;
    poisoned.game = g7;
    poisoned.types = {{{"t1"}, {"t2", "t3"}}};
    poisoned.beliefs["t2"] = pm({{"C", "t1"}, {"B", "t1"}, {"A", "t1"}});
    poisoned.beliefs["t3"] = pm({{"C", "t1"}, {"B", "t1"}});  // not cautious
    LexBelief b1;
    b1.levels = {{{"D", "t2", Rational(1, 2)}, {"D", "t3", Rational(1, 2)}},
                 {{"E", "t2", Rational(1, 2)}, {"E", "t3", Rational(1, 2)}},
                 {{"F", "t2", Rational(1, 2)}, {"F", "t3", Rational(1, 2)}}};
    poisoned.beliefs["t1"] = b1;
    validate_model(poisoned);
    CHECK(common_full_belief_co(poisoned, CoCondition::Caution).empty());
}

TEST_CASE("common assumption of rationality") {
    Game g7 = testkit::load_game("table7.json");
    CompleteModel witness = testkit::table7_assumption_witness(g7);

    const UtilityFunction u1 = g7.utility_of(Player::P1);
    CHECK(optimal_choices(g7.form, witness.belief_of("s1A"), u1) ==
          std::vector<std::string>{"A"});
    CHECK(optimal_choices(g7.form, witness.belief_of("s1B"), u1) ==
          std::vector<std::string>{"B"});
    CHECK(optimal_choices(g7.form, witness.belief_of("s1C"), u1) ==
          std::vector<std::string>{"C"});

    CHECK(assumes_rationality_nfold(witness, "s2", 1).holds());
    CHECK(assumes_rationality_nfold(witness, "s2", 2).holds());
    CHECK(!assumes_rationality_nfold(witness, "s1A", 1).holds());

    CHECK(common_assumption_rationality(witness) ==
          std::vector<std::string>{"s1B", "s1C", "s2"});

    // No cautious type, empty result.
    CompleteModel none;
    none.game = g7;
    none.types = {{{"t1"}, {"t2"}}};
    none.beliefs["t1"] = pm({{"D", "t2"}});
    none.beliefs["t2"] = pm({{"C", "t1"}});
    validate_model(none);
    CHECK(common_assumption_rationality(none).empty());

    Game g9 = testkit::load_game("table9.json");
    CompleteModel ex42 = testkit::load_co("ex42_co.json", g9);
    CHECK(common_assumption_rationality(ex42) == std::vector<std::string>{"t1", "t2"});
}
