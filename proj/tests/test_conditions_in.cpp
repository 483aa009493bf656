#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lexiepist/conditions_in.hpp"
#include "lexiepist/lexpref.hpp"
#include "lexiepist/metric.hpp"
#include "testkit.hpp"

using namespace lexiepist;
using testkit::pm;

namespace {

struct Ex41 {
    Game g = testkit::load_game("table7.json");
    IncompleteModel m;
    UtilityPair u;
    Ex41() : m(testkit::load_in("ex41_in.json", g)), u(utility_pair_of(g)) {}
};

struct Ex51 {
    Game g = testkit::load_game("table7.json");
    IncompleteModel m;
    UtilityPair u;
    Ex51() : m(testkit::load_in("ex51_in.json", g)), u(utility_pair_of(g)) {}
};

// Incomplete-information embedding of the intro game: both supporter types
// carry the real utility function, the flat player-1 type deems everything.
IncompleteModel table2_embedded(const Game& g2) {
    IncompleteModel m;
    m.form = g2.form;
    m.types = {{{"t1"}, {"g2C", "g2E"}}};
    m.utilities["t1"] = g2.utility_of(Player::P1);
    m.utilities["g2C"] = g2.utility_of(Player::P2);
    m.utilities["g2E"] = g2.utility_of(Player::P2);
    m.beliefs["g2C"] = pm({{"A", "t1"}, {"B", "t1"}});
    m.beliefs["g2E"] = pm({{"B", "t1"}, {"A", "t1"}});
    LexBelief b1;
    b1.levels = {
        {{"C", "g2C", Rational(1, 2)}, {"E", "g2E", Rational(1, 2)}},
        {{"D", "g2C", Rational(1, 2)}, {"D", "g2E", Rational(1, 2)}},
        {{"C", "g2E", Rational(1, 2)}, {"E", "g2C", Rational(1, 2)}},
    };
    m.beliefs["t1"] = b1;
    validate_model(m);
    return m;
}

}  // namespace

TEST_CASE("caution with same-belief pairings") {
    Ex41 fx;
    CHECK(is_cautious_in(fx.m, "th11").holds());
    CHECK(is_cautious_in(fx.m, "th21").holds());

    Game g9 = testkit::load_game("table9.json");
    IncompleteModel ex43 = testkit::load_in("ex43_in.json", g9);
    CHECK(is_cautious_in(ex43, "th21").holds());

    // Two belief classes on player 2, one of which never pairs with F.
    IncompleteModel broken;
    broken.form = fx.g.form;
    broken.types = {{{"p1"}, {"qa", "qb"}}};
    broken.utilities["p1"] = fx.g.utility_of(Player::P1);
    broken.utilities["qa"] = fx.g.utility_of(Player::P2);
    broken.utilities["qb"] = fx.g.utility_of(Player::P2);
    broken.beliefs["qa"] = pm({{"A", "p1"}, {"B", "p1"}, {"C", "p1"}});
    broken.beliefs["qb"] = pm({{"B", "p1"}, {"A", "p1"}, {"C", "p1"}});
    broken.beliefs["p1"] =
        pm({{"D", "qa"}, {"E", "qa"}, {"F", "qa"}, {"D", "qb"}, {"E", "qb"}});
    validate_model(broken);
    ConditionVerdict v = is_cautious_in(broken, "p1");
    CHECK(!v.holds());
    REQUIRE(v.witness);
    CHECK(v.witness->pairs.front() == WitnessPair{"F", "qb"});
}

TEST_CASE("weak caution") {
    Ex41 fx;
    CHECK(is_weakly_cautious_in(fx.m, "th11").holds());

    IncompleteModel partial = fx.m;
    partial.beliefs["th11"] = pm({{"D", "th21"}, {"E", "th22"}});
    CHECK(!is_weakly_cautious_in(partial, "th11").holds());
    CHECK(is_weakly_cautious_in(partial, "th21").holds());
}

TEST_CASE("primary belief in utilities nearest to u") {
    Ex41 fx;
    CHECK(primary_belief_nearest_u(fx.m, "th11", fx.u).holds());

    Game g9 = testkit::load_game("table9.json");
    IncompleteModel ex43 = testkit::load_in("ex43_in.json", g9);
    CHECK(primary_belief_nearest_u(ex43, "th21", utility_pair_of(g9)).holds());

    // Level-1 on the farther of two same-belief types fails.
    IncompleteModel far = fx.m;
    far.beliefs["th11"] = pm({{"E", "th22"}, {"D", "th21"}, {"F", "th23"}});
    CHECK(!primary_belief_nearest_u(far, "th11", fx.u).holds());
}

TEST_CASE("u-centered belief") {
    Ex41 fx;
    CHECK(u_centered(fx.m, "th11", fx.u).holds());
    CHECK(sq_euclid(fx.m.utility_of("th21"), fx.u[1]) == 0);
    CHECK(sq_euclid(fx.m.utility_of("th22"), fx.u[1]) == 4);
    CHECK(sq_euclid(fx.m.utility_of("th23"), fx.u[1]) == 20);

    // Swapping the two farther types breaks the ordering.
    IncompleteModel swapped = fx.m;
    swapped.beliefs["th11"] = pm({{"D", "th21"}, {"F", "th23"}, {"E", "th22"}});
    CHECK(!u_centered(swapped, "th11", fx.u).holds());

    // Equal distances impose no ordering constraint.
    IncompleteModel tied = fx.m;
    tied.utilities["th23"] = fx.m.utility_of("th22");
    tied.beliefs["th11"] = pm({{"D", "th21"}, {"F", "th23"}, {"E", "th22"}});
    CHECK(u_centered(tied, "th11", fx.u).holds());
}

TEST_CASE("best choice supported by nearest utilities") {
    Ex41 fx;
    CHECK(best_supported_nearest(fx.m, "th11", fx.u).holds());

    // Optimal choice carried by a strictly farther type than a non-optimal
    // one fails.
    IncompleteModel bad = fx.m;
    bad.utilities["th21"] = fx.m.utility_of("th23");  // D now carried far away
    bad.utilities["th22"] = fx.g.utility_of(Player::P2);
    CHECK(!best_supported_nearest(bad, "th11", fx.u).holds());

    // Both choices optimal: vacuous.
    Game flat = parse_game(R"({"choices":{"1":["A"],"2":["C","D"]},
                               "utilities":{"1":[[0,0]],"2":[[1],[1]]}})");
    IncompleteModel m;
    m.form = flat.form;
    m.types = {{{"x"}, {"y", "z"}}};
    m.utilities["x"] = flat.utility_of(Player::P1);
    m.utilities["y"] = flat.utility_of(Player::P2);
    UtilityFunction far{Player::P2, {{Rational(8)}, {Rational(8)}}};
    m.utilities["z"] = far;
    m.beliefs["y"] = pm({{"A", "x"}});
    m.beliefs["z"] = pm({{"A", "x"}});
    m.beliefs["x"] = pm({{"C", "z"}, {"D", "y"}});
    validate_model(m);
    CHECK(best_supported_nearest(m, "x", utility_pair_of(flat)).holds());
}

TEST_CASE("better choice supported by nearer utilities") {
    Ex41 fx;
    CHECK(better_supported_nearer(fx.m, "th11", fx.u).holds());
    CHECK(better_supported_nearer(fx.m, "th21", fx.u).holds());

    // No-nearest-utility shape: B is preferred to C under u_1, so a model
    // carrying C on the nearer utility fails.
    Game g5 = testkit::load_game("table5.json");
    IncompleteModel m;
    m.form = g5.form;
    m.types = {{{"pB", "pC"}, {"q"}}};
    UtilityFunction vB = g5.utility_of(Player::P1);
    vB.values[1][0] += 4;  // (B,D): B optimal, squared distance 16
    UtilityFunction vC = g5.utility_of(Player::P1);
    vC.values[2][0] += 2;  // (C,D): C optimal, squared distance 4
    m.utilities["pB"] = vB;
    m.utilities["pC"] = vC;
    m.utilities["q"] = g5.utility_of(Player::P2);
    m.beliefs["pB"] = pm({{"D", "q"}, {"E", "q"}, {"F", "q"}});
    m.beliefs["pC"] = pm({{"D", "q"}, {"E", "q"}, {"F", "q"}});
    m.beliefs["q"] = pm({{"B", "pB"}, {"C", "pC"}, {"A", "pB"}});
    validate_model(m);
    ConditionVerdict v = better_supported_nearer(m, "q", utility_pair_of(g5));
    CHECK(!v.holds());

    // Indifferent choices impose no constraint: same shape with a constant
    // reference utility for player 1 passes.
    Game flat5 = g5;
    flat5.utilities[0] = Matrix(3, std::vector<Rational>(3, Rational(1)));
    CHECK(better_supported_nearer(m, "q", utility_pair_of(flat5)).holds());
}

TEST_CASE("belief in rationality") {
    Ex41 fx;
    for (const auto& t : {"th11", "th12", "th13", "th21", "th22", "th23"})
        CHECK(believes_rationality_in(fx.m, t).holds());

    Ex51 fx51;
    ConditionVerdict v = believes_rationality_in(fx51.m, "th11");
    CHECK(!v.holds());
    REQUIRE(v.witness);
    CHECK(v.witness->pairs.front() == WitnessPair{"D", "th21"});

    // Constant utilities make every choice rational.
    IncompleteModel flat = fx.m;
    flat.utilities["th21"] =
        UtilityFunction{Player::P2, Matrix(3, std::vector<Rational>(3, Rational(0)))};
    flat.beliefs["th12"] = pm({{"D", "th21"}, {"E", "th21"}, {"F", "th21"}});
    CHECK(believes_rationality_in(flat, "th12").holds());
}

TEST_CASE("primary belief in u") {
    Ex41 fx;
    CHECK(primary_belief_u(fx.m, "th11", fx.u).holds());

    Game g9 = testkit::load_game("table9.json");
    IncompleteModel ex43 = testkit::load_in("ex43_in.json", g9);
    CHECK(primary_belief_u(ex43, "th22", utility_pair_of(g9)).holds());

    // Exact equality: a scaled copy of u_j does not count.
    IncompleteModel scaled = fx.m;
    UtilityFunction twice = fx.u[1];
    for (auto& row : twice.values)
        for (auto& cell : row) cell *= 2;
    scaled.utilities["th21"] = twice;
    CHECK(!primary_belief_u(scaled, "th11", fx.u).holds());
}

TEST_CASE("prior assumption of u") {
    Ex41 fx;
    CHECK(prior_assumes_u(fx.m, "th11", fx.u).holds());

    // A u-typed cautious pair listed after a non-u pair fails. The reorder
    // is applied to the whole belief class so the opponent types stay
    // cautious.
    IncompleteModel late = fx.m;
    for (const char* t : {"th11", "th12", "th13"})
        late.beliefs[t] = pm({{"E", "th22"}, {"D", "th21"}, {"F", "th23"}});
    CHECK(!prior_assumes_u(late, "th11", fx.u).holds());

    Ex51 fx51;
    // No u-typed cautious pair at all: vacuous.
    CHECK(prior_assumes_u(fx51.m, "th11", fx51.u).holds());
}

TEST_CASE("every good choice supported") {
    Game g2 = testkit::load_game("table2.json");
    IncompleteModel m = table2_embedded(g2);
    const UtilityPair u2 = utility_pair_of(g2);
    CHECK(good_choice_supported(m, "t1", u2).holds());

    // Rewire E's supporter away from u_2: E becomes unsupported.
    IncompleteModel bad = m;
    UtilityFunction other = g2.utility_of(Player::P2);
    other.values[2][1] += 7;
    bad.utilities["g2E"] = other;
    ConditionVerdict v = good_choice_supported(bad, "t1", u2);
    CHECK(!v.holds());
    REQUIRE(v.witness);
    CHECK(v.witness->pairs.front().choice == "E");

    Ex41 fx;
    CHECK(good_choice_supported(fx.m, "th11", fx.u).holds());
}

TEST_CASE("n-fold assumption of prior u") {
    Game g9 = testkit::load_game("table9.json");
    IncompleteModel ex43 = testkit::load_in("ex43_in.json", g9);
    const UtilityPair u9 = utility_pair_of(g9);
    CHECK(assumes_prior_u_good_nfold(ex43, "th11", u9, 1).holds());
    CHECK(assumes_prior_u_good_nfold(ex43, "th11", u9, 2).holds());
    CHECK(assumes_prior_u_good_nfold(ex43, "th21", u9, 2).holds());

    Ex41 fx;
    CHECK(assumes_prior_u_good_nfold(fx.m, "th11", fx.u, 1).holds());
    // Good choices of the opponent shrink to the admissible core at fold 2
    // and no in-model type supports the whole round-1 survivor set.
    CHECK(!assumes_prior_u_good_nfold(fx.m, "th11", fx.u, 2).holds());

    // Reordering the top level breaks the one-fold base case.
    IncompleteModel late = ex43;
    late.beliefs["th11"] = pm({{"C", "th22"}, {"D", "th21"}});
    CHECK(assumes_prior_u_good_nfold(late, "th11", u9, 1).holds() == false);
}

TEST_CASE("degenerate single-choice form stays decidable") {
    Game tiny = parse_game(R"({"choices":{"1":["A"],"2":["B"]},
                               "utilities":{"1":[[0]],"2":[[0]]}})");
    IncompleteModel m;
    m.form = tiny.form;
    m.types = {{{"p"}, {"q"}}};
    m.utilities["p"] = tiny.utility_of(Player::P1);
    m.utilities["q"] = tiny.utility_of(Player::P2);
    m.beliefs["p"] = pm({{"B", "q"}});
    m.beliefs["q"] = pm({{"A", "p"}});
    validate_model(m);
    const UtilityPair u = utility_pair_of(tiny);
    for (InCondition c :
         {InCondition::Caution, InCondition::WeakCaution, InCondition::PrimaryNearestU,
          InCondition::UCentered, InCondition::BestSupportedNearest,
          InCondition::BetterSupportedNearer, InCondition::BeliefRationality,
          InCondition::PrimaryU, InCondition::PriorAssumeU, InCondition::GoodChoiceSupported})
        CHECK(check_in(m, "p", c, u).holds());
    for (std::size_t n = 1; n <= 3; ++n)
        CHECK(assumes_prior_u_good_nfold(m, "p", u, n).holds());
    CHECK(common_assumption_prior_u(m, u) == std::vector<std::string>{"p", "q"});
}

TEST_CASE("common full belief and common assumption fixpoints") {
    Ex41 fx;
    const std::vector<std::string> all = {"th11", "th12", "th13", "th21", "th22", "th23"};
    CHECK(common_full_belief_in(fx.m, InCondition::Caution, fx.u) == all);
    CHECK(common_full_belief_in(fx.m, InCondition::UCentered, fx.u) == all);
    CHECK(common_full_belief_in(fx.m, InCondition::BetterSupportedNearer, fx.u) == all);
    CHECK(common_full_belief_in(fx.m, InCondition::PrimaryNearestU, fx.u) == all);
    CHECK(common_full_belief_in(fx.m, InCondition::BestSupportedNearest, fx.u) == all);

    Ex51 fx51;
    auto survivors = common_full_belief_in(fx51.m, InCondition::BeliefRationality, fx51.u);
    CHECK(survivors.empty());

    // A failing type deemed possible by everyone collapses the fixpoint.
    IncompleteModel poisoned = fx.m;
    poisoned.utilities["th21"] =
        UtilityFunction{Player::P2, {{Rational(0), Rational(0), Rational(0)},
                                     {Rational(9), Rational(9), Rational(9)},
                                     {Rational(0), Rational(0), Rational(0)}}};
    CHECK(common_full_belief_in(poisoned, InCondition::BeliefRationality, fx.u).empty());

    Game g9 = testkit::load_game("table9.json");
    IncompleteModel ex43 = testkit::load_in("ex43_in.json", g9);
    CHECK(common_assumption_prior_u(ex43, utility_pair_of(g9)) ==
          std::vector<std::string>{"th11", "th12", "th21", "th22"});
}
