#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lexiepist/conditions_co.hpp"
#include "lexiepist/conditions_in.hpp"
#include "lexiepist/metric.hpp"
#include "lexiepist/transform.hpp"
#include "testkit.hpp"

using namespace lexiepist;
using testkit::pm;

TEST_CASE("preference partition") {
    Game g5 = testkit::load_game("table5.json");
    LexBelief def = pm({{"D", "x"}, {"E", "x"}, {"F", "x"}});
    auto part = preference_partition(g5.form, def, g5.utility_of(Player::P1));
    CHECK(part.classes ==
          std::vector<std::vector<std::string>>{{"A"}, {"B"}, {"C"}});

    UtilityFunction flat{Player::P1, Matrix(3, std::vector<Rational>(3, Rational(2)))};
    CHECK(preference_partition(g5.form, def, flat).classes ==
          std::vector<std::vector<std::string>>{{"A", "B", "C"}});

    Game g9 = testkit::load_game("table9.json");
    LexBelief dc = pm({{"D", "x"}, {"C", "x"}});
    CHECK(preference_partition(g9.form, dc, g9.utility_of(Player::P1)).classes ==
          std::vector<std::vector<std::string>>{{"A"}, {"B"}});
}

TEST_CASE("utility ladder reproduces the printed tables") {
    Game g5 = testkit::load_game("table5.json");
    LexBelief def = pm({{"D", "x"}, {"E", "x"}, {"F", "x"}});
    UtilityLadder ladder = utility_ladder(g5.form, g5.utility_of(Player::P1), def);
    REQUIRE(ladder.rungs.size() == 3);
    CHECK(ladder.rungs[0].values == g5.utilities[0]);
    CHECK(ladder.rungs[1].values ==
          Matrix{{Rational(1), Rational(1), Rational(1)},
                 {Rational(2), Rational(1), Rational(0)},
                 {Rational(1), Rational(0), Rational(1)}});
    CHECK(ladder.rungs[2].values ==
          Matrix{{Rational(1), Rational(1), Rational(1)},
                 {Rational(2), Rational(1), Rational(0)},
                 {Rational(3), Rational(0), Rational(1)}});

    Game g9 = testkit::load_game("table9.json");
    UtilityLadder l1 = utility_ladder(g9.form, g9.utility_of(Player::P1),
                                      pm({{"D", "x"}, {"C", "x"}}));
    REQUIRE(l1.rungs.size() == 2);
    CHECK(l1.rungs[1].values == Matrix{{Rational(1), Rational(0)}, {Rational(0), Rational(1)}});

    UtilityLadder l2 = utility_ladder(g9.form, g9.utility_of(Player::P2),
                                      pm({{"A", "x"}, {"B", "x"}}));
    REQUIRE(l2.rungs.size() == 2);
    CHECK(l2.rungs[1].values == Matrix{{Rational(2), Rational(0)}, {Rational(1), Rational(1)}});

    UtilityFunction flat{Player::P1, Matrix(2, std::vector<Rational>(2, Rational(3)))};
    CHECK(utility_ladder(g9.form, flat, pm({{"D", "x"}, {"C", "x"}})).rungs.size() == 1);
}

TEST_CASE("co2in rebuilds the printed incomplete models") {
    Game g9 = testkit::load_game("table9.json");
    CompleteModel ex42 = testkit::load_co("ex42_co.json", g9);
    Co2InResult res = co2in(ex42);

    REQUIRE(res.members.at("t1").size() == 2);
    REQUIRE(res.members.at("t2").size() == 2);
    const IncompleteModel ex43 = testkit::load_in("ex43_in.json", g9);
    CHECK(res.model.utility_of(res.members.at("t1")[0]).values ==
          ex43.utility_of("th11").values);
    CHECK(res.model.utility_of(res.members.at("t1")[1]).values ==
          ex43.utility_of("th12").values);
    CHECK(res.model.utility_of(res.members.at("t2")[0]).values ==
          ex43.utility_of("th21").values);
    CHECK(res.model.utility_of(res.members.at("t2")[1]).values ==
          ex43.utility_of("th22").values);

    // Beliefs as printed: each pair rewired to the rung that makes the choice
    // optimal.
    const LexBelief& b = res.model.belief_of(res.members.at("t1")[0]);
    CHECK(b.levels[0][0].choice == "D");
    CHECK(b.levels[0][0].type == res.members.at("t2")[0]);
    CHECK(b.levels[1][0].choice == "C");
    CHECK(b.levels[1][0].type == res.members.at("t2")[1]);

    Game g7 = testkit::load_game("table7.json");
    CompleteModel ex41 = testkit::load_co("ex41_co.json", g7);
    Co2InResult r41 = co2in(ex41);
    CHECK(r41.model.types_of(Player::P1).size() == 3);
    const UtilityPair u = utility_pair_of(g7);
    const std::string theta = r41.members.at("t1")[0];
    CHECK(r41.model.utility_of(theta).values == g7.utilities[0]);
    for (InCondition c : {InCondition::Caution, InCondition::UCentered,
                          InCondition::BetterSupportedNearer}) {
        auto cfb = common_full_belief_in(r41.model, c, u);
        CHECK(std::find(cfb.begin(), cfb.end(), theta) != cfb.end());
    }
    // The image model carries exactly the printed alternative utilities.
    const IncompleteModel ex41_in = testkit::load_in("ex41_in.json", g7);
    CHECK(r41.model.utility_of(r41.members.at("t1")[1]).values ==
          ex41_in.utility_of("th12").values);
    CHECK(r41.model.utility_of(r41.members.at("t1")[2]).values ==
          ex41_in.utility_of("th13").values);
    CHECK(r41.model.utility_of(r41.members.at("t2")[1]).values ==
          ex41_in.utility_of("th22").values);
    CHECK(r41.model.utility_of(r41.members.at("t2")[2]).values ==
          ex41_in.utility_of("th23").values);

    // Single-class sources keep their own utility and one type per source.
    CompleteModel flat;
    Game fg = parse_game(R"({"choices":{"1":["A","B"],"2":["C","D"]},
                             "utilities":{"1":[[1,1],[1,1]],"2":[[0,0],[0,0]]}})");
    flat.game = fg;
    flat.types = {{{"t1"}, {"t2"}}};
    flat.beliefs["t1"] = pm({{"C", "t2"}, {"D", "t2"}});
    flat.beliefs["t2"] = pm({{"A", "t1"}, {"B", "t1"}});
    validate_model(flat);
    Co2InResult rf = co2in(flat);
    CHECK(rf.members.at("t1").size() == 1);
    CHECK(rf.model.utility_of(rf.members.at("t1")[0]).values == fg.utilities[0]);
}

TEST_CASE("in2co quotients by belief equality") {
    Game g9 = testkit::load_game("table9.json");
    IncompleteModel ex43 = testkit::load_in("ex43_in.json", g9);
    In2CoResult res = in2co(ex43, g9);
    CHECK(res.model.types_of(Player::P1).size() == 1);
    CHECK(res.class_of.at("th11") == res.class_of.at("th12"));

    CompleteModel ex42 = testkit::load_co("ex42_co.json", g9);
    std::map<std::string, std::string> mapping{{"t1", res.class_of.at("th11")},
                                               {"t2", res.class_of.at("th21")}};
    CHECK(isomorphic_complete(ex42, res.model, mapping));

    // Distinct beliefs give a bijective correspondence.
    IncompleteModel distinct = ex43;
    distinct.beliefs["th12"] = pm({{"C", "th22"}, {"D", "th21"}});
    In2CoResult res2 = in2co(distinct, g9);
    CHECK(res2.model.types_of(Player::P1).size() == 2);

    Game g7 = testkit::load_game("table7.json");
    IncompleteModel ex51 = testkit::load_in("ex51_in.json", g7);
    In2CoResult res51 = in2co(ex51, g7);
    CompleteModel ex51_co = testkit::load_co("ex51_co.json", g7);
    std::map<std::string, std::string> m51{{"t1", res51.class_of.at("th11")},
                                           {"t2", res51.class_of.at("th21")}};
    CHECK(isomorphic_complete(ex51_co, res51.model, m51));
    const LexBelief& q = res51.model.belief_of(res51.class_of.at("th11"));
    CHECK(q.levels[0][0].choice == "D");
    CHECK(q.levels[1][0].choice == "F");
    CHECK(q.levels[2][0].choice == "E");
}

TEST_CASE("in2co merges same-class atoms and keeps choice marginals") {
    Game g9 = testkit::load_game("table9.json");
    IncompleteModel m;
    m.form = g9.form;
    m.types = {{{"a1", "a2"}, {"b1"}}};
    m.utilities["a1"] = g9.utility_of(Player::P1);
    m.utilities["a2"] = UtilityFunction{Player::P1, {{Rational(5), Rational(0)},
                                                     {Rational(0), Rational(0)}}};
    m.utilities["b1"] = g9.utility_of(Player::P2);
    m.beliefs["a1"] = pm({{"C", "b1"}, {"D", "b1"}});
    m.beliefs["a2"] = pm({{"C", "b1"}, {"D", "b1"}});
    LexBelief b;
    b.levels = {{{"A", "a1", Rational(1, 2)}, {"A", "a2", Rational(1, 2)}}};
    m.beliefs["b1"] = b;
    validate_model(m);
    In2CoResult res = in2co(m, g9);
    const LexBelief& merged = res.model.belief_of(res.class_of.at("b1"));
    REQUIRE(merged.levels[0].size() == 1);
    CHECK(merged.levels[0][0].choice == "A");
    CHECK(merged.levels[0][0].prob == 1);
}

TEST_CASE("cautious extension by doppelgangers") {
    Game g7 = testkit::load_game("table7.json");
    CompleteModel ex41 = testkit::load_co("ex41_co.json", g7);
    CompleteModel same = cautious_extension(ex41, "t1");
    CHECK(serialize(same) == serialize(ex41));

    // One missing pair against a two-type opponent.
    CompleteModel two;
    two.game = g7;
    two.types = {{{"t1"}, {"ta", "tb"}}};
    two.beliefs["ta"] = pm({{"C", "t1"}, {"B", "t1"}, {"A", "t1"}});
    two.beliefs["tb"] = pm({{"A", "t1"}, {"B", "t1"}, {"C", "t1"}});
    LexBelief b1;
    b1.levels = {{{"D", "ta", Rational(1, 2)}, {"D", "tb", Rational(1, 2)}},
                 {{"E", "ta", Rational(1, 2)}, {"E", "tb", Rational(1, 2)}},
                 {{"F", "ta", Rational(1)}}};
    two.beliefs["t1"] = b1;
    validate_model(two);
    REQUIRE(!is_cautious_co(two, "t1").holds());
    const UtilityFunction u1 = g7.utility_of(Player::P1);
    auto before = optimal_choices(g7.form, two.belief_of("t1"), u1);
    CompleteModel ext = cautious_extension(two, "t1");
    CHECK(is_cautious_co(ext, "t1").holds());
    CHECK(optimal_choices(g7.form, ext.belief_of("t1"), u1) == before);
    CHECK(ext.belief_of("t1").level_count() == 4);

    // Two missing pairs need two doppelgangers.
    CompleteModel gap = two;
    LexBelief b2;
    b2.levels = {{{"D", "ta", Rational(1, 2)}, {"D", "tb", Rational(1, 2)}},
                 {{"E", "ta", Rational(1)}},
                 {{"F", "tb", Rational(1)}}};
    gap.beliefs["t1"] = b2;
    validate_model(gap);
    CompleteModel ext2 = cautious_extension(gap, "t1");
    CHECK(is_cautious_co(ext2, "t1").holds());
    CHECK(ext2.belief_of("t1").level_count() == 5);
    CHECK(optimal_choices(g7.form, ext2.belief_of("t1"), u1) ==
          optimal_choices(g7.form, gap.belief_of("t1"), u1));

    // Doppelgangers keep per-level expected utilities: the inserted level
    // duplicates its source level's choice marginal.
    const LexBelief& eb = ext.belief_of("t1");
    auto marg = choice_marginals(g7.form, Player::P1, eb);
    CHECK(marg[2] == marg[3]);

    CompleteModel hopeless = two;
    LexBelief b3;
    b3.levels = {{{"D", "ta", Rational(1)}}};
    hopeless.beliefs["t1"] = b3;
    validate_model(hopeless);
    CHECK_THROWS_AS(cautious_extension(hopeless, "t1"), std::invalid_argument);
}

TEST_CASE("co2in image of the assumption witness expresses all prior-u folds") {
    Game g7 = testkit::load_game("table7.json");
    CompleteModel witness = testkit::table7_assumption_witness(g7);
    Co2InResult built = co2in(witness);
    const UtilityPair u = utility_pair_of(g7);
    // The survivor ladder stabilizes after two rounds; one extra fold
    // confirms the fixpoint.
    for (const auto& src : {"s1B", "s1C", "s2"})
        for (const auto& theta : built.members.at(src))
            for (std::size_t n = 1; n <= 3; ++n) {
                INFO(theta, " fold ", n);
                CHECK(assumes_prior_u_good_nfold(built.model, theta, u, n).holds());
            }
    auto common = common_assumption_prior_u(built.model, u);
    for (const auto& theta : built.members.at("s2"))
        CHECK(std::find(common.begin(), common.end(), theta) != common.end());
}

TEST_CASE("round trip through both constructions") {
    Game g9 = testkit::load_game("table9.json");
    CompleteModel ex42 = testkit::load_co("ex42_co.json", g9);
    Co2InResult fwd = co2in(ex42);
    In2CoResult back = in2co(fwd.model, g9);
    std::map<std::string, std::string> mapping;
    for (const auto& [src, members] : fwd.members)
        mapping[src] = back.class_of.at(members.front());
    CHECK(isomorphic_complete(ex42, back.model, mapping));
}
