#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lexiepist/lexpref.hpp"
#include "testkit.hpp"

using namespace lexiepist;
using testkit::pm;

TEST_CASE("expected utility vectors over point-mass levels") {
    Game g = testkit::load_game("table7.json");
    LexBelief b = pm({{"D", "t2"}, {"E", "t2"}, {"F", "t2"}});
    CHECK(lex_utility(g.form, "C", b, g.utility_of(Player::P1)) ==
          UtilityVector{Rational(1), Rational(1), Rational(0)});
    CHECK(lex_utility(g.form, "A", b, g.utility_of(Player::P1)) ==
          UtilityVector{Rational(0), Rational(1), Rational(1)});

    UtilityFunction zero{Player::P1, Matrix(3, std::vector<Rational>(3, Rational(0)))};
    CHECK(lex_utility(g.form, "B", b, zero) == UtilityVector(3, Rational(0)));

    Game g5 = testkit::load_game("table5.json");
    CHECK(lex_utility(g5.form, "B", b, g5.utility_of(Player::P1)) ==
          UtilityVector{Rational(1), Rational(1), Rational(0)});
}

TEST_CASE("mixed levels marginalize types away") {
    Game g = testkit::load_game("table9.json");
    LexBelief b;
    b.levels = {{{"C", "t2", Rational(1, 3)}, {"D", "t2", Rational(2, 3)}}};
    CHECK(lex_utility(g.form, "A", b, g.utility_of(Player::P1)) ==
          UtilityVector{Rational(1, 3)});
}

TEST_CASE("lexicographic preference relation") {
    Game g = testkit::load_game("table7.json");
    LexBelief b = pm({{"D", "t2"}, {"E", "t2"}, {"F", "t2"}});
    const UtilityFunction u1 = g.utility_of(Player::P1);
    CHECK(prefers(g.form, b, u1, "C", "B") == PrefOrder::Prefers);
    CHECK(prefers(g.form, b, u1, "B", "C") == PrefOrder::Dispreferred);
    CHECK(prefers(g.form, b, u1, "B", "B") == PrefOrder::Indifferent);

    Game g9 = testkit::load_game("table9.json");
    LexBelief b9 = pm({{"D", "t2"}, {"C", "t2"}});
    CHECK(lex_utility(g9.form, "A", b9, g9.utility_of(Player::P1)) ==
          UtilityVector{Rational(0), Rational(1)});
    CHECK(prefers(g9.form, b9, g9.utility_of(Player::P1), "A", "B") == PrefOrder::Prefers);
}

TEST_CASE("optimal choices") {
    Game g = testkit::load_game("table7.json");
    IncompleteModel m = testkit::load_in("ex41_in.json", g);
    auto opt = optimal_choices(m.form, m.belief_of("th11"), m.utility_of("th11"));
    CHECK(opt == std::vector<std::string>{"C"});

    UtilityFunction flat{Player::P1, Matrix(3, std::vector<Rational>(3, Rational(5)))};
    LexBelief b = pm({{"D", "th21"}});
    CHECK(optimal_choices(g.form, b, flat) == std::vector<std::string>{"A", "B", "C"});

    // Full-support single level over a column-constant table: the strictly
    // best row wins regardless of the weights.
    Game g1 = testkit::load_game("table1.json");
    LexBelief full;
    full.levels = {{{"A", "t1", Rational(1, 4)}, {"B", "t1", Rational(3, 4)}}};
    CHECK(optimal_choices(g1.form, full, g1.utility_of(Player::P2)) ==
          std::vector<std::string>{"C"});
}

TEST_CASE("infinitely more likely") {
    Game g = testkit::load_game("table7.json");
    IncompleteModel m = testkit::load_in("ex41_in.json", g);
    const LexBelief& b = m.belief_of("th11");
    CHECK(infinitely_more_likely(b, {"D", "th21"}, {"E", "th22"}));
    CHECK(!infinitely_more_likely(b, {"E", "th22"}, {"D", "th21"}));
    CHECK(!infinitely_more_likely(b, {"D", "th21"}, {"D", "th21"}));
    // A pair that occurs somewhere dominates one that never occurs.
    CHECK(infinitely_more_likely(b, {"F", "th23"}, {"F", "th21"}));
    CHECK(!infinitely_more_likely(b, {"F", "th21"}, {"F", "th23"}));
}

TEST_CASE("deemed possible types") {
    Game g = testkit::load_game("table7.json");
    IncompleteModel m = testkit::load_in("ex41_in.json", g);
    CHECK(deemed_possible_types(m, "th11") ==
          std::vector<std::string>{"th21", "th22", "th23"});

    Game g9 = testkit::load_game("table9.json");
    CompleteModel co = testkit::load_co("ex42_co.json", g9);
    CHECK(deemed_possible_types(co, "t1") == std::vector<std::string>{"t2"});

    CompleteModel single;
    single.game = g9;
    single.types = {{{"t1"}, {"t2"}}};
    single.beliefs["t1"] = pm({{"C", "t2"}});
    single.beliefs["t2"] = pm({{"A", "t1"}});
    CHECK(deemed_possible_types(single, "t1") == std::vector<std::string>{"t2"});
}
