#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include "lexiepist/io.hpp"
#include "lexiepist/transform.hpp"
#include "testkit.hpp"

using namespace lexiepist;
using nlohmann::json;

TEST_CASE("rational parsing and canonical form") {
    CHECK(parse_rational("1/2") == Rational(1, 2));
    CHECK(parse_rational("-3/6") == Rational(-1, 2));
    CHECK(parse_rational("4/-2") == Rational(-2));
    CHECK(parse_rational("7") == Rational(7));
    CHECK(rational_to_string(Rational(-1, 2)) == "-1/2");
    CHECK(rational_to_string(Rational(6, 3)) == "2");
    CHECK(rational_to_string(parse_rational("123456789012345678901234567890/2")) ==
          "61728394506172839450617283945");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("a/2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
}

TEST_CASE("rational arithmetic is a field on sample vectors") {
    const std::vector<Rational> xs = {Rational(0), Rational(1), Rational(-3, 7), Rational(22, 5),
                                      Rational(-8)};
    for (const auto& a : xs)
        for (const auto& b : xs) {
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK(a + Rational(0) == a);
            CHECK(a * Rational(1) == a);
            CHECK(a - a == 0);
            if (b != 0) CHECK((a / b) * b == a);
            for (const auto& c : xs) {
                CHECK((a + b) + c == a + (b + c));
                CHECK(a * (b + c) == a * b + a * c);
            }
        }
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
}

TEST_CASE("parse_game reads the 3x3 fixture exactly") {
    Game g = testkit::load_game("table7.json");
    CHECK(g.choices_of(Player::P1) == std::vector<std::string>{"A", "B", "C"});
    CHECK(g.choices_of(Player::P2) == std::vector<std::string>{"D", "E", "F"});
    // u_1(A,D) = 0, u_2(D,A) = 3
    CHECK(g.utilities[0][0][0] == 0);
    CHECK(g.utilities[1][0][0] == 3);
    CHECK(g.utilities[0][2][1] == 1);
}

TEST_CASE("1x1 game is legal") {
    Game g = parse_game(R"({"choices":{"1":["A"],"2":["B"]},
                            "utilities":{"1":[[0]],"2":[[0]]}})");
    CHECK(g.choices_of(Player::P1).size() == 1);
}

TEST_CASE("duplicate choice label is a semantic error") {
    try {
        parse_game(R"({"choices":{"1":["A","A"],"2":["B"]},
                       "utilities":{"1":[[0],[0]],"2":[[0,0]]}})");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.kind == ParseError::Kind::Semantic);
        CHECK(e.where == "choices/1");
    }
}

TEST_CASE("malformed JSON is a syntax error") {
    try {
        parse_game("{not json");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.kind == ParseError::Kind::Syntax);
    }
}

TEST_CASE("parse_model reads the incomplete fixture") {
    Game g = testkit::load_game("table7.json");
    IncompleteModel m = testkit::load_in("ex41_in.json", g);
    CHECK(m.types_of(Player::P1) == std::vector<std::string>{"th11", "th12", "th13"});
    CHECK(m.utility_of("th11").values == g.utilities[0]);
    const LexBelief& b = m.belief_of("th11");
    REQUIRE(b.level_count() == 3);
    CHECK(b.levels[0][0].choice == "D");
    CHECK(b.levels[0][0].type == "th21");
    CHECK(b.levels[1][0].choice == "E");
    CHECK(b.levels[2][0].choice == "F");
}

TEST_CASE("belief level must sum to one") {
    Game g = testkit::load_game("table9.json");
    const char* doc = R"({"flavor":"complete","types":{"1":["t1"],"2":["t2"]},
      "beliefs":{
        "t1":[[{"choice":"C","type":"t2","prob":"1/2"},{"choice":"D","type":"t2","prob":"1/3"}]],
        "t2":[[{"choice":"A","type":"t1","prob":1}]]}})";
    CHECK_THROWS_AS(parse_model(doc, g), ParseError);
}

TEST_CASE("parse_model reads the complete fixture") {
    Game g = testkit::load_game("table9.json");
    CompleteModel m = testkit::load_co("ex42_co.json", g);
    CHECK(m.types_of(Player::P2) == std::vector<std::string>{"t2"});
    CHECK(m.belief_of("t1").levels[0][0].choice == "D");
}

TEST_CASE("serialization round trips") {
    Game g = testkit::load_game("table7.json");
    CHECK(parse_game(serialize(g)) == g);

    IncompleteModel m = testkit::load_in("ex41_in.json", g);
    const std::string s = serialize(m);
    CHECK(serialize(std::get<IncompleteModel>(parse_model(s, g.form))) == s);

    Game g9 = testkit::load_game("table9.json");
    CompleteModel co = testkit::load_co("ex42_co.json", g9);
    IncompleteModel derived = co2in(co).model;
    const std::string ds = serialize(derived);
    CHECK(serialize(std::get<IncompleteModel>(parse_model(ds, g9.form))) == ds);
}

TEST_CASE("validation rejects targeted mutations") {
    Game g = testkit::load_game("table7.json");
    json model = json::parse(testkit::read_fixture("ex41_in.json"));

    auto expect_rejected = [&](const json& mutated) {
        CHECK_THROWS_AS(parse_model(mutated.dump(), g.form), ParseError);
    };

    {
        json bad = model;
        bad["beliefs"]["th11"][0][0]["type"] = "nosuch";
        expect_rejected(bad);
    }
    {
        json bad = model;
        bad["beliefs"]["th11"][0][0]["prob"] = "1/2";  // level no longer sums to 1
        expect_rejected(bad);
    }
    {
        json bad = model;
        bad["utilities"].erase("th12");
        expect_rejected(bad);
    }
    {
        json bad = model;
        bad["utilities"]["th11"][0].erase(2);  // ragged matrix
        expect_rejected(bad);
    }
    {
        json bad = model;
        bad["types"]["1"].push_back("th11");  // duplicate type id
        expect_rejected(bad);
    }
    {
        json bad = model;
        bad["beliefs"]["th11"][0][0]["prob"] = 0.5;  // floats are rejected
        expect_rejected(bad);
    }
    {
        json bad = model;
        bad["beliefs"]["th11"][0][0]["prob"] = -1;
        expect_rejected(bad);
    }
    {
        json bad = model;
        bad["flavor"] = "half-baked";
        expect_rejected(bad);
    }
    {
        json bad = model;
        bad["beliefs"]["th11"][0].push_back(
            json{{"choice", "D"}, {"type", "th21"}, {"prob", 0}});  // duplicate pair
        expect_rejected(bad);
    }
}

TEST_CASE("belief equality is semantic") {
    LexBelief a, b;
    a.levels = {{{"D", "t", Rational(1, 2)}, {"E", "t", Rational(1, 2)}}};
    b.levels = {{{"E", "t", Rational(1, 2)}, {"D", "t", Rational(1, 2)}}};
    CHECK(belief_equal(a, b));
    b.levels[0].push_back({"F", "t", Rational(0)});
    CHECK(belief_equal(a, b));
    b.levels[0][0].prob = Rational(1, 3);
    CHECK(!belief_equal(a, b));
}
