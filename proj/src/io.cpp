#include "lexiepist/io.hpp"

#include <json.hpp>

namespace lexiepist {

namespace {

using nlohmann::json;

json parse_json(const std::string& document) {
    json doc = json::parse(document, nullptr, false);
    if (doc.is_discarded())
        throw ParseError(ParseError::Kind::Syntax, "", "malformed JSON document");
    return doc;
}

Rational rational_from_json(const json& v, const std::string& where) {
    if (v.is_number_integer()) {
        if (v.is_number_unsigned())
            return Rational(BigInt(v.get<std::uint64_t>()));
        return Rational(BigInt(v.get<std::int64_t>()));
    }
    if (v.is_string()) {
        try {
            return parse_rational(v.get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw ParseError(ParseError::Kind::Semantic, where, e.what());
        }
    }
    throw ParseError(ParseError::Kind::Semantic, where,
                     "numbers must be integers or rational strings \"p/q\"");
}

json rational_to_json(const Rational& r) {
    if (denominator(r) == 1 && numerator(r) >= std::numeric_limits<std::int64_t>::min() &&
        numerator(r) <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(numerator(r));
    return rational_to_string(r);
}

const json& member(const json& obj, const char* key, const std::string& where) {
    if (!obj.is_object() || !obj.contains(key))
        throw ParseError(ParseError::Kind::Semantic, where, std::string("missing key '") + key + "'");
    return obj.at(key);
}

Matrix matrix_from_json(const json& rows, const std::string& where) {
    if (!rows.is_array())
        throw ParseError(ParseError::Kind::Semantic, where, "expected an array of rows");
    Matrix m;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const json& row = rows[r];
        const std::string rloc = where + "[" + std::to_string(r) + "]";
        if (!row.is_array()) throw ParseError(ParseError::Kind::Semantic, rloc, "expected a row array");
        std::vector<Rational> out;
        for (std::size_t c = 0; c < row.size(); ++c)
            out.push_back(rational_from_json(row[c], rloc + "[" + std::to_string(c) + "]"));
        m.push_back(std::move(out));
    }
    return m;
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (const auto& row : m) {
        json r = json::array();
        for (const auto& v : row) r.push_back(rational_to_json(v));
        rows.push_back(std::move(r));
    }
    return rows;
}

std::vector<std::string> labels_from_json(const json& arr, const std::string& where) {
    if (!arr.is_array()) throw ParseError(ParseError::Kind::Semantic, where, "expected an array");
    std::vector<std::string> out;
    for (const auto& v : arr) {
        if (!v.is_string()) throw ParseError(ParseError::Kind::Semantic, where, "labels must be strings");
        out.push_back(v.get<std::string>());
    }
    return out;
}

GameForm form_from_json(const json& doc) {
    GameForm form;
    const json& choices = member(doc, "choices", "");
    form.choices[0] = labels_from_json(member(choices, "1", "choices"), "choices/1");
    form.choices[1] = labels_from_json(member(choices, "2", "choices"), "choices/2");
    validate_form(form);
    return form;
}

LexBelief belief_from_json(const json& levels, const std::string& where) {
    if (!levels.is_array())
        throw ParseError(ParseError::Kind::Semantic, where, "expected an array of levels");
    LexBelief b;
    for (std::size_t k = 0; k < levels.size(); ++k) {
        const std::string kloc = where + "[" + std::to_string(k) + "]";
        if (!levels[k].is_array())
            throw ParseError(ParseError::Kind::Semantic, kloc, "expected an array of atoms");
        std::vector<BeliefAtom> level;
        for (const auto& a : levels[k]) {
            BeliefAtom atom;
            const json& cj = member(a, "choice", kloc);
            const json& tj = member(a, "type", kloc);
            if (!cj.is_string() || !tj.is_string())
                throw ParseError(ParseError::Kind::Semantic, kloc, "choice/type must be strings");
            atom.choice = cj.get<std::string>();
            atom.type = tj.get<std::string>();
            atom.prob = rational_from_json(member(a, "prob", kloc), kloc);
            level.push_back(std::move(atom));
        }
        b.levels.push_back(std::move(level));
    }
    return b;
}

json belief_to_json(const LexBelief& b) {
    json levels = json::array();
    for (const auto& level : b.levels) {
        json l = json::array();
        for (const auto& a : level)
            l.push_back(json{{"choice", a.choice}, {"type", a.type}, {"prob", rational_to_json(a.prob)}});
        levels.push_back(std::move(l));
    }
    return levels;
}

template <class M>
void types_and_beliefs_from_json(const json& doc, M& m) {
    const json& types = member(doc, "types", "");
    m.types[0] = labels_from_json(member(types, "1", "types"), "types/1");
    m.types[1] = labels_from_json(member(types, "2", "types"), "types/2");
    const json& beliefs = member(doc, "beliefs", "");
    if (!beliefs.is_object())
        throw ParseError(ParseError::Kind::Semantic, "beliefs", "expected an object");
    for (auto it = beliefs.begin(); it != beliefs.end(); ++it)
        m.beliefs[it.key()] = belief_from_json(it.value(), "beliefs/" + it.key());
}

}  // namespace

Game parse_game(const std::string& document) {
    json doc = parse_json(document);
    Game g;
    g.form = form_from_json(doc);
    const json& utilities = member(doc, "utilities", "");
    g.utilities[0] = matrix_from_json(member(utilities, "1", "utilities"), "utilities/1");
    g.utilities[1] = matrix_from_json(member(utilities, "2", "utilities"), "utilities/2");
    validate_game(g);
    return g;
}

GameForm parse_game_form(const std::string& document) {
    return form_from_json(parse_json(document));
}

AnyModel parse_model(const std::string& document, const GameForm& form) {
    json doc = parse_json(document);
    const json& flavor = member(doc, "flavor", "");
    if (flavor == "incomplete") {
        IncompleteModel m;
        m.form = form;
        types_and_beliefs_from_json(doc, m);
        const json& utilities = member(doc, "utilities", "");
        if (!utilities.is_object())
            throw ParseError(ParseError::Kind::Semantic, "utilities", "expected an object");
        for (auto it = utilities.begin(); it != utilities.end(); ++it) {
            UtilityFunction u;
            auto owner = m.player_of(it.key());
            if (!owner)
                throw ParseError(ParseError::Kind::Semantic, "utilities/" + it.key(),
                                 "utility for undeclared type");
            u.owner = *owner;
            u.values = matrix_from_json(it.value(), "utilities/" + it.key());
            m.utilities[it.key()] = std::move(u);
        }
        validate_model(m);
        return m;
    }
    if (flavor == "complete")
        throw ParseError(ParseError::Kind::Semantic, "flavor",
                         "complete model needs a game with utilities, got a bare form");
    throw ParseError(ParseError::Kind::Semantic, "flavor", "must be \"complete\" or \"incomplete\"");
}

AnyModel parse_model(const std::string& document, const Game& game) {
    json doc = parse_json(document);
    const json& flavor = member(doc, "flavor", "");
    if (flavor == "complete") {
        CompleteModel m;
        m.game = game;
        types_and_beliefs_from_json(doc, m);
        validate_model(m);
        return m;
    }
    return parse_model(document, game.form);
}

ChoiceBelief parse_choice_belief(const std::string& document, const GameForm& form, Player owner) {
    json doc = parse_json(document);
    if (!doc.is_array()) throw ParseError(ParseError::Kind::Semantic, "", "expected an array of levels");
    const Player opp = opponent_of(owner);
    ChoiceBelief b;
    for (std::size_t k = 0; k < doc.size(); ++k) {
        const std::string kloc = "[" + std::to_string(k) + "]";
        if (!doc[k].is_array())
            throw ParseError(ParseError::Kind::Semantic, kloc, "expected an array of atoms");
        std::vector<std::pair<std::string, Rational>> level;
        Rational total(0);
        for (const auto& a : doc[k]) {
            const json& cj = member(a, "choice", kloc);
            if (!cj.is_string())
                throw ParseError(ParseError::Kind::Semantic, kloc, "choice must be a string");
            std::string choice = cj.get<std::string>();
            if (!form.choice_index(opp, choice))
                throw ParseError(ParseError::Kind::Semantic, kloc,
                                 "unknown opponent choice '" + choice + "'");
            Rational p = rational_from_json(member(a, "prob", kloc), kloc);
            if (p < 0) throw ParseError(ParseError::Kind::Semantic, kloc, "negative probability");
            total += p;
            level.emplace_back(std::move(choice), std::move(p));
        }
        if (total != 1)
            throw ParseError(ParseError::Kind::Semantic, kloc,
                             "level probabilities sum to " + rational_to_string(total) +
                                 ", expected 1");
        b.push_back(std::move(level));
    }
    if (b.empty()) throw ParseError(ParseError::Kind::Semantic, "", "belief has no levels");
    return b;
}

std::string serialize(const Game& game) {
    json doc;
    doc["choices"] = {{"1", game.form.choices[0]}, {"2", game.form.choices[1]}};
    doc["utilities"] = {{"1", matrix_to_json(game.utilities[0])},
                        {"2", matrix_to_json(game.utilities[1])}};
    return doc.dump(2);
}

std::string serialize(const CompleteModel& m) {
    json doc;
    doc["flavor"] = "complete";
    doc["types"] = {{"1", m.types[0]}, {"2", m.types[1]}};
    json beliefs = json::object();
    for (const auto& [t, b] : m.beliefs) beliefs[t] = belief_to_json(b);
    doc["beliefs"] = std::move(beliefs);
    return doc.dump(2);
}

std::string serialize(const IncompleteModel& m) {
    json doc;
    doc["flavor"] = "incomplete";
    doc["types"] = {{"1", m.types[0]}, {"2", m.types[1]}};
    json beliefs = json::object();
    for (const auto& [t, b] : m.beliefs) beliefs[t] = belief_to_json(b);
    doc["beliefs"] = std::move(beliefs);
    json utilities = json::object();
    for (const auto& [t, u] : m.utilities) utilities[t] = matrix_to_json(u.values);
    doc["utilities"] = std::move(utilities);
    return doc.dump(2);
}

std::string serialize(const AnyModel& m) {
    return std::visit([](const auto& x) { return serialize(x); }, m);
}

}  // namespace lexiepist
