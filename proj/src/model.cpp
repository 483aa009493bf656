#include "lexiepist/model.hpp"

#include <map>
#include <set>

#include "lexiepist/io.hpp"

namespace lexiepist {

Rational LexBelief::prob_at(std::size_t level, std::string_view choice, std::string_view type) const {
    for (const auto& a : levels[level])
        if (a.choice == choice && a.type == type) return a.prob;
    return Rational(0);
}

bool LexBelief::deems_possible(std::string_view choice, std::string_view type) const {
    for (const auto& level : levels)
        for (const auto& a : level)
            if (a.prob > 0 && a.choice == choice && a.type == type) return true;
    return false;
}

bool belief_equal(const LexBelief& a, const LexBelief& b) {
    if (a.levels.size() != b.levels.size()) return false;
    for (std::size_t k = 0; k < a.levels.size(); ++k) {
        std::map<std::pair<std::string, std::string>, Rational> da, db;
        for (const auto& at : a.levels[k])
            if (at.prob > 0) da[{at.choice, at.type}] += at.prob;
        for (const auto& at : b.levels[k])
            if (at.prob > 0) db[{at.choice, at.type}] += at.prob;
        if (da != db) return false;
    }
    return true;
}

namespace {

template <class M>
std::optional<Player> lookup_player(const M& m, const std::string& type) {
    for (Player p : {Player::P1, Player::P2})
        for (const auto& t : m.types_of(p))
            if (t == type) return p;
    return std::nullopt;
}

template <class M>
const LexBelief& lookup_belief(const M& m, const std::string& type) {
    auto it = m.beliefs.find(type);
    if (it == m.beliefs.end()) throw std::invalid_argument("unknown type '" + type + "'");
    return it->second;
}

void validate_belief(const GameForm& form, Player owner,
                     const std::array<std::vector<std::string>, 2>& types,
                     const std::string& holder, const LexBelief& b) {
    const Player opp = opponent_of(owner);
    const auto& opp_types = types[index_of(opp)];
    if (b.levels.empty())
        throw ParseError(ParseError::Kind::Semantic, "beliefs/" + holder, "belief has no levels");
    for (std::size_t k = 0; k < b.levels.size(); ++k) {
        const std::string loc = "beliefs/" + holder + "[" + std::to_string(k) + "]";
        Rational total(0);
        bool support = false;
        std::set<std::pair<std::string, std::string>> seen;
        if (b.levels[k].empty())
            throw ParseError(ParseError::Kind::Semantic, loc, "empty belief level");
        for (const auto& atom : b.levels[k]) {
            if (!form.choice_index(opp, atom.choice))
                throw ParseError(ParseError::Kind::Semantic, loc,
                                 "unknown opponent choice '" + atom.choice + "'");
            bool known = false;
            for (const auto& t : opp_types) known = known || t == atom.type;
            if (!known)
                throw ParseError(ParseError::Kind::Semantic, loc,
                                 "dangling type reference '" + atom.type + "'");
            if (!seen.insert({atom.choice, atom.type}).second)
                throw ParseError(ParseError::Kind::Semantic, loc,
                                 "duplicate pair (" + atom.choice + "," + atom.type + ")");
            if (atom.prob < 0)
                throw ParseError(ParseError::Kind::Semantic, loc, "negative probability");
            if (atom.prob > 0) support = true;
            total += atom.prob;
        }
        if (total != 1)
            throw ParseError(ParseError::Kind::Semantic, loc,
                             "level probabilities sum to " + rational_to_string(total) +
                                 ", expected 1");
        if (!support) throw ParseError(ParseError::Kind::Semantic, loc, "level has empty support");
    }
}

template <class M>
void validate_types_and_beliefs(const GameForm& form, const M& m) {
    std::set<std::string> all;
    for (Player p : {Player::P1, Player::P2}) {
        const auto& ts = m.types_of(p);
        if (ts.empty())
            throw ParseError(ParseError::Kind::Semantic, std::string("types/") + label_of(p),
                             "empty type set");
        for (const auto& t : ts)
            if (!all.insert(t).second)
                throw ParseError(ParseError::Kind::Semantic, std::string("types/") + label_of(p),
                                 "duplicate type id '" + t + "'");
    }
    for (const auto& [t, b] : m.beliefs)
        if (!all.count(t))
            throw ParseError(ParseError::Kind::Semantic, "beliefs/" + t,
                             "belief for undeclared type");
    for (Player p : {Player::P1, Player::P2})
        for (const auto& t : m.types_of(p)) {
            auto it = m.beliefs.find(t);
            if (it == m.beliefs.end())
                throw ParseError(ParseError::Kind::Semantic, "beliefs/" + t, "missing belief");
            validate_belief(form, p, m.types, t, it->second);
        }
}

}  // namespace

std::optional<Player> CompleteModel::player_of(const std::string& type) const {
    return lookup_player(*this, type);
}
const LexBelief& CompleteModel::belief_of(const std::string& type) const {
    return lookup_belief(*this, type);
}

std::optional<Player> IncompleteModel::player_of(const std::string& type) const {
    return lookup_player(*this, type);
}
const LexBelief& IncompleteModel::belief_of(const std::string& type) const {
    return lookup_belief(*this, type);
}
const UtilityFunction& IncompleteModel::utility_of(const std::string& type) const {
    auto it = utilities.find(type);
    if (it == utilities.end())
        throw std::invalid_argument("no utility assigned to type '" + type + "'");
    return it->second;
}

void validate_model(const CompleteModel& m) {
    validate_game(m.game);
    validate_types_and_beliefs(m.game.form, m);
}

void validate_model(const IncompleteModel& m) {
    validate_form(m.form);
    validate_types_and_beliefs(m.form, m);
    for (Player p : {Player::P1, Player::P2})
        for (const auto& t : m.types_of(p)) {
            auto it = m.utilities.find(t);
            if (it == m.utilities.end())
                throw ParseError(ParseError::Kind::Semantic, "utilities/" + t,
                                 "missing utility assignment");
            if (it->second.owner != p)
                throw ParseError(ParseError::Kind::Semantic, "utilities/" + t,
                                 "utility owner does not match the type's player");
            validate_utility(m.form, it->second);
        }
    for (const auto& [t, u] : m.utilities)
        if (!m.beliefs.count(t))
            throw ParseError(ParseError::Kind::Semantic, "utilities/" + t,
                             "utility for undeclared type");
}

}  // namespace lexiepist
