#include "lexiepist/game.hpp"

#include <algorithm>
#include <set>

#include "lexiepist/io.hpp"

namespace lexiepist {

std::optional<Player> player_from_label(std::string_view label) {
    if (label == "1") return Player::P1;
    if (label == "2") return Player::P2;
    return std::nullopt;
}

std::optional<std::size_t> GameForm::choice_index(Player p, std::string_view label) const {
    const auto& cs = choices_of(p);
    auto it = std::find(cs.begin(), cs.end(), label);
    if (it == cs.end()) return std::nullopt;
    return static_cast<std::size_t>(it - cs.begin());
}

void validate_form(const GameForm& form) {
    for (Player p : {Player::P1, Player::P2}) {
        const auto& cs = form.choices_of(p);
        if (cs.empty())
            throw ParseError(ParseError::Kind::Semantic, std::string("choices/") + label_of(p),
                             "empty choice list");
        std::set<std::string> seen;
        for (const auto& c : cs)
            if (!seen.insert(c).second)
                throw ParseError(ParseError::Kind::Semantic, std::string("choices/") + label_of(p),
                                 "duplicate choice label '" + c + "'");
    }
}

void validate_utility(const GameForm& form, const UtilityFunction& u) {
    const auto rows = form.choices_of(u.owner).size();
    const auto cols = form.choices_of(opponent_of(u.owner)).size();
    if (u.values.size() != rows)
        throw ParseError(ParseError::Kind::Semantic, std::string("utilities/") + label_of(u.owner),
                         "expected " + std::to_string(rows) + " rows, got " +
                             std::to_string(u.values.size()));
    for (std::size_t r = 0; r < u.values.size(); ++r)
        if (u.values[r].size() != cols)
            throw ParseError(ParseError::Kind::Semantic,
                             std::string("utilities/") + label_of(u.owner) + "[" + std::to_string(r) + "]",
                             "expected " + std::to_string(cols) + " columns, got " +
                                 std::to_string(u.values[r].size()));
}

void validate_game(const Game& game) {
    validate_form(game.form);
    for (Player p : {Player::P1, Player::P2}) validate_utility(game.form, game.utility_of(p));
}

}  // namespace lexiepist
