#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lexiepist/rational.hpp"

namespace lexiepist {

enum class Player : int { P1 = 0, P2 = 1 };

constexpr Player opponent_of(Player p) { return p == Player::P1 ? Player::P2 : Player::P1; }
constexpr std::size_t index_of(Player p) { return static_cast<std::size_t>(p); }
constexpr const char* label_of(Player p) { return p == Player::P1 ? "1" : "2"; }
std::optional<Player> player_from_label(std::string_view label);

using Matrix = std::vector<std::vector<Rational>>;  // rows: own choices, cols: opponent choices

// Static game form: two nonempty choice lists, labels unique per player.
struct GameForm {
    std::array<std::vector<std::string>, 2> choices;

    const std::vector<std::string>& choices_of(Player p) const { return choices[index_of(p)]; }
    std::optional<std::size_t> choice_index(Player p, std::string_view label) const;

    friend bool operator==(const GameForm&, const GameForm&) = default;
};

// A utility function for one player over the whole game form.
struct UtilityFunction {
    Player owner = Player::P1;
    Matrix values;  // values[own choice][opponent choice]

    const Rational& at(std::size_t own, std::size_t opp) const { return values[own][opp]; }

    friend bool operator==(const UtilityFunction&, const UtilityFunction&) = default;
};

struct Game {
    GameForm form;
    std::array<Matrix, 2> utilities;  // per player, rows over own choices

    const std::vector<std::string>& choices_of(Player p) const { return form.choices_of(p); }
    UtilityFunction utility_of(Player p) const { return UtilityFunction{p, utilities[index_of(p)]}; }

    friend bool operator==(const Game&, const Game&) = default;
};

using UtilityPair = std::array<UtilityFunction, 2>;

inline UtilityPair utility_pair_of(const Game& g) {
    return {g.utility_of(Player::P1), g.utility_of(Player::P2)};
}

// Structural validation; throws ParseError (see io.hpp) on violation.
void validate_form(const GameForm& form);
void validate_game(const Game& game);
void validate_utility(const GameForm& form, const UtilityFunction& u);

}  // namespace lexiepist
