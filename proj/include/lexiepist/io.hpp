#pragma once

#include <stdexcept>
#include <string>
#include <variant>

#include "lexiepist/game.hpp"
#include "lexiepist/model.hpp"

namespace lexiepist {

struct ParseError : std::runtime_error {
    enum class Kind { Syntax, Semantic };
    Kind kind;
    std::string where;  // JSON-pointer-style location of the offending item

    ParseError(Kind k, std::string loc, const std::string& msg)
        : std::runtime_error(loc.empty() ? msg : loc + ": " + msg),
          kind(k),
          where(std::move(loc)) {}
};

Game parse_game(const std::string& document);
GameForm parse_game_form(const std::string& document);

using AnyModel = std::variant<CompleteModel, IncompleteModel>;

// The document declares its flavor; the game (or form) is supplied alongside.
AnyModel parse_model(const std::string& document, const Game& game);
AnyModel parse_model(const std::string& document, const GameForm& form);

// Choice-only lexicographic belief (levels over opponent choices), used by
// the ladder CLI entry point.
using ChoiceBelief = std::vector<std::vector<std::pair<std::string, Rational>>>;
ChoiceBelief parse_choice_belief(const std::string& document, const GameForm& form, Player owner);

std::string serialize(const Game& game);
std::string serialize(const CompleteModel& m);
std::string serialize(const IncompleteModel& m);
std::string serialize(const AnyModel& m);

}  // namespace lexiepist
