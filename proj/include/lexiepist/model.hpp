#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lexiepist/game.hpp"

namespace lexiepist {

// One (opponent choice, opponent type) entry of a belief level.
struct BeliefAtom {
    std::string choice;
    std::string type;
    Rational prob;

    friend bool operator==(const BeliefAtom&, const BeliefAtom&) = default;
};

// Lexicographic belief: ordered levels, each a distribution over the
// opponent's (choice, type) pairs. Level and atom order are significant and
// survive serialization byte-for-byte; equality of beliefs is semantic
// (per-level distributions compared as maps, zero entries ignored).
struct LexBelief {
    std::vector<std::vector<BeliefAtom>> levels;

    std::size_t level_count() const { return levels.size(); }
    // Probability of (choice, type) at a level; zero when absent.
    Rational prob_at(std::size_t level, std::string_view choice, std::string_view type) const;
    bool deems_possible(std::string_view choice, std::string_view type) const;
};

bool belief_equal(const LexBelief& a, const LexBelief& b);

struct CompleteModel {
    Game game;
    std::array<std::vector<std::string>, 2> types;
    std::map<std::string, LexBelief> beliefs;

    const std::vector<std::string>& types_of(Player p) const { return types[index_of(p)]; }
    std::optional<Player> player_of(const std::string& type) const;
    const LexBelief& belief_of(const std::string& type) const;
};

struct IncompleteModel {
    GameForm form;
    std::array<std::vector<std::string>, 2> types;
    std::map<std::string, UtilityFunction> utilities;
    std::map<std::string, LexBelief> beliefs;

    const std::vector<std::string>& types_of(Player p) const { return types[index_of(p)]; }
    std::optional<Player> player_of(const std::string& type) const;
    const LexBelief& belief_of(const std::string& type) const;
    const UtilityFunction& utility_of(const std::string& type) const;
};

void validate_model(const CompleteModel& m);
void validate_model(const IncompleteModel& m);

// Evidence attached to a failed condition check. The cited pairs/levels are
// enough to replay the violation against the model.
struct WitnessPair {
    std::string choice;
    std::string type;

    friend bool operator==(const WitnessPair&, const WitnessPair&) = default;
};

struct Witness {
    std::string note;  // short machine-readable reason tag
    std::vector<WitnessPair> pairs;
    std::optional<std::size_t> level;  // 1-based belief level when relevant
    std::vector<Rational> values;      // distances or utilities involved
};

struct ConditionVerdict {
    enum class Status { Holds, Fails, Precondition };
    Status status = Status::Holds;
    std::optional<Witness> witness;

    bool holds() const { return status == Status::Holds; }

    static ConditionVerdict yes() { return {}; }
    static ConditionVerdict no(Witness w) {
        return {Status::Fails, std::move(w)};
    }
    static ConditionVerdict precondition(Witness w) {
        return {Status::Precondition, std::move(w)};
    }
};

}  // namespace lexiepist
