#pragma once

#include <string>
#include <vector>

#include "lexiepist/model.hpp"

namespace lexiepist {

// Vector of expected utilities, one entry per belief level.
using UtilityVector = std::vector<Rational>;

// Per-level distribution over opponent choice indices (types marginalized
// out; they affect pairing only, never payoffs).
using LevelDist = std::vector<std::pair<std::size_t, Rational>>;

std::vector<LevelDist> choice_marginals(const GameForm& form, Player owner, const LexBelief& belief);

UtilityVector lex_utility(const GameForm& form, const std::string& choice,
                          const std::vector<LevelDist>& levels, const UtilityFunction& utility);
UtilityVector lex_utility(const GameForm& form, const std::string& choice, const LexBelief& belief,
                          const UtilityFunction& utility);

enum class PrefOrder { Prefers, Indifferent, Dispreferred };

PrefOrder compare_lex(const UtilityVector& a, const UtilityVector& b);

PrefOrder prefers(const GameForm& form, const LexBelief& belief, const UtilityFunction& utility,
                  const std::string& c, const std::string& c_prime);

// Maximal elements of the preference preorder; never empty.
std::vector<std::string> optimal_choices(const GameForm& form, const LexBelief& belief,
                                         const UtilityFunction& utility);
std::vector<std::string> optimal_choices(const GameForm& form, const std::vector<LevelDist>& levels,
                                         const UtilityFunction& utility);

bool is_optimal(const GameForm& form, const LexBelief& belief, const UtilityFunction& utility,
                const std::string& choice);

bool infinitely_more_likely(const LexBelief& belief, const WitnessPair& pair,
                            const WitnessPair& pair_prime);

// Opponent types appearing with positive probability at some level,
// in the containing model's document order.
template <class M>
std::vector<std::string> deemed_possible_types(const M& model, const std::string& type) {
    const Player owner = *model.player_of(type);
    const LexBelief& b = model.belief_of(type);
    std::vector<std::string> out;
    for (const auto& t : model.types_of(opponent_of(owner))) {
        bool hit = false;
        for (const auto& level : b.levels)
            for (const auto& a : level)
                if (a.prob > 0 && a.type == t) hit = true;
        if (hit) out.push_back(t);
    }
    return out;
}

}  // namespace lexiepist
