#pragma once

#include <map>
#include <string>
#include <vector>

#include "lexiepist/lexpref.hpp"
#include "lexiepist/model.hpp"

namespace lexiepist {

// Indifference classes of the owner's choices, most preferred first.
struct PreferencePartition {
    std::vector<std::vector<std::string>> classes;

    std::size_t class_of(const std::string& choice) const;
};

// One utility function per partition class; rung 1 is the input utility,
// rung l makes class l optimal, squared distances to rung 1 strictly grow.
struct UtilityLadder {
    PreferencePartition partition;
    std::vector<UtilityFunction> rungs;
};

PreferencePartition preference_partition(const GameForm& form, const std::vector<LevelDist>& belief,
                                         const UtilityFunction& utility);
PreferencePartition preference_partition(const GameForm& form, const LexBelief& belief,
                                         const UtilityFunction& utility);

// Bump constant per rung: (largest level-1 gap from the previous top class
// down to the class being lifted) + 1, applied on level-1-support columns.
UtilityLadder utility_ladder(const GameForm& form, const UtilityFunction& u,
                             const std::vector<LevelDist>& belief);
UtilityLadder utility_ladder(const GameForm& form, const UtilityFunction& u,
                             const LexBelief& belief);

struct Co2InResult {
    IncompleteModel model;
    // Source type -> its ladder types, rung order (first carries the source
    // game's own utility).
    std::map<std::string, std::vector<std::string>> members;
};

Co2InResult co2in(const CompleteModel& m);

struct In2CoResult {
    CompleteModel model;
    std::map<std::string, std::string> class_of;  // incomplete type -> quotient type
};

In2CoResult in2co(const IncompleteModel& m, const Game& game);

// Doppelganger interpolation until the type is cautious; other types are
// untouched. Throws std::invalid_argument when the type is not weakly
// cautious.
CompleteModel cautious_extension(const CompleteModel& m, const std::string& type);

// Structural isomorphism of complete models under an explicit type renaming.
bool isomorphic_complete(const CompleteModel& a, const CompleteModel& b,
                         const std::map<std::string, std::string>& a_to_b);

}  // namespace lexiepist
