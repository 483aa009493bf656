#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lexiepist/model.hpp"
#include "lexiepist/solvers.hpp"

namespace lexiepist {

enum class CoCondition {
    Caution,
    WeakCaution,
    PrimaryBeliefRationality,
    RespectPreferences,
};

std::optional<CoCondition> co_condition_from_tag(std::string_view tag);
const char* tag_of(CoCondition c);

ConditionVerdict is_cautious_co(const CompleteModel& m, const std::string& type);
ConditionVerdict is_weakly_cautious_co(const CompleteModel& m, const std::string& type);
ConditionVerdict primarily_believes_rationality(const CompleteModel& m, const std::string& type);
// Defined for cautious types only; non-cautious input yields a distinguished
// precondition verdict rather than true/false.
ConditionVerdict respects_preferences(const CompleteModel& m, const std::string& type);

ConditionVerdict check_co(const CompleteModel& m, const std::string& type, CoCondition c);

// n >= 1. The external quantifier ("optimal for some cautious type, not
// necessarily in the model") is resolved through the IEWDS survivor ladder.
ConditionVerdict assumes_rationality_nfold(const CompleteModel& m, const std::string& type,
                                           std::size_t n);

// Verdicts for every type at folds 1..max_fold out of a single evaluation
// (one elimination ladder, shared memo across types and folds).
std::map<std::pair<std::string, std::size_t>, ConditionVerdict> assumes_rationality_folds(
    const CompleteModel& m, std::size_t max_fold);

// Greatest fixpoint: start from the types satisfying the condition, then
// repeatedly drop types deeming a dropped type possible. Includes 0-fold.
std::vector<std::string> common_full_belief_co(const CompleteModel& m, CoCondition c);

// Types expressing n-fold assumption of rationality for every n; evaluation
// stops once both the IEWDS ladder and the per-type verdicts stabilize.
std::vector<std::string> common_assumption_rationality(const CompleteModel& m);

}  // namespace lexiepist
