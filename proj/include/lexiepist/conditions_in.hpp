#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lexiepist/model.hpp"
#include "lexiepist/solvers.hpp"

namespace lexiepist {

enum class InCondition {
    Caution,
    WeakCaution,
    PrimaryNearestU,
    UCentered,
    BestSupportedNearest,
    BetterSupportedNearer,
    BeliefRationality,
    PrimaryU,
    PriorAssumeU,
    GoodChoiceSupported,
};

std::optional<InCondition> in_condition_from_tag(std::string_view tag);
const char* tag_of(InCondition c);

// Auxiliary types are never materialized: quantifiers over same-belief
// utility variants range over the same-belief types present in the model.
ConditionVerdict is_cautious_in(const IncompleteModel& m, const std::string& type);
ConditionVerdict is_weakly_cautious_in(const IncompleteModel& m, const std::string& type);
ConditionVerdict primary_belief_nearest_u(const IncompleteModel& m, const std::string& type,
                                          const UtilityPair& u);
ConditionVerdict u_centered(const IncompleteModel& m, const std::string& type,
                            const UtilityPair& u);
ConditionVerdict best_supported_nearest(const IncompleteModel& m, const std::string& type,
                                        const UtilityPair& u);
ConditionVerdict better_supported_nearer(const IncompleteModel& m, const std::string& type,
                                         const UtilityPair& u);
ConditionVerdict believes_rationality_in(const IncompleteModel& m, const std::string& type);
ConditionVerdict primary_belief_u(const IncompleteModel& m, const std::string& type,
                                  const UtilityPair& u);
ConditionVerdict prior_assumes_u(const IncompleteModel& m, const std::string& type,
                                 const UtilityPair& u);
ConditionVerdict good_choice_supported(const IncompleteModel& m, const std::string& type,
                                       const UtilityPair& u);

ConditionVerdict check_in(const IncompleteModel& m, const std::string& type, InCondition c,
                          const UtilityPair& u);

ConditionVerdict assumes_prior_u_good_nfold(const IncompleteModel& m, const std::string& type,
                                            const UtilityPair& u, std::size_t n);

// Verdicts for every type at folds 1..max_fold out of a single evaluation.
std::map<std::pair<std::string, std::size_t>, ConditionVerdict> assumes_prior_u_good_folds(
    const IncompleteModel& m, const UtilityPair& u, std::size_t max_fold);

std::vector<std::string> common_full_belief_in(const IncompleteModel& m, InCondition c,
                                               const UtilityPair& u);
std::vector<std::string> common_assumption_prior_u(const IncompleteModel& m, const UtilityPair& u);

}  // namespace lexiepist
