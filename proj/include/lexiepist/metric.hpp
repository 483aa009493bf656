#pragma once

#include "lexiepist/lexpref.hpp"

namespace lexiepist {

// Squared Euclidean distance between two utility functions over the same
// form. Squaring keeps the value rational; every consumer only compares.
Rational sq_euclid(const UtilityFunction& u, const UtilityFunction& v);

// Hamming-style count of unordered own-choice pairs whose three-way
// preference verdict under the belief differs between v and u.
std::size_t ordinal_distance(const GameForm& form, const std::vector<LevelDist>& belief,
                             const UtilityFunction& v, const UtilityFunction& u);
std::size_t ordinal_distance(const GameForm& form, const LexBelief& belief,
                             const UtilityFunction& v, const UtilityFunction& u);

}  // namespace lexiepist
