#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "lexiepist/model.hpp"

namespace lexiepist::gen {

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}

    std::size_t below(std::size_t n) {
        return n ? std::uniform_int_distribution<std::size_t>(0, n - 1)(eng) : 0;
    }
    long long int_in(long long lo, long long hi) {
        return std::uniform_int_distribution<long long>(lo, hi)(eng);
    }
    bool flip(double p = 0.5) { return std::bernoulli_distribution(p)(eng); }
    template <class T>
    const T& pick(const std::vector<T>& v) {
        return v[below(v.size())];
    }
    template <class T>
    void shuffle(std::vector<T>& v) {
        std::shuffle(v.begin(), v.end(), eng);
    }
};

struct GameOpts {
    std::size_t min_choices = 2, max_choices = 3;
    long long lo = 0, hi = 5;
    bool fractions = false;
};
Game random_game(Rng& rng, const GameOpts& opts = {});

enum class Coverage { Cautious, WeaklyCautious, Free };

struct CoOpts {
    std::size_t min_types = 1, max_types = 3;
    Coverage coverage = Coverage::Cautious;
    bool point_mass = false;
    bool distinct_beliefs = false;
};
CompleteModel random_complete(Rng& rng, const Game& game, const CoOpts& opts = {});

struct InOpts {
    std::size_t max_groups = 2;
    std::size_t max_group_size = 2;
    Coverage coverage = Coverage::Cautious;
};
IncompleteModel random_incomplete(Rng& rng, const GameForm& form, const UtilityPair& u,
                                  const InOpts& opts = {});

// Reorders point-mass belief levels until every type lists each opponent
// type's choices from most to least preferred; returns false when the
// alternating sweeps fail to stabilize.
bool sort_for_respect(CompleteModel& m, int max_sweeps = 12);

// Rotates a rational pair into each type's level 1; returns false when the
// sweeps fail to stabilize.
bool repair_primary_rationality(CompleteModel& m, int max_sweeps = 12);

// Adds a same-belief twin of a random type, splitting every referencing atom
// half/half. Marginals, caution, respect and rationality facts survive.
void duplicate_random_type(CompleteModel& m, Rng& rng);

// Candidate witness for iterated assumption of rationality: one type per
// round-1 survivor, diagonal pairs ordered by elimination-round rank, level 1
// tilted to make the name-giving choice optimal. Callers must still verify
// the folds; returns nullopt when no tilt works.
std::optional<CompleteModel> ia_witness_model(Rng& rng, const Game& game, int tilt_tries = 24);

// One-step shrink candidates preserving the focal type; invalid candidates
// are already filtered out.
std::vector<CompleteModel> shrink_candidates(const CompleteModel& m, const std::string& keep);
std::vector<IncompleteModel> shrink_candidates(const IncompleteModel& m, const std::string& keep);

}  // namespace lexiepist::gen
