#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lexiepist/game.hpp"

namespace lexiepist {

// Surviving choice sets per player during elimination rounds.
struct Restriction {
    std::array<std::vector<std::string>, 2> sets;

    const std::vector<std::string>& of(Player p) const { return sets[index_of(p)]; }
    bool contains(Player p, const std::string& c) const;

    friend bool operator==(const Restriction&, const Restriction&) = default;
};

Restriction full_restriction(const GameForm& form);

// Constructive evidence for a dominance verdict. Certificates are checked by
// exact substitution before being returned, so the LP never has to be trusted.
struct DominanceCertificate {
    enum class Mode { Weak, Strict };
    Mode mode = Mode::Weak;
    std::map<std::string, Rational> weights;    // dominating mixed strategy
    std::optional<std::string> strict_at;       // witness column (weak mode)
};

// Mixtures run over the player's other restricted choices; inequalities over
// the opponent's restricted choices.
std::optional<DominanceCertificate> weakly_dominated(const Game& game, Player player,
                                                     const std::string& choice,
                                                     const Restriction& restriction);
std::optional<DominanceCertificate> strictly_dominated(const Game& game, Player player,
                                                       const std::string& choice,
                                                       const Restriction& restriction);

// One simultaneous round of weak-dominance removal for both players, then
// iterated strict-dominance removal to a fixpoint.
Restriction dekel_fudenberg(const Game& game);

// Iterated simultaneous elimination of weakly dominated choices. Returns the
// whole ladder; element 0 is the full choice sets, the last is the fixpoint.
std::vector<Restriction> iewds(const Game& game);

// Survivors after n rounds (clamped to the fixpoint).
const Restriction& survivors_after(const std::vector<Restriction>& ladder, std::size_t n);

bool optimal_for_some_cautious_belief(const Game& game, Player player, const std::string& choice,
                                      const Restriction& restriction);

// Re-derives the certificate inequalities from the game matrix; used before
// returning any certificate and available to tests.
bool certificate_valid(const Game& game, Player player, const std::string& choice,
                       const Restriction& restriction, const DominanceCertificate& cert);

}  // namespace lexiepist
