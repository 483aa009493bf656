#include "lexiepist/solvers.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "lexiepist/lp.hpp"

namespace lexiepist {

bool Restriction::contains(Player p, const std::string& c) const {
    const auto& s = of(p);
    return std::find(s.begin(), s.end(), c) != s.end();
}

Restriction full_restriction(const GameForm& form) {
    return Restriction{{form.choices_of(Player::P1), form.choices_of(Player::P2)}};
}

namespace {

struct DominanceProblem {
    std::vector<std::string> mix;      // own choices available to the mixture
    std::vector<std::size_t> mix_idx;  // their row indices
    std::vector<std::size_t> opp_idx;  // opponent column indices in play
    std::size_t cand = 0;              // candidate row index
};

DominanceProblem setup(const Game& game, Player player, const std::string& choice,
                       const Restriction& restriction) {
    if (!restriction.contains(player, choice))
        throw std::invalid_argument("choice '" + choice + "' is not in the restriction");
    DominanceProblem p;
    p.cand = *game.form.choice_index(player, choice);
    for (const auto& c : restriction.of(player)) {
        if (c == choice) continue;
        p.mix.push_back(c);
        p.mix_idx.push_back(*game.form.choice_index(player, c));
    }
    for (const auto& c : restriction.of(opponent_of(player)))
        p.opp_idx.push_back(*game.form.choice_index(opponent_of(player), c));
    return p;
}

}  // namespace

bool certificate_valid(const Game& game, Player player, const std::string& choice,
                       const Restriction& restriction, const DominanceCertificate& cert) {
    const Matrix& u = game.utilities[index_of(player)];
    const std::size_t cand = *game.form.choice_index(player, choice);
    Rational total(0);
    for (const auto& [c, w] : cert.weights) {
        if (w < 0 || c == choice || !restriction.contains(player, c)) return false;
        total += w;
    }
    if (total != 1) return false;
    bool strict_seen = false;
    for (const auto& oc : restriction.of(opponent_of(player))) {
        const std::size_t col = *game.form.choice_index(opponent_of(player), oc);
        Rational mixed(0);
        for (const auto& [c, w] : cert.weights)
            mixed += w * u[*game.form.choice_index(player, c)][col];
        if (cert.mode == DominanceCertificate::Mode::Strict) {
            if (mixed <= u[cand][col]) return false;
        } else {
            if (mixed < u[cand][col]) return false;
            if (mixed > u[cand][col] && (!cert.strict_at || *cert.strict_at == oc))
                strict_seen = true;
        }
    }
    if (cert.mode == DominanceCertificate::Mode::Weak && !strict_seen) return false;
    return true;
}

std::optional<DominanceCertificate> weakly_dominated(const Game& game, Player player,
                                                     const std::string& choice,
                                                     const Restriction& restriction) {
    DominanceProblem p = setup(game, player, choice, restriction);
    if (p.mix.empty()) return std::nullopt;
    const Matrix& u = game.utilities[index_of(player)];
    const std::size_t S = p.mix.size(), J = p.opp_idx.size();

    // Variables: x_s (weights), t_j (slacks). Maximize total slack subject to
    //   sum_s x_s u(s,j) - t_j = u(cand,j)   for each opponent column j
    //   sum_s x_s = 1
    std::vector<std::vector<Rational>> A;
    std::vector<Rational> b, c(S + J, Rational(0));
    for (std::size_t j = 0; j < J; ++j) {
        std::vector<Rational> row(S + J, Rational(0));
        for (std::size_t s = 0; s < S; ++s) row[s] = u[p.mix_idx[s]][p.opp_idx[j]];
        row[S + j] = -1;
        A.push_back(std::move(row));
        b.push_back(u[p.cand][p.opp_idx[j]]);
        c[S + j] = 1;
    }
    std::vector<Rational> simplex_row(S + J, Rational(0));
    for (std::size_t s = 0; s < S; ++s) simplex_row[s] = 1;
    A.push_back(std::move(simplex_row));
    b.push_back(Rational(1));

    LpResult res = solve_lp_max(std::move(A), std::move(b), c);
    if (res.status != LpResult::Status::Optimal || res.objective <= 0) return std::nullopt;

    DominanceCertificate cert;
    cert.mode = DominanceCertificate::Mode::Weak;
    for (std::size_t s = 0; s < S; ++s)
        if (res.solution[s] > 0) cert.weights[p.mix[s]] = res.solution[s];
    for (std::size_t j = 0; j < J; ++j)
        if (res.solution[S + j] > 0) {
            cert.strict_at = restriction.of(opponent_of(player))[j];
            break;
        }
    if (!certificate_valid(game, player, choice, restriction, cert))
        throw std::logic_error("weak dominance certificate failed verification");
    return cert;
}

std::optional<DominanceCertificate> strictly_dominated(const Game& game, Player player,
                                                       const std::string& choice,
                                                       const Restriction& restriction) {
    DominanceProblem p = setup(game, player, choice, restriction);
    if (p.mix.empty()) return std::nullopt;
    const Matrix& u = game.utilities[index_of(player)];
    const std::size_t S = p.mix.size(), J = p.opp_idx.size();

    // Variables: x_s, eps, surplus y_j. Maximize eps subject to
    //   sum_s x_s u(s,j) - eps - y_j = u(cand,j)
    //   sum_s x_s = 1
    std::vector<std::vector<Rational>> A;
    std::vector<Rational> b, c(S + 1 + J, Rational(0));
    c[S] = 1;
    for (std::size_t j = 0; j < J; ++j) {
        std::vector<Rational> row(S + 1 + J, Rational(0));
        for (std::size_t s = 0; s < S; ++s) row[s] = u[p.mix_idx[s]][p.opp_idx[j]];
        row[S] = -1;
        row[S + 1 + j] = -1;
        A.push_back(std::move(row));
        b.push_back(u[p.cand][p.opp_idx[j]]);
    }
    std::vector<Rational> simplex_row(S + 1 + J, Rational(0));
    for (std::size_t s = 0; s < S; ++s) simplex_row[s] = 1;
    A.push_back(std::move(simplex_row));
    b.push_back(Rational(1));

    LpResult res = solve_lp_max(std::move(A), std::move(b), c);
    if (res.status != LpResult::Status::Optimal || res.objective <= 0) return std::nullopt;

    DominanceCertificate cert;
    cert.mode = DominanceCertificate::Mode::Strict;
    for (std::size_t s = 0; s < S; ++s)
        if (res.solution[s] > 0) cert.weights[p.mix[s]] = res.solution[s];
    if (!certificate_valid(game, player, choice, restriction, cert))
        throw std::logic_error("strict dominance certificate failed verification");
    return cert;
}

namespace {

// Simultaneous one-round removal; keeps the sets nonempty (a finite game
// always has an undominated choice).
template <class Dominated>
bool eliminate_round(const Game& game, Restriction& r, Dominated dominated) {
    Restriction next = r;
    bool changed = false;
    for (Player p : {Player::P1, Player::P2}) {
        std::vector<std::string> keep;
        for (const auto& c : r.of(p))
            if (dominated(game, p, c, r))
                changed = true;
            else
                keep.push_back(c);
        assert(!keep.empty());
        next.sets[index_of(p)] = std::move(keep);
    }
    r = next;
    return changed;
}

bool weak_dom(const Game& g, Player p, const std::string& c, const Restriction& r) {
    return weakly_dominated(g, p, c, r).has_value();
}
bool strict_dom(const Game& g, Player p, const std::string& c, const Restriction& r) {
    return strictly_dominated(g, p, c, r).has_value();
}

}  // namespace

Restriction dekel_fudenberg(const Game& game) {
    Restriction r = full_restriction(game.form);
    eliminate_round(game, r, weak_dom);
    while (eliminate_round(game, r, strict_dom)) {
    }
    return r;
}

std::vector<Restriction> iewds(const Game& game) {
    std::vector<Restriction> ladder{full_restriction(game.form)};
    Restriction r = ladder.back();
    while (eliminate_round(game, r, weak_dom)) ladder.push_back(r);
    return ladder;
}

const Restriction& survivors_after(const std::vector<Restriction>& ladder, std::size_t n) {
    return ladder[std::min(n, ladder.size() - 1)];
}

bool optimal_for_some_cautious_belief(const Game& game, Player player, const std::string& choice,
                                      const Restriction& restriction) {
    return !weakly_dominated(game, player, choice, restriction).has_value();
}

}  // namespace lexiepist
