#include "lexiepist/lexpref.hpp"

#include <map>
#include <stdexcept>

namespace lexiepist {

std::vector<LevelDist> choice_marginals(const GameForm& form, Player owner, const LexBelief& belief) {
    const Player opp = opponent_of(owner);
    std::vector<LevelDist> out;
    out.reserve(belief.levels.size());
    for (const auto& level : belief.levels) {
        std::map<std::size_t, Rational> acc;
        for (const auto& a : level) {
            auto idx = form.choice_index(opp, a.choice);
            if (!idx) throw std::invalid_argument("belief references unknown choice '" + a.choice + "'");
            if (a.prob > 0) acc[*idx] += a.prob;
        }
        out.emplace_back(acc.begin(), acc.end());
    }
    return out;
}

UtilityVector lex_utility(const GameForm& form, const std::string& choice,
                          const std::vector<LevelDist>& levels, const UtilityFunction& utility) {
    auto own = form.choice_index(utility.owner, choice);
    if (!own) throw std::invalid_argument("unknown choice '" + choice + "'");
    if (utility.values.size() != form.choices_of(utility.owner).size())
        throw std::invalid_argument("utility matrix does not match the game form");
    UtilityVector v;
    v.reserve(levels.size());
    for (const auto& level : levels) {
        Rational e(0);
        for (const auto& [opp, p] : level) {
            if (opp >= utility.values[*own].size())
                throw std::invalid_argument("utility matrix does not match the game form");
            e += p * utility.at(*own, opp);
        }
        v.push_back(std::move(e));
    }
    return v;
}

UtilityVector lex_utility(const GameForm& form, const std::string& choice, const LexBelief& belief,
                          const UtilityFunction& utility) {
    return lex_utility(form, choice, choice_marginals(form, utility.owner, belief), utility);
}

PrefOrder compare_lex(const UtilityVector& a, const UtilityVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("utility vector length mismatch");
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k] > b[k]) return PrefOrder::Prefers;
        if (a[k] < b[k]) return PrefOrder::Dispreferred;
    }
    return PrefOrder::Indifferent;
}

PrefOrder prefers(const GameForm& form, const LexBelief& belief, const UtilityFunction& utility,
                  const std::string& c, const std::string& c_prime) {
    auto levels = choice_marginals(form, utility.owner, belief);
    return compare_lex(lex_utility(form, c, levels, utility),
                       lex_utility(form, c_prime, levels, utility));
}

std::vector<std::string> optimal_choices(const GameForm& form, const std::vector<LevelDist>& levels,
                                         const UtilityFunction& utility) {
    const auto& cs = form.choices_of(utility.owner);
    std::vector<UtilityVector> vecs;
    vecs.reserve(cs.size());
    for (const auto& c : cs) vecs.push_back(lex_utility(form, c, levels, utility));
    std::vector<std::string> out;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < cs.size() && maximal; ++j)
            if (compare_lex(vecs[j], vecs[i]) == PrefOrder::Prefers) maximal = false;
        if (maximal) out.push_back(cs[i]);
    }
    return out;
}

std::vector<std::string> optimal_choices(const GameForm& form, const LexBelief& belief,
                                         const UtilityFunction& utility) {
    return optimal_choices(form, choice_marginals(form, utility.owner, belief), utility);
}

bool is_optimal(const GameForm& form, const LexBelief& belief, const UtilityFunction& utility,
                const std::string& choice) {
    for (const auto& c : optimal_choices(form, belief, utility))
        if (c == choice) return true;
    return false;
}

bool infinitely_more_likely(const LexBelief& belief, const WitnessPair& pair,
                            const WitnessPair& pair_prime) {
    for (const auto& level : belief.levels) {
        Rational p(0), q(0);
        for (const auto& a : level) {
            if (a.choice == pair.choice && a.type == pair.type) p += a.prob;
            if (a.choice == pair_prime.choice && a.type == pair_prime.type) q += a.prob;
        }
        if (p > 0 && q == 0) return true;
        if (p > 0 || q > 0) return false;
    }
    return false;
}

}  // namespace lexiepist
