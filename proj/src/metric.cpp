#include "lexiepist/metric.hpp"

#include <stdexcept>

namespace lexiepist {

Rational sq_euclid(const UtilityFunction& u, const UtilityFunction& v) {
    if (u.owner != v.owner || u.values.size() != v.values.size())
        throw std::invalid_argument("utility shape mismatch");
    Rational total(0);
    for (std::size_t r = 0; r < u.values.size(); ++r) {
        if (u.values[r].size() != v.values[r].size())
            throw std::invalid_argument("utility shape mismatch");
        for (std::size_t c = 0; c < u.values[r].size(); ++c) {
            Rational d = u.values[r][c] - v.values[r][c];
            total += d * d;
        }
    }
    return total;
}

std::size_t ordinal_distance(const GameForm& form, const std::vector<LevelDist>& belief,
                             const UtilityFunction& v, const UtilityFunction& u) {
    if (u.owner != v.owner) throw std::invalid_argument("utility owner mismatch");
    const auto& cs = form.choices_of(u.owner);
    std::vector<UtilityVector> at_v, at_u;
    for (const auto& c : cs) {
        at_v.push_back(lex_utility(form, c, belief, v));
        at_u.push_back(lex_utility(form, c, belief, u));
    }
    std::size_t count = 0;
    for (std::size_t i = 0; i < cs.size(); ++i)
        for (std::size_t j = i + 1; j < cs.size(); ++j)
            if (compare_lex(at_v[i], at_v[j]) != compare_lex(at_u[i], at_u[j])) ++count;
    return count;
}

std::size_t ordinal_distance(const GameForm& form, const LexBelief& belief,
                             const UtilityFunction& v, const UtilityFunction& u) {
    return ordinal_distance(form, choice_marginals(form, u.owner, belief), v, u);
}

}  // namespace lexiepist
