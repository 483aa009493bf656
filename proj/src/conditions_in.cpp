#include "lexiepist/conditions_in.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "lexiepist/lexpref.hpp"
#include "lexiepist/metric.hpp"

namespace lexiepist {

std::optional<InCondition> in_condition_from_tag(std::string_view tag) {
    if (tag == "caution") return InCondition::Caution;
    if (tag == "weak-caution") return InCondition::WeakCaution;
    if (tag == "primary-nearest-u") return InCondition::PrimaryNearestU;
    if (tag == "u-centered") return InCondition::UCentered;
    if (tag == "best-supported-nearest") return InCondition::BestSupportedNearest;
    if (tag == "better-supported-nearer") return InCondition::BetterSupportedNearer;
    if (tag == "belief-rationality") return InCondition::BeliefRationality;
    if (tag == "primary-u") return InCondition::PrimaryU;
    if (tag == "prior-assume-u") return InCondition::PriorAssumeU;
    if (tag == "good-choice-supported") return InCondition::GoodChoiceSupported;
    return std::nullopt;
}

const char* tag_of(InCondition c) {
    switch (c) {
        case InCondition::Caution: return "caution";
        case InCondition::WeakCaution: return "weak-caution";
        case InCondition::PrimaryNearestU: return "primary-nearest-u";
        case InCondition::UCentered: return "u-centered";
        case InCondition::BestSupportedNearest: return "best-supported-nearest";
        case InCondition::BetterSupportedNearer: return "better-supported-nearer";
        case InCondition::BeliefRationality: return "belief-rationality";
        case InCondition::PrimaryU: return "primary-u";
        case InCondition::PriorAssumeU: return "prior-assume-u";
        case InCondition::GoodChoiceSupported: return "good-choice-supported";
    }
    return "?";
}

namespace {

std::vector<WitnessPair> deemed_pairs(const IncompleteModel& m, const std::string& type) {
    const LexBelief& b = m.belief_of(type);
    std::vector<WitnessPair> out;
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& level : b.levels)
        for (const auto& a : level)
            if (a.prob > 0 && seen.insert({a.choice, a.type}).second)
                out.push_back({a.choice, a.type});
    return out;
}

bool same_belief(const IncompleteModel& m, const std::string& a, const std::string& b) {
    return belief_equal(m.belief_of(a), m.belief_of(b));
}

const UtilityFunction& ref_for(const UtilityPair& u, Player p) { return u[index_of(p)]; }

Game game_under(const IncompleteModel& m, const UtilityPair& u) {
    return Game{m.form, {u[0].values, u[1].values}};
}

}  // namespace

ConditionVerdict is_cautious_in(const IncompleteModel& m, const std::string& type) {
    const Player opp = opponent_of(*m.player_of(type));
    const auto deemed = deemed_possible_types(m, type);
    const auto pairs = deemed_pairs(m, type);
    for (const auto& t_j : deemed)
        for (const auto& c_j : m.form.choices_of(opp)) {
            bool covered = false;
            for (const auto& p : pairs)
                if (p.choice == c_j && same_belief(m, p.type, t_j)) covered = true;
            if (!covered)
                return ConditionVerdict::no({"no-same-belief-pairing", {{c_j, t_j}}, {}, {}});
        }
    return ConditionVerdict::yes();
}

ConditionVerdict is_weakly_cautious_in(const IncompleteModel& m, const std::string& type) {
    const Player opp = opponent_of(*m.player_of(type));
    const auto pairs = deemed_pairs(m, type);
    for (const auto& c_j : m.form.choices_of(opp)) {
        bool present = false;
        for (const auto& p : pairs) present = present || p.choice == c_j;
        if (!present) return ConditionVerdict::no({"choice-not-deemed-possible", {{c_j, ""}}, {}, {}});
    }
    return ConditionVerdict::yes();
}

ConditionVerdict primary_belief_nearest_u(const IncompleteModel& m, const std::string& type,
                                          const UtilityPair& u) {
    const Player opp = opponent_of(*m.player_of(type));
    const UtilityFunction& u_j = ref_for(u, opp);
    const LexBelief& b = m.belief_of(type);
    const auto deemed = deemed_possible_types(m, type);
    for (const auto& a : b.levels.front()) {
        if (a.prob <= 0) continue;
        const Rational d = sq_euclid(m.utility_of(a.type), u_j);
        for (const auto& other : deemed) {
            if (!same_belief(m, other, a.type)) continue;
            const Rational d_other = sq_euclid(m.utility_of(other), u_j);
            if (d_other < d)
                return ConditionVerdict::no(
                    {"nearer-same-belief-type-exists", {{a.choice, a.type}, {"", other}}, 1,
                     {d, d_other}});
        }
    }
    return ConditionVerdict::yes();
}

ConditionVerdict u_centered(const IncompleteModel& m, const std::string& type,
                            const UtilityPair& u) {
    const Player opp = opponent_of(*m.player_of(type));
    const UtilityFunction& u_j = ref_for(u, opp);
    const LexBelief& b = m.belief_of(type);
    const auto pairs = deemed_pairs(m, type);
    for (const auto& p : pairs)
        for (const auto& q : pairs) {
            if (!same_belief(m, p.type, q.type)) continue;
            const Rational dp = sq_euclid(m.utility_of(p.type), u_j);
            const Rational dq = sq_euclid(m.utility_of(q.type), u_j);
            if (dp < dq && !infinitely_more_likely(b, p, q))
                return ConditionVerdict::no(
                    {"nearer-pair-not-infinitely-more-likely", {p, q}, {}, {dp, dq}});
        }
    return ConditionVerdict::yes();
}

ConditionVerdict best_supported_nearest(const IncompleteModel& m, const std::string& type,
                                        const UtilityPair& u) {
    const Player opp = opponent_of(*m.player_of(type));
    const UtilityFunction& u_j = ref_for(u, opp);
    const auto pairs = deemed_pairs(m, type);
    for (const auto& p : pairs)
        for (const auto& q : pairs) {
            if (!same_belief(m, p.type, q.type)) continue;
            const LexBelief& beta = m.belief_of(p.type);
            if (!is_optimal(m.form, beta, u_j, p.choice)) continue;
            if (is_optimal(m.form, beta, u_j, q.choice)) continue;
            const Rational dp = sq_euclid(m.utility_of(p.type), u_j);
            const Rational dq = sq_euclid(m.utility_of(q.type), u_j);
            if (!(dp < dq))
                return ConditionVerdict::no(
                    {"best-choice-not-supported-nearest", {p, q}, {}, {dp, dq}});
        }
    return ConditionVerdict::yes();
}

ConditionVerdict better_supported_nearer(const IncompleteModel& m, const std::string& type,
                                         const UtilityPair& u) {
    const Player opp = opponent_of(*m.player_of(type));
    const UtilityFunction& u_j = ref_for(u, opp);
    const auto pairs = deemed_pairs(m, type);
    for (const auto& p : pairs)
        for (const auto& q : pairs) {
            if (!same_belief(m, p.type, q.type)) continue;
            const LexBelief& beta = m.belief_of(p.type);
            if (prefers(m.form, beta, u_j, p.choice, q.choice) != PrefOrder::Prefers) continue;
            const Rational dp = sq_euclid(m.utility_of(p.type), u_j);
            const Rational dq = sq_euclid(m.utility_of(q.type), u_j);
            if (!(dp < dq))
                return ConditionVerdict::no(
                    {"better-choice-not-supported-nearer", {p, q}, {}, {dp, dq}});
        }
    return ConditionVerdict::yes();
}

ConditionVerdict believes_rationality_in(const IncompleteModel& m, const std::string& type) {
    for (const auto& p : deemed_pairs(m, type))
        if (!is_optimal(m.form, m.belief_of(p.type), m.utility_of(p.type), p.choice))
            return ConditionVerdict::no({"pair-not-rational", {p}, {}, {}});
    return ConditionVerdict::yes();
}

ConditionVerdict primary_belief_u(const IncompleteModel& m, const std::string& type,
                                  const UtilityPair& u) {
    const Player opp = opponent_of(*m.player_of(type));
    const UtilityFunction& u_j = ref_for(u, opp);
    const LexBelief& b = m.belief_of(type);
    for (const auto& a : b.levels.front()) {
        if (a.prob <= 0) continue;
        if (!(m.utility_of(a.type).values == u_j.values))
            return ConditionVerdict::no({"level-1-type-not-u", {{a.choice, a.type}}, 1, {}});
    }
    return ConditionVerdict::yes();
}

ConditionVerdict prior_assumes_u(const IncompleteModel& m, const std::string& type,
                                 const UtilityPair& u) {
    const Player opp = opponent_of(*m.player_of(type));
    const UtilityFunction& u_j = ref_for(u, opp);
    const LexBelief& b = m.belief_of(type);
    const auto pairs = deemed_pairs(m, type);
    auto qualifies = [&](const WitnessPair& p) {
        return m.utility_of(p.type).values == u_j.values && is_cautious_in(m, p.type).holds();
    };
    for (const auto& p : pairs) {
        if (!qualifies(p)) continue;
        for (const auto& q : pairs) {
            if (qualifies(q)) continue;
            if (!infinitely_more_likely(b, p, q))
                return ConditionVerdict::no(
                    {"u-pair-not-infinitely-more-likely", {p, q}, {}, {}});
        }
    }
    return ConditionVerdict::yes();
}

ConditionVerdict good_choice_supported(const IncompleteModel& m, const std::string& type,
                                       const UtilityPair& u) {
    ConditionVerdict cautious = is_cautious_in(m, type);
    if (!cautious.holds())
        return ConditionVerdict::precondition({"type-not-cautious", {}, {}, {}});
    const Player opp = opponent_of(*m.player_of(type));
    const UtilityFunction& u_j = ref_for(u, opp);
    const Game g = game_under(m, u);
    const Restriction full = full_restriction(m.form);
    const auto deemed = deemed_possible_types(m, type);
    for (const auto& c_j : m.form.choices_of(opp)) {
        if (!optimal_for_some_cautious_belief(g, opp, c_j, full)) continue;
        bool supported = false;
        for (const auto& t_j : deemed) {
            if (!(m.utility_of(t_j).values == u_j.values)) continue;
            if (!is_cautious_in(m, t_j).holds()) continue;
            if (is_optimal(m.form, m.belief_of(t_j), u_j, c_j)) supported = true;
        }
        if (!supported)
            return ConditionVerdict::no({"good-choice-unsupported", {{c_j, ""}}, {}, {}});
    }
    return ConditionVerdict::yes();
}

ConditionVerdict check_in(const IncompleteModel& m, const std::string& type, InCondition c,
                          const UtilityPair& u) {
    switch (c) {
        case InCondition::Caution: return is_cautious_in(m, type);
        case InCondition::WeakCaution: return is_weakly_cautious_in(m, type);
        case InCondition::PrimaryNearestU: return primary_belief_nearest_u(m, type, u);
        case InCondition::UCentered: return u_centered(m, type, u);
        case InCondition::BestSupportedNearest: return best_supported_nearest(m, type, u);
        case InCondition::BetterSupportedNearer: return better_supported_nearer(m, type, u);
        case InCondition::BeliefRationality: return believes_rationality_in(m, type);
        case InCondition::PrimaryU: return primary_belief_u(m, type, u);
        case InCondition::PriorAssumeU: return prior_assumes_u(m, type, u);
        case InCondition::GoodChoiceSupported: return good_choice_supported(m, type, u);
    }
    return ConditionVerdict::yes();
}

namespace {

struct PriorAssumptionEvaluator {
    const IncompleteModel& m;
    const UtilityPair& u;
    Game game;
    std::vector<Restriction> ladder;
    std::map<std::pair<std::string, std::size_t>, ConditionVerdict> memo;
    std::map<std::string, bool> caution_memo;
    std::map<std::string, std::vector<std::string>> optimal_memo;

    PriorAssumptionEvaluator(const IncompleteModel& model, const UtilityPair& ref)
        : m(model), u(ref), game(game_under(model, ref)), ladder(iewds(game)) {}

    bool cautious(const std::string& t) {
        auto it = caution_memo.find(t);
        if (it != caution_memo.end()) return it->second;
        return caution_memo[t] = is_cautious_in(m, t).holds();
    }

    // Optimal choices under the reference utility of the type's own player.
    const std::vector<std::string>& optimal_under_u(const std::string& t) {
        auto it = optimal_memo.find(t);
        if (it != optimal_memo.end()) return it->second;
        const Player p = *m.player_of(t);
        return optimal_memo[t] =
                   optimal_choices(m.form, m.belief_of(t), ref_for(u, p));
    }

    bool expresses_up_to(const std::string& t, std::size_t n) {
        for (std::size_t k = 1; k <= n; ++k)
            if (!nfold(t, k).holds()) return false;
        return true;
    }

    ConditionVerdict nfold(const std::string& type, std::size_t n) {
        auto key = std::make_pair(type, n);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        memo[key] = ConditionVerdict::yes();
        ConditionVerdict v = eval(type, n);
        memo[key] = v;
        return v;
    }

    ConditionVerdict eval(const std::string& type, std::size_t n) {
        if (n == 1) {
            ConditionVerdict prior = prior_assumes_u(m, type, u);
            if (!prior.holds()) return prior;
            return good_choice_supported(m, type, u);
        }
        if (!cautious(type))
            return ConditionVerdict::precondition({"type-not-cautious", {}, {}, {}});
        const Player opp = opponent_of(*m.player_of(type));
        const UtilityFunction& u_j = ref_for(u, opp);
        const LexBelief& b = m.belief_of(type);

        // Qualifying opponent types: cautious, carrying exactly u_j, and
        // expressing up to (n-1)-fold assumption of prior u.
        std::vector<std::string> q_types;
        for (const auto& t_j : m.types_of(opp))
            if (m.utility_of(t_j).values == u_j.values && cautious(t_j) &&
                expresses_up_to(t_j, n - 1))
                q_types.push_back(t_j);

        const auto deemed = deemed_possible_types(m, type);
        for (const auto& c_j : survivors_after(ladder, n).of(opp)) {
            bool supported = false;
            for (const auto& t_j : q_types) {
                if (std::find(deemed.begin(), deemed.end(), t_j) == deemed.end()) continue;
                const auto& opt = optimal_under_u(t_j);
                if (std::find(opt.begin(), opt.end(), c_j) != opt.end()) supported = true;
            }
            if (!supported)
                return ConditionVerdict::no({"good-choice-unsupported", {{c_j, ""}}, {}, {}});
        }

        // Clause (b) over deemed-possible pairs, mirroring the rationality
        // variant; a pair qualifies through its type alone here.
        std::vector<WitnessPair> qualifying, rest;
        for (const auto& t_j : m.types_of(opp)) {
            bool q = std::find(q_types.begin(), q_types.end(), t_j) != q_types.end();
            for (const auto& c_j : m.form.choices_of(opp)) {
                if (!b.deems_possible(c_j, t_j)) continue;
                if (q)
                    qualifying.push_back({c_j, t_j});
                else
                    rest.push_back({c_j, t_j});
            }
        }
        for (const auto& good : qualifying)
            for (const auto& bad : rest)
                if (!infinitely_more_likely(b, good, bad))
                    return ConditionVerdict::no(
                        {"qualifying-pair-not-infinitely-more-likely", {good, bad}, {}, {}});
        return ConditionVerdict::yes();
    }
};

template <class M, class Pred>
std::vector<std::string> fixpoint_over_in(const M& m, Pred satisfies) {
    std::set<std::string> alive;
    for (Player p : {Player::P1, Player::P2})
        for (const auto& t : m.types_of(p))
            if (satisfies(t)) alive.insert(t);
    bool changed = true;
    while (changed) {
        changed = false;
        for (Player p : {Player::P1, Player::P2})
            for (const auto& t : m.types_of(p)) {
                if (!alive.count(t)) continue;
                for (const auto& d : deemed_possible_types(m, t))
                    if (!alive.count(d)) {
                        alive.erase(t);
                        changed = true;
                        break;
                    }
            }
    }
    std::vector<std::string> out;
    for (Player p : {Player::P1, Player::P2})
        for (const auto& t : m.types_of(p))
            if (alive.count(t)) out.push_back(t);
    return out;
}

}  // namespace

ConditionVerdict assumes_prior_u_good_nfold(const IncompleteModel& m, const std::string& type,
                                            const UtilityPair& u, std::size_t n) {
    if (n < 1) throw std::invalid_argument("fold count must be >= 1");
    PriorAssumptionEvaluator ev(m, u);
    return ev.nfold(type, n);
}

std::map<std::pair<std::string, std::size_t>, ConditionVerdict> assumes_prior_u_good_folds(
    const IncompleteModel& m, const UtilityPair& u, std::size_t max_fold) {
    PriorAssumptionEvaluator ev(m, u);
    std::map<std::pair<std::string, std::size_t>, ConditionVerdict> out;
    for (Player p : {Player::P1, Player::P2})
        for (const auto& t : m.types_of(p))
            for (std::size_t n = 1; n <= max_fold; ++n) out[{t, n}] = ev.nfold(t, n);
    return out;
}

std::vector<std::string> common_full_belief_in(const IncompleteModel& m, InCondition c,
                                               const UtilityPair& u) {
    return fixpoint_over_in(m, [&](const std::string& t) { return check_in(m, t, c, u).holds(); });
}

std::vector<std::string> common_assumption_prior_u(const IncompleteModel& m, const UtilityPair& u) {
    PriorAssumptionEvaluator ev(m, u);
    const std::size_t rounds = ev.ladder.size() - 1;
    const std::size_t total_types = m.types[0].size() + m.types[1].size();

    std::vector<std::string> all;
    for (Player p : {Player::P1, Player::P2})
        for (const auto& t : m.types_of(p)) all.push_back(t);

    auto satisfied_up_to = [&](std::size_t n) {
        std::set<std::string> out;
        for (const auto& t : all)
            if (ev.expresses_up_to(t, n)) out.insert(t);
        return out;
    };

    std::set<std::string> prev = satisfied_up_to(1);
    std::size_t n = 1;
    const std::size_t bound = rounds + total_types + 2;
    while (n < bound) {
        std::set<std::string> next = satisfied_up_to(n + 1);
        if (n >= rounds && next == prev) break;
        prev = std::move(next);
        ++n;
    }
    std::vector<std::string> out;
    for (const auto& t : all)
        if (prev.count(t)) out.push_back(t);
    return out;
}

}  // namespace lexiepist
