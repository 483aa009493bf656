#include "lexiepist/conditions_co.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

#include "lexiepist/lexpref.hpp"

namespace lexiepist {

std::optional<CoCondition> co_condition_from_tag(std::string_view tag) {
    if (tag == "caution") return CoCondition::Caution;
    if (tag == "weak-caution") return CoCondition::WeakCaution;
    if (tag == "primary-belief-rationality") return CoCondition::PrimaryBeliefRationality;
    if (tag == "respect-preferences") return CoCondition::RespectPreferences;
    return std::nullopt;
}

const char* tag_of(CoCondition c) {
    switch (c) {
        case CoCondition::Caution: return "caution";
        case CoCondition::WeakCaution: return "weak-caution";
        case CoCondition::PrimaryBeliefRationality: return "primary-belief-rationality";
        case CoCondition::RespectPreferences: return "respect-preferences";
    }
    return "?";
}

ConditionVerdict is_cautious_co(const CompleteModel& m, const std::string& type) {
    const LexBelief& b = m.belief_of(type);
    const Player opp = opponent_of(*m.player_of(type));
    for (const auto& t_j : deemed_possible_types(m, type))
        for (const auto& c_j : m.game.choices_of(opp))
            if (!b.deems_possible(c_j, t_j))
                return ConditionVerdict::no({"pair-not-deemed-possible", {{c_j, t_j}}, {}, {}});
    return ConditionVerdict::yes();
}

ConditionVerdict is_weakly_cautious_co(const CompleteModel& m, const std::string& type) {
    const LexBelief& b = m.belief_of(type);
    const Player opp = opponent_of(*m.player_of(type));
    for (const auto& c_j : m.game.choices_of(opp)) {
        bool present = false;
        for (const auto& level : b.levels)
            for (const auto& a : level)
                if (a.prob > 0 && a.choice == c_j) present = true;
        if (!present) return ConditionVerdict::no({"choice-not-deemed-possible", {{c_j, ""}}, {}, {}});
    }
    return ConditionVerdict::yes();
}

ConditionVerdict primarily_believes_rationality(const CompleteModel& m, const std::string& type) {
    const LexBelief& b = m.belief_of(type);
    const Player opp = opponent_of(*m.player_of(type));
    const UtilityFunction u_j = m.game.utility_of(opp);
    for (const auto& a : b.levels.front()) {
        if (a.prob <= 0) continue;
        if (!is_optimal(m.game.form, m.belief_of(a.type), u_j, a.choice))
            return ConditionVerdict::no(
                {"level-1-pair-not-rational", {{a.choice, a.type}}, 1, {}});
    }
    return ConditionVerdict::yes();
}

ConditionVerdict respects_preferences(const CompleteModel& m, const std::string& type) {
    ConditionVerdict cautious = is_cautious_co(m, type);
    if (!cautious.holds())
        return ConditionVerdict::precondition(
            {"type-not-cautious", cautious.witness ? cautious.witness->pairs
                                                   : std::vector<WitnessPair>{},
             {}, {}});
    const LexBelief& b = m.belief_of(type);
    const Player opp = opponent_of(*m.player_of(type));
    const UtilityFunction u_j = m.game.utility_of(opp);
    const auto& opp_choices = m.game.choices_of(opp);
    for (const auto& t_j : deemed_possible_types(m, type)) {
        const LexBelief& b_j = m.belief_of(t_j);
        for (const auto& c : opp_choices)
            for (const auto& c_prime : opp_choices) {
                if (c == c_prime) continue;
                if (prefers(m.game.form, b_j, u_j, c, c_prime) != PrefOrder::Prefers) continue;
                if (!infinitely_more_likely(b, {c, t_j}, {c_prime, t_j}))
                    return ConditionVerdict::no(
                        {"preferred-choice-not-infinitely-more-likely",
                         {{c, t_j}, {c_prime, t_j}}, {}, {}});
            }
    }
    return ConditionVerdict::yes();
}

ConditionVerdict check_co(const CompleteModel& m, const std::string& type, CoCondition c) {
    switch (c) {
        case CoCondition::Caution: return is_cautious_co(m, type);
        case CoCondition::WeakCaution: return is_weakly_cautious_co(m, type);
        case CoCondition::PrimaryBeliefRationality: return primarily_believes_rationality(m, type);
        case CoCondition::RespectPreferences: return respects_preferences(m, type);
    }
    return ConditionVerdict::yes();
}

namespace {

// Memoized n-fold assumption evaluation over one model; the per-type
// verdicts at fold m feed the qualifying sets at fold m+1.
struct AssumptionEvaluator {
    const CompleteModel& m;
    std::vector<Restriction> ladder;
    std::map<std::pair<std::string, std::size_t>, ConditionVerdict> memo;
    std::map<std::string, std::vector<std::string>> optimal;
    std::map<std::string, bool> caution_memo;

    explicit AssumptionEvaluator(const CompleteModel& model) : m(model), ladder(iewds(model.game)) {
        for (Player p : {Player::P1, Player::P2}) {
            const UtilityFunction u = m.game.utility_of(p);
            for (const auto& t : m.types_of(p))
                optimal[t] = optimal_choices(m.game.form, m.belief_of(t), u);
        }
    }

    bool cautious(const std::string& t) {
        auto it = caution_memo.find(t);
        if (it != caution_memo.end()) return it->second;
        return caution_memo[t] = is_cautious_co(m, t).holds();
    }

    bool optimal_for(const std::string& t, const std::string& c) const {
        const auto& opt = optimal.at(t);
        return std::find(opt.begin(), opt.end(), c) != opt.end();
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
        // Seed to avoid infinite regress on (malformed) self-reference; the
        // fold index strictly decreases through qualifying sets, so real
        // recursion terminates before this placeholder is ever read.
        memo[key] = ConditionVerdict::yes();
        ConditionVerdict v = eval(type, n);
        memo[key] = v;
        return v;
    }

    ConditionVerdict eval(const std::string& type, std::size_t n) {
        assert(n >= 1);
        if (!cautious(type))
            return ConditionVerdict::precondition({"type-not-cautious", {}, {}, {}});
        const Player opp = opponent_of(*m.player_of(type));
        const LexBelief& b = m.belief_of(type);

        // Qualifying opponent types: cautious and expressing up to (n-1)-fold
        // assumption of rationality.
        std::vector<std::string> q_types;
        for (const auto& t_j : m.types_of(opp))
            if (cautious(t_j) && expresses_up_to(t_j, n - 1)) q_types.push_back(t_j);

        // Clause (a): every choice surviving n IEWDS rounds has a deemed
        // possible qualifying supporter.
        const auto deemed = deemed_possible_types(m, type);
        for (const auto& c_j : survivors_after(ladder, n).of(opp)) {
            bool supported = false;
            for (const auto& t_j : q_types) {
                if (std::find(deemed.begin(), deemed.end(), t_j) == deemed.end()) continue;
                if (optimal_for(t_j, c_j)) supported = true;
            }
            if (!supported)
                return ConditionVerdict::no({"good-choice-unsupported", {{c_j, ""}}, {}, {}});
        }

        // Clause (b): deemed-possible qualifying pairs (choice optimal for a
        // qualifying type) sit infinitely more likely than every other
        // deemed-possible pair. Pairs outside the belief constrain nothing;
        // the induction proofs quantify this clause over deemed pairs.
        std::vector<WitnessPair> qualifying, rest;
        for (const auto& t_j : m.types_of(opp)) {
            bool q = std::find(q_types.begin(), q_types.end(), t_j) != q_types.end();
            for (const auto& c_j : m.game.choices_of(opp)) {
                if (!b.deems_possible(c_j, t_j)) continue;
                if (q && optimal_for(t_j, c_j))
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

}  // namespace

ConditionVerdict assumes_rationality_nfold(const CompleteModel& m, const std::string& type,
                                           std::size_t n) {
    if (n < 1) throw std::invalid_argument("fold count must be >= 1");
    AssumptionEvaluator ev(m);
    return ev.nfold(type, n);
}

std::map<std::pair<std::string, std::size_t>, ConditionVerdict> assumes_rationality_folds(
    const CompleteModel& m, std::size_t max_fold) {
    AssumptionEvaluator ev(m);
    std::map<std::pair<std::string, std::size_t>, ConditionVerdict> out;
    for (Player p : {Player::P1, Player::P2})
        for (const auto& t : m.types_of(p))
            for (std::size_t n = 1; n <= max_fold; ++n) out[{t, n}] = ev.nfold(t, n);
    return out;
}

namespace {

template <class M, class Pred>
std::vector<std::string> fixpoint_over(const M& m, Pred satisfies) {
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

std::vector<std::string> common_full_belief_co(const CompleteModel& m, CoCondition c) {
    return fixpoint_over(m, [&](const std::string& t) { return check_co(m, t, c).holds(); });
}

std::vector<std::string> common_assumption_rationality(const CompleteModel& m) {
    AssumptionEvaluator ev(m);
    const std::size_t rounds = ev.ladder.size() - 1;
    std::size_t total_types = m.types[0].size() + m.types[1].size();

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
