#include "lexiepist/gen.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "lexiepist/conditions_co.hpp"
#include "lexiepist/lexpref.hpp"
#include "lexiepist/solvers.hpp"
#include "lexiepist/transform.hpp"

namespace lexiepist::gen {

namespace {

const std::vector<std::string> kChoicePool1 = {"A", "B", "C", "D"};
const std::vector<std::string> kChoicePool2 = {"W", "X", "Y", "Z"};

Rational random_payoff(Rng& rng, const GameOpts& opts) {
    Rational v(rng.int_in(opts.lo, opts.hi));
    if (opts.fractions && rng.flip(0.25)) v /= rng.int_in(2, 4);
    return v;
}

std::vector<std::vector<BeliefAtom>> levels_from_pairs(Rng& rng,
                                                       std::vector<WitnessPair> pairs,
                                                       bool point_mass) {
    rng.shuffle(pairs);
    std::vector<std::vector<WitnessPair>> blocks;
    for (const auto& p : pairs) {
        if (blocks.empty() || point_mass || rng.flip(0.5)) blocks.emplace_back();
        blocks.back().push_back(p);
    }
    std::vector<std::vector<BeliefAtom>> levels;
    for (const auto& block : blocks) {
        std::vector<BeliefAtom> level;
        Rational total(0);
        std::vector<Rational> weights;
        for (std::size_t i = 0; i < block.size(); ++i) {
            Rational w(rng.int_in(1, 4));
            weights.push_back(w);
            total += w;
        }
        for (std::size_t i = 0; i < block.size(); ++i)
            level.push_back({block[i].choice, block[i].type, weights[i] / total});
        levels.push_back(std::move(level));
    }
    return levels;
}

std::vector<std::string> subset_nonempty(Rng& rng, const std::vector<std::string>& v) {
    std::vector<std::string> out;
    for (const auto& x : v)
        if (rng.flip(0.6)) out.push_back(x);
    if (out.empty()) out.push_back(rng.pick(v));
    return out;
}

}  // namespace

Game random_game(Rng& rng, const GameOpts& opts) {
    Game g;
    const std::size_t n1 = static_cast<std::size_t>(
        rng.int_in(static_cast<long long>(opts.min_choices), static_cast<long long>(opts.max_choices)));
    const std::size_t n2 = static_cast<std::size_t>(
        rng.int_in(static_cast<long long>(opts.min_choices), static_cast<long long>(opts.max_choices)));
    g.form.choices[0].assign(kChoicePool1.begin(), kChoicePool1.begin() + n1);
    g.form.choices[1].assign(kChoicePool2.begin(), kChoicePool2.begin() + n2);
    for (Player p : {Player::P1, Player::P2}) {
        const std::size_t rows = g.form.choices_of(p).size();
        const std::size_t cols = g.form.choices_of(opponent_of(p)).size();
        Matrix m(rows, std::vector<Rational>(cols));
        for (auto& row : m)
            for (auto& cell : row) cell = random_payoff(rng, opts);
        g.utilities[index_of(p)] = std::move(m);
    }
    return g;
}

CompleteModel random_complete(Rng& rng, const Game& game, const CoOpts& opts) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        CompleteModel m;
        m.game = game;
        for (Player p : {Player::P1, Player::P2}) {
            const std::size_t n = static_cast<std::size_t>(rng.int_in(
                static_cast<long long>(opts.min_types), static_cast<long long>(opts.max_types)));
            for (std::size_t i = 0; i < n; ++i)
                m.types[index_of(p)].push_back((p == Player::P1 ? "x" : "y") + std::to_string(i + 1));
        }
        for (Player p : {Player::P1, Player::P2}) {
            const Player opp = opponent_of(p);
            for (const auto& t : m.types_of(p)) {
                const auto deemed = subset_nonempty(rng, m.types_of(opp));
                std::vector<WitnessPair> pairs;
                switch (opts.coverage) {
                    case Coverage::Cautious:
                        for (const auto& c : game.choices_of(opp))
                            for (const auto& d : deemed) pairs.push_back({c, d});
                        break;
                    case Coverage::WeaklyCautious:
                        for (const auto& c : game.choices_of(opp)) {
                            std::vector<std::string> keep;
                            for (const auto& d : deemed)
                                if (rng.flip(0.5)) keep.push_back(d);
                            if (keep.empty()) keep.push_back(rng.pick(deemed));
                            for (const auto& d : keep) pairs.push_back({c, d});
                        }
                        break;
                    case Coverage::Free:
                        for (const auto& c : game.choices_of(opp))
                            for (const auto& d : deemed)
                                if (rng.flip(0.5)) pairs.push_back({c, d});
                        if (pairs.empty())
                            pairs.push_back({rng.pick(game.choices_of(opp)), rng.pick(deemed)});
                        break;
                }
                m.beliefs[t] = LexBelief{levels_from_pairs(rng, std::move(pairs), opts.point_mass)};
            }
        }
        if (opts.distinct_beliefs) {
            bool ok = true;
            for (Player p : {Player::P1, Player::P2}) {
                const auto& ts = m.types_of(p);
                for (std::size_t i = 0; i < ts.size() && ok; ++i)
                    for (std::size_t j = i + 1; j < ts.size() && ok; ++j)
                        if (belief_equal(m.belief_of(ts[i]), m.belief_of(ts[j]))) ok = false;
            }
            if (!ok) continue;
        }
        validate_model(m);
        return m;
    }
    throw std::runtime_error("random_complete: could not satisfy distinct-beliefs");
}

IncompleteModel random_incomplete(Rng& rng, const GameForm& form, const UtilityPair& u,
                                  const InOpts& opts) {
    IncompleteModel m;
    m.form = form;
    std::array<std::vector<std::vector<std::string>>, 2> groups;
    for (Player p : {Player::P1, Player::P2}) {
        const std::size_t g = static_cast<std::size_t>(rng.int_in(1, static_cast<long long>(opts.max_groups)));
        for (std::size_t gi = 0; gi < g; ++gi) {
            const std::size_t sz =
                static_cast<std::size_t>(rng.int_in(1, static_cast<long long>(opts.max_group_size)));
            std::vector<std::string> members;
            for (std::size_t k = 0; k < sz; ++k) {
                std::string name = (p == Player::P1 ? "a" : "b") + std::to_string(gi + 1) + "_" +
                                   std::to_string(k + 1);
                members.push_back(name);
                m.types[index_of(p)].push_back(name);
            }
            groups[index_of(p)].push_back(std::move(members));
        }
        for (const auto& t : m.types_of(p)) {
            UtilityFunction w = u[index_of(p)];
            if (rng.flip(0.6)) {
                const int bumps = static_cast<int>(rng.int_in(1, 2));
                for (int k = 0; k < bumps; ++k) {
                    auto& row = w.values[rng.below(w.values.size())];
                    Rational delta(rng.int_in(1, 2));
                    if (rng.flip(0.3)) delta /= 2;
                    if (rng.flip()) delta = -delta;
                    row[rng.below(row.size())] += delta;
                }
            }
            m.utilities[t] = std::move(w);
        }
    }
    for (Player p : {Player::P1, Player::P2}) {
        const Player opp = opponent_of(p);
        for (const auto& group : groups[index_of(p)]) {
            const auto& opp_groups = groups[index_of(opp)];
            std::vector<std::size_t> deemed;
            for (std::size_t gi = 0; gi < opp_groups.size(); ++gi)
                if (rng.flip(0.7)) deemed.push_back(gi);
            if (deemed.empty()) deemed.push_back(rng.below(opp_groups.size()));

            std::vector<WitnessPair> pairs;
            std::set<std::pair<std::string, std::string>> used;
            auto add = [&](const std::string& c, const std::string& t) {
                if (used.insert({c, t}).second) pairs.push_back({c, t});
            };
            switch (opts.coverage) {
                case Coverage::Cautious:
                    for (std::size_t gi : deemed)
                        for (const auto& c : form.choices_of(opp)) {
                            add(c, rng.pick(opp_groups[gi]));
                            if (rng.flip(0.25)) add(c, rng.pick(opp_groups[gi]));
                        }
                    break;
                case Coverage::WeaklyCautious:
                    for (const auto& c : form.choices_of(opp))
                        add(c, rng.pick(opp_groups[rng.pick(deemed)]));
                    if (rng.flip(0.5))
                        add(rng.pick(form.choices_of(opp)),
                            rng.pick(opp_groups[rng.pick(deemed)]));
                    break;
                case Coverage::Free: {
                    const auto& cs = form.choices_of(opp);
                    const int n = static_cast<int>(rng.int_in(1, static_cast<long long>(cs.size() * 2)));
                    for (int k = 0; k < n; ++k)
                        add(rng.pick(cs), rng.pick(opp_groups[rng.pick(deemed)]));
                    break;
                }
            }
            LexBelief b{levels_from_pairs(rng, std::move(pairs), false)};
            for (const auto& t : group) m.beliefs[t] = b;
        }
    }
    validate_model(m);
    return m;
}

namespace {

bool point_mass_levels(const LexBelief& b) {
    for (const auto& level : b.levels)
        if (level.size() != 1) return false;
    return true;
}

}  // namespace

bool sort_for_respect(CompleteModel& m, int max_sweeps) {
    for (Player p : {Player::P1, Player::P2})
        for (const auto& t : m.types_of(p))
            if (!point_mass_levels(m.belief_of(t))) return false;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        bool changed = false;
        for (Player p : {Player::P1, Player::P2}) {
            const Player opp = opponent_of(p);
            const UtilityFunction u_opp = m.game.utility_of(opp);
            std::map<std::string, PreferencePartition> parts;
            for (const auto& t_j : m.types_of(opp))
                parts.emplace(t_j, preference_partition(m.game.form, m.belief_of(t_j), u_opp));
            for (const auto& t : m.types_of(p)) {
                LexBelief b = m.belief_of(t);
                std::stable_sort(b.levels.begin(), b.levels.end(),
                                 [&](const auto& la, const auto& lb) {
                                     return parts.at(la.front().type).class_of(la.front().choice) <
                                            parts.at(lb.front().type).class_of(lb.front().choice);
                                 });
                if (!(b.levels == m.belief_of(t).levels)) {
                    m.beliefs[t] = std::move(b);
                    changed = true;
                }
            }
        }
        if (!changed) return true;
    }
    return false;
}

bool repair_primary_rationality(CompleteModel& m, int max_sweeps) {
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        bool changed = false;
        for (Player p : {Player::P1, Player::P2}) {
            const Player opp = opponent_of(p);
            const UtilityFunction u_opp = m.game.utility_of(opp);
            std::map<std::string, std::vector<std::string>> optimal;
            for (const auto& t_j : m.types_of(opp))
                optimal[t_j] = optimal_choices(m.game.form, m.belief_of(t_j), u_opp);
            auto rational_level = [&](const std::vector<BeliefAtom>& level) {
                for (const auto& a : level) {
                    if (a.prob <= 0) continue;
                    const auto& opt = optimal.at(a.type);
                    if (std::find(opt.begin(), opt.end(), a.choice) == opt.end()) return false;
                }
                return true;
            };
            for (const auto& t : m.types_of(p)) {
                LexBelief b = m.belief_of(t);
                if (rational_level(b.levels.front())) continue;
                std::size_t found = b.levels.size();
                for (std::size_t k = 1; k < b.levels.size(); ++k)
                    if (rational_level(b.levels[k])) {
                        found = k;
                        break;
                    }
                if (found == b.levels.size()) return false;
                std::rotate(b.levels.begin(), b.levels.begin() + static_cast<std::ptrdiff_t>(found),
                            b.levels.begin() + static_cast<std::ptrdiff_t>(found) + 1);
                m.beliefs[t] = std::move(b);
                changed = true;
            }
        }
        if (!changed) return true;
    }
    return false;
}

void duplicate_random_type(CompleteModel& m, Rng& rng) {
    const Player p = rng.flip() ? Player::P1 : Player::P2;
    const std::string source = rng.pick(m.types_of(p));
    std::string twin = source + "'";
    while (m.player_of(twin)) twin += "'";
    m.types[index_of(p)].push_back(twin);
    m.beliefs[twin] = m.beliefs[source];
    for (const auto& t : m.types_of(opponent_of(p))) {
        LexBelief b = m.belief_of(t);
        for (auto& level : b.levels) {
            std::vector<BeliefAtom> next;
            for (const auto& a : level) {
                if (a.type == source && a.prob > 0) {
                    next.push_back({a.choice, a.type, a.prob / 2});
                    next.push_back({a.choice, twin, a.prob / 2});
                } else {
                    next.push_back(a);
                }
            }
            level = std::move(next);
        }
        m.beliefs[t] = std::move(b);
    }
    validate_model(m);
}

std::optional<CompleteModel> ia_witness_model(Rng& rng, const Game& game, int tilt_tries) {
    const auto ladder = iewds(game);
    const Restriction& roster = survivors_after(ladder, 1);
    auto surv_rank = [&](Player p, const std::string& c) {
        std::size_t r = 0;
        for (std::size_t k = 0; k < ladder.size(); ++k)
            if (ladder[k].contains(p, c)) r = k;
        return r;
    };
    const std::size_t top = ladder.size() - 1;

    CompleteModel m;
    m.game = game;
    auto type_name = [&](Player p, const std::string& c) {
        return (p == Player::P1 ? "a_" : "b_") + c;
    };
    for (Player p : {Player::P1, Player::P2})
        for (const auto& c : roster.of(p)) m.types[index_of(p)].push_back(type_name(p, c));

    for (Player p : {Player::P1, Player::P2}) {
        const Player opp = opponent_of(p);
        const UtilityFunction u = m.game.utility_of(p);

        // Diagonal pairs (d paired with its own supporter) by elimination
        // rank; everything else only ever matters for caution.
        std::map<std::size_t, std::vector<WitnessPair>> diag;
        std::vector<WitnessPair> tail;
        for (const auto& d : roster.of(opp)) {
            diag[surv_rank(opp, d)].push_back({d, type_name(opp, d)});
            for (const auto& other : m.game.choices_of(opp))
                if (other != d) tail.push_back({other, type_name(opp, d)});
        }

        // The supporter of a choice eliminated after round r only has to
        // express r-1 assumption folds, so its level 1 may reach down to
        // rank r-1 pairs (and the whole tail when r <= 1); a fixpoint
        // survivor's level 1 stays on the top diagonal.
        for (const auto& c : roster.of(p)) {
            const std::size_t r = surv_rank(p, c);
            const bool is_final = ladder.back().contains(p, c);
            const std::size_t lead_min = is_final ? top : (r > 0 ? r - 1 : 0);
            const bool lead_tail = !is_final && r <= 1;

            std::vector<WitnessPair> lead;
            std::vector<std::vector<WitnessPair>> rest;
            for (std::size_t q = top + 1; q-- > 0;) {
                auto it = diag.find(q);
                if (it == diag.end()) continue;
                if (q >= lead_min)
                    lead.insert(lead.end(), it->second.begin(), it->second.end());
                else
                    rest.push_back(it->second);
            }
            if (lead_tail)
                lead.insert(lead.end(), tail.begin(), tail.end());
            else if (!tail.empty())
                rest.push_back(tail);

            // Level 1 carries tilted weights over the lead pairs; the
            // remaining groups unroll into point-mass levels whose
            // within-group order is part of the search space, since ties at
            // the top are broken by the deeper levels.
            auto build = [&](const std::vector<Rational>& weights,
                             const std::vector<std::vector<WitnessPair>>& groups) {
                LexBelief b;
                Rational total(0);
                for (const auto& w : weights) total += w;
                std::vector<BeliefAtom> level1;
                for (std::size_t i = 0; i < lead.size(); ++i)
                    level1.push_back({lead[i].choice, lead[i].type, weights[i] / total});
                b.levels.push_back(std::move(level1));
                for (const auto& group : groups)
                    for (const auto& pr : group)
                        b.levels.push_back({{pr.choice, pr.type, Rational(1)}});
                return b;
            };

            bool assigned = false;
            LexBelief fallback;
            for (int attempt = 0; attempt < tilt_tries && !assigned; ++attempt) {
                std::vector<Rational> weights(lead.size(), Rational(1));
                if (attempt > 0) {
                    weights[rng.below(weights.size())] = Rational(rng.int_in(2, 16));
                    if (rng.flip(0.3) && weights.size() > 1)
                        weights[rng.below(weights.size())] = Rational(rng.int_in(2, 16));
                }
                std::vector<std::vector<WitnessPair>> groups = rest;
                if (attempt > 0)
                    for (auto& group : groups) rng.shuffle(group);
                LexBelief b = build(weights, groups);
                auto opt = optimal_choices(m.game.form, b, u);
                if (std::find(opt.begin(), opt.end(), c) == opt.end()) continue;
                if (opt.size() == 1) {
                    m.beliefs[type_name(p, c)] = std::move(b);
                    assigned = true;
                } else if (fallback.levels.empty()) {
                    fallback = std::move(b);  // co-optimal ties as a last resort
                }
            }
            if (!assigned && !fallback.levels.empty()) {
                m.beliefs[type_name(p, c)] = std::move(fallback);
                assigned = true;
            }
            if (!assigned) return std::nullopt;
        }
    }
    validate_model(m);
    return m;
}

namespace {

template <class M>
std::vector<M> shrink_generic(const M& m, const std::string& keep) {
    std::vector<M> out;
    // Drop one belief level of one type.
    for (Player p : {Player::P1, Player::P2})
        for (const auto& t : m.types_of(p)) {
            const LexBelief& b = m.belief_of(t);
            if (b.levels.size() < 2) continue;
            for (std::size_t k = 0; k < b.levels.size(); ++k) {
                M next = m;
                next.beliefs[t].levels.erase(next.beliefs[t].levels.begin() +
                                             static_cast<std::ptrdiff_t>(k));
                try {
                    validate_model(next);
                    out.push_back(std::move(next));
                } catch (const std::exception&) {
                }
            }
        }
    // Drop an unreferenced non-focal type.
    for (Player p : {Player::P1, Player::P2}) {
        if (m.types_of(p).size() < 2) continue;
        for (const auto& t : m.types_of(p)) {
            if (t == keep) continue;
            bool referenced = false;
            for (const auto& [other, b] : m.beliefs) {
                if (other == t) continue;
                for (const auto& level : b.levels)
                    for (const auto& a : level)
                        if (a.type == t && a.prob > 0) referenced = true;
            }
            if (referenced) continue;
            M next = m;
            auto& ts = next.types[index_of(p)];
            ts.erase(std::find(ts.begin(), ts.end(), t));
            next.beliefs.erase(t);
            if constexpr (requires { next.utilities.erase(t); }) next.utilities.erase(t);
            try {
                validate_model(next);
                out.push_back(std::move(next));
            } catch (const std::exception&) {
            }
        }
    }
    return out;
}

}  // namespace

std::vector<CompleteModel> shrink_candidates(const CompleteModel& m, const std::string& keep) {
    return shrink_generic(m, keep);
}
std::vector<IncompleteModel> shrink_candidates(const IncompleteModel& m, const std::string& keep) {
    return shrink_generic(m, keep);
}

}  // namespace lexiepist::gen
