#include "lexiepist/transform.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

namespace lexiepist {

std::size_t PreferencePartition::class_of(const std::string& choice) const {
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (const auto& c : classes[i])
            if (c == choice) return i;
    throw std::invalid_argument("choice '" + choice + "' not in partition");
}

PreferencePartition preference_partition(const GameForm& form, const std::vector<LevelDist>& belief,
                                         const UtilityFunction& utility) {
    const auto& cs = form.choices_of(utility.owner);
    std::vector<UtilityVector> vecs;
    for (const auto& c : cs) vecs.push_back(lex_utility(form, c, belief, utility));

    std::vector<std::size_t> order(cs.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return compare_lex(vecs[a], vecs[b]) == PrefOrder::Prefers;
    });

    PreferencePartition out;
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (i == 0 || compare_lex(vecs[order[i - 1]], vecs[order[i]]) == PrefOrder::Prefers)
            out.classes.emplace_back();
        out.classes.back().push_back(cs[order[i]]);
    }
    return out;
}

PreferencePartition preference_partition(const GameForm& form, const LexBelief& belief,
                                         const UtilityFunction& utility) {
    return preference_partition(form, choice_marginals(form, utility.owner, belief), utility);
}

UtilityLadder utility_ladder(const GameForm& form, const UtilityFunction& u,
                             const std::vector<LevelDist>& belief) {
    UtilityLadder ladder;
    ladder.partition = preference_partition(form, belief, u);
    ladder.rungs.push_back(u);

    if (belief.empty()) throw std::invalid_argument("belief has no levels");
    std::set<std::size_t> support;
    for (const auto& [c, p] : belief.front())
        if (p > 0) support.insert(c);

    auto level1 = [&](const UtilityFunction& v, const std::string& choice) {
        return lex_utility(form, choice, belief, v).front();
    };

    for (std::size_t l = 1; l < ladder.partition.classes.size(); ++l) {
        const UtilityFunction& prev = ladder.rungs.back();
        Rational gap(0);
        bool first = true;
        for (const auto& top : ladder.partition.classes[l - 1])
            for (const auto& lifted : ladder.partition.classes[l]) {
                Rational g = level1(prev, top) - level1(prev, lifted);
                if (first || g > gap) gap = g;
                first = false;
            }
        const Rational bump = gap + 1;

        UtilityFunction next = prev;
        for (const auto& lifted : ladder.partition.classes[l]) {
            const std::size_t row = *form.choice_index(u.owner, lifted);
            for (std::size_t col : support) next.values[row][col] += bump;
        }
        ladder.rungs.push_back(std::move(next));
    }
    return ladder;
}

UtilityLadder utility_ladder(const GameForm& form, const UtilityFunction& u,
                             const LexBelief& belief) {
    return utility_ladder(form, u, choice_marginals(form, u.owner, belief));
}

namespace {

std::string rung_name(const std::string& source, std::size_t rung) {
    return source + "#" + std::to_string(rung + 1);
}

}  // namespace

Co2InResult co2in(const CompleteModel& m) {
    Co2InResult out;
    out.model.form = m.game.form;

    std::map<std::string, UtilityLadder> ladders;
    for (Player p : {Player::P1, Player::P2}) {
        const UtilityFunction u = m.game.utility_of(p);
        for (const auto& t : m.types_of(p)) {
            ladders.emplace(t, utility_ladder(m.game.form, u, m.belief_of(t)));
            const auto& ladder = ladders.at(t);
            std::vector<std::string> names;
            for (std::size_t l = 0; l < ladder.rungs.size(); ++l) {
                names.push_back(rung_name(t, l));
                out.model.types[index_of(p)].push_back(names.back());
                out.model.utilities[names.back()] = ladder.rungs[l];
            }
            out.members[t] = std::move(names);
        }
    }

    // Each pair (c_j, t_j) is rewired to the ladder type of t_j whose rung
    // makes c_j optimal.
    auto rewire = [&](const LexBelief& b) {
        LexBelief nb;
        for (const auto& level : b.levels) {
            std::vector<BeliefAtom> nl;
            for (const auto& a : level) {
                const std::size_t cls = ladders.at(a.type).partition.class_of(a.choice);
                nl.push_back({a.choice, rung_name(a.type, cls), a.prob});
            }
            nb.levels.push_back(std::move(nl));
        }
        return nb;
    };

    for (Player p : {Player::P1, Player::P2})
        for (const auto& t : m.types_of(p)) {
            LexBelief nb = rewire(m.belief_of(t));
            for (const auto& name : out.members[t]) out.model.beliefs[name] = nb;
        }
    validate_model(out.model);
    return out;
}

In2CoResult in2co(const IncompleteModel& m, const Game& game) {
    if (!(game.form == m.form))
        throw std::invalid_argument("game form does not match the incomplete model");
    In2CoResult out;
    out.model.game = game;

    // Belief-equivalence classes, named after their sorted member lists.
    std::array<std::vector<std::vector<std::string>>, 2> classes;
    for (Player p : {Player::P1, Player::P2}) {
        for (const auto& t : m.types_of(p)) {
            bool placed = false;
            for (auto& cls : classes[index_of(p)])
                if (!placed && belief_equal(m.belief_of(cls.front()), m.belief_of(t))) {
                    cls.push_back(t);
                    placed = true;
                }
            if (!placed) classes[index_of(p)].push_back({t});
        }
        for (auto& cls : classes[index_of(p)]) {
            std::vector<std::string> sorted = cls;
            std::sort(sorted.begin(), sorted.end());
            std::string name = "t(";
            for (std::size_t i = 0; i < sorted.size(); ++i)
                name += (i ? "," : "") + sorted[i];
            name += ")";
            out.model.types[index_of(p)].push_back(name);
            for (const auto& member : cls) out.class_of[member] = name;
        }
    }

    for (Player p : {Player::P1, Player::P2})
        for (std::size_t k = 0; k < classes[index_of(p)].size(); ++k) {
            const std::string& rep = classes[index_of(p)][k].front();
            LexBelief nb;
            for (const auto& level : m.belief_of(rep).levels) {
                // Rewiring can merge several same-class atoms; the merged
                // atom keeps its first position and sums the probabilities,
                // preserving per-level choice marginals.
                std::vector<BeliefAtom> nl;
                for (const auto& a : level) {
                    const std::string target = out.class_of.at(a.type);
                    bool merged = false;
                    for (auto& existing : nl)
                        if (existing.choice == a.choice && existing.type == target) {
                            existing.prob += a.prob;
                            merged = true;
                        }
                    if (!merged) nl.push_back({a.choice, target, a.prob});
                }
                nb.levels.push_back(std::move(nl));
            }
            out.model.beliefs[out.model.types[index_of(p)][k]] = std::move(nb);
        }
    validate_model(out.model);
    return out;
}

CompleteModel cautious_extension(const CompleteModel& m, const std::string& type) {
    auto owner = m.player_of(type);
    if (!owner) throw std::invalid_argument("unknown type '" + type + "'");
    {
        const LexBelief& b = m.belief_of(type);
        const Player opp = opponent_of(*owner);
        for (const auto& c : m.game.choices_of(opp)) {
            bool present = false;
            for (const auto& level : b.levels)
                for (const auto& a : level)
                    if (a.prob > 0 && a.choice == c) present = true;
            if (!present)
                throw std::invalid_argument("type '" + type + "' is not weakly cautious");
        }
    }

    CompleteModel out = m;
    const Player opp = opponent_of(*owner);
    for (;;) {
        const LexBelief& b = out.belief_of(type);
        // First missing pair in (choice order, type order) over deemed types.
        std::string miss_choice, miss_type;
        bool found = false;
        for (const auto& c : out.game.choices_of(opp)) {
            for (const auto& t_j : deemed_possible_types(out, type)) {
                if (!b.deems_possible(c, t_j)) {
                    miss_choice = c;
                    miss_type = t_j;
                    found = true;
                    break;
                }
            }
            if (found) break;
        }
        if (!found) break;

        // Smallest level carrying the same choice with some donor type; the
        // doppelganger copies that level with the donor atom relabeled.
        std::size_t k = b.levels.size();
        std::string donor;
        for (std::size_t lvl = 0; lvl < b.levels.size() && k == b.levels.size(); ++lvl)
            for (const auto& a : b.levels[lvl])
                if (a.prob > 0 && a.choice == miss_choice) {
                    k = lvl;
                    donor = a.type;
                    break;
                }
        assert(k < b.levels.size());

        std::vector<BeliefAtom> doppel;
        for (const auto& a : b.levels[k]) {
            if (a.prob <= 0) continue;
            if (a.choice == miss_choice && a.type == donor)
                doppel.push_back({miss_choice, miss_type, a.prob});
            else
                doppel.push_back(a);
        }
        LexBelief nb = b;
        nb.levels.insert(nb.levels.begin() + static_cast<std::ptrdiff_t>(k) + 1,
                         std::move(doppel));
        out.beliefs[type] = std::move(nb);
    }
    validate_model(out);
    return out;
}

bool isomorphic_complete(const CompleteModel& a, const CompleteModel& b,
                         const std::map<std::string, std::string>& a_to_b) {
    if (!(a.game == b.game)) return false;
    for (Player p : {Player::P1, Player::P2}) {
        const auto& ta = a.types_of(p);
        const auto& tb = b.types_of(p);
        if (ta.size() != tb.size()) return false;
        std::set<std::string> image;
        for (const auto& t : ta) {
            auto it = a_to_b.find(t);
            if (it == a_to_b.end()) return false;
            if (std::find(tb.begin(), tb.end(), it->second) == tb.end()) return false;
            if (!image.insert(it->second).second) return false;
        }
    }
    for (Player p : {Player::P1, Player::P2})
        for (const auto& t : a.types_of(p)) {
            LexBelief renamed = a.belief_of(t);
            for (auto& level : renamed.levels)
                for (auto& atom : level) {
                    auto it = a_to_b.find(atom.type);
                    if (it == a_to_b.end()) return false;
                    atom.type = it->second;
                }
            if (!belief_equal(renamed, b.belief_of(a_to_b.at(t)))) return false;
        }
    return true;
}

}  // namespace lexiepist
