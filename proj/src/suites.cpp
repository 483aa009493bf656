#include "lexiepist/suites.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "lexiepist/conditions_co.hpp"
#include "lexiepist/conditions_in.hpp"
#include "lexiepist/gen.hpp"
#include "lexiepist/io.hpp"
#include "lexiepist/metric.hpp"
#include "lexiepist/transform.hpp"

namespace lexiepist::suites {

namespace {

using gen::Coverage;
using gen::Rng;

bool contains(const std::vector<std::string>& v, const std::string& x) {
    return std::find(v.begin(), v.end(), x) != v.end();
}

template <class Model>
std::string dump(const Model& m, const std::string& focal) {
    return "focal type: " + focal + "\n" + serialize(m);
}

SuiteResult fail(const std::string& name, std::size_t done, const std::string& msg) {
    return {name, done, false, msg};
}
SuiteResult ok(const std::string& name, std::size_t samples) { return {name, samples, true, ""}; }

// Greedy first-improvement shrink; hypothesis must keep holding and the
// conclusion must keep failing.
template <class Model, class Hyp, class Con>
Model shrink_model(Model m, const std::string& focal, Hyp hyp, Con con) {
    for (int guard = 0; guard < 100; ++guard) {
        bool improved = false;
        for (auto& cand : gen::shrink_candidates(m, focal)) {
            bool h = false, c = true;
            try {
                h = hyp(cand, focal);
                if (h) c = con(cand, focal);
            } catch (const std::exception&) {
                continue;
            }
            if (h && !c) {
                m = std::move(cand);
                improved = true;
                break;
            }
        }
        if (!improved) break;
    }
    return m;
}

// Driver for lemma suites: keeps generating candidate (model, focal) pairs,
// admits only those passing the hypothesis checker, then asserts the
// conclusion; failures shrink to a minimal counterexample.
template <class Model, class GenFn, class Hyp, class Con>
SuiteResult run_lemma(const std::string& name, std::size_t samples, std::uint64_t seed, GenFn make,
                      Hyp hyp, Con con) {
    Rng rng(seed);
    std::size_t done = 0;
    const std::size_t max_attempts = samples * 300;
    std::size_t attempts = 0;
    while (done < samples) {
        if (++attempts > max_attempts)
            return fail(name, done,
                        "generator exhausted after " + std::to_string(attempts) +
                            " attempts (hypothesis too rare)");
        std::optional<std::pair<Model, std::string>> cand = make(rng);
        if (!cand) continue;
        const auto& [model, focal] = *cand;
        bool h = false;
        try {
            h = hyp(model, focal);
        } catch (const std::exception&) {
            continue;
        }
        if (!h) continue;
        if (!con(model, focal)) {
            Model small = shrink_model(model, focal, hyp, con);
            return fail(name, done,
                        "conclusion failed (seed " + std::to_string(seed) + ", sample " +
                            std::to_string(done) + ")\n" + dump(small, focal));
        }
        ++done;
    }
    return ok(name, samples);
}

std::string random_type(Rng& rng, const CompleteModel& m) {
    std::vector<std::string> all;
    for (Player p : {Player::P1, Player::P2})
        for (const auto& t : m.types_of(p)) all.push_back(t);
    return rng.pick(all);
}
std::string random_type(Rng& rng, const IncompleteModel& m) {
    std::vector<std::string> all;
    for (Player p : {Player::P1, Player::P2})
        for (const auto& t : m.types_of(p)) all.push_back(t);
    return rng.pick(all);
}

// ---------------------------------------------------------------------------
// Transport lemma suites
// ---------------------------------------------------------------------------

SuiteResult lemma41(std::size_t samples, std::uint64_t seed) {
    return run_lemma<CompleteModel>(
        "lemma4.1", samples, seed,
        [](Rng& rng) -> std::optional<std::pair<CompleteModel, std::string>> {
            Game g = gen::random_game(rng);
            CompleteModel m = gen::random_complete(rng, g, {});
            if (rng.flip(0.3)) gen::duplicate_random_type(m, rng);
            return std::make_pair(m, random_type(rng, m));
        },
        [](const CompleteModel& m, const std::string& t) {
            return contains(common_full_belief_co(m, CoCondition::Caution), t);
        },
        [](const CompleteModel& m, const std::string& t) {
            auto res = co2in(m);
            const UtilityPair u = utility_pair_of(m.game);
            const auto cfb = common_full_belief_in(res.model, InCondition::Caution, u);
            for (const auto& theta : res.members.at(t))
                if (!contains(cfb, theta)) return false;
            return true;
        });
}

std::optional<std::pair<CompleteModel, std::string>> primary_rationality_source(Rng& rng) {
    Game g = gen::random_game(rng);
    CompleteModel m = gen::random_complete(rng, g, {.coverage = Coverage::Cautious, .point_mass = true});
    if (!gen::repair_primary_rationality(m)) return std::nullopt;
    if (rng.flip(0.3)) gen::duplicate_random_type(m, rng);
    return std::make_pair(m, random_type(rng, m));
}

bool hyp_cfb_primary(const CompleteModel& m, const std::string& t) {
    return contains(common_full_belief_co(m, CoCondition::PrimaryBeliefRationality), t) &&
           contains(common_full_belief_co(m, CoCondition::Caution), t);
}

SuiteResult lemma42(std::size_t samples, std::uint64_t seed) {
    return run_lemma<CompleteModel>(
        "lemma4.2", samples, seed, primary_rationality_source, hyp_cfb_primary,
        [](const CompleteModel& m, const std::string& t) {
            auto res = co2in(m);
            const UtilityPair u = utility_pair_of(m.game);
            const auto cfb = common_full_belief_in(res.model, InCondition::PrimaryNearestU, u);
            for (const auto& theta : res.members.at(t))
                if (!contains(cfb, theta)) return false;
            return true;
        });
}

SuiteResult lemma43(std::size_t samples, std::uint64_t seed) {
    Rng rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
        Game g = gen::random_game(rng);
        const UtilityPair u = utility_pair_of(g);
        IncompleteModel m = gen::random_incomplete(rng, g.form, u, {});
        const std::string focal = random_type(rng, m);
        if (!contains(common_full_belief_in(m, InCondition::Caution, u), focal)) {
            --i;
            continue;
        }
        auto hyp = [&u](const IncompleteModel& mm, const std::string& tt) {
            return contains(common_full_belief_in(mm, InCondition::Caution, u), tt);
        };
        auto con = [&g](const IncompleteModel& mm, const std::string& tt) {
            auto res = in2co(mm, g);
            return contains(common_full_belief_co(res.model, CoCondition::Caution),
                            res.class_of.at(tt));
        };
        if (!con(m, focal)) {
            IncompleteModel small = shrink_model(m, focal, hyp, con);
            return fail("lemma4.3", i, "conclusion failed\n" + dump(small, focal));
        }
    }
    return ok("lemma4.3", samples);
}

SuiteResult lemma44(std::size_t samples, std::uint64_t seed) {
    Rng rng(seed);
    std::size_t done = 0, attempts = 0;
    while (done < samples) {
        if (++attempts > samples * 300) return fail("lemma4.4", done, "generator exhausted");
        auto src = primary_rationality_source(rng);
        if (!src || !hyp_cfb_primary(src->first, src->second)) continue;
        const CompleteModel& co = src->first;
        const UtilityPair u = utility_pair_of(co.game);
        auto built = co2in(co);
        const IncompleteModel& m = built.model;
        const std::string theta = gen::Rng(attempts).flip()
                                      ? built.members.at(src->second).front()
                                      : built.members.at(src->second).back();
        auto hyp = [&u](const IncompleteModel& mm, const std::string& tt) {
            return contains(common_full_belief_in(mm, InCondition::Caution, u), tt) &&
                   contains(common_full_belief_in(mm, InCondition::PrimaryNearestU, u), tt) &&
                   contains(common_full_belief_in(mm, InCondition::BestSupportedNearest, u), tt);
        };
        if (!hyp(m, theta)) continue;
        auto con = [&](const IncompleteModel& mm, const std::string& tt) {
            auto res = in2co(mm, co.game);
            return contains(common_full_belief_co(res.model, CoCondition::PrimaryBeliefRationality),
                            res.class_of.at(tt));
        };
        if (!con(m, theta)) {
            IncompleteModel small = shrink_model(m, theta, hyp, con);
            return fail("lemma4.4", done, "conclusion failed\n" + dump(small, theta));
        }
        ++done;
    }
    return ok("lemma4.4", samples);
}

std::optional<std::pair<CompleteModel, std::string>> respect_source(Rng& rng) {
    Game g = gen::random_game(rng);
    CompleteModel m = gen::random_complete(rng, g, {.coverage = Coverage::Cautious, .point_mass = true});
    if (!gen::sort_for_respect(m)) return std::nullopt;
    if (rng.flip(0.3)) gen::duplicate_random_type(m, rng);
    return std::make_pair(m, random_type(rng, m));
}

bool hyp_cfb_respect(const CompleteModel& m, const std::string& t) {
    return contains(common_full_belief_co(m, CoCondition::Caution), t) &&
           contains(common_full_belief_co(m, CoCondition::RespectPreferences), t);
}

SuiteResult lemma45(std::size_t samples, std::uint64_t seed) {
    return run_lemma<CompleteModel>(
        "lemma4.5", samples, seed, respect_source, hyp_cfb_respect,
        [](const CompleteModel& m, const std::string& t) {
            auto res = co2in(m);
            const UtilityPair u = utility_pair_of(m.game);
            const auto cfb = common_full_belief_in(res.model, InCondition::UCentered, u);
            for (const auto& theta : res.members.at(t))
                if (!contains(cfb, theta)) return false;
            return true;
        });
}

SuiteResult lemma46(std::size_t samples, std::uint64_t seed) {
    Rng rng(seed);
    std::size_t done = 0, attempts = 0;
    while (done < samples) {
        if (++attempts > samples * 300) return fail("lemma4.6", done, "generator exhausted");
        auto src = respect_source(rng);
        if (!src || !hyp_cfb_respect(src->first, src->second)) continue;
        const CompleteModel& co = src->first;
        const UtilityPair u = utility_pair_of(co.game);
        auto built = co2in(co);
        const IncompleteModel& m = built.model;
        for (const auto& theta : built.members.at(src->second)) {
            auto hyp = [&u](const IncompleteModel& mm, const std::string& tt) {
                return contains(common_full_belief_in(mm, InCondition::Caution, u), tt) &&
                       contains(common_full_belief_in(mm, InCondition::UCentered, u), tt) &&
                       contains(common_full_belief_in(mm, InCondition::BetterSupportedNearer, u), tt);
            };
            if (!hyp(m, theta)) continue;
            auto con = [&](const IncompleteModel& mm, const std::string& tt) {
                auto res = in2co(mm, co.game);
                return contains(common_full_belief_co(res.model, CoCondition::RespectPreferences),
                                res.class_of.at(tt));
            };
            if (!con(m, theta)) {
                IncompleteModel small = shrink_model(m, theta, hyp, con);
                return fail("lemma4.6", done, "conclusion failed\n" + dump(small, theta));
            }
        }
        ++done;
    }
    return ok("lemma4.6", samples);
}

SuiteResult lemma47(std::size_t samples, std::uint64_t seed) {
    return run_lemma<CompleteModel>(
        "lemma4.7", samples, seed, primary_rationality_source, hyp_cfb_primary,
        [](const CompleteModel& m, const std::string& t) {
            auto res = co2in(m);
            const UtilityPair u = utility_pair_of(m.game);
            const auto cfb = common_full_belief_in(res.model, InCondition::PrimaryU, u);
            for (const auto& theta : res.members.at(t))
                if (!contains(cfb, theta)) return false;
            return true;
        });
}

SuiteResult lemma48(std::size_t samples, std::uint64_t seed) {
    Rng rng(seed);
    std::size_t done = 0, attempts = 0;
    while (done < samples) {
        if (++attempts > samples * 300) return fail("lemma4.8", done, "generator exhausted");
        auto src = primary_rationality_source(rng);
        if (!src || !hyp_cfb_primary(src->first, src->second)) continue;
        const CompleteModel& co = src->first;
        const UtilityPair u = utility_pair_of(co.game);
        auto built = co2in(co);
        const IncompleteModel& m = built.model;
        const std::string theta = built.members.at(src->second).front();
        auto hyp = [&u](const IncompleteModel& mm, const std::string& tt) {
            return contains(common_full_belief_in(mm, InCondition::BeliefRationality, u), tt) &&
                   contains(common_full_belief_in(mm, InCondition::PrimaryU, u), tt);
        };
        if (!hyp(m, theta)) continue;
        auto con = [&](const IncompleteModel& mm, const std::string& tt) {
            auto res = in2co(mm, co.game);
            return contains(common_full_belief_co(res.model, CoCondition::PrimaryBeliefRationality),
                            res.class_of.at(tt));
        };
        if (!con(m, theta)) {
            IncompleteModel small = shrink_model(m, theta, hyp, con);
            return fail("lemma4.8", done, "conclusion failed\n" + dump(small, theta));
        }
        ++done;
    }
    return ok("lemma4.8", samples);
}

// Up-to-n-fold full belief in a predicate: it must hold on every type
// reachable within n deemed-possible steps (breadth-first, each type
// visited once).
template <class M, class Pred>
bool nfold_full_belief(const M& m, const std::string& type, std::size_t n, Pred pred) {
    if (!pred(type)) return false;
    std::set<std::string> seen{type};
    std::vector<std::string> frontier{type};
    for (std::size_t depth = 0; depth < n && !frontier.empty(); ++depth) {
        std::vector<std::string> next;
        for (const auto& t : frontier)
            for (const auto& d : deemed_possible_types(m, t))
                if (seen.insert(d).second) {
                    if (!pred(d)) return false;
                    next.push_back(d);
                }
        frontier = std::move(next);
    }
    return true;
}

SuiteResult lemma49(std::size_t samples, std::uint64_t seed) {
    Rng rng(seed);
    std::size_t done = 0, attempts = 0;
    while (done < samples) {
        if (++attempts > samples * 120) return fail("lemma4.9", done, "generator exhausted");
        Game g = gen::random_game(rng, {.min_choices = 2, .max_choices = 3, .lo = 0, .hi = 4});
        auto witness = gen::ia_witness_model(rng, g);
        if (!witness) continue;
        const CompleteModel& co = *witness;
        const UtilityPair u = utility_pair_of(g);
        const auto ladder = iewds(g);
        const std::size_t depth = ladder.size();  // rounds + 1 covers stabilization

        // Focal: a type whose choice survives to the fixpoint.
        std::string focal;
        for (Player p : {Player::P1, Player::P2})
            for (const auto& c : ladder.back().of(p)) {
                std::string cand = (p == Player::P1 ? "a_" : "b_") + c;
                if (co.player_of(cand)) focal = cand;
            }
        if (focal.empty()) continue;

        const auto co_folds = assumes_rationality_folds(co, depth);
        bool hyp_ok = true;
        for (std::size_t n = 1; n <= depth && hyp_ok; ++n)
            hyp_ok = co_folds.at({focal, n}).holds();
        if (!hyp_ok) continue;

        // Direction 1: each ladder image expresses the same folds of prior-u
        // assumption in the constructed incomplete model.
        auto built = co2in(co);
        const auto in_folds = assumes_prior_u_good_folds(built.model, u, depth);
        for (const auto& theta : built.members.at(focal))
            for (std::size_t n = 1; n <= depth; ++n)
                if (!in_folds.at({theta, n}).holds())
                    return fail("lemma4.9", done,
                                "direction 1 failed at fold " + std::to_string(n) + " for " +
                                    theta + "\n" + dump(co, focal));

        // Direction 2: quotienting the image model restores the folds.
        const std::string theta = built.members.at(focal).front();
        std::map<std::string, bool> believes_memo;
        for (Player p : {Player::P1, Player::P2})
            for (const auto& t : built.model.types_of(p))
                believes_memo[t] = believes_rationality_in(built.model, t).holds();
        auto believes = [&](const std::string& t) { return believes_memo.at(t); };
        auto quotient = in2co(built.model, g);
        const auto back_folds = assumes_rationality_folds(quotient.model, depth);
        for (std::size_t n = 1; n <= depth; ++n) {
            if (!nfold_full_belief(built.model, theta, n, believes)) continue;
            if (!in_folds.at({theta, n}).holds()) continue;
            if (!back_folds.at({quotient.class_of.at(theta), n}).holds())
                return fail("lemma4.9", done,
                            "direction 2 failed at fold " + std::to_string(n) + "\n" +
                                dump(built.model, theta));
        }
        ++done;
    }
    return ok("lemma4.9", samples);
}

SuiteResult lemma52(std::size_t samples, std::uint64_t seed) {
    Rng rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
        Game g = gen::random_game(rng);
        const UtilityPair u = utility_pair_of(g);
        IncompleteModel m =
            gen::random_incomplete(rng, g.form, u, {.coverage = Coverage::WeaklyCautious});
        const std::string focal = random_type(rng, m);
        if (!contains(common_full_belief_in(m, InCondition::WeakCaution, u), focal)) {
            --i;
            continue;
        }
        auto hyp = [&u](const IncompleteModel& mm, const std::string& tt) {
            return contains(common_full_belief_in(mm, InCondition::WeakCaution, u), tt);
        };
        auto con = [&g](const IncompleteModel& mm, const std::string& tt) {
            auto res = in2co(mm, g);
            return contains(common_full_belief_co(res.model, CoCondition::WeakCaution),
                            res.class_of.at(tt));
        };
        if (!con(m, focal)) {
            IncompleteModel small = shrink_model(m, focal, hyp, con);
            return fail("lemma5.2", i, "conclusion failed\n" + dump(small, focal));
        }
    }
    return ok("lemma5.2", samples);
}

SuiteResult lemma61(std::size_t samples, std::uint64_t seed) {
    Rng rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
        Game g = gen::random_game(rng);
        CompleteModel m =
            gen::random_complete(rng, g, {.max_types = 3, .coverage = Coverage::WeaklyCautious});
        const std::string focal = random_type(rng, m);
        if (!is_weakly_cautious_co(m, focal).holds()) {
            --i;
            continue;
        }
        auto hyp = [](const CompleteModel& mm, const std::string& tt) {
            return is_weakly_cautious_co(mm, tt).holds();
        };
        auto con = [](const CompleteModel& mm, const std::string& tt) {
            const Player p = *mm.player_of(tt);
            const UtilityFunction u = mm.game.utility_of(p);
            auto before = optimal_choices(mm.game.form, mm.belief_of(tt), u);
            CompleteModel ext = cautious_extension(mm, tt);
            auto after = optimal_choices(ext.game.form, ext.belief_of(tt), u);
            return is_cautious_co(ext, tt).holds() && before == after;
        };
        if (!con(m, focal)) {
            CompleteModel small = shrink_model(m, focal, hyp, con);
            return fail("lemma6.1", i, "conclusion failed\n" + dump(small, focal));
        }
    }
    return ok("lemma6.1", samples);
}

// ---------------------------------------------------------------------------
// Module invariant suites
// ---------------------------------------------------------------------------

SuiteResult io_roundtrip(std::size_t samples, std::uint64_t seed) {
    Rng rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
        Game g = gen::random_game(rng, {.fractions = true});
        const std::string gs = serialize(g);
        if (!(parse_game(gs) == g)) return fail("io-roundtrip", i, "game round trip\n" + gs);

        CompleteModel cm = gen::random_complete(rng, g, {.coverage = Coverage::Free});
        const std::string cs = serialize(cm);
        if (serialize(std::get<CompleteModel>(parse_model(cs, g))) != cs)
            return fail("io-roundtrip", i, "complete model round trip\n" + cs);

        IncompleteModel im = gen::random_incomplete(rng, g.form, utility_pair_of(g),
                                                    {.coverage = Coverage::Free});
        const std::string is = serialize(im);
        if (serialize(std::get<IncompleteModel>(parse_model(is, g.form))) != is)
            return fail("io-roundtrip", i, "incomplete model round trip\n" + is);
    }
    return ok("io-roundtrip", samples);
}

SuiteResult lexpref_order(std::size_t samples, std::uint64_t seed) {
    Rng rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
        Game g = gen::random_game(rng, {.fractions = true});
        CompleteModel m = gen::random_complete(
            rng, g, {.coverage = rng.flip() ? Coverage::Cautious : Coverage::Free});
        for (Player p : {Player::P1, Player::P2}) {
            const UtilityFunction u = g.utility_of(p);
            const auto& cs = g.choices_of(p);
            for (const auto& t : m.types_of(p)) {
                const LexBelief& b = m.belief_of(t);
                // Trichotomy + antisymmetry.
                for (const auto& c1 : cs)
                    for (const auto& c2 : cs) {
                        auto r = prefers(g.form, b, u, c1, c2);
                        auto rr = prefers(g.form, b, u, c2, c1);
                        const bool coherent =
                            (r == PrefOrder::Indifferent && rr == PrefOrder::Indifferent) ||
                            (r == PrefOrder::Prefers && rr == PrefOrder::Dispreferred) ||
                            (r == PrefOrder::Dispreferred && rr == PrefOrder::Prefers);
                        if (!coherent) return fail("lexpref-order", i, "trichotomy broken");
                        if (c1 == c2 && r != PrefOrder::Indifferent)
                            return fail("lexpref-order", i, "reflexivity broken");
                    }
                // Transitivity of weak preference by enumeration.
                auto geq = [&](const std::string& a, const std::string& b2) {
                    return prefers(g.form, b, u, a, b2) != PrefOrder::Dispreferred;
                };
                for (const auto& c1 : cs)
                    for (const auto& c2 : cs)
                        for (const auto& c3 : cs)
                            if (geq(c1, c2) && geq(c2, c3) && !geq(c1, c3))
                                return fail("lexpref-order", i, "transitivity broken");
                // Optimal = maximal, nonempty.
                auto opt = optimal_choices(g.form, b, u);
                if (opt.empty()) return fail("lexpref-order", i, "empty optimal set");
                for (const auto& c1 : cs) {
                    bool maximal = true;
                    for (const auto& c2 : cs)
                        if (prefers(g.form, b, u, c2, c1) == PrefOrder::Prefers) maximal = false;
                    if (maximal != contains(opt, c1))
                        return fail("lexpref-order", i, "optimal != maximal");
                }
                // IML: asymmetric; level-1 support dominated by nothing;
                // transitive on pairs occurring in the belief.
                std::vector<WitnessPair> occurring;
                for (const auto& level : b.levels)
                    for (const auto& a : level)
                        if (a.prob > 0) occurring.push_back({a.choice, a.type});
                for (const auto& p1 : occurring)
                    for (const auto& p2 : occurring) {
                        if (infinitely_more_likely(b, p1, p2) &&
                            infinitely_more_likely(b, p2, p1))
                            return fail("lexpref-order", i, "IML not asymmetric");
                        for (const auto& p3 : occurring)
                            if (infinitely_more_likely(b, p1, p2) &&
                                infinitely_more_likely(b, p2, p3) &&
                                !infinitely_more_likely(b, p1, p3))
                                return fail("lexpref-order", i, "IML not transitive");
                    }
                for (const auto& a : b.levels.front())
                    if (a.prob > 0)
                        for (const auto& p1 : occurring)
                            if (infinitely_more_likely(b, p1, {a.choice, a.type}))
                                return fail("lexpref-order", i, "level-1 pair IML-dominated");
                // Type relabeling leaves expected utilities unchanged.
                LexBelief renamed = b;
                for (auto& level : renamed.levels)
                    for (auto& a : level) a.type = a.type + "_relabeled";
                for (const auto& c1 : cs)
                    if (lex_utility(g.form, c1, b, u) != lex_utility(g.form, c1, renamed, u))
                        return fail("lexpref-order", i, "lex_utility depends on type ids");
            }
        }
    }
    return ok("lexpref-order", samples);
}

std::vector<LevelDist> random_choice_levels(Rng& rng, const GameForm& form, Player owner) {
    const std::size_t n = form.choices_of(opponent_of(owner)).size();
    const std::size_t count = 1 + rng.below(3);
    std::vector<LevelDist> levels;
    for (std::size_t k = 0; k < count; ++k) {
        std::vector<std::size_t> idx;
        for (std::size_t c = 0; c < n; ++c)
            if (rng.flip(0.6)) idx.push_back(c);
        if (idx.empty()) idx.push_back(rng.below(n));
        LevelDist level;
        Rational total(0);
        std::vector<Rational> w;
        for (std::size_t c = 0; c < idx.size(); ++c) {
            w.emplace_back(rng.int_in(1, 4));
            total += w.back();
        }
        for (std::size_t c = 0; c < idx.size(); ++c) level.emplace_back(idx[c], w[c] / total);
        levels.push_back(std::move(level));
    }
    return levels;
}

SuiteResult ladder_props(std::size_t samples, std::uint64_t seed) {
    Rng rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
        Game g = gen::random_game(rng, {.max_choices = 4, .fractions = true});
        const Player p = rng.flip() ? Player::P1 : Player::P2;
        const UtilityFunction u = g.utility_of(p);
        auto levels = random_choice_levels(rng, g.form, p);
        UtilityLadder ladder = utility_ladder(g.form, u, levels);

        if (!(ladder.rungs.front() == u)) return fail("ladder-props", i, "rung 1 differs from u");
        if (ladder.rungs.size() != ladder.partition.classes.size())
            return fail("ladder-props", i, "rung count != class count");
        Rational prev_d(-1);
        std::size_t prev_o = 0;
        for (std::size_t l = 0; l < ladder.rungs.size(); ++l) {
            auto opt = optimal_choices(g.form, levels, ladder.rungs[l]);
            std::vector<std::string> cls = ladder.partition.classes[l];
            std::sort(opt.begin(), opt.end());
            std::sort(cls.begin(), cls.end());
            if (opt != cls) return fail("ladder-props", i, "class not exactly optimal at its rung");
            const Rational d = sq_euclid(ladder.rungs[l], u);
            if (l > 0 && !(d > prev_d))
                return fail("ladder-props", i, "squared distance not strictly increasing");
            const std::size_t od = ordinal_distance(g.form, levels, ladder.rungs[l], u);
            if (l > 0 && !(od > prev_o))
                return fail("ladder-props", i, "ordinal distance not strictly increasing");
            prev_d = d;
            prev_o = od;
        }
    }
    return ok("ladder-props", samples);
}

SuiteResult metric_props(std::size_t samples, std::uint64_t seed) {
    Rng rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
        Game g = gen::random_game(rng, {.fractions = true});
        const Player p = rng.flip() ? Player::P1 : Player::P2;
        UtilityFunction u = g.utility_of(p);
        UtilityFunction v = u;
        if (rng.flip(0.8)) {
            auto& row = v.values[rng.below(v.values.size())];
            row[rng.below(row.size())] += Rational(rng.int_in(1, 3));
        }
        if (sq_euclid(u, v) != sq_euclid(v, u)) return fail("metric-props", i, "not symmetric");
        if ((sq_euclid(u, v) == 0) != (u.values == v.values))
            return fail("metric-props", i, "zero iff equal broken");

        auto levels = random_choice_levels(rng, g.form, p);
        const std::size_t n = g.choices_of(p).size();
        const std::size_t bound = n * (n - 1) / 2;
        const std::size_t d = ordinal_distance(g.form, levels, v, u);
        if (d > bound) return fail("metric-props", i, "ordinal distance above pair bound");
        if (ordinal_distance(g.form, levels, v, u) != ordinal_distance(g.form, levels, u, v))
            return fail("metric-props", i, "ordinal distance not symmetric");
        if (ordinal_distance(g.form, levels, u, u) != 0)
            return fail("metric-props", i, "ordinal self-distance nonzero");
        for (const Rational& s : {Rational(2), Rational(1, 3), Rational(7)}) {
            UtilityFunction sv = v;
            for (auto& row : sv.values)
                for (auto& cell : row) cell *= s;
            if (ordinal_distance(g.form, levels, sv, u) != d)
                return fail("metric-props", i, "ordinal distance not scale invariant");
        }
    }
    return ok("metric-props", samples);
}

SuiteResult implications_co(std::size_t samples, std::uint64_t seed) {
    Rng rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
        Game g = gen::random_game(rng);
        CompleteModel m = gen::random_complete(
            rng, g, {.coverage = rng.flip() ? Coverage::Cautious : Coverage::WeaklyCautious});
        for (Player p : {Player::P1, Player::P2})
            for (const auto& t : m.types_of(p)) {
                if (is_cautious_co(m, t).holds() && !is_weakly_cautious_co(m, t).holds())
                    return fail("implications-co", i, "caution does not imply weak caution");
                auto r = respects_preferences(m, t);
                if (r.holds() && !primarily_believes_rationality(m, t).holds())
                    return fail("implications-co", i,
                                "respect does not imply primary rationality\n" + dump(m, t));
            }
        auto cfb_caution = common_full_belief_co(m, CoCondition::Caution);
        auto cfb_weak = common_full_belief_co(m, CoCondition::WeakCaution);
        for (const auto& t : cfb_caution)
            if (!contains(cfb_weak, t))
                return fail("implications-co", i, "CFB monotonicity broken (caution vs weak)");
        auto cfb_respect = common_full_belief_co(m, CoCondition::RespectPreferences);
        auto cfb_primary = common_full_belief_co(m, CoCondition::PrimaryBeliefRationality);
        for (const auto& t : cfb_respect)
            if (!contains(cfb_primary, t))
                return fail("implications-co", i, "CFB monotonicity broken (respect vs primary)");
        // n-fold chain on the occasional iterated-assumption witness.
        if (i % 10 == 0) {
            auto w = gen::ia_witness_model(rng, g);
            if (w)
                for (Player p : {Player::P1, Player::P2})
                    for (const auto& t : w->types_of(p))
                        for (std::size_t n = 1; n <= 2; ++n)
                            if (assumes_rationality_nfold(*w, t, n + 1).holds() &&
                                !assumes_rationality_nfold(*w, t, n).holds())
                                return fail("implications-co", i, "n-fold chain broken");
        }
    }
    return ok("implications-co", samples);
}

bool witness_replays(const IncompleteModel& m, InCondition c, const UtilityPair& u,
                     const ConditionVerdict& v) {
    if (v.status != ConditionVerdict::Status::Fails || !v.witness) return true;
    const Witness& w = *v.witness;
    switch (c) {
        case InCondition::BeliefRationality: {
            const auto& p = w.pairs.at(0);
            return !is_optimal(m.form, m.belief_of(p.type), m.utility_of(p.type), p.choice);
        }
        case InCondition::PrimaryU: {
            const auto& p = w.pairs.at(0);
            const Player opp = *m.player_of(p.type);
            return !(m.utility_of(p.type).values == u[index_of(opp)].values);
        }
        case InCondition::UCentered:
        case InCondition::BetterSupportedNearer:
        case InCondition::BestSupportedNearest: {
            if (w.values.size() < 2) return false;
            // Cited distances must replay exactly against the model.
            const Player opp = *m.player_of(w.pairs.at(0).type);
            return sq_euclid(m.utility_of(w.pairs.at(0).type), u[index_of(opp)]) == w.values[0] &&
                   sq_euclid(m.utility_of(w.pairs.at(1).type), u[index_of(opp)]) == w.values[1];
        }
        default:
            return !w.pairs.empty() || !w.note.empty();
    }
}

SuiteResult implications_in(std::size_t samples, std::uint64_t seed) {
    Rng rng(seed);
    const std::vector<InCondition> all = {
        InCondition::Caution,        InCondition::WeakCaution,
        InCondition::PrimaryNearestU, InCondition::UCentered,
        InCondition::BestSupportedNearest, InCondition::BetterSupportedNearer,
        InCondition::BeliefRationality, InCondition::PrimaryU,
        InCondition::PriorAssumeU,   InCondition::GoodChoiceSupported};
    for (std::size_t i = 0; i < samples; ++i) {
        Game g = gen::random_game(rng);
        const UtilityPair u = utility_pair_of(g);
        Coverage cov = rng.flip(0.4)   ? Coverage::Cautious
                       : rng.flip(0.5) ? Coverage::WeaklyCautious
                                       : Coverage::Free;
        IncompleteModel m = gen::random_incomplete(rng, g.form, u, {.coverage = cov});
        for (Player p : {Player::P1, Player::P2})
            for (const auto& t : m.types_of(p)) {
                if (is_cautious_in(m, t).holds() && !is_weakly_cautious_in(m, t).holds())
                    return fail("implications-in", i, "caution does not imply weak caution");
                if (u_centered(m, t, u).holds() && !primary_belief_nearest_u(m, t, u).holds())
                    return fail("implications-in", i,
                                "u-centered does not imply primary-nearest-u\n" + dump(m, t));
                if (better_supported_nearer(m, t, u).holds() &&
                    !best_supported_nearest(m, t, u).holds())
                    return fail("implications-in", i,
                                "(4.2) does not imply (4.1)\n" + dump(m, t));
                // (6.2) implies (6.1) when a cautious u-typed pair is deemed
                // possible at all.
                const Player opp = opponent_of(p);
                bool exists = false;
                for (const auto& d : deemed_possible_types(m, t))
                    if (m.utility_of(d).values == u[index_of(opp)].values &&
                        is_cautious_in(m, d).holds())
                        exists = true;
                if (exists && prior_assumes_u(m, t, u).holds() &&
                    !primary_belief_u(m, t, u).holds())
                    return fail("implications-in", i,
                                "prior-u does not imply primary-u\n" + dump(m, t));
                for (InCondition c : all)
                    if (!witness_replays(m, c, u, check_in(m, t, c, u)))
                        return fail("implications-in", i,
                                    std::string("witness does not replay for ") + tag_of(c));
            }
    }
    return ok("implications-in", samples);
}

SuiteResult obs4(std::size_t samples, std::uint64_t seed) {
    Rng rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
        Game g = gen::random_game(rng);
        CompleteModel m = gen::random_complete(
            rng, g, {.coverage = rng.flip(0.7) ? Coverage::Cautious : Coverage::Free});
        auto res = co2in(m);
        const UtilityPair u = utility_pair_of(g);
        for (const auto& [src, members] : res.members)
            for (const auto& a : members)
                if (!belief_equal(res.model.belief_of(a), res.model.belief_of(members.front())))
                    return fail("obs4", i, "redundancy (Obs 4.1) broken for " + src);
        for (Player p : {Player::P1, Player::P2})
            for (const auto& t : res.model.types_of(p)) {
                if (!believes_rationality_in(res.model, t).holds())
                    return fail("obs4", i, "rationality (Obs 4.2) broken\n" + dump(m, t));
                if (!better_supported_nearer(res.model, t, u).holds())
                    return fail("obs4", i, "better-supported (Obs 4.3) broken\n" + dump(m, t));
            }
    }
    return ok("obs4", samples);
}

SuiteResult roundtrip_iso(std::size_t samples, std::uint64_t seed) {
    Rng rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
        Game g = gen::random_game(rng);
        Coverage cov = rng.flip(0.6) ? Coverage::Cautious : Coverage::Free;
        CompleteModel m;
        try {
            m = gen::random_complete(rng, g,
                                     {.coverage = cov, .point_mass = false, .distinct_beliefs = true});
        } catch (const std::exception&) {
            --i;
            continue;
        }
        auto built = co2in(m);
        auto back = in2co(built.model, g);
        std::map<std::string, std::string> mapping;
        for (const auto& [src, members] : built.members)
            mapping[src] = back.class_of.at(members.front());
        if (!isomorphic_complete(m, back.model, mapping))
            return fail("roundtrip-iso", i, "round trip not isomorphic\n" + serialize(m));
    }
    return ok("roundtrip-iso", samples);
}

// Exact brute-force weak/strict dominance over mixtures of at most two
// choices: the feasible set in the mixing weight is cut out by affine
// inequalities, so testing the critical points and their midpoints decides.
bool brute_force_dominated(const Game& game, Player player, const std::string& choice,
                           const Restriction& restriction, bool strict) {
    const Matrix& u = game.utilities[index_of(player)];
    const std::size_t cand = *game.form.choice_index(player, choice);
    std::vector<std::size_t> mix;
    for (const auto& c : restriction.of(player))
        if (c != choice) mix.push_back(*game.form.choice_index(player, c));
    std::vector<std::size_t> cols;
    for (const auto& c : restriction.of(opponent_of(player)))
        cols.push_back(*game.form.choice_index(opponent_of(player), c));
    if (mix.empty()) return false;
    if (mix.size() > 2) throw std::invalid_argument("brute force supports at most 2 mixers");

    auto feasible = [&](const std::vector<Rational>& diffs) {
        bool has_strict = false;
        for (const auto& d : diffs) {
            if (d < 0) return false;
            if (d > 0) has_strict = true;
        }
        return strict ? std::all_of(diffs.begin(), diffs.end(),
                                    [](const Rational& d) { return d > 0; })
                      : has_strict;
    };

    if (mix.size() == 1) {
        std::vector<Rational> diffs;
        for (std::size_t col : cols) diffs.push_back(u[mix[0]][col] - u[cand][col]);
        return feasible(diffs);
    }

    // lambda on mix[0], 1-lambda on mix[1].
    auto diffs_at = [&](const Rational& lam) {
        std::vector<Rational> out;
        for (std::size_t col : cols)
            out.push_back(lam * u[mix[0]][col] + (1 - lam) * u[mix[1]][col] - u[cand][col]);
        return out;
    };
    std::set<Rational> points{Rational(0), Rational(1)};
    for (std::size_t col : cols) {
        const Rational a = u[mix[0]][col] - u[mix[1]][col];
        const Rational b = u[mix[1]][col] - u[cand][col];
        if (a != 0) {
            Rational root = -b / a;
            if (root >= 0 && root <= 1) points.insert(root);
        }
    }
    std::vector<Rational> candidates(points.begin(), points.end());
    const std::size_t base = candidates.size();
    for (std::size_t k = 0; k + 1 < base; ++k)
        candidates.push_back((candidates[k] + candidates[k + 1]) / 2);
    for (const auto& lam : candidates)
        if (feasible(diffs_at(lam))) return true;
    return false;
}

Restriction random_restriction(Rng& rng, const Game& g, Player player, const std::string& pin) {
    Restriction r = full_restriction(g.form);
    for (Player p : {Player::P1, Player::P2}) {
        std::vector<std::string> keep;
        for (const auto& c : r.of(p)) {
            if (p == player && c == pin) {
                keep.push_back(c);
                continue;
            }
            if (rng.flip(0.7)) keep.push_back(c);
        }
        if (keep.empty()) keep.push_back(r.of(p).front());
        r.sets[index_of(p)] = std::move(keep);
    }
    return r;
}

SuiteResult solver_bf(std::size_t samples, std::uint64_t seed) {
    Rng rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
        Game g = gen::random_game(rng, {.lo = -3, .hi = 5, .fractions = rng.flip(0.3)});
        for (Player p : {Player::P1, Player::P2})
            for (const auto& c : g.choices_of(p)) {
                const Restriction full = full_restriction(g.form);
                const bool lp_weak = weakly_dominated(g, p, c, full).has_value();
                if (lp_weak != brute_force_dominated(g, p, c, full, false))
                    return fail("solver-bf", i, "weak dominance mismatch\n" + serialize(g));
                const bool lp_strict = strictly_dominated(g, p, c, full).has_value();
                if (lp_strict != brute_force_dominated(g, p, c, full, true))
                    return fail("solver-bf", i, "strict dominance mismatch\n" + serialize(g));
                Restriction sub = random_restriction(rng, g, p, c);
                if (weakly_dominated(g, p, c, sub).has_value() !=
                    brute_force_dominated(g, p, c, sub, false))
                    return fail("solver-bf", i, "restricted weak dominance mismatch\n" + serialize(g));
            }
    }
    return ok("solver-bf", samples);
}

SuiteResult refinement_chain(std::size_t samples, std::uint64_t seed) {
    Rng rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
        Game g = gen::random_game(rng, {.lo = -3, .hi = 5, .fractions = rng.flip(0.3)});
        const auto ladder = iewds(g);
        const Restriction df = dekel_fudenberg(g);
        for (Player p : {Player::P1, Player::P2}) {
            for (const auto& c : ladder.back().of(p))
                if (!df.contains(p, c))
                    return fail("refinement-chain", i,
                                "IEWDS fixpoint not inside the Dekel-Fudenberg set\n" + serialize(g));
            for (std::size_t k = 1; k < ladder.size(); ++k)
                for (const auto& c : ladder[k].of(p))
                    if (!ladder[k - 1].contains(p, c))
                        return fail("refinement-chain", i, "survivor ladder not nested");
        }
        if (ladder.size() - 1 > g.choices_of(Player::P1).size() + g.choices_of(Player::P2).size())
            return fail("refinement-chain", i, "round count above bound");
        if (!(iewds(g) == ladder)) return fail("refinement-chain", i, "ladder not deterministic");
    }
    return ok("refinement-chain", samples);
}

using SuiteFn = SuiteResult (*)(std::size_t, std::uint64_t);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> reg = {
        {"lemma4.1", lemma41},
        {"lemma4.2", lemma42},
        {"lemma4.3", lemma43},
        {"lemma4.4", lemma44},
        {"lemma4.5", lemma45},
        {"lemma4.6", lemma46},
        {"lemma4.7", lemma47},
        {"lemma4.8", lemma48},
        {"lemma4.9", lemma49},
        {"lemma5.2", lemma52},
        {"lemma6.1", lemma61},
        {"io-roundtrip", io_roundtrip},
        {"lexpref-order", lexpref_order},
        {"ladder-props", ladder_props},
        {"metric-props", metric_props},
        {"implications-co", implications_co},
        {"implications-in", implications_in},
        {"obs4", obs4},
        {"roundtrip-iso", roundtrip_iso},
        {"solver-bf", solver_bf},
        {"refinement-chain", refinement_chain},
    };
    return reg;
}

}  // namespace

std::vector<std::string> suite_names() {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
}

SuiteResult run_suite(const std::string& name, std::size_t samples, std::uint64_t seed) {
    for (const auto& [n, fn] : registry())
        if (n == name) return fn(samples, seed);
    return {name, 0, false, "unknown suite"};
}

}  // namespace lexiepist::suites
