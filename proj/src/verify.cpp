#include "lexiepist/verify.hpp"

#include <algorithm>

namespace lexiepist {

std::optional<Theorem> theorem_from_tag(std::string_view tag) {
    if (tag == "thm41") return Theorem::Thm41;
    if (tag == "thm42") return Theorem::Thm42;
    if (tag == "thm43") return Theorem::Thm43;
    if (tag == "thm44") return Theorem::Thm44;
    if (tag == "prop51") return Theorem::Prop51;
    return std::nullopt;
}

const char* tag_of(Theorem t) {
    switch (t) {
        case Theorem::Thm41: return "thm41";
        case Theorem::Thm42: return "thm42";
        case Theorem::Thm43: return "thm43";
        case Theorem::Thm44: return "thm44";
        case Theorem::Prop51: return "prop51";
    }
    return "?";
}

namespace {

struct CoBundleItem {
    CoCondition condition;
    const char* lemma;  // transport lemma exercised when this lands on the target side
};
struct InBundleItem {
    InCondition condition;
    const char* lemma;
};

// Complete-side and incomplete-side condition bundles per theorem, each item
// tagged with the transport lemma that moves it across the construction.
struct TheoremSpec {
    std::vector<CoBundleItem> co;   // checked as common full belief
    std::vector<InBundleItem> in;   // checked as common full belief
    bool co_common_assumption = false;
    bool in_common_assumption = false;
};

TheoremSpec spec_of(Theorem t) {
    switch (t) {
        case Theorem::Thm41:
            return {{{CoCondition::Caution, "lemma4.3"},
                     {CoCondition::PrimaryBeliefRationality, "lemma4.4"}},
                    {{InCondition::Caution, "lemma4.1"},
                     {InCondition::PrimaryNearestU, "lemma4.2"},
                     {InCondition::BestSupportedNearest, "obs4.3"}},
                    false,
                    false};
        case Theorem::Thm42:
            return {{{CoCondition::Caution, "lemma4.3"},
                     {CoCondition::RespectPreferences, "lemma4.6"}},
                    {{InCondition::Caution, "lemma4.1"},
                     {InCondition::UCentered, "lemma4.5"},
                     {InCondition::BetterSupportedNearer, "obs4.3"}},
                    false,
                    false};
        case Theorem::Thm43:
            return {{{CoCondition::Caution, "lemma4.3"},
                     {CoCondition::PrimaryBeliefRationality, "lemma4.8"}},
                    {{InCondition::Caution, "lemma4.1"},
                     {InCondition::BeliefRationality, "obs4.2"},
                     {InCondition::PrimaryU, "lemma4.7"}},
                    false,
                    false};
        case Theorem::Thm44:
            return {{{CoCondition::Caution, "lemma4.3"}},
                    {{InCondition::Caution, "lemma4.1"},
                     {InCondition::BeliefRationality, "obs4.2"}},
                    true,
                    true};
        case Theorem::Prop51:
            return {{{CoCondition::WeakCaution, "lemma5.2"},
                     {CoCondition::PrimaryBeliefRationality, "lemma4.8"}},
                    {{InCondition::WeakCaution, "lemma5.1"},
                     {InCondition::BeliefRationality, "obs4.2"},
                     {InCondition::PrimaryU, "lemma4.7"}},
                    false,
                    false};
    }
    return {};
}

bool contains(const std::vector<std::string>& v, const std::string& x) {
    return std::find(v.begin(), v.end(), x) != v.end();
}

// A type drops out of a fixpoint either on its own verdict or through a
// deemed type; the witness cites whichever applies so failed reports always
// carry replayable evidence.
template <class M>
Witness fixpoint_witness(const M& m, const std::string& type,
                         const std::vector<std::string>& fixpoint) {
    for (const auto& d : deemed_possible_types(m, type))
        if (!contains(fixpoint, d)) return {"deemed-type-outside-fixpoint", {{"", d}}, {}, {}};
    return {"type-outside-fixpoint", {{"", type}}, {}, {}};
}

std::vector<TraceEntry> check_co_side(const CompleteModel& m, const std::string& type,
                                      const std::string& choice, const TheoremSpec& spec,
                                      bool as_conclusion) {
    std::vector<TraceEntry> out;
    for (const auto& item : spec.co) {
        const auto cfb = common_full_belief_co(m, item.condition);
        TraceEntry e;
        e.lemma = as_conclusion ? item.lemma : "hypothesis";
        e.detail = std::string("cfb-") + tag_of(item.condition) + " @ " + type;
        e.holds = contains(cfb, type);
        if (!e.holds) {
            ConditionVerdict v = check_co(m, type, item.condition);
            e.witness = v.witness ? *v.witness : fixpoint_witness(m, type, cfb);
        }
        out.push_back(std::move(e));
    }
    if (spec.co_common_assumption) {
        const auto common = common_assumption_rationality(m);
        TraceEntry e;
        e.lemma = as_conclusion ? "lemma4.9" : "hypothesis";
        e.detail = "common-assumption-rationality @ " + type;
        e.holds = contains(common, type);
        if (!e.holds) {
            ConditionVerdict v = assumes_rationality_nfold(m, type, 1);
            e.witness = v.witness ? *v.witness : fixpoint_witness(m, type, common);
        }
        out.push_back(std::move(e));
    }
    {
        TraceEntry e;
        e.lemma = "optimality";
        e.detail = choice + " optimal for " + type;
        const Player p = *m.player_of(type);
        e.holds = is_optimal(m.game.form, m.belief_of(type), m.game.utility_of(p), choice);
        if (!e.holds) e.witness = Witness{"choice-not-optimal", {{choice, type}}, {}, {}};
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<TraceEntry> check_in_side(const IncompleteModel& m, const std::string& type,
                                      const std::string& choice, const UtilityPair& u,
                                      const TheoremSpec& spec, bool as_conclusion) {
    std::vector<TraceEntry> out;
    {
        // All theorems pin the designated type's own utility to u_i.
        TraceEntry e;
        e.lemma = "construction";
        e.detail = "w(" + type + ") = u";
        const Player p = *m.player_of(type);
        e.holds = m.utility_of(type).values == u[index_of(p)].values;
        if (!e.holds) e.witness = Witness{"type-utility-differs-from-u", {{"", type}}, {}, {}};
        out.push_back(std::move(e));
    }
    for (const auto& item : spec.in) {
        const auto cfb = common_full_belief_in(m, item.condition, u);
        TraceEntry e;
        e.lemma = as_conclusion ? item.lemma : "hypothesis";
        e.detail = std::string("cfb-") + tag_of(item.condition) + " @ " + type;
        e.holds = contains(cfb, type);
        if (!e.holds) {
            ConditionVerdict v = check_in(m, type, item.condition, u);
            e.witness = v.witness ? *v.witness : fixpoint_witness(m, type, cfb);
        }
        out.push_back(std::move(e));
    }
    if (spec.in_common_assumption) {
        const auto common = common_assumption_prior_u(m, u);
        TraceEntry e;
        e.lemma = as_conclusion ? "lemma4.9" : "hypothesis";
        e.detail = "common-assumption-prior-u @ " + type;
        e.holds = contains(common, type);
        if (!e.holds) {
            ConditionVerdict v = assumes_prior_u_good_nfold(m, type, u, 1);
            e.witness = v.witness ? *v.witness : fixpoint_witness(m, type, common);
        }
        out.push_back(std::move(e));
    }
    {
        TraceEntry e;
        e.lemma = "optimality";
        e.detail = choice + " optimal for " + type;
        e.holds = is_optimal(m.form, m.belief_of(type), m.utility_of(type), choice);
        if (!e.holds) e.witness = Witness{"choice-not-optimal", {{choice, type}}, {}, {}};
        out.push_back(std::move(e));
    }
    return out;
}

bool all_hold(const std::vector<TraceEntry>& entries) {
    for (const auto& e : entries)
        if (!e.holds) return false;
    return true;
}

}  // namespace

VerifyReport run_verify(Theorem thm, const CompleteModel& co, const std::string& type,
                        const std::string& choice, const UtilityPair& u,
                        const std::optional<IncompleteModel>& in_model,
                        const std::optional<std::string>& in_type) {
    const TheoremSpec spec = spec_of(thm);
    VerifyReport report;
    report.theorem = thm;
    report.choice = choice;

    Co2InResult constructed = co2in(co);

    report.only_if.direction = "only-if";
    report.only_if.source_type = type;
    report.only_if.target_type = constructed.members.at(type).front();
    report.only_if.hypothesis = check_co_side(co, type, choice, spec, false);
    report.only_if.conclusion = check_in_side(constructed.model, report.only_if.target_type,
                                              choice, u, spec, true);
    report.only_if.pass = all_hold(report.only_if.hypothesis) && all_hold(report.only_if.conclusion);

    const IncompleteModel& source_in = in_model ? *in_model : constructed.model;
    const std::string theta = in_type ? *in_type : constructed.members.at(type).front();

    In2CoResult quotient = in2co(source_in, co.game);

    report.if_dir.direction = "if";
    report.if_dir.source_type = theta;
    report.if_dir.target_type = quotient.class_of.at(theta);
    report.if_dir.hypothesis = check_in_side(source_in, theta, choice, u, spec, false);
    report.if_dir.conclusion =
        check_co_side(quotient.model, report.if_dir.target_type, choice, spec, true);
    report.if_dir.pass = all_hold(report.if_dir.hypothesis) && all_hold(report.if_dir.conclusion);

    report.verdict = report.only_if.pass && report.if_dir.pass;
    return report;
}

}  // namespace lexiepist
