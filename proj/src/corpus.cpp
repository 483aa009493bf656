#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <regex>
#include <sstream>

#include "lexiepist/conditions_co.hpp"
#include "lexiepist/conditions_in.hpp"
#include "lexiepist/io.hpp"
#include "lexiepist/suites.hpp"
#include "lexiepist/transform.hpp"
#include "lexiepist/verify.hpp"

#ifndef LEXIEPIST_DEFAULT_CORPUS
#define LEXIEPIST_DEFAULT_CORPUS ""
#endif

namespace lexiepist::suites {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

std::string verdict_word(const ConditionVerdict& v) {
    switch (v.status) {
        case ConditionVerdict::Status::Holds: return "holds";
        case ConditionVerdict::Status::Fails: return "fails";
        case ConditionVerdict::Status::Precondition: return "precondition";
    }
    return "?";
}

struct FixtureContext {
    std::string dir;
    std::size_t samples;

    std::string path(const std::string& file) const { return dir + "/" + file; }
    Game game(const json& e) const { return parse_game(read_file(path(e.at("game")))); }
    UtilityPair reference(const json& e, const Game& g) const {
        if (e.contains("u")) return utility_pair_of(parse_game(read_file(path(e.at("u")))));
        return utility_pair_of(g);
    }
};

// Literal evaluation of one manifest entry; returns (actual, detail).
std::pair<std::string, std::string> evaluate(const FixtureContext& ctx, const json& e) {
    const std::string kind = e.at("kind");
    if (kind == "check") {
        const Game g = ctx.game(e);
        const AnyModel m = parse_model(read_file(ctx.path(e.at("model"))), g);
        const std::string type = e.at("type");
        const std::string tag = e.at("condition");
        const std::size_t fold = e.value("fold", 1);
        ConditionVerdict v;
        if (std::holds_alternative<CompleteModel>(m)) {
            const auto& cm = std::get<CompleteModel>(m);
            if (tag == "assume-rationality")
                v = assumes_rationality_nfold(cm, type, fold);
            else if (auto c = co_condition_from_tag(tag))
                v = check_co(cm, type, *c);
            else
                throw std::runtime_error("unknown complete condition '" + tag + "'");
        } else {
            const auto& im = std::get<IncompleteModel>(m);
            const UtilityPair u = ctx.reference(e, g);
            if (tag == "assume-prior-u-good")
                v = assumes_prior_u_good_nfold(im, type, u, fold);
            else if (auto c = in_condition_from_tag(tag))
                v = check_in(im, type, *c, u);
            else
                throw std::runtime_error("unknown incomplete condition '" + tag + "'");
        }
        std::string detail;
        if (v.witness && !v.witness->pairs.empty()) {
            detail = "witness (" + v.witness->pairs[0].choice + "," + v.witness->pairs[0].type + ")";
            if (e.contains("expect_witness")) {
                const auto& w = e.at("expect_witness");
                if (v.witness->pairs[0].choice != w.at("choice") ||
                    v.witness->pairs[0].type != w.at("type"))
                    return {"witness-mismatch", detail};
            }
        } else if (e.contains("expect_witness")) {
            return {"witness-missing", ""};
        }
        return {verdict_word(v), detail};
    }
    if (kind == "common") {
        const Game g = ctx.game(e);
        const AnyModel m = parse_model(read_file(ctx.path(e.at("model"))), g);
        const std::string tag = e.at("condition");
        std::vector<std::string> types;
        if (std::holds_alternative<CompleteModel>(m)) {
            const auto& cm = std::get<CompleteModel>(m);
            if (tag == "assume-rationality")
                types = common_assumption_rationality(cm);
            else
                types = common_full_belief_co(cm, *co_condition_from_tag(tag));
        } else {
            const auto& im = std::get<IncompleteModel>(m);
            const UtilityPair u = ctx.reference(e, g);
            if (tag == "assume-prior-u-good")
                types = common_assumption_prior_u(im, u);
            else
                types = common_full_belief_in(im, *in_condition_from_tag(tag), u);
        }
        std::sort(types.begin(), types.end());
        std::string joined;
        for (const auto& t : types) joined += (joined.empty() ? "" : ",") + t;
        return {joined, ""};
    }
    if (kind == "optimal") {
        const Game g = ctx.game(e);
        const AnyModel m = parse_model(read_file(ctx.path(e.at("model"))), g);
        const std::string type = e.at("type");
        std::vector<std::string> opt;
        if (std::holds_alternative<CompleteModel>(m)) {
            const auto& cm = std::get<CompleteModel>(m);
            const Player p = *cm.player_of(type);
            opt = optimal_choices(cm.game.form, cm.belief_of(type), cm.game.utility_of(p));
        } else {
            const auto& im = std::get<IncompleteModel>(m);
            opt = optimal_choices(im.form, im.belief_of(type), im.utility_of(type));
        }
        std::sort(opt.begin(), opt.end());
        std::string joined;
        for (const auto& c : opt) joined += (joined.empty() ? "" : ",") + c;
        return {joined, ""};
    }
    if (kind == "solve-df" || kind == "solve-iewds") {
        const Game g = ctx.game(e);
        const Restriction r = kind == "solve-df" ? dekel_fudenberg(g) : iewds(g).back();
        std::string out;
        for (Player p : {Player::P1, Player::P2}) {
            out += (p == Player::P1 ? "1:" : ";2:");
            for (std::size_t i = 0; i < r.of(p).size(); ++i)
                out += (i ? "," : "") + r.of(p)[i];
        }
        return {out, ""};
    }
    if (kind == "ladder") {
        const Game g = ctx.game(e);
        const Player p = *player_from_label(e.at("player").get<std::string>());
        const ChoiceBelief cb = parse_choice_belief(read_file(ctx.path(e.at("belief"))), g.form, p);
        std::vector<LevelDist> levels;
        for (const auto& level : cb) {
            LevelDist l;
            for (const auto& [c, prob] : level)
                if (prob > 0) l.emplace_back(*g.form.choice_index(opponent_of(p), c), prob);
            levels.push_back(std::move(l));
        }
        UtilityLadder ladder = utility_ladder(g.form, g.utility_of(p), levels);
        json rungs = json::array();
        for (const auto& rung : ladder.rungs) {
            json mat = json::array();
            for (const auto& row : rung.values) {
                json r = json::array();
                for (const auto& cell : row) r.push_back(rational_to_string(cell));
                mat.push_back(std::move(r));
            }
            rungs.push_back(std::move(mat));
        }
        return {rungs.dump(), ""};
    }
    if (kind == "verify") {
        const Game g = ctx.game(e);
        const auto co = std::get<CompleteModel>(parse_model(read_file(ctx.path(e.at("co"))), g));
        std::optional<IncompleteModel> in;
        std::optional<std::string> in_type;
        if (e.contains("in")) {
            in = std::get<IncompleteModel>(parse_model(read_file(ctx.path(e.at("in"))), g.form));
            in_type = e.at("in_type").get<std::string>();
        }
        const UtilityPair u = ctx.reference(e, g);
        VerifyReport rep = run_verify(*theorem_from_tag(e.at("theorem").get<std::string>()), co,
                                      e.at("type"), e.at("choice"), u, in, in_type);
        std::string detail;
        for (const auto* dir : {&rep.only_if, &rep.if_dir})
            for (const auto& entry : dir->hypothesis)
                if (!entry.holds) detail += dir->direction + " hypothesis: " + entry.detail + "; ";
        for (const auto* dir : {&rep.only_if, &rep.if_dir})
            for (const auto& entry : dir->conclusion)
                if (!entry.holds) detail += dir->direction + " conclusion: " + entry.detail + "; ";
        return {rep.verdict ? "pass" : "fail", detail};
    }
    throw std::runtime_error("unknown manifest kind '" + kind + "'");
}

}  // namespace

std::string default_corpus_dir() {
    if (const char* env = std::getenv("LEXIEPIST_CORPUS"); env && *env) return env;
    return LEXIEPIST_DEFAULT_CORPUS;
}

std::vector<CorpusEntry> run_corpus(const CorpusOptions& opts) {
    const std::string dir = opts.dir.empty() ? default_corpus_dir() : opts.dir;
    std::vector<CorpusEntry> out;
    std::optional<std::regex> filter;
    if (!opts.filter.empty()) filter.emplace(opts.filter);
    auto matches = [&](const std::string& name) {
        return !filter || std::regex_search(name, *filter);
    };

    const json manifest = json::parse(read_file(dir + "/manifest.json"));
    FixtureContext ctx{dir, opts.samples};
    for (const auto& e : manifest.at("entries")) {
        const std::string name = e.at("name");
        if (!matches(name)) continue;
        CorpusEntry entry;
        entry.name = name;
        const bool disputed = e.value("disputed", false);
        try {
            auto [actual, detail] = evaluate(ctx, e);
            const std::string want = opts.strict_paper && disputed
                                         ? e.at("strict_expect").get<std::string>()
                                         : e.at("expect").get<std::string>();
            const bool match = actual == want;
            entry.detail = detail.empty() ? "got " + actual : "got " + actual + " (" + detail + ")";
            if (match) {
                entry.status = disputed ? "pass (disputed fixture)" : "pass";
                entry.failed = false;
            } else {
                entry.status = opts.strict_paper && disputed ? "fail (strict-paper)" : "fail";
                entry.failed = true;
            }
            if (disputed && !opts.strict_paper)
                entry.detail += "; printed expectation: " + e.at("strict_expect").get<std::string>();
        } catch (const std::exception& ex) {
            entry.status = "fail";
            entry.detail = std::string("error: ") + ex.what();
            entry.failed = true;
        }
        out.push_back(std::move(entry));
    }

    for (const auto& name : suite_names()) {
        const std::string entry_name = "suite:" + name;
        if (!matches(entry_name)) continue;
        CorpusEntry entry;
        entry.name = entry_name;
        SuiteResult r = run_suite(name, opts.samples);
        entry.status = r.pass ? "pass" : "fail";
        entry.failed = !r.pass;
        entry.detail = r.pass ? std::to_string(r.samples) + " samples" : r.detail;
        out.push_back(std::move(entry));
    }
    return out;
}

}  // namespace lexiepist::suites
