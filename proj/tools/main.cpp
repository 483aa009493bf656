#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "lexiepist/conditions_co.hpp"
#include "lexiepist/conditions_in.hpp"
#include "lexiepist/io.hpp"
#include "lexiepist/metric.hpp"
#include "lexiepist/suites.hpp"
#include "lexiepist/transform.hpp"
#include "lexiepist/verify.hpp"

using namespace lexiepist;
using nlohmann::json;

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitInputError = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(ParseError::Kind::Syntax, path, "cannot open file");
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

json witness_to_json(const Witness& w) {
    json out;
    out["note"] = w.note;
    json pairs = json::array();
    for (const auto& p : w.pairs) pairs.push_back({{"choice", p.choice}, {"type", p.type}});
    out["pairs"] = std::move(pairs);
    if (w.level) out["level"] = *w.level;
    if (!w.values.empty()) {
        json values = json::array();
        for (const auto& v : w.values) values.push_back(rational_to_string(v));
        out["values"] = std::move(values);
    }
    return out;
}

json verdict_to_json(const ConditionVerdict& v) {
    json out;
    switch (v.status) {
        case ConditionVerdict::Status::Holds: out["status"] = "holds"; break;
        case ConditionVerdict::Status::Fails: out["status"] = "fails"; break;
        case ConditionVerdict::Status::Precondition: out["status"] = "precondition"; break;
    }
    out["holds"] = v.holds();
    if (v.witness) out["witness"] = witness_to_json(*v.witness);
    return out;
}

json trace_to_json(const std::vector<TraceEntry>& entries) {
    json out = json::array();
    for (const auto& e : entries) {
        json item;
        item["lemma"] = e.lemma;
        item["detail"] = e.detail;
        item["holds"] = e.holds;
        if (e.witness) item["witness"] = witness_to_json(*e.witness);
        out.push_back(std::move(item));
    }
    return out;
}

json report_to_json(const VerifyReport& r) {
    json out;
    out["theorem"] = tag_of(r.theorem);
    out["choice"] = r.choice;
    for (const auto* dir : {&r.only_if, &r.if_dir}) {
        json d;
        d["source_type"] = dir->source_type;
        d["target_type"] = dir->target_type;
        d["hypothesis"] = trace_to_json(dir->hypothesis);
        d["conclusion"] = trace_to_json(dir->conclusion);
        d["pass"] = dir->pass;
        out[dir->direction == "only-if" ? "only_if" : "if"] = std::move(d);
    }
    out["verdict"] = r.verdict;
    if (r.disputed) out["disputed"] = true;
    return out;
}

struct ModelInput {
    Game game;
    AnyModel model;
    UtilityPair u;
};

ModelInput load_model(const std::string& game_path, const std::string& model_path,
                      const std::string& u_path) {
    ModelInput in{parse_game(read_file(game_path)), CompleteModel{}, {}};
    in.model = parse_model(read_file(model_path), in.game);
    in.u = u_path.empty() ? utility_pair_of(in.game)
                          : utility_pair_of(parse_game(read_file(u_path)));
    return in;
}

Restriction parse_restriction(const Game& g, const std::vector<std::string>& specs) {
    Restriction r = full_restriction(g.form);
    for (const auto& spec : specs) {
        auto eq = spec.find('=');
        if (eq == std::string::npos)
            throw ParseError(ParseError::Kind::Syntax, "--restrict",
                             "expected <player>=<choice,choice,...>");
        auto player = player_from_label(spec.substr(0, eq));
        if (!player)
            throw ParseError(ParseError::Kind::Syntax, "--restrict", "player must be 1 or 2");
        std::vector<std::string> keep;
        std::stringstream ss(spec.substr(eq + 1));
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) keep.push_back(item);
        for (const auto& c : keep)
            if (!g.form.choice_index(*player, c))
                throw ParseError(ParseError::Kind::Semantic, "--restrict",
                                 "unknown choice '" + c + "'");
        if (keep.empty())
            throw ParseError(ParseError::Kind::Semantic, "--restrict", "empty restriction");
        r.sets[index_of(*player)] = std::move(keep);
    }
    return r;
}

json restriction_to_json(const Restriction& r) {
    return json{{"1", r.of(Player::P1)}, {"2", r.of(Player::P2)}};
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (const auto& row : m) {
        json r = json::array();
        for (const auto& v : row) r.push_back(rational_to_string(v));
        rows.push_back(std::move(r));
    }
    return rows;
}

void emit(const json& out) { std::cout << out.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for lexicographic epistemic models"};
    app.require_subcommand(1);

    std::string game_path, model_path, u_path, type_id, condition, out_path;
    std::size_t fold = 1;

    auto* check = app.add_subcommand("check", "decide an epistemic condition for one type");
    check->add_option("--game", game_path)->required();
    check->add_option("--model", model_path)->required();
    check->add_option("--u", u_path, "reference utilities (game file); defaults to --game");
    check->add_option("--type", type_id)->required();
    check->add_option("--condition", condition)->required();
    check->add_option("--fold", fold, "fold count for assumption conditions");

    auto* common = app.add_subcommand("common", "types expressing common full belief / assumption");
    common->add_option("--game", game_path)->required();
    common->add_option("--model", model_path)->required();
    common->add_option("--u", u_path);
    common->add_option("--condition", condition)->required();

    std::string direction, player_label, belief_path;
    auto* transform = app.add_subcommand("transform", "model constructions");
    transform->add_option("mode", direction, "co2in|in2co|cautious-ext|ladder")->required();
    transform->add_option("--game", game_path)->required();
    transform->add_option("--model", model_path);
    transform->add_option("--type", type_id);
    transform->add_option("--utility", player_label, "player whose utility seeds the ladder");
    transform->add_option("--belief", belief_path, "choice-belief file for the ladder");
    transform->add_option("-o,--out", out_path);

    std::string proc, choice;
    std::vector<std::string> restrict_specs;
    auto* solve = app.add_subcommand("solve", "elimination solvers and dominance checks");
    solve->add_option("proc", proc, "df|iewds|weak-dom")->required();
    solve->add_option("--game", game_path)->required();
    solve->add_option("--player", player_label);
    solve->add_option("--choice", choice);
    solve->add_option("--restrict", restrict_specs, "<player>=<choices,...>; repeatable");

    std::string metric, other_path;
    auto* distance = app.add_subcommand("distance", "distance between utility functions");
    distance->add_option("--metric", metric, "euclid2|ordinal")->required();
    distance->add_option("--game", game_path, "utility source A")->required();
    distance->add_option("--other", other_path, "utility source B")->required();
    distance->add_option("--player", player_label)->required();
    distance->add_option("--belief", belief_path, "choice-belief file (ordinal only)");

    std::string theorem, co_path, in_path, in_type;
    bool construct = false, strict_paper = false;
    auto* verify = app.add_subcommand("verify", "run a characterization theorem on witnesses");
    verify->add_option("theorem", theorem, "thm41|thm42|thm43|thm44|prop51")->required();
    verify->add_option("--game", game_path)->required();
    verify->add_option("--co", co_path, "complete model")->required();
    verify->add_option("--in", in_path, "incomplete model (omit with --construct)");
    verify->add_option("--in-type", in_type);
    verify->add_flag("--construct", construct, "synthesize the incomplete side via co2in");
    verify->add_option("--type", type_id)->required();
    verify->add_option("--choice", choice)->required();
    verify->add_option("--u", u_path);

    std::string filter, corpus_dir;
    std::size_t samples = 200;
    auto* corpus = app.add_subcommand("corpus", "run every fixture expectation and property suite");
    corpus->add_option("--filter", filter, "regex over entry names");
    corpus->add_option("--samples", samples, "samples per property suite");
    corpus->add_flag("--strict-paper", strict_paper,
                     "score disputed fixtures against their printed expectations");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInputError;
    }

    try {
        if (check->parsed()) {
            ModelInput in = load_model(game_path, model_path, u_path);
            ConditionVerdict v;
            if (std::holds_alternative<CompleteModel>(in.model)) {
                const auto& m = std::get<CompleteModel>(in.model);
                if (!m.player_of(type_id))
                    throw ParseError(ParseError::Kind::Semantic, "--type", "unknown type");
                if (condition == "assume-rationality")
                    v = assumes_rationality_nfold(m, type_id, fold);
                else if (auto c = co_condition_from_tag(condition))
                    v = check_co(m, type_id, *c);
                else
                    throw ParseError(ParseError::Kind::Semantic, "--condition",
                                     "unknown condition '" + condition + "'");
            } else {
                const auto& m = std::get<IncompleteModel>(in.model);
                if (!m.player_of(type_id))
                    throw ParseError(ParseError::Kind::Semantic, "--type", "unknown type");
                if (condition == "assume-prior-u-good")
                    v = assumes_prior_u_good_nfold(m, type_id, in.u, fold);
                else if (auto c = in_condition_from_tag(condition))
                    v = check_in(m, type_id, *c, in.u);
                else
                    throw ParseError(ParseError::Kind::Semantic, "--condition",
                                     "unknown condition '" + condition + "'");
            }
            json out = verdict_to_json(v);
            out["condition"] = condition;
            out["type"] = type_id;
            emit(out);
            return v.holds() ? kExitHolds : kExitFails;
        }

        if (common->parsed()) {
            ModelInput in = load_model(game_path, model_path, u_path);
            std::vector<std::string> types;
            if (std::holds_alternative<CompleteModel>(in.model)) {
                const auto& m = std::get<CompleteModel>(in.model);
                if (condition == "assume-rationality")
                    types = common_assumption_rationality(m);
                else if (auto c = co_condition_from_tag(condition))
                    types = common_full_belief_co(m, *c);
                else
                    throw ParseError(ParseError::Kind::Semantic, "--condition",
                                     "unknown condition '" + condition + "'");
            } else {
                const auto& m = std::get<IncompleteModel>(in.model);
                if (condition == "assume-prior-u-good")
                    types = common_assumption_prior_u(m, in.u);
                else if (auto c = in_condition_from_tag(condition))
                    types = common_full_belief_in(m, *c, in.u);
                else
                    throw ParseError(ParseError::Kind::Semantic, "--condition",
                                     "unknown condition '" + condition + "'");
            }
            emit(json{{"condition", condition}, {"types", types}});
            return kExitHolds;
        }

        if (transform->parsed()) {
            const Game g = parse_game(read_file(game_path));
            std::string result;
            if (direction == "ladder") {
                auto player = player_from_label(player_label);
                if (!player)
                    throw ParseError(ParseError::Kind::Semantic, "--utility", "player must be 1 or 2");
                if (belief_path.empty())
                    throw ParseError(ParseError::Kind::Semantic, "--belief", "required for ladder");
                ChoiceBelief cb = parse_choice_belief(read_file(belief_path), g.form, *player);
                std::vector<LevelDist> levels;
                for (const auto& level : cb) {
                    LevelDist l;
                    for (const auto& [c, prob] : level)
                        if (prob > 0)
                            l.emplace_back(*g.form.choice_index(opponent_of(*player), c), prob);
                    levels.push_back(std::move(l));
                }
                UtilityLadder ladder = utility_ladder(g.form, g.utility_of(*player), levels);
                json out;
                out["partition"] = ladder.partition.classes;
                json rungs = json::array();
                for (const auto& rung : ladder.rungs) rungs.push_back(matrix_to_json(rung.values));
                out["rungs"] = std::move(rungs);
                result = out.dump(2) + "\n";
            } else if (direction == "co2in") {
                const auto m =
                    std::get<CompleteModel>(parse_model(read_file(model_path), g));
                result = serialize(co2in(m).model) + "\n";
            } else if (direction == "in2co") {
                const auto m =
                    std::get<IncompleteModel>(parse_model(read_file(model_path), g.form));
                result = serialize(in2co(m, g).model) + "\n";
            } else if (direction == "cautious-ext") {
                const auto m =
                    std::get<CompleteModel>(parse_model(read_file(model_path), g));
                if (type_id.empty())
                    throw ParseError(ParseError::Kind::Semantic, "--type", "required");
                result = serialize(cautious_extension(m, type_id)) + "\n";
            } else {
                throw ParseError(ParseError::Kind::Syntax, "mode", "unknown transform mode");
            }
            if (out_path.empty()) {
                std::cout << result;
            } else {
                std::ofstream out(out_path);
                out << result;
            }
            return kExitHolds;
        }

        if (solve->parsed()) {
            const Game g = parse_game(read_file(game_path));
            const Restriction r = parse_restriction(g, restrict_specs);
            if (proc == "df") {
                emit(json{{"procedure", "dekel-fudenberg"},
                          {"survivors", restriction_to_json(dekel_fudenberg(g))}});
                return kExitHolds;
            }
            if (proc == "iewds") {
                json rounds = json::array();
                for (const auto& step : iewds(g)) rounds.push_back(restriction_to_json(step));
                emit(json{{"procedure", "iewds"}, {"rounds", rounds}});
                return kExitHolds;
            }
            if (proc == "weak-dom") {
                auto player = player_from_label(player_label);
                if (!player || choice.empty())
                    throw ParseError(ParseError::Kind::Semantic, "--player/--choice",
                                     "required for weak-dom");
                auto cert = weakly_dominated(g, *player, choice, r);
                json out;
                out["choice"] = choice;
                out["dominated"] = cert.has_value();
                if (cert) {
                    json weights;
                    for (const auto& [c, w] : cert->weights) weights[c] = rational_to_string(w);
                    out["certificate"] = {{"mode", "weak"}, {"weights", weights}};
                    if (cert->strict_at) out["certificate"]["strict_at"] = *cert->strict_at;
                }
                emit(out);
                return cert.has_value() ? kExitHolds : kExitFails;
            }
            throw ParseError(ParseError::Kind::Syntax, "proc", "unknown solver procedure");
        }

        if (distance->parsed()) {
            const Game a = parse_game(read_file(game_path));
            const Game b = parse_game(read_file(other_path));
            auto player = player_from_label(player_label);
            if (!player)
                throw ParseError(ParseError::Kind::Semantic, "--player", "player must be 1 or 2");
            if (metric == "euclid2") {
                emit(json{{"metric", "euclid2"},
                          {"distance",
                           rational_to_string(sq_euclid(a.utility_of(*player), b.utility_of(*player)))}});
                return kExitHolds;
            }
            if (metric == "ordinal") {
                if (belief_path.empty())
                    throw ParseError(ParseError::Kind::Semantic, "--belief", "required for ordinal");
                ChoiceBelief cb = parse_choice_belief(read_file(belief_path), a.form, *player);
                std::vector<LevelDist> levels;
                for (const auto& level : cb) {
                    LevelDist l;
                    for (const auto& [c, prob] : level)
                        if (prob > 0)
                            l.emplace_back(*a.form.choice_index(opponent_of(*player), c), prob);
                    levels.push_back(std::move(l));
                }
                emit(json{{"metric", "ordinal"},
                          {"distance", ordinal_distance(a.form, levels, b.utility_of(*player),
                                                        a.utility_of(*player))}});
                return kExitHolds;
            }
            throw ParseError(ParseError::Kind::Syntax, "--metric", "unknown metric");
        }

        if (verify->parsed()) {
            auto thm = theorem_from_tag(theorem);
            if (!thm) throw ParseError(ParseError::Kind::Syntax, "theorem", "unknown theorem tag");
            const Game g = parse_game(read_file(game_path));
            const auto co = std::get<CompleteModel>(parse_model(read_file(co_path), g));
            std::optional<IncompleteModel> in;
            std::optional<std::string> theta;
            if (!in_path.empty()) {
                in = std::get<IncompleteModel>(parse_model(read_file(in_path), g.form));
                if (in_type.empty())
                    throw ParseError(ParseError::Kind::Semantic, "--in-type",
                                     "required when --in is given");
                theta = in_type;
            } else if (!construct) {
                throw ParseError(ParseError::Kind::Semantic, "--in",
                                 "provide an incomplete model or pass --construct");
            }
            const UtilityPair u = u_path.empty()
                                      ? utility_pair_of(g)
                                      : utility_pair_of(parse_game(read_file(u_path)));
            VerifyReport rep = run_verify(*thm, co, type_id, choice, u, in, theta);
            emit(report_to_json(rep));
            return rep.verdict ? kExitHolds : kExitFails;
        }

        if (corpus->parsed()) {
            suites::CorpusOptions opts;
            opts.dir = corpus_dir;
            opts.filter = filter;
            opts.strict_paper = strict_paper;
            opts.samples = samples;
            auto entries = suites::run_corpus(opts);
            std::size_t failed = 0;
            for (const auto& e : entries) {
                std::cout << (e.failed ? "FAIL " : "ok   ") << e.name << "  [" << e.status << "]";
                if (!e.detail.empty() && e.failed) std::cout << "\n     " << e.detail;
                if (!e.detail.empty() && !e.failed && e.status != "pass")
                    std::cout << "  -- " << e.detail;
                std::cout << "\n";
                if (e.failed) ++failed;
            }
            std::cout << entries.size() - failed << "/" << entries.size() << " entries passed\n";
            return failed == 0 ? kExitHolds : kExitFails;
        }
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
