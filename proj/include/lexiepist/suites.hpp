#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lexiepist::suites {

struct SuiteResult {
    std::string name;
    std::size_t samples = 0;
    bool pass = false;
    std::string detail;  // on failure: what broke, plus a minimal counterexample
};

// Generated-model property suites: transport lemmas (lemma4.1 .. lemma4.9,
// lemma5.2, lemma6.1) plus module invariant batteries.
std::vector<std::string> suite_names();
SuiteResult run_suite(const std::string& name, std::size_t samples = 200,
                      std::uint64_t seed = 0xC0FFEEULL);

// Fixture directory: LEXIEPIST_CORPUS env var, else the build-time default.
std::string default_corpus_dir();

struct CorpusOptions {
    std::string dir;      // empty -> default_corpus_dir()
    std::string filter;   // regex over entry names; empty matches all
    bool strict_paper = false;
    std::size_t samples = 200;
};

struct CorpusEntry {
    std::string name;
    std::string status;  // pass | fail | pass(disputed) | fail(strict-paper)
    std::string detail;
    bool failed = false;  // counts toward the exit status
};

// Runs every manifest fixture expectation and every property suite.
std::vector<CorpusEntry> run_corpus(const CorpusOptions& opts);

}  // namespace lexiepist::suites
