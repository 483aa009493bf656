#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lexiepist/suites.hpp"

using lexiepist::suites::run_suite;

// Smaller sample counts here keep the unit run quick; the acceptance binary
// runs every suite at full size.
TEST_CASE("transport lemma suites") {
    for (const char* name : {"lemma4.1", "lemma4.2", "lemma4.3", "lemma4.4", "lemma4.5",
                             "lemma4.6", "lemma4.7", "lemma4.8", "lemma4.9", "lemma5.2",
                             "lemma6.1"}) {
        auto r = run_suite(name, 40);
        INFO(r.name, ": ", r.detail);
        CHECK(r.pass);
    }
}

TEST_CASE("module invariant suites") {
    for (const char* name : {"io-roundtrip", "lexpref-order", "ladder-props", "metric-props",
                             "implications-co", "implications-in", "obs4", "roundtrip-iso"}) {
        auto r = run_suite(name, 40);
        INFO(r.name, ": ", r.detail);
        CHECK(r.pass);
    }
}

TEST_CASE("solver suites") {
    for (const char* name : {"solver-bf", "refinement-chain"}) {
        auto r = run_suite(name, 80);
        INFO(r.name, ": ", r.detail);
        CHECK(r.pass);
    }
}
