#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lexiepist/conditions_co.hpp"
#include "lexiepist/conditions_in.hpp"
#include "lexiepist/transform.hpp"

namespace lexiepist {

enum class Theorem { Thm41, Thm42, Thm43, Thm44, Prop51 };

std::optional<Theorem> theorem_from_tag(std::string_view tag);
const char* tag_of(Theorem t);

// One bundle or optimality check, tied to the transport lemma it exercises.
struct TraceEntry {
    std::string lemma;      // e.g. "lemma4.5", "obs4.3", "optimality"
    std::string detail;     // condition tag and the type it was checked on
    bool holds = false;
    std::optional<Witness> witness;
};

struct DirectionReport {
    std::string direction;  // "only-if" or "if"
    std::string source_type;
    std::string target_type;
    std::vector<TraceEntry> hypothesis;   // bundle on the source model
    std::vector<TraceEntry> conclusion;   // bundle after the transformation
    bool pass = false;
};

struct VerifyReport {
    Theorem theorem = Theorem::Thm41;
    std::string choice;
    DirectionReport only_if;
    DirectionReport if_dir;
    bool verdict = false;
    bool disputed = false;
};

// Runs both directions of a characterization theorem on concrete witnesses.
// The only-if direction starts from the complete model (co2in), the if
// direction from the incomplete model (in2co). When no incomplete model is
// supplied the co2in image is used, starting at the first ladder type of
// `type`.
VerifyReport run_verify(Theorem thm, const CompleteModel& co, const std::string& type,
                        const std::string& choice, const UtilityPair& u,
                        const std::optional<IncompleteModel>& in_model,
                        const std::optional<std::string>& in_type);

}  // namespace lexiepist
