#pragma once

#include <vector>

#include "lexiepist/rational.hpp"

namespace lexiepist {

// Exact rational simplex for: maximize c'x subject to Ax = b, x >= 0.
// Two phases, Bland's rule for both entering and leaving variables, so the
// solve always terminates. Problem sizes here are tiny.
struct LpResult {
    enum class Status { Optimal, Infeasible, Unbounded } status;
    Rational objective;
    std::vector<Rational> solution;
};

LpResult solve_lp_max(std::vector<std::vector<Rational>> A, std::vector<Rational> b,
                      const std::vector<Rational>& c);

}  // namespace lexiepist
