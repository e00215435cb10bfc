#pragma once

#include <cstdint>
#include <optional>

#include "propb/cnf.hpp"

namespace propb {

struct DpllOptions {
    std::uint64_t node_budget = 50'000'000; // decisions
};

struct DpllStats {
    std::uint64_t decisions = 0;
    std::uint64_t conflicts = 0;
    std::uint64_t propagations = 0;
    std::uint64_t pure_literals = 0;
};

struct DpllResult {
    bool satisfiable = false;
    Assignment model; // set iff satisfiable; checked against every clause
    DpllStats stats;
};

/// Complete DPLL: unit propagation, pure-literal elimination, chronological
/// backtracking. Throws Budget when the decision budget is exhausted and
/// Assertion if a model fails verification.
DpllResult dpll_satisfiable(const Cnf& f, const DpllOptions& opts = {});

} // namespace propb
