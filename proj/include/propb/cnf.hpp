#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "propb/coloring.hpp"
#include "propb/construction.hpp"

namespace propb {

using Clause = std::vector<int>;

struct Cnf {
    std::uint32_t variable_count = 0;
    std::vector<Clause> clauses;

    /// Throws Input on a zero literal, |literal| > variable_count, or a
    /// clause holding both v and -v.
    void validate() const;
    bool monotone() const;

    friend bool operator==(const Cnf&, const Cnf&) = default;
};

/// value[v - 1] is the truth value of variable v.
using Assignment = std::vector<bool>;

bool satisfies(const Cnf& f, const Assignment& a);

/// C_e = (x_1 v ... v x_k) then C'_e = (-x_1 v ... v -x_k) for every edge,
/// in edge order; variable v + 1 for vertex v.
Cnf hypergraph_to_cnf(const Hypergraph& h);

/// Variable true iff the vertex is blue.
Assignment coloring_to_assignment(const Coloring& c);
Coloring assignment_to_coloring(const Assignment& a);

void write_dimacs(std::ostream& out, const Cnf& f);
std::string emit_dimacs(const Cnf& f);

/// Accepts `c` comment lines anywhere and clauses spanning lines. Throws
/// Input on a missing or inconsistent header.
Cnf read_dimacs(std::istream& in);
Cnf parse_dimacs(const std::string& text);

} // namespace propb
