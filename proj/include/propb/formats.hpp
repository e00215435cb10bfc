#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <span>

#include "propb/construction.hpp"

namespace propb {

// Edge list: `p hyp <vertexCount> <edgeCount> <k>` then one edge per line,
// 1-based vertex numbers seq * k' + pos + 1.
void write_edge_list_header(std::ostream& out, std::uint64_t vertex_count,
                            std::uint64_t edge_count, std::uint32_t k);
void write_edge_line(std::ostream& out, std::span<const Vertex> edge);
void write_edge_list(std::ostream& out, const Hypergraph& h);
Hypergraph read_edge_list(std::istream& in);

// Dual clauses of one edge, straight to DIMACS lines.
void write_dimacs_header(std::ostream& out, std::uint64_t variables, std::uint64_t clauses);
void write_dual_clauses(std::ostream& out, std::span<const Vertex> edge);

} // namespace propb
