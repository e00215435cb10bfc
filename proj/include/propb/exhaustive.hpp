#pragma once

#include <cstdint>
#include <optional>

#include "propb/coloring.hpp"
#include "propb/construction.hpp"

namespace propb {

inline constexpr std::uint32_t kMaxExhaustiveVertices = 26;

/// Index of the first edge monochromatic under c.
std::optional<std::size_t> first_monochromatic_edge(const Hypergraph& h, const Coloring& c);

inline bool is_proper(const Hypergraph& h, const Coloring& c) {
    return !first_monochromatic_edge(h, c).has_value();
}

struct ExhaustiveResult {
    std::uint64_t checked = 0;     // colorings examined
    std::optional<Coloring> proper; // first proper coloring in mask order
    bool colorable() const { return proper.has_value(); }
};

/// Enumerates all 2^n colorings as bitmasks (bit v set = blue). Throws Size
/// above kMaxExhaustiveVertices. With stop_at_first false the sweep always
/// covers every coloring.
ExhaustiveResult exhaustive_two_coloring(const Hypergraph& h, bool stop_at_first = true);

} // namespace propb
