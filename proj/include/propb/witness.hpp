#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "propb/coloring.hpp"
#include "propb/construction.hpp"

namespace propb {

struct SequenceMajority {
    std::uint32_t red = 0;
    std::uint32_t blue = 0;

    // Majority means at least half of the k' entries.
    bool red_majority() const { return 2 * red >= red + blue; }
    bool blue_majority() const { return 2 * blue >= red + blue; }
    bool majority(Color c) const { return c == Color::Red ? red_majority() : blue_majority(); }
    std::uint32_t count(Color c) const { return c == Color::Red ? red : blue; }
};

struct MajorityProfile {
    std::vector<SequenceMajority> per_sequence;
};

/// Throws Input when the coloring does not cover exactly the vertex universe.
MajorityProfile majority_profile(const Params& p, const Coloring& c);

struct MajoritySelection {
    Color color = Color::Red;
    std::vector<std::uint32_t> sequences; // l entries, increasing
};

/// Pigeonhole step: 2l-1 sequences, each with at least one majority color,
/// so some color has a majority in l of them. Prefers the color with more
/// majority sequences, then red; takes the smallest indices.
MajoritySelection select_same_majority(const Params& p, const MajorityProfile& profile);

/// E[ #{r : x_{t, r+i_t} has color s for every t} ] when the first
/// `fixed.size()` shifts are fixed and the rest are uniform on 0..k'-1.
mpq_class conditional_expectation(const Params& p, const Coloring& c, Color s,
                                  std::span<const std::uint32_t> chosen,
                                  std::span<const std::uint32_t> fixed);

struct ShiftSearch {
    ShiftTuple shifts;
    std::vector<std::uint32_t> positions; // first k/l qualifying r
    std::uint32_t qualifying = 0;         // all-s count for the final tuple
    std::vector<mpq_class> expectations;  // before each step, then final (l+1 values)
};

/// Method of conditional expectations over the shifts, one sequence at a
/// time, each step taking the smallest shift that maximizes the conditional
/// expectation. Throws Majority when some chosen sequence lacks an
/// s-majority; throws Assertion if the expectation ever decreases.
ShiftSearch derandomized_shifts(const Params& p, const Coloring& c, Color s,
                                std::span<const std::uint32_t> chosen);

/// Number of r with x_{t, r+shifts[t]} colored s for every t.
std::uint32_t aligned_count(const Params& p, const Coloring& c, Color s,
                            std::span<const std::uint32_t> chosen,
                            std::span<const std::uint32_t> shifts);

struct Witness {
    Color color = Color::Red;
    std::vector<std::uint32_t> sequences;
    ShiftTuple shifts;
    std::vector<std::uint32_t> positions;
    Edge edge;
    std::uint32_t qualifying = 0;
    std::uint64_t edge_index = 0; // position inside h
};

/// Monochromatic edge of h = build_full(p) under c, verified for color and
/// membership in h before being returned.
Witness monochromatic_witness(const Params& p, const Hypergraph& h, const Coloring& c);

} // namespace propb
