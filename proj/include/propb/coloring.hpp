#pragma once

#include <cstdint>
#include <istream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "propb/construction.hpp"

namespace propb {

enum class Color : std::uint8_t { Red = 0, Blue = 1 };

inline Color opposite(Color c) { return c == Color::Red ? Color::Blue : Color::Red; }
const char* to_string(Color c);

/// Total 2-coloring of vertices 0..size()-1.
class Coloring {
public:
    Coloring() = default;
    explicit Coloring(std::vector<Color> colors) : colors_(std::move(colors)) {}
    Coloring(std::size_t n, Color fill) : colors_(n, fill) {}

    /// Bit v of `mask` set means vertex v is blue.
    static Coloring from_mask(std::size_t n, std::uint64_t mask);

    std::size_t size() const { return colors_.size(); }
    Color operator[](Vertex v) const { return colors_[v]; }
    Color at(const Params& p, VertexId id) const { return colors_.at(id.index(p)); }
    void set(Vertex v, Color c) { colors_.at(v) = c; }

    Coloring swapped() const;
    bool monochromatic(std::span<const Vertex> edge, Color c) const;

    friend bool operator==(const Coloring&, const Coloring&) = default;

private:
    std::vector<Color> colors_;
};

/// Coloring file body: one character per vertex over {R, B}.
std::string format_coloring(const Coloring& c);

/// Parses a coloring line, surrounding whitespace ignored. Throws Input on
/// a foreign character or when the length differs from `vertex_count`.
Coloring parse_coloring(std::string_view text, std::size_t vertex_count);
Coloring read_coloring(std::istream& in, std::size_t vertex_count);

} // namespace propb
