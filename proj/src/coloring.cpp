#include "propb/coloring.hpp"

#include <iterator>
#include <string>

#include "propb/errors.hpp"

namespace propb {

const char* to_string(Color c) { return c == Color::Red ? "red" : "blue"; }

Coloring Coloring::from_mask(std::size_t n, std::uint64_t mask) {
    std::vector<Color> colors(n);
    for (std::size_t v = 0; v < n; ++v) colors[v] = (mask >> v) & 1 ? Color::Blue : Color::Red;
    return Coloring(std::move(colors));
}

Coloring Coloring::swapped() const {
    std::vector<Color> out(colors_.size());
    for (std::size_t v = 0; v < out.size(); ++v) out[v] = opposite(colors_[v]);
    return Coloring(std::move(out));
}

bool Coloring::monochromatic(std::span<const Vertex> edge, Color c) const {
    for (Vertex v : edge)
        if (colors_.at(v) != c) return false;
    return true;
}

std::string format_coloring(const Coloring& c) {
    std::string out(c.size(), 'R');
    for (std::size_t v = 0; v < c.size(); ++v)
        if (c[static_cast<Vertex>(v)] == Color::Blue) out[v] = 'B';
    return out;
}

Coloring parse_coloring(std::string_view text, std::size_t vertex_count) {
    const auto ws = " \t\r\n";
    const auto first = text.find_first_not_of(ws);
    if (first == std::string_view::npos) {
        if (vertex_count == 0) return {};
        fail(ErrorKind::Input, "empty coloring");
    }
    text = text.substr(first, text.find_last_not_of(ws) - first + 1);
    if (text.size() != vertex_count)
        fail(ErrorKind::Input, "coloring has " + std::to_string(text.size()) + " entries, expected " +
                                   std::to_string(vertex_count));
    std::vector<Color> colors(vertex_count);
    for (std::size_t v = 0; v < vertex_count; ++v) {
        switch (text[v]) {
        case 'R': colors[v] = Color::Red; break;
        case 'B': colors[v] = Color::Blue; break;
        default: fail(ErrorKind::Input, "coloring characters must be R or B");
        }
    }
    return Coloring(std::move(colors));
}

Coloring read_coloring(std::istream& in, std::size_t vertex_count) {
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_coloring(text, vertex_count);
}

} // namespace propb
