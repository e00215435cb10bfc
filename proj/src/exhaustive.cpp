#include "propb/exhaustive.hpp"

#include <algorithm>
#include <vector>

#include "propb/errors.hpp"

namespace propb {

std::optional<std::size_t> first_monochromatic_edge(const Hypergraph& h, const Coloring& c) {
    if (c.size() != h.vertex_count()) fail(ErrorKind::Input, "coloring does not cover the hypergraph");
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
        auto e = h.edge(i);
        if (c.monochromatic(e, Color::Red) || c.monochromatic(e, Color::Blue)) return i;
    }
    return std::nullopt;
}

ExhaustiveResult exhaustive_two_coloring(const Hypergraph& h, bool stop_at_first) {
    const std::uint32_t n = h.vertex_count();
    if (n > kMaxExhaustiveVertices)
        fail(ErrorKind::Size, "exhaustive search refused above " + std::to_string(kMaxExhaustiveVertices) +
                                  " vertices");
    std::vector<std::uint32_t> masks;
    masks.reserve(h.edge_count());
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
        std::uint32_t m = 0;
        for (Vertex v : h.edge(i)) m |= std::uint32_t{1} << v;
        masks.push_back(m);
    }
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());

    ExhaustiveResult out;
    const std::uint64_t total = std::uint64_t{1} << n;
    std::size_t last_hit = 0; // the edge that killed the previous coloring often kills the next
    for (std::uint64_t mask64 = 0; mask64 < total; ++mask64) {
        const auto blue = static_cast<std::uint32_t>(mask64);
        ++out.checked;
        auto mono = [&](std::uint32_t e) { return (blue & e) == e || (blue & e) == 0; };
        bool hit = !masks.empty() && mono(masks[last_hit]);
        for (std::size_t i = 0; !hit && i < masks.size(); ++i) {
            if (mono(masks[i])) {
                hit = true;
                last_hit = i;
            }
        }
        if (!hit) {
            if (!out.proper) out.proper = Coloring::from_mask(n, mask64);
            if (stop_at_first) break;
        }
    }
    return out;
}

} // namespace propb
