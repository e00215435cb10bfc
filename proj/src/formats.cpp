#include "propb/formats.hpp"

#include <charconv>
#include <sstream>
#include <string>
#include <vector>

#include "propb/errors.hpp"

namespace propb {

namespace {

// Formats one line into a stack buffer; vertex numbers fit in 10 digits.
template <class Emit>
void write_line(std::ostream& out, std::size_t count, Emit&& emit) {
    char small[256];
    std::vector<char> big;
    char* buf = small;
    const std::size_t need = count * 12 + 4;
    if (need > sizeof(small)) {
        big.resize(need);
        buf = big.data();
    }
    char* end = emit(buf);
    out.write(buf, end - buf);
}

char* put(char* p, std::uint64_t v) { return std::to_chars(p, p + 20, v).ptr; }

} // namespace

void write_edge_list_header(std::ostream& out, std::uint64_t vertex_count,
                            std::uint64_t edge_count, std::uint32_t k) {
    out << "p hyp " << vertex_count << ' ' << edge_count << ' ' << k << '\n';
}

void write_edge_line(std::ostream& out, std::span<const Vertex> edge) {
    write_line(out, edge.size(), [&](char* p) {
        for (std::size_t i = 0; i < edge.size(); ++i) {
            if (i) *p++ = ' ';
            p = put(p, std::uint64_t{edge[i]} + 1);
        }
        *p++ = '\n';
        return p;
    });
}

void write_edge_list(std::ostream& out, const Hypergraph& h) {
    write_edge_list_header(out, h.vertex_count(), h.edge_count(), h.uniformity());
    for (std::size_t i = 0; i < h.edge_count(); ++i) write_edge_line(out, h.edge(i));
}

Hypergraph read_edge_list(std::istream& in) {
    std::string line;
    while (std::getline(in, line) && line.find_first_not_of(" \t\r") == std::string::npos) {}
    std::istringstream hs(line);
    std::string p, kind;
    std::uint64_t vertices = 0, edges = 0, k = 0;
    if (!(hs >> p >> kind >> vertices >> edges >> k) || p != "p" || kind != "hyp")
        fail(ErrorKind::Input, "malformed edge-list header");
    if (vertices > UINT32_MAX || k > UINT32_MAX) fail(ErrorKind::Input, "edge-list header out of range");

    Hypergraph h(static_cast<std::uint32_t>(vertices), static_cast<std::uint32_t>(k));
    h.reserve_edges(edges);
    std::vector<Vertex> e;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        e.clear();
        std::uint64_t v;
        while (ls >> v) {
            if (v == 0 || v > vertices) fail(ErrorKind::Input, "edge-list vertex out of range");
            e.push_back(static_cast<Vertex>(v - 1));
        }
        if (!ls.eof()) fail(ErrorKind::Input, "non-numeric token in edge list");
        if (e.empty()) continue;
        if (e.size() != k) fail(ErrorKind::Input, "edge-list edge has the wrong size");
        h.add_edge(e);
    }
    if (h.edge_count() != edges) fail(ErrorKind::Input, "edge count differs from header");
    return h;
}

void write_dimacs_header(std::ostream& out, std::uint64_t variables, std::uint64_t clauses) {
    out << "p cnf " << variables << ' ' << clauses << '\n';
}

void write_dual_clauses(std::ostream& out, std::span<const Vertex> edge) {
    write_line(out, 2 * edge.size() + 2, [&](char* p) {
        for (Vertex v : edge) {
            p = put(p, std::uint64_t{v} + 1);
            *p++ = ' ';
        }
        *p++ = '0';
        *p++ = '\n';
        for (Vertex v : edge) {
            *p++ = '-';
            p = put(p, std::uint64_t{v} + 1);
            *p++ = ' ';
        }
        *p++ = '0';
        *p++ = '\n';
        return p;
    });
}

} // namespace propb
