#include "propb/cnf.hpp"

#include <cstdlib>
#include <sstream>
#include <string>

#include "propb/errors.hpp"

namespace propb {

void Cnf::validate() const {
    for (const auto& clause : clauses) {
        for (std::size_t i = 0; i < clause.size(); ++i) {
            const int lit = clause[i];
            if (lit == 0) fail(ErrorKind::Input, "zero literal inside a clause");
            if (static_cast<std::uint32_t>(std::abs(lit)) > variable_count)
                fail(ErrorKind::Input, "literal exceeds the variable count");
            for (std::size_t j = 0; j < i; ++j)
                if (clause[j] == -lit) fail(ErrorKind::Input, "clause contains a variable and its negation");
        }
    }
}

bool Cnf::monotone() const {
    for (const auto& clause : clauses) {
        bool pos = false, neg = false;
        for (int lit : clause) (lit > 0 ? pos : neg) = true;
        if (pos && neg) return false;
    }
    return true;
}

bool satisfies(const Cnf& f, const Assignment& a) {
    if (a.size() < f.variable_count) return false;
    for (const auto& clause : f.clauses) {
        bool sat = false;
        for (int lit : clause) {
            const bool value = a[static_cast<std::size_t>(std::abs(lit)) - 1];
            if (value == (lit > 0)) {
                sat = true;
                break;
            }
        }
        if (!sat) return false;
    }
    return true;
}

Cnf hypergraph_to_cnf(const Hypergraph& h) {
    Cnf f;
    f.variable_count = h.vertex_count();
    f.clauses.reserve(2 * h.edge_count());
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
        Clause pos, neg;
        for (Vertex v : h.edge(i)) {
            pos.push_back(static_cast<int>(v) + 1);
            neg.push_back(-(static_cast<int>(v) + 1));
        }
        f.clauses.push_back(std::move(pos));
        f.clauses.push_back(std::move(neg));
    }
    return f;
}

Assignment coloring_to_assignment(const Coloring& c) {
    Assignment a(c.size());
    for (std::size_t v = 0; v < c.size(); ++v) a[v] = c[static_cast<Vertex>(v)] == Color::Blue;
    return a;
}

Coloring assignment_to_coloring(const Assignment& a) {
    std::vector<Color> colors(a.size());
    for (std::size_t v = 0; v < a.size(); ++v) colors[v] = a[v] ? Color::Blue : Color::Red;
    return Coloring(std::move(colors));
}

void write_dimacs(std::ostream& out, const Cnf& f) {
    out << "p cnf " << f.variable_count << ' ' << f.clauses.size() << '\n';
    for (const auto& clause : f.clauses) {
        for (int lit : clause) out << lit << ' ';
        out << "0\n";
    }
}

std::string emit_dimacs(const Cnf& f) {
    std::ostringstream out;
    write_dimacs(out, f);
    return out.str();
}

Cnf read_dimacs(std::istream& in) {
    Cnf f;
    bool header = false;
    std::uint64_t declared = 0;
    Clause current;
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == 'c') continue;
        if (line[first] == '%') break; // end marker used by some benchmark sets
        std::istringstream ls(line);
        if (line[first] == 'p') {
            std::string tok;
            ls >> tok;
            std::string kind;
            long long vars = -1, clauses = -1;
            if (header || tok != "p" || !(ls >> kind >> vars >> clauses) || kind != "cnf" || vars < 0 ||
                clauses < 0)
                fail(ErrorKind::Input, "malformed DIMACS header");
            f.variable_count = static_cast<std::uint32_t>(vars);
            declared = static_cast<std::uint64_t>(clauses);
            header = true;
            continue;
        }
        if (!header) fail(ErrorKind::Input, "clause before DIMACS header");
        long long lit;
        while (ls >> lit) {
            if (lit == 0) {
                f.clauses.push_back(std::move(current));
                current.clear();
            } else {
                current.push_back(static_cast<int>(lit));
            }
        }
        if (!ls.eof()) fail(ErrorKind::Input, "non-numeric token in DIMACS clause");
    }
    if (!header) fail(ErrorKind::Input, "missing DIMACS header");
    if (!current.empty()) fail(ErrorKind::Input, "unterminated final clause");
    if (f.clauses.size() != declared) fail(ErrorKind::Input, "clause count differs from header");
    f.validate();
    return f;
}

Cnf parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    return read_dimacs(in);
}

} // namespace propb
