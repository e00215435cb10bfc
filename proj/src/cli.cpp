#include "propb/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "propb/cnf.hpp"
#include "propb/coloring.hpp"
#include "propb/combinatorics.hpp"
#include "propb/construction.hpp"
#include "propb/dpll.hpp"
#include "propb/errors.hpp"
#include "propb/exhaustive.hpp"
#include "propb/formats.hpp"
#include "propb/witness.hpp"

namespace propb::cli {

namespace {

int exit_code_for(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::Size:
    case ErrorKind::Budget: return kSize;
    case ErrorKind::Majority:
    case ErrorKind::Assertion: return kAssertion;
    default: return kUsage;
    }
}

std::uint64_t resolve_l(const RunConfig& cfg) {
    if (cfg.k == 0) fail(ErrorKind::Parameter, "--k must be positive");
    return cfg.l ? *cfg.l : choose_l(cfg.k);
}

std::uint64_t to_u64(const mpz_class& x) {
    if (!mpz_fits_ulong_p(x.get_mpz_t())) fail(ErrorKind::Size, "count exceeds 64 bits");
    return x.get_ui();
}

void write_hypergraph(std::ostream& out, const Hypergraph& h, OutputFormat fmt) {
    if (fmt == OutputFormat::Edges) {
        write_edge_list(out, h);
    } else {
        write_dimacs(out, hypergraph_to_cnf(h));
    }
}

int cmd_gen(const RunConfig& cfg, std::ostream& out) {
    const Params p = validate_params(cfg.k, resolve_l(cfg));
    const std::uint64_t cap = effective_edge_cap(cfg);
    check_edge_cap(p, cap);
    if (cfg.dedup || cfg.threads > 1) {
        Hypergraph h = build_full(p, {cap, cfg.threads});
        write_hypergraph(out, cfg.dedup ? dedup(h) : h, cfg.format);
        return kOk;
    }
    // streamed: one edge in memory at a time
    const std::uint64_t m = to_u64(m_formula(p));
    if (cfg.format == OutputFormat::Edges) {
        write_edge_list_header(out, p.vertex_count(), m, p.k());
        for_each_edge(p, [&](std::span<const Vertex> e) { write_edge_line(out, e); });
    } else {
        write_dimacs_header(out, p.vertex_count(), 2 * m);
        for_each_edge(p, [&](std::span<const Vertex> e) { write_dual_clauses(out, e); });
    }
    return kOk;
}

int cmd_count(const RunConfig& cfg, std::ostream& out) {
    const std::uint64_t l = resolve_l(cfg);
    const EdgeCount m = m_formula(cfg.k, l);
    const BoundValue bound = prop12_bound(cfg.k, l);
    const bool ok = bound.dominates(m);
    out << "m = " << m.get_str() << ", bound ≈ " << bound.to_short_string()
        << ", m ≤ bound: " << (ok ? "yes" : "no") << '\n';
    return ok ? kOk : kAssertion;
}

int cmd_bound(const RunConfig& cfg, std::ostream& out) {
    if (cfg.k == 0) fail(ErrorKind::Parameter, "--k must be positive");
    out << "l\tk'\tm\tbound\tm<=bound\n";
    bool all = true;
    for (std::uint64_t l = 1; l <= cfg.k; ++l) {
        if (cfg.k % l != 0) continue;
        const EdgeCount m = m_formula(cfg.k, l);
        const BoundValue bound = prop12_bound(cfg.k, l);
        const bool ok = bound.dominates(m);
        all = all && ok;
        mpz_class kp = mpz_class(1) << static_cast<mp_bitcnt_t>(l);
        kp *= static_cast<unsigned long>(cfg.k / l);
        out << l << '\t' << kp.get_str() << '\t' << m.get_str() << '\t' << bound.to_short_string()
            << '\t' << (ok ? "yes" : "no") << '\n';
    }
    out << "choose_l = " << choose_l(cfg.k) << '\n';
    return all ? kOk : kAssertion;
}

Coloring seeded_coloring(std::size_t n, std::uint64_t seed) {
    // raw engine bits: mt19937_64 output is fixed by the standard, distributions are not
    std::mt19937_64 gen(seed);
    std::vector<Color> colors(n);
    for (auto& c : colors) c = (gen() >> 63) ? Color::Blue : Color::Red;
    return Coloring(std::move(colors));
}

template <class Range>
void write_list(std::ostream& out, const Range& r, std::uint64_t offset = 0) {
    bool first = true;
    for (auto x : r) {
        if (!first) out << ' ';
        out << x + offset;
        first = false;
    }
}

int cmd_witness(const RunConfig& cfg, std::ostream& out) {
    const Params p = validate_params(cfg.k, resolve_l(cfg));
    Coloring c;
    if (cfg.coloring_path) {
        std::ifstream in(*cfg.coloring_path);
        if (!in) fail(ErrorKind::Input, "cannot open coloring file " + *cfg.coloring_path);
        c = read_coloring(in, p.vertex_count());
    } else if (cfg.seed) {
        c = seeded_coloring(p.vertex_count(), *cfg.seed);
    } else {
        fail(ErrorKind::Input, "witness needs --coloring or --seed");
    }
    const Hypergraph h = build_full(p, {effective_edge_cap(cfg), cfg.threads});
    const Witness w = monochromatic_witness(p, h, c);

    out << "coloring: " << format_coloring(c) << '\n';
    out << "color: " << to_string(w.color) << '\n';
    out << "sequences: ";
    write_list(out, w.sequences);
    out << "\nshifts: ";
    write_list(out, w.shifts.shifts);
    out << "\npositions: ";
    write_list(out, w.positions);
    out << "\naligned: " << w.qualifying << " (need " << p.block_size() << ")\n";
    out << "edge: ";
    write_list(out, w.edge.indices(p), 1);
    out << "\nedge index: " << w.edge_index << '\n';
    out << "verified: monochromatic " << to_string(w.color) << ", edge of G\n";
    return kOk;
}

int cmd_solve(const RunConfig& cfg, std::ostream& out) {
    Cnf f;
    bool from_construction = false;
    if (cfg.cnf_path) {
        std::ifstream in(*cfg.cnf_path);
        if (!in) fail(ErrorKind::Input, "cannot open CNF file " + *cfg.cnf_path);
        f = read_dimacs(in);
    } else {
        const Params p = validate_params(cfg.k, resolve_l(cfg));
        Hypergraph h = build_full(p, {effective_edge_cap(cfg), cfg.threads});
        f = hypergraph_to_cnf(cfg.dedup ? dedup(h) : h);
        from_construction = true;
    }
    const DpllResult r = dpll_satisfiable(f, {cfg.node_budget});
    out << "variables: " << f.variable_count << ", clauses: " << f.clauses.size() << '\n';
    out << "decisions: " << r.stats.decisions << ", conflicts: " << r.stats.conflicts << '\n';
    if (!r.satisfiable) {
        out << "s UNSATISFIABLE\n";
        return kOk;
    }
    out << "s SATISFIABLE\nv";
    for (std::uint32_t v = 0; v < f.variable_count; ++v)
        out << ' ' << (r.model[v] ? "" : "-") << v + 1;
    out << " 0\n";
    return from_construction ? kAssertion : kOk;
}

int cmd_verify_small(const RunConfig& cfg, std::ostream& out) {
    const Params p = validate_params(cfg.k, resolve_l(cfg));
    if (p.vertex_count() > kMaxExhaustiveVertices)
        fail(ErrorKind::Size, "verify-small refuses " + std::to_string(p.vertex_count()) + " vertices (max " +
                                  std::to_string(kMaxExhaustiveVertices) + ")");
    const Hypergraph h = dedup(build_full(p, {effective_edge_cap(cfg), cfg.threads}));
    const ExhaustiveResult r = exhaustive_two_coloring(h);
    if (r.colorable()) {
        out << "non-2-colorable: REFUTED by proper coloring " << format_coloring(*r.proper) << '\n';
        return kAssertion;
    }
    out << "non-2-colorable: confirmed (" << r.checked << " colorings checked)\n";
    return kOk;
}

} // namespace

std::uint64_t effective_edge_cap(const RunConfig& cfg) {
    if (cfg.edge_cap) return cfg.edge_cap;
    if (const char* env = std::getenv(kEdgeCapEnv)) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0' || v == 0)
            fail(ErrorKind::Parameter, std::string(kEdgeCapEnv) + " must be a positive integer");
        return v;
    }
    return kDefaultEdgeCap;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        switch (cfg.command) {
        case Command::Gen: return cmd_gen(cfg, out);
        case Command::Count: return cmd_count(cfg, out);
        case Command::Bound: return cmd_bound(cfg, out);
        case Command::Witness: return cmd_witness(cfg, out);
        case Command::Solve: return cmd_solve(cfg, out);
        case Command::VerifySmall: return cmd_verify_small(cfg, out);
        }
    } catch (const Error& e) {
        err << to_string(e.kind()) << ": " << e.what() << '\n';
        return exit_code_for(e.kind());
    }
    return kUsage;
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Non-2-colorable k-uniform hypergraphs and their unsatisfiable monotone CNFs"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::uint64_t l = 0;
    std::string format = "edges";
    std::uint64_t seed = 0;
    std::string coloring, cnf;

    auto add_common = [&](CLI::App* sub, bool k_required) {
        auto* k = sub->add_option("--k", cfg.k, "edge size")->check(CLI::PositiveNumber);
        if (k_required) k->required();
        sub->add_option("--l", l, "grouping parameter (default: exact minimizer of m(k,l))")
            ->check(CLI::PositiveNumber);
        sub->add_option("--edge-cap", cfg.edge_cap,
                        std::string("refuse above this many multiset edges (default: $") + kEdgeCapEnv +
                            " or 10000000)")
            ->check(CLI::PositiveNumber);
        sub->add_option("--threads", cfg.threads, "generation threads")->check(CLI::PositiveNumber);
    };

    auto* gen = app.add_subcommand("gen", "emit the hypergraph or its dual CNF");
    add_common(gen, true);
    gen->add_option("--format", format, "edges or dimacs")->check(CLI::IsMember({"edges", "dimacs"}));
    gen->add_flag("--dedup", cfg.dedup, "drop repeated edges");

    auto* count = app.add_subcommand("count", "exact m(k,l) against the analytic bound");
    add_common(count, true);
    auto* bound = app.add_subcommand("bound", "m(k,l) and the bound for every divisor l of k");
    add_common(bound, true);

    auto* witness = app.add_subcommand("witness", "monochromatic edge for a coloring");
    add_common(witness, true);
    witness->add_option("--coloring", coloring, "file with one R/B character per vertex");
    witness->add_option("--seed", seed, "use a seeded random coloring");

    auto* solve = app.add_subcommand("solve", "decide the dual CNF with DPLL");
    add_common(solve, false);
    solve->add_option("--cnf", cnf, "DIMACS file to decide instead of the construction");
    solve->add_flag("--dedup", cfg.dedup, "drop repeated edges before dualizing");
    solve->add_option("--node-budget", cfg.node_budget, "maximum DPLL decisions")->check(CLI::PositiveNumber);

    auto* verify = app.add_subcommand("verify-small", "exhaustive non-2-colorability check");
    add_common(verify, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    if (gen->parsed()) cfg.command = Command::Gen;
    if (count->parsed()) cfg.command = Command::Count;
    if (bound->parsed()) cfg.command = Command::Bound;
    if (witness->parsed()) cfg.command = Command::Witness;
    if (solve->parsed()) cfg.command = Command::Solve;
    if (verify->parsed()) cfg.command = Command::VerifySmall;

    auto* active = app.get_subcommands().front();
    if (active->count("--l")) cfg.l = l;
    if (active->get_option_no_throw("--seed") && active->count("--seed")) cfg.seed = seed;
    if (active->get_option_no_throw("--coloring") && active->count("--coloring")) cfg.coloring_path = coloring;
    if (active->get_option_no_throw("--cnf") && active->count("--cnf")) cfg.cnf_path = cnf;
    cfg.format = format == "dimacs" ? OutputFormat::Dimacs : OutputFormat::Edges;

    if (cfg.command == Command::Solve && !cfg.cnf_path && cfg.k == 0) {
        err << "solve needs --k or --cnf\n";
        return kUsage;
    }
    return run(cfg, out, err);
}

} // namespace propb::cli
