// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "propb/cli.hpp"
#include "propb/cnf.hpp"
#include "propb/combinatorics.hpp"
#include "propb/construction.hpp"
#include "propb/dpll.hpp"
#include "propb/errors.hpp"
#include "propb/exhaustive.hpp"
#include "propb/witness.hpp"

using namespace propb;

namespace {

struct Verdict {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

using Clock = std::chrono::steady_clock;

int failures = 0;

void criterion(const char* id, const char* title, double limit_s, const std::function<void(Verdict&)>& body) {
    Verdict v;
    const auto start = Clock::now();
    try {
        body(v);
    } catch (const std::exception& e) {
        v.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (limit_s > 0)
        v.require(secs < limit_s, "took " + std::to_string(secs) + " s, limit " + std::to_string(limit_s) + " s");
    std::printf("[%s] %s %s (%.2f s)%s%s\n", v.ok ? "PASS" : "FAIL", id, title, secs, v.ok ? "" : ": ",
                v.detail.c_str());
    std::fflush(stdout);
    if (!v.ok) ++failures;
}

Coloring random_coloring(std::size_t n, std::mt19937_64& gen) {
    std::vector<Color> c(n);
    for (auto& x : c) x = (gen() >> 63) ? Color::Blue : Color::Red;
    return Coloring(std::move(c));
}

std::string tag(unsigned k, unsigned l) { return "(k=" + std::to_string(k) + ", l=" + std::to_string(l) + ")"; }

// Shared by criteria 4 and 5.
struct WitnessRun {
    std::uint64_t runs = 0;
    std::uint64_t failures = 0;
    std::uint64_t below_block = 0;
    std::uint64_t above_oracle = 0;
    std::uint64_t oracle_checked = 0;
    std::string first_problem;
};

void witness_one(const Params& p, const Hypergraph& h, const Coloring& c, WitnessRun& run) {
    ++run.runs;
    try {
        const Witness w = monochromatic_witness(p, h, c);
        if (!c.monochromatic(h.edge(w.edge_index), w.color) || !c.monochromatic(w.edge.indices(p), w.color)) {
            ++run.failures;
            if (run.first_problem.empty()) run.first_problem = "non-monochromatic witness " + tag(p.k(), p.l());
        }
        if (w.qualifying < p.block_size()) ++run.below_block;
        std::uint64_t tuples = 1;
        for (unsigned i = 0; i < p.l(); ++i) tuples *= p.k_prime();
        if (tuples <= 1'000'000) {
            ++run.oracle_checked;
            std::vector<unsigned> ch(w.sequences.begin(), w.sequences.end());
            if (w.qualifying > oracle::max_aligned(p, c, w.color, ch)) ++run.above_oracle;
        }
    } catch (const Error& e) {
        ++run.failures;
        if (run.first_problem.empty()) run.first_problem = std::string(e.what()) + " " + tag(p.k(), p.l());
    }
}

std::string cli_output(std::vector<std::string> args) {
    args.insert(args.begin(), "propb");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    if (cli::main(static_cast<int>(argv.size()), argv.data(), out, err) != 0)
        throw std::runtime_error("CLI failed: " + err.str());
    return out.str();
}

} // namespace

int main() {
    const std::pair<unsigned, unsigned> count_pairs[] = {{2, 1}, {3, 1}, {4, 1}, {2, 2},
                                                         {4, 2}, {6, 2}, {3, 3}, {6, 3}};

    criterion("AC1", "exact multiset edge counts", 60.0, [&](Verdict& v) {
        for (auto [k, l] : count_pairs) {
            const Params p = validate_params(k, l);
            const mpz_class expect = oracle::m_value(k, l);
            v.require(m_formula(p) == expect, "m_formula differs from oracle " + tag(k, l));
            const Hypergraph h = build_full(p);
            v.require(mpz_class(std::to_string(h.edge_count())) == expect,
                      "build_full has " + std::to_string(h.edge_count()) + " edges, expected " + expect.get_str() +
                          " " + tag(k, l));
            for (std::size_t i = 0; i < h.edge_count(); ++i)
                if (h.edge(i).size() != k) v.require(false, "non-uniform edge " + tag(k, l));
        }
    });

    const std::pair<unsigned, unsigned> small_pairs[] = {{2, 1}, {3, 1}, {2, 2}};

    criterion("AC2", "exhaustive non-2-colorability", 5.0, [&](Verdict& v) {
        for (auto [k, l] : small_pairs) {
            const Hypergraph h = build_full(validate_params(k, l));
            const auto r = exhaustive_two_coloring(h, false);
            v.require(!r.colorable(), "proper coloring found " + tag(k, l));
            v.require(r.checked == (std::uint64_t{1} << h.vertex_count()), "incomplete sweep " + tag(k, l));
            v.require(!oracle::has_proper_coloring(h), "oracle found a proper coloring " + tag(k, l));
        }
    });

    criterion("AC3", "DPLL unsatisfiability of dual CNFs", 120.0, [&](Verdict& v) {
        const Cnf f42 = hypergraph_to_cnf(build_full(validate_params(4, 2)));
        v.require(f42.variable_count == 24 && f42.clauses.size() == 10752, "unexpected (4,2) CNF size");
        v.require(f42.monotone(), "(4,2) CNF not monotone");
        v.require(!dpll_satisfiable(f42).satisfiable, "(4,2) dual reported satisfiable");
        const Cnf f41 = hypergraph_to_cnf(build_full(validate_params(4, 1)));
        v.require(f41.variable_count == 8, "unexpected (4,1) variable count");
        v.require(!dpll_satisfiable(f41).satisfiable, "(4,1) dual reported satisfiable");
    });

    WitnessRun run;
    criterion("AC4", "witness totality", 120.0, [&](Verdict& v) {
        for (auto [k, l] : small_pairs) {
            const Params p = validate_params(k, l);
            const Hypergraph h = build_full(p);
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << p.vertex_count()); ++mask)
                witness_one(p, h, Coloring::from_mask(p.vertex_count(), mask), run);
        }
        std::mt19937_64 gen(20240601);
        for (auto [k, l] : {std::pair{4u, 2u}, std::pair{6u, 2u}}) {
            const Params p = validate_params(k, l);
            const Hypergraph h = build_full(p);
            for (int t = 0; t < 10000; ++t) witness_one(p, h, random_coloring(p.vertex_count(), gen), run);
        }
        v.require(run.runs == 16 + 64 + 4096 + 20000, "unexpected run count " + std::to_string(run.runs));
        v.require(run.failures == 0, std::to_string(run.failures) + " failures, first: " + run.first_problem);
    });

    criterion("AC5", "derandomization guarantee", 0, [&](Verdict& v) {
        v.require(run.runs > 0, "no witness runs recorded");
        v.require(run.below_block == 0, std::to_string(run.below_block) + " runs below k/l");
        v.require(run.above_oracle == 0, std::to_string(run.above_oracle) + " runs above the exhaustive maximum");
        v.require(run.oracle_checked == run.runs, "oracle did not cover every run");
    });

    criterion("AC6", "bound inequalities", 0, [&](Verdict& v) {
        for (unsigned k = 1; k <= 20; ++k)
            for (unsigned l = 1; l <= k; ++l) {
                if (k % l) continue;
                const mpz_class m = m_formula(k, l);
                v.require(m == oracle::m_value(k, l), "m_formula differs from oracle " + tag(k, l));
                v.require(prop12_bound(k, l).dominates(m), "m exceeds the bound " + tag(k, l));
            }
        for (unsigned n = 1; n <= 64; ++n)
            for (unsigned r = 1; r <= n; ++r)
                v.require(binom_upper_bound(n, r).dominates(binomial(n, r)),
                          "C(" + std::to_string(n) + "," + std::to_string(r) + ") exceeds (en/r)^r");
    });

    criterion("AC7", "coloring / satisfiability duality", 0, [&](Verdict& v) {
        std::vector<std::pair<std::string, Hypergraph>> corpus;
        corpus.emplace_back("dedup(2,2)", dedup(build_full(validate_params(2, 2))));
        corpus.emplace_back("(2,1)", build_full(validate_params(2, 1)));
        corpus.emplace_back("(3,1)", build_full(validate_params(3, 1)));
        auto hand = [&](std::string name, std::uint32_t n, std::uint32_t k,
                        std::vector<std::vector<Vertex>> edges) {
            Hypergraph h(n, k);
            for (const auto& e : edges) h.add_edge(e);
            corpus.emplace_back(std::move(name), std::move(h));
        };
        hand("fano", 7, 3, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
        hand("fano minus a line", 7, 3, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}});
        hand("triangle", 3, 2, {{0, 1}, {1, 2}, {0, 2}});
        hand("4-cycle", 4, 2, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
        hand("empty", 5, 3, {});
        std::mt19937_64 gen(77);
        const Hypergraph base = corpus[0].second;
        for (int t = 0; t < 40; ++t) {
            Hypergraph sub(base.vertex_count(), base.uniformity());
            for (std::size_t i = 0; i < base.edge_count(); ++i)
                if (gen() % 100 < static_cast<unsigned>(10 + 2 * t)) sub.add_edge(base.edge(i));
            corpus.emplace_back("random subgraph " + std::to_string(t), std::move(sub));
        }
        int colorable = 0, not_colorable = 0;
        for (const auto& [name, h] : corpus) {
            v.require(h.vertex_count() <= 12, name + " too large");
            const bool hyp = exhaustive_two_coloring(h).colorable();
            const Cnf f = hypergraph_to_cnf(h);
            const bool sat = oracle::truth_table_sat(f);
            v.require(hyp == sat, name + ": coloring and satisfiability disagree");
            v.require(dpll_satisfiable(f).satisfiable == sat, name + ": DPLL disagrees with truth table");
            (hyp ? colorable : not_colorable) += 1;
        }
        v.require(colorable > 0 && not_colorable > 0, "corpus lacks one of the two outcomes");
    });

    criterion("AC8", "determinism and DIMACS round-trip", 0, [&](Verdict& v) {
        for (auto [k, l] : {std::pair{2u, 1u}, std::pair{2u, 2u}, std::pair{4u, 2u}, std::pair{3u, 3u}}) {
            for (const char* fmt : {"edges", "dimacs"}) {
                const std::vector<std::string> args{"gen", "--k", std::to_string(k), "--l", std::to_string(l),
                                                    "--format", fmt};
                const std::string a = cli_output(args), b = cli_output(args);
                v.require(a == b, std::string("gen output differs between runs ") + fmt + " " + tag(k, l));
                if (std::string(fmt) == "dimacs") {
                    const Cnf f = parse_dimacs(a);
                    v.require(f == hypergraph_to_cnf(build_full(validate_params(k, l))),
                              "parsed DIMACS differs from the dual " + tag(k, l));
                    v.require(emit_dimacs(f) == a, "DIMACS round-trip changed bytes " + tag(k, l));
                }
            }
        }
    });

    std::printf("%s: %d failing criteria\n", failures ? "FAILED" : "OK", failures);
    return failures ? 1 : 0;
}
