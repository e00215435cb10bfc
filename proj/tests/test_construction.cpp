#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <sstream>

#include "oracles.hpp"
#include "propb/combinatorics.hpp"
#include "propb/construction.hpp"
#include "propb/errors.hpp"
#include "propb/formats.hpp"

using namespace propb;

namespace {

ErrorKind kind_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error thrown");
    return ErrorKind::Assertion;
}

std::vector<std::vector<Vertex>> edges_of(const Hypergraph& h) {
    std::vector<std::vector<Vertex>> out;
    for (std::size_t i = 0; i < h.edge_count(); ++i) out.emplace_back(h.edge(i).begin(), h.edge(i).end());
    return out;
}

Edge make_edge(std::initializer_list<VertexId> v) { return Edge{std::vector<VertexId>(v)}; }

const std::pair<unsigned, unsigned> kSmall[] = {{1, 1}, {2, 1}, {3, 1}, {4, 1}, {2, 2}, {4, 2}, {3, 3}};

} // namespace

TEST_CASE("validate_params") {
    const Params a = validate_params(2, 1);
    CHECK(a.k_prime() == 4);
    CHECK(a.block_size() == 2);
    CHECK(a.vertex_count() == 4);

    const Params b = validate_params(4, 2);
    CHECK(b.k_prime() == 8);
    CHECK(b.block_size() == 2);
    CHECK(b.sequence_count() == 3);
    CHECK(b.vertex_count() == 24);

    CHECK(kind_of([] { validate_params(3, 2); }) == ErrorKind::Divisibility);
    CHECK(kind_of([] { validate_params(2, 3); }) == ErrorKind::Parameter);
    CHECK(kind_of([] { validate_params(0, 1); }) == ErrorKind::Parameter);
    CHECK(kind_of([] { validate_params(4, 0); }) == ErrorKind::Parameter);
    CHECK(kind_of([] { validate_params(64, 32); }) == ErrorKind::Parameter);
}

TEST_CASE("shifted_vertex") {
    const Params p4 = validate_params(2, 1);
    CHECK(shifted_vertex(p4, 0, 1, 3, 2) == VertexId{0, 1});
    CHECK(shifted_vertex(p4, 0, 1, 0, 0) == VertexId{0, 0});

    const Params p8 = validate_params(4, 2);
    CHECK(shifted_vertex(p8, 2, 2, 7, 1) == VertexId{2, 0});

    CHECK(kind_of([&] { shifted_vertex(p8, 3, 1, 0, 0); }) == ErrorKind::Index);
    CHECK(kind_of([&] { shifted_vertex(p8, 0, 3, 0, 0); }) == ErrorKind::Index);
    CHECK(kind_of([&] { shifted_vertex(p8, 0, 0, 0, 0); }) == ErrorKind::Index);
    CHECK(kind_of([&] { shifted_vertex(p8, 0, 1, 8, 0); }) == ErrorKind::Index);
    CHECK(kind_of([&] { shifted_vertex(p8, 0, 1, 0, 8); }) == ErrorKind::Index);
}

TEST_CASE("edge_from") {
    const Params p21 = validate_params(2, 1);
    std::vector<std::uint32_t> c0{0}, s01{0, 1};
    CHECK(edge_from(p21, c0, {{0}}, s01) == make_edge({{0, 0}, {0, 1}}));

    const Params p22 = validate_params(2, 2);
    std::vector<std::uint32_t> c02{0, 2}, s2{2};
    CHECK(edge_from(p22, c02, {{1, 3}}, s2) == make_edge({{0, 3}, {2, 1}}));

    const Params p42 = validate_params(4, 2);
    std::vector<std::uint32_t> c01{0, 1}, s04{0, 4};
    CHECK(edge_from(p42, c01, {{0, 0}}, s04) == make_edge({{0, 0}, {0, 4}, {1, 0}, {1, 4}}));

    SUBCASE("cardinality errors") {
        std::vector<std::uint32_t> one{0}, three{0, 1, 2}, dup{1, 1}, s0{0};
        CHECK(kind_of([&] { edge_from(p42, one, {{0}}, s04); }) == ErrorKind::Construction);
        CHECK(kind_of([&] { edge_from(p42, dup, {{0, 0}}, s04); }) == ErrorKind::Construction);
        CHECK(kind_of([&] { edge_from(p42, c01, {{0}}, s04); }) == ErrorKind::Construction);
        CHECK(kind_of([&] { edge_from(p42, c01, {{0, 0}}, s0); }) == ErrorKind::Construction);
        CHECK(kind_of([&] { edge_from(p42, c01, {{0, 0}}, three); }) == ErrorKind::Construction);
        std::vector<std::uint32_t> same{3, 3};
        CHECK(kind_of([&] { edge_from(p42, c01, {{0, 0}}, same); }) == ErrorKind::Construction);
    }
}

TEST_CASE("build_subset_hypergraph counts and dedup") {
    {
        const Params p = validate_params(2, 1);
        std::vector<std::uint32_t> c{0};
        const Hypergraph h = build_subset_hypergraph(p, c);
        CHECK(h.edge_count() == 24);
        const Hypergraph d = dedup(h);
        CHECK(d.edge_count() == 6);
        // all 2-subsets of {0,1,2,3}
        std::vector<std::vector<Vertex>> pairs;
        for (Vertex a = 0; a < 4; ++a)
            for (Vertex b = a + 1; b < 4; ++b) pairs.push_back({a, b});
        CHECK(edges_of(d) == pairs);
    }
    {
        const Params p = validate_params(2, 2);
        std::vector<std::uint32_t> c{0, 1};
        const Hypergraph h = build_subset_hypergraph(p, c);
        CHECK(h.edge_count() == 64);
        const Hypergraph d = dedup(h);
        CHECK(d.edge_count() == 16);
        for (const auto& e : edges_of(d)) {
            CHECK(e[0] < 4);
            CHECK(e[1] >= 4);
            CHECK(e[1] < 8);
        }
    }
    {
        const Params p = validate_params(4, 2);
        std::vector<std::uint32_t> c{0, 1};
        CHECK(build_subset_hypergraph(p, c).edge_count() == 1792);
    }
}

TEST_CASE("build_subset_hypergraph touches only the chosen sequences") {
    const Params p = validate_params(4, 2);
    std::vector<std::uint32_t> c{2, 0}; // unsorted order is allowed
    const Hypergraph h = build_subset_hypergraph(p, c);
    for (Vertex v : h.data()) CHECK(v / p.k_prime() != 1);
    CHECK(h.vertex_count() == p.vertex_count());
}

TEST_CASE("build_full") {
    const Params p21 = validate_params(2, 1);
    const Hypergraph h21 = build_full(p21);
    CHECK(h21.edge_count() == 24);
    CHECK(h21.vertex_count() == 4);

    const Params p22 = validate_params(2, 2);
    const Hypergraph h22 = build_full(p22);
    CHECK(h22.edge_count() == 192);
    CHECK(h22.vertex_count() == 12);
    // complete tripartite graph K_{4,4,4}
    const Hypergraph d22 = dedup(h22);
    CHECK(d22.edge_count() == 48);
    for (const auto& e : edges_of(d22)) CHECK(e[0] / 4 != e[1] / 4);

    const Hypergraph h42 = build_full(validate_params(4, 2));
    CHECK(h42.edge_count() == 5376);
    CHECK(h42.vertex_count() == 24);
}

TEST_CASE("build_full matches the definition edge by edge") {
    for (auto [k, l] : kSmall) {
        const Params p = validate_params(k, l);
        INFO("k=" << k << " l=" << l);
        REQUIRE(edges_of(build_full(p)) == oracle::full_edges(k, l));
    }
}

TEST_CASE("l = 1 degenerates to all k-subsets of one 2k-sequence") {
    for (unsigned k = 1; k <= 5; ++k) {
        const Params p = validate_params(k, 1);
        const Hypergraph d = dedup(build_full(p));
        CHECK(d.vertex_count() == 2 * k);
        std::vector<std::vector<Vertex>> expect;
        for (const auto& s : oracle::subsets(2 * k, k)) expect.emplace_back(s.begin(), s.end());
        CHECK(edges_of(d) == expect);
    }
}

TEST_CASE("uniformity, determinism and thread-order independence") {
    for (auto [k, l] : std::initializer_list<std::pair<unsigned, unsigned>>{{2, 2}, {4, 2}, {6, 2}, {3, 3}}) {
        const Params p = validate_params(k, l);
        const Hypergraph a = build_full(p);
        const Hypergraph b = build_full(p);
        const Hypergraph t = build_full(p, {kDefaultEdgeCap, 3});
        CHECK(a == b);
        CHECK(a == t);
        REQUIRE(mpz_class(a.edge_count()) == m_formula(p));
        for (std::size_t i = 0; i < a.edge_count(); ++i) {
            auto e = a.edge(i);
            REQUIRE(e.size() == k);
            for (std::size_t j = 1; j < e.size(); ++j) REQUIRE(e[j - 1] < e[j]);
            std::set<Vertex> seqs;
            for (Vertex v : e) seqs.insert(v / p.k_prime());
            REQUIRE(seqs.size() <= l);
        }
    }
}

TEST_CASE("streaming matches materialized construction") {
    const Params p = validate_params(4, 2);
    const Hypergraph h = build_full(p);
    std::size_t i = 0;
    bool same = true;
    for_each_edge(p, [&](std::span<const Vertex> e) {
        auto f = h.edge(i++);
        same = same && std::equal(e.begin(), e.end(), f.begin(), f.end());
    });
    CHECK(i == h.edge_count());
    CHECK(same);
}

TEST_CASE("edge cap") {
    const Params p = validate_params(4, 4); // m = 36,700,160
    CHECK(kind_of([&] { build_full(p); }) == ErrorKind::Size);
    CHECK(kind_of([&] { build_full(validate_params(4, 2), {5375, 1}); }) == ErrorKind::Size);
    CHECK(build_full(validate_params(4, 2), {5376, 1}).edge_count() == 5376);
    std::vector<std::uint32_t> c{0, 1};
    CHECK(kind_of([&] { build_subset_hypergraph(validate_params(4, 2), c, {1791, 1}); }) == ErrorKind::Size);
}

TEST_CASE("dedup edge cases") {
    Hypergraph empty(5, 3);
    CHECK(dedup(empty) == empty);

    const Hypergraph d = dedup(build_full(validate_params(4, 2)));
    CHECK(d.edge_count() == 624);
    CHECK(dedup(d) == d);
}

TEST_CASE("combination ranking") {
    std::vector<std::uint32_t> combo{0, 1, 2};
    std::uint64_t rank = 0;
    do {
        REQUIRE(combination_rank(7, combo) == rank++);
    } while (next_combination(combo, 7));
    CHECK(rank == 35);
}

TEST_CASE("full_edge_index locates edges") {
    for (auto [k, l] : kSmall) {
        const Params p = validate_params(k, l);
        const Hypergraph h = build_full(p);
        std::uint64_t idx = 0;
        for (const auto& chosen : oracle::subsets(2 * l - 1, l))
            for (const auto& sh : oracle::tuples(p.k_prime(), l))
                for (const auto& S : oracle::subsets(p.k_prime(), k / l)) {
                    std::vector<std::uint32_t> c(chosen.begin(), chosen.end()), s(S.begin(), S.end());
                    ShiftTuple t{std::vector<std::uint32_t>(sh.begin(), sh.end())};
                    REQUIRE(full_edge_index(p, c, t, s) == idx);
                    const auto e = edge_from(p, c, t, s).indices(p);
                    auto f = h.edge(idx);
                    REQUIRE(std::equal(e.begin(), e.end(), f.begin(), f.end()));
                    ++idx;
                }
    }
}

TEST_CASE("edge-list text format") {
    const Hypergraph h = build_full(validate_params(2, 2));
    std::ostringstream out;
    write_edge_list(out, h);
    const std::string text = out.str();
    CHECK(text.rfind("p hyp 12 192 2\n1 5\n", 0) == 0);
    std::istringstream in(text);
    const Hypergraph back = read_edge_list(in);
    CHECK(edges_of(back) == edges_of(h));

    std::istringstream bad("p hyp 3 1 2\n1 4\n");
    CHECK(kind_of([&] { read_edge_list(bad); }) == ErrorKind::Input);
    std::istringstream short_count("p hyp 3 2 2\n1 2\n");
    CHECK(kind_of([&] { read_edge_list(short_count); }) == ErrorKind::Input);
}

TEST_CASE("hypergraph rejects malformed edges") {
    Hypergraph h(4, 2);
    std::vector<Vertex> rep{1, 1}, far{0, 4}, wide{0, 1, 2};
    CHECK(kind_of([&] { h.add_edge(rep); }) == ErrorKind::Construction);
    CHECK(kind_of([&] { h.add_edge(far); }) == ErrorKind::Construction);
    CHECK(kind_of([&] { h.add_edge(wide); }) == ErrorKind::Construction);
    std::vector<Vertex> rev{3, 0};
    h.add_edge(rev);
    CHECK(h.edge(0)[0] == 0);
    CHECK(kind_of([] { Hypergraph(4, 2, std::nullopt, {2, 1}); }) == ErrorKind::Construction);
}
