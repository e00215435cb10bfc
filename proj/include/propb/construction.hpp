#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace propb {

/// 0-based vertex number: (seq, pos) maps to seq * k' + pos.
using Vertex = std::uint32_t;

inline constexpr std::uint64_t kDefaultEdgeCap = 10'000'000;

/// Validated construction parameters (k, l) with k' = 2^l * k / l and
/// block size k / l.
class Params {
public:
    std::uint32_t k() const { return k_; }
    std::uint32_t l() const { return l_; }
    std::uint32_t k_prime() const { return k_prime_; }
    std::uint32_t block_size() const { return block_size_; }
    std::uint32_t sequence_count() const { return 2 * l_ - 1; }
    std::uint32_t vertex_count() const { return sequence_count() * k_prime_; }

    friend bool operator==(const Params&, const Params&) = default;

private:
    friend Params validate_params(std::uint64_t k, std::uint64_t l);
    std::uint32_t k_ = 0;
    std::uint32_t l_ = 0;
    std::uint32_t k_prime_ = 0;
    std::uint32_t block_size_ = 0;
};

/// Checks 1 <= l <= k and l | k without building the vertex universe.
void check_pair(std::uint64_t k, std::uint64_t l);

/// Parameter error for l > k, l == 0, or a vertex universe beyond 32 bits;
/// divisibility error when l does not divide k.
Params validate_params(std::uint64_t k, std::uint64_t l);

/// Vertex a_{seq,pos}; positions are 0-based, all arithmetic is mod k'.
struct VertexId {
    std::uint32_t seq = 0;
    std::uint32_t pos = 0;

    Vertex index(const Params& p) const { return seq * p.k_prime() + pos; }
    static VertexId from_index(const Params& p, Vertex v) {
        return {v / p.k_prime(), v % p.k_prime()};
    }

    friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

/// A k-set of vertices, kept sorted.
struct Edge {
    std::vector<VertexId> vertices;

    std::vector<Vertex> indices(const Params& p) const;
    friend bool operator==(const Edge&, const Edge&) = default;
};

/// One cyclic rotation per chosen sequence.
struct ShiftTuple {
    std::vector<std::uint32_t> shifts;
    friend bool operator==(const ShiftTuple&, const ShiftTuple&) = default;
};

/// Vertex (seq, (r + shift) mod k'). `slot` is the 1-based position of
/// `seq` among the chosen sequences; it only takes part in range checking.
VertexId shifted_vertex(const Params& p, std::uint32_t seq, std::uint32_t slot,
                        std::uint32_t r, std::uint32_t shift);

/// { (chosen[j], (r + shifts[j]) mod k') : j < l, r in positions }.
Edge edge_from(const Params& p, std::span<const std::uint32_t> chosen,
               const ShiftTuple& shifts, std::span<const std::uint32_t> positions);

/// Ordered multiset of uniform edges stored flat, `uniformity()` vertices
/// per edge, each edge sorted ascending.
class Hypergraph {
public:
    Hypergraph(std::uint32_t vertex_count, std::uint32_t uniformity,
               std::optional<Params> params = std::nullopt);
    /// Adopts flat edge data; every edge must already be sorted, distinct
    /// within itself and in range.
    Hypergraph(std::uint32_t vertex_count, std::uint32_t uniformity,
               std::optional<Params> params, std::vector<Vertex> data);

    std::uint32_t vertex_count() const { return vertex_count_; }
    std::uint32_t uniformity() const { return uniformity_; }
    const std::optional<Params>& params() const { return params_; }

    std::size_t edge_count() const { return uniformity_ ? data_.size() / uniformity_ : 0; }
    bool empty() const { return data_.empty(); }

    std::span<const Vertex> edge(std::size_t i) const {
        return {data_.data() + i * uniformity_, uniformity_};
    }
    std::span<const Vertex> data() const { return data_; }

    /// Appends a copy of `vertices` after sorting; throws Construction on
    /// wrong size, duplicate, or out-of-range vertex.
    void add_edge(std::span<const Vertex> vertices);

    void reserve_edges(std::size_t n) { data_.reserve(n * uniformity_); }

    friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

private:
    std::uint32_t vertex_count_;
    std::uint32_t uniformity_;
    std::optional<Params> params_;
    std::vector<Vertex> data_;
};

struct BuildOptions {
    std::uint64_t edge_cap = kDefaultEdgeCap;
    unsigned threads = 1;
};

/// Sorted vertex numbers of one edge; valid only during the callback.
using EdgeVisitor = std::function<void(std::span<const Vertex>)>;

/// Streams G_{X_1..X_l} in (shift tuple, subset) lexicographic order.
void for_each_subset_edge(const Params& p, std::span<const std::uint32_t> chosen,
                          const EdgeVisitor& visit);

/// Streams the full construction: every l-subset of sequences in
/// lexicographic order, each expanded by for_each_subset_edge.
void for_each_edge(const Params& p, const EdgeVisitor& visit);

/// Throws Size when m(k, l) (or the per-subset count) is above the cap.
void check_edge_cap(const Params& p, std::uint64_t cap, bool full = true);

Hypergraph build_subset_hypergraph(const Params& p, std::span<const std::uint32_t> chosen,
                                   const BuildOptions& opts = {});
Hypergraph build_full(const Params& p, const BuildOptions& opts = {});

/// Distinct edges in lexicographic order.
Hypergraph dedup(const Hypergraph& h);

/// Position of edge_from(p, chosen, shifts, positions) inside build_full(p).
/// `chosen` and `positions` must be strictly increasing.
std::uint64_t full_edge_index(const Params& p, std::span<const std::uint32_t> chosen,
                              const ShiftTuple& shifts,
                              std::span<const std::uint32_t> positions);

/// Lexicographic rank of a strictly increasing r-subset of {0..n-1}.
std::uint64_t combination_rank(std::uint32_t n, std::span<const std::uint32_t> combo);

/// Advances a strictly increasing r-subset of {0..n-1} to its lexicographic
/// successor; false once the last subset has been passed.
bool next_combination(std::vector<std::uint32_t>& combo, std::uint32_t n);

} // namespace propb
