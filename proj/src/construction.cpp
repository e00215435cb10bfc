#include "propb/construction.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>
#include <thread>

#include "propb/combinatorics.hpp"
#include "propb/errors.hpp"

namespace propb {

void check_pair(std::uint64_t k, std::uint64_t l) {
    if (k == 0 || l == 0) fail(ErrorKind::Parameter, "k and l must be positive");
    if (l > k) fail(ErrorKind::Parameter, "l must not exceed k");
    if (k % l != 0) fail(ErrorKind::Divisibility, "l must divide k");
}

Params validate_params(std::uint64_t k, std::uint64_t l) {
    check_pair(k, l);
    constexpr std::uint64_t limit = std::numeric_limits<std::uint32_t>::max();
    if (l >= 32) fail(ErrorKind::Parameter, "l too large for a 32-bit vertex universe");
    const std::uint64_t block = k / l;
    const std::uint64_t k_prime = (std::uint64_t{1} << l) * block;
    if (block > limit || k_prime > limit || (2 * l - 1) * k_prime > limit)
        fail(ErrorKind::Parameter, "vertex universe exceeds 32-bit numbering");
    Params p;
    p.k_ = static_cast<std::uint32_t>(k);
    p.l_ = static_cast<std::uint32_t>(l);
    p.k_prime_ = static_cast<std::uint32_t>(k_prime);
    p.block_size_ = static_cast<std::uint32_t>(block);
    return p;
}

std::vector<Vertex> Edge::indices(const Params& p) const {
    std::vector<Vertex> out;
    out.reserve(vertices.size());
    for (const auto& v : vertices) out.push_back(v.index(p));
    return out;
}

VertexId shifted_vertex(const Params& p, std::uint32_t seq, std::uint32_t slot,
                        std::uint32_t r, std::uint32_t shift) {
    if (seq >= p.sequence_count()) fail(ErrorKind::Index, "sequence index out of range");
    if (slot < 1 || slot > p.l()) fail(ErrorKind::Index, "slot index out of range");
    if (r >= p.k_prime()) fail(ErrorKind::Index, "position out of range");
    if (shift >= p.k_prime()) fail(ErrorKind::Index, "shift out of range");
    std::uint32_t pos = r + shift;
    if (pos >= p.k_prime()) pos -= p.k_prime();
    return {seq, pos};
}

namespace {

void check_chosen(const Params& p, std::span<const std::uint32_t> chosen) {
    if (chosen.size() != p.l()) fail(ErrorKind::Construction, "expected l chosen sequences");
    for (std::size_t i = 0; i < chosen.size(); ++i) {
        if (chosen[i] >= p.sequence_count()) fail(ErrorKind::Index, "sequence index out of range");
        for (std::size_t j = 0; j < i; ++j)
            if (chosen[i] == chosen[j]) fail(ErrorKind::Construction, "chosen sequences must be distinct");
    }
}

std::uint64_t to_u64(const mpz_class& x, const char* what) {
    if (x < 0 || mpz_sizeinbase(x.get_mpz_t(), 2) > 64) fail(ErrorKind::Size, what);
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, x.get_mpz_t());
    return out;
}

std::uint64_t per_subset_count(const Params& p) {
    return to_u64(m_formula(p) / binomial(p.sequence_count(), p.l()), "edge count exceeds 64 bits");
}

// Emits every edge whose first shift is in [first_lo, first_hi), in
// (shift tuple, subset) lexicographic order.
template <class Visit>
void enumerate_block(const Params& p, std::span<const std::uint32_t> chosen,
                     std::uint32_t first_lo, std::uint32_t first_hi, Visit&& visit) {
    const std::uint32_t l = p.l();
    const std::uint32_t kp = p.k_prime();
    const std::uint32_t b = p.block_size();
    if (first_lo >= first_hi) return;

    std::vector<std::uint32_t> shifts(l, 0);
    shifts[0] = first_lo;
    std::vector<std::uint32_t> combo(b);
    std::vector<Vertex> edge(p.k());

    for (;;) {
        std::iota(combo.begin(), combo.end(), 0u);
        do {
            std::size_t out = 0;
            for (std::uint32_t j = 0; j < l; ++j) {
                const Vertex base = chosen[j] * kp;
                const std::uint32_t s = shifts[j];
                for (std::uint32_t r : combo) {
                    std::uint32_t pos = r + s;
                    if (pos >= kp) pos -= kp;
                    edge[out++] = base + pos;
                }
            }
            std::sort(edge.begin(), edge.end());
            visit(std::span<const Vertex>(edge));
        } while (next_combination(combo, kp));

        // odometer, last shift fastest
        std::uint32_t j = l;
        while (j > 0) {
            --j;
            if (++shifts[j] < (j == 0 ? first_hi : kp)) break;
            if (j == 0) return;
            shifts[j] = 0;
        }
    }
}

} // namespace

Edge edge_from(const Params& p, std::span<const std::uint32_t> chosen,
               const ShiftTuple& shifts, std::span<const std::uint32_t> positions) {
    check_chosen(p, chosen);
    if (shifts.shifts.size() != p.l()) fail(ErrorKind::Construction, "expected l shifts");
    if (positions.size() != p.block_size()) fail(ErrorKind::Construction, "expected k/l positions");
    for (std::size_t i = 0; i < positions.size(); ++i) {
        if (positions[i] >= p.k_prime()) fail(ErrorKind::Index, "position out of range");
        for (std::size_t j = 0; j < i; ++j)
            if (positions[i] == positions[j]) fail(ErrorKind::Construction, "positions must be distinct");
    }
    Edge e;
    e.vertices.reserve(p.k());
    for (std::uint32_t j = 0; j < p.l(); ++j)
        for (std::uint32_t r : positions)
            e.vertices.push_back(shifted_vertex(p, chosen[j], j + 1, r, shifts.shifts[j]));
    std::sort(e.vertices.begin(), e.vertices.end());
    if (std::adjacent_find(e.vertices.begin(), e.vertices.end()) != e.vertices.end())
        fail(ErrorKind::Assertion, "edge_from produced a repeated vertex");
    return e;
}

Hypergraph::Hypergraph(std::uint32_t vertex_count, std::uint32_t uniformity,
                       std::optional<Params> params)
    : vertex_count_(vertex_count), uniformity_(uniformity), params_(params) {}

Hypergraph::Hypergraph(std::uint32_t vertex_count, std::uint32_t uniformity,
                       std::optional<Params> params, std::vector<Vertex> data)
    : vertex_count_(vertex_count), uniformity_(uniformity), params_(params), data_(std::move(data)) {
    if (uniformity_ == 0 ? !data_.empty() : data_.size() % uniformity_ != 0)
        fail(ErrorKind::Construction, "flat edge data is not a multiple of the uniformity");
    for (std::size_t i = 0; i < edge_count(); ++i) {
        auto e = edge(i);
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (e[j] >= vertex_count_) fail(ErrorKind::Construction, "edge vertex out of range");
            if (j > 0 && e[j - 1] >= e[j]) fail(ErrorKind::Construction, "edge not strictly increasing");
        }
    }
}

void Hypergraph::add_edge(std::span<const Vertex> vertices) {
    if (vertices.size() != uniformity_) fail(ErrorKind::Construction, "edge size differs from uniformity");
    std::vector<Vertex> e(vertices.begin(), vertices.end());
    std::sort(e.begin(), e.end());
    for (std::size_t j = 0; j < e.size(); ++j) {
        if (e[j] >= vertex_count_) fail(ErrorKind::Construction, "edge vertex out of range");
        if (j > 0 && e[j - 1] == e[j]) fail(ErrorKind::Construction, "repeated vertex in edge");
    }
    data_.insert(data_.end(), e.begin(), e.end());
}

void for_each_subset_edge(const Params& p, std::span<const std::uint32_t> chosen,
                          const EdgeVisitor& visit) {
    check_chosen(p, chosen);
    enumerate_block(p, chosen, 0, p.k_prime(), visit);
}

void for_each_edge(const Params& p, const EdgeVisitor& visit) {
    std::vector<std::uint32_t> chosen(p.l());
    std::iota(chosen.begin(), chosen.end(), 0u);
    do {
        enumerate_block(p, chosen, 0, p.k_prime(), visit);
    } while (next_combination(chosen, p.sequence_count()));
}

void check_edge_cap(const Params& p, std::uint64_t cap, bool full) {
    mpz_class m = m_formula(p);
    if (!full) m /= binomial(p.sequence_count(), p.l());
    if (m > mpz_class(std::to_string(cap))) {
        fail(ErrorKind::Size, "refusing to materialize " + m.get_str() + " edges for (k=" +
                                  std::to_string(p.k()) + ", l=" + std::to_string(p.l()) +
                                  "); cap is " + std::to_string(cap));
    }
}

Hypergraph build_subset_hypergraph(const Params& p, std::span<const std::uint32_t> chosen,
                                   const BuildOptions& opts) {
    check_chosen(p, chosen);
    check_edge_cap(p, opts.edge_cap, false);
    std::vector<Vertex> data;
    data.reserve(per_subset_count(p) * p.k());
    enumerate_block(p, chosen, 0, p.k_prime(), [&](std::span<const Vertex> e) {
        data.insert(data.end(), e.begin(), e.end());
    });
    return Hypergraph(p.vertex_count(), p.k(), p, std::move(data));
}

Hypergraph build_full(const Params& p, const BuildOptions& opts) {
    check_edge_cap(p, opts.edge_cap, true);
    const std::uint64_t per_subset = per_subset_count(p);
    const std::uint64_t subsets = to_u64(binomial(p.sequence_count(), p.l()), "subset count");
    const std::uint64_t per_task = per_subset / p.k_prime(); // one (subset, first shift) pair
    const std::uint64_t tasks = subsets * p.k_prime();
    const std::uint32_t k = p.k();

    std::vector<std::vector<std::uint32_t>> subset_list;
    {
        std::vector<std::uint32_t> chosen(p.l());
        std::iota(chosen.begin(), chosen.end(), 0u);
        do subset_list.push_back(chosen);
        while (next_combination(chosen, p.sequence_count()));
    }

    std::vector<Vertex> data(subsets * per_subset * k);
    auto run_task = [&](std::uint64_t t) {
        const auto& chosen = subset_list[t / p.k_prime()];
        const auto first = static_cast<std::uint32_t>(t % p.k_prime());
        Vertex* out = data.data() + t * per_task * k;
        enumerate_block(p, chosen, first, first + 1, [&](std::span<const Vertex> e) {
            out = std::copy(e.begin(), e.end(), out);
        });
    };

    const unsigned threads = std::max(1u, opts.threads);
    if (threads == 1 || tasks == 1) {
        for (std::uint64_t t = 0; t < tasks; ++t) run_task(t);
    } else {
        // tasks write disjoint, precomputed slices, so the layout matches
        // the sequential order exactly
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < threads; ++w)
            pool.emplace_back([&, w] {
                for (std::uint64_t t = w; t < tasks; t += threads) run_task(t);
            });
    }
    return Hypergraph(p.vertex_count(), k, p, std::move(data));
}

Hypergraph dedup(const Hypergraph& h) {
    std::vector<std::size_t> order(h.edge_count());
    std::iota(order.begin(), order.end(), std::size_t{0});
    auto less = [&](std::size_t a, std::size_t b) {
        auto ea = h.edge(a), eb = h.edge(b);
        return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
    };
    auto same = [&](std::size_t a, std::size_t b) {
        auto ea = h.edge(a), eb = h.edge(b);
        return std::equal(ea.begin(), ea.end(), eb.begin(), eb.end());
    };
    std::sort(order.begin(), order.end(), less);
    order.erase(std::unique(order.begin(), order.end(), same), order.end());

    std::vector<Vertex> data;
    data.reserve(order.size() * h.uniformity());
    for (std::size_t i : order) {
        auto e = h.edge(i);
        data.insert(data.end(), e.begin(), e.end());
    }
    return Hypergraph(h.vertex_count(), h.uniformity(), h.params(), std::move(data));
}

std::uint64_t combination_rank(std::uint32_t n, std::span<const std::uint32_t> combo) {
    const auto r = static_cast<std::uint32_t>(combo.size());
    mpz_class rank = 0;
    std::uint32_t next = 0; // smallest value allowed at slot i
    for (std::uint32_t i = 0; i < r; ++i) {
        if (combo[i] < next || combo[i] >= n) fail(ErrorKind::Index, "combination not increasing or out of range");
        for (std::uint32_t v = next; v < combo[i]; ++v) rank += binomial(n - 1 - v, r - 1 - i);
        next = combo[i] + 1;
    }
    return to_u64(rank, "combination rank exceeds 64 bits");
}

bool next_combination(std::vector<std::uint32_t>& combo, std::uint32_t n) {
    const auto r = static_cast<std::uint32_t>(combo.size());
    for (std::uint32_t i = r; i > 0; --i) {
        if (combo[i - 1] < n - r + (i - 1)) {
            ++combo[i - 1];
            for (std::uint32_t j = i; j < r; ++j) combo[j] = combo[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::uint64_t full_edge_index(const Params& p, std::span<const std::uint32_t> chosen,
                              const ShiftTuple& shifts,
                              std::span<const std::uint32_t> positions) {
    check_chosen(p, chosen);
    if (shifts.shifts.size() != p.l()) fail(ErrorKind::Construction, "expected l shifts");
    if (positions.size() != p.block_size()) fail(ErrorKind::Construction, "expected k/l positions");
    mpz_class idx = combination_rank(p.sequence_count(), chosen);
    for (std::uint32_t s : shifts.shifts) {
        if (s >= p.k_prime()) fail(ErrorKind::Index, "shift out of range");
        idx = idx * p.k_prime() + s;
    }
    idx = idx * binomial(p.k_prime(), p.block_size()) + combination_rank(p.k_prime(), positions);
    return to_u64(idx, "edge index exceeds 64 bits");
}

} // namespace propb
