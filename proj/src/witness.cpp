#include "propb/witness.hpp"

#include <algorithm>
#include <string>

#include "propb/errors.hpp"

namespace propb {

namespace {

void check_chosen_sequences(const Params& p, std::span<const std::uint32_t> chosen) {
    if (chosen.size() != p.l()) fail(ErrorKind::Input, "expected l chosen sequences");
    for (std::size_t i = 0; i < chosen.size(); ++i) {
        if (chosen[i] >= p.sequence_count()) fail(ErrorKind::Index, "sequence index out of range");
        for (std::size_t j = 0; j < i; ++j)
            if (chosen[i] == chosen[j]) fail(ErrorKind::Input, "chosen sequences must be distinct");
    }
}

void check_coloring(const Params& p, const Coloring& c) {
    if (c.size() != p.vertex_count())
        fail(ErrorKind::Input, "coloring covers " + std::to_string(c.size()) + " vertices, expected " +
                                   std::to_string(p.vertex_count()));
}

Color color_at(const Params& p, const Coloring& c, std::uint32_t seq, std::uint32_t r,
               std::uint32_t shift) {
    std::uint32_t pos = r + shift;
    if (pos >= p.k_prime()) pos -= p.k_prime();
    return c[seq * p.k_prime() + pos];
}

// prod over slots t >= from of (s-count in chosen[t]) / k'
mpq_class remaining_factor(const Params& p, const Coloring& c, Color s,
                           std::span<const std::uint32_t> chosen, std::size_t from) {
    mpz_class num = 1, den = 1;
    for (std::size_t t = from; t < chosen.size(); ++t) {
        std::uint32_t cnt = 0;
        for (std::uint32_t pos = 0; pos < p.k_prime(); ++pos)
            if (c[chosen[t] * p.k_prime() + pos] == s) ++cnt;
        num *= cnt;
        den *= p.k_prime();
    }
    mpq_class out(num, den);
    out.canonicalize();
    return out;
}

} // namespace

MajorityProfile majority_profile(const Params& p, const Coloring& c) {
    check_coloring(p, c);
    MajorityProfile profile;
    profile.per_sequence.resize(p.sequence_count());
    for (Vertex v = 0; v < p.vertex_count(); ++v) {
        auto& seq = profile.per_sequence[v / p.k_prime()];
        (c[v] == Color::Red ? seq.red : seq.blue) += 1;
    }
    return profile;
}

MajoritySelection select_same_majority(const Params& p, const MajorityProfile& profile) {
    if (profile.per_sequence.size() != p.sequence_count())
        fail(ErrorKind::Input, "profile does not cover 2l-1 sequences");
    std::uint32_t reds = 0, blues = 0;
    for (const auto& s : profile.per_sequence) {
        reds += s.red_majority();
        blues += s.blue_majority();
    }
    MajoritySelection sel;
    sel.color = blues > reds ? Color::Blue : Color::Red;
    for (std::uint32_t i = 0; i < profile.per_sequence.size() && sel.sequences.size() < p.l(); ++i)
        if (profile.per_sequence[i].majority(sel.color)) sel.sequences.push_back(i);
    if (sel.sequences.size() < p.l())
        fail(ErrorKind::Assertion, "pigeonhole selection found fewer than l sequences");
    return sel;
}

std::uint32_t aligned_count(const Params& p, const Coloring& c, Color s,
                            std::span<const std::uint32_t> chosen,
                            std::span<const std::uint32_t> shifts) {
    std::uint32_t count = 0;
    for (std::uint32_t r = 0; r < p.k_prime(); ++r) {
        bool all = true;
        for (std::size_t t = 0; t < shifts.size() && all; ++t)
            all = color_at(p, c, chosen[t], r, shifts[t]) == s;
        count += all;
    }
    return count;
}

mpq_class conditional_expectation(const Params& p, const Coloring& c, Color s,
                                  std::span<const std::uint32_t> chosen,
                                  std::span<const std::uint32_t> fixed) {
    check_coloring(p, c);
    check_chosen_sequences(p, chosen);
    if (fixed.size() > p.l()) fail(ErrorKind::Input, "more fixed shifts than l");
    for (std::uint32_t shift : fixed)
        if (shift >= p.k_prime()) fail(ErrorKind::Input, "fixed shift out of range");
    mpq_class e = aligned_count(p, c, s, chosen, fixed);
    return e * remaining_factor(p, c, s, chosen, fixed.size());
}

ShiftSearch derandomized_shifts(const Params& p, const Coloring& c, Color s,
                                std::span<const std::uint32_t> chosen) {
    check_coloring(p, c);
    check_chosen_sequences(p, chosen);
    for (std::uint32_t seq : chosen) {
        std::uint32_t cnt = 0;
        for (std::uint32_t pos = 0; pos < p.k_prime(); ++pos) cnt += c[seq * p.k_prime() + pos] == s;
        if (2 * cnt < p.k_prime())
            fail(ErrorKind::Majority, "sequence " + std::to_string(seq) + " has no " + to_string(s) + " majority");
    }

    const std::uint32_t kp = p.k_prime();
    ShiftSearch out;
    // alive[r]: position r is s-colored in every slot fixed so far
    std::vector<char> alive(kp, 1);
    std::uint32_t alive_count = kp;
    out.expectations.push_back(alive_count * remaining_factor(p, c, s, chosen, 0));

    for (std::size_t j = 0; j < chosen.size(); ++j) {
        const mpq_class rest = remaining_factor(p, c, s, chosen, j + 1);
        std::uint32_t best_shift = 0, best_count = 0;
        bool have = false;
        for (std::uint32_t shift = 0; shift < kp; ++shift) {
            std::uint32_t cnt = 0;
            for (std::uint32_t r = 0; r < kp; ++r)
                cnt += alive[r] && color_at(p, c, chosen[j], r, shift) == s;
            // rest is shared by every candidate, so comparing counts is exact
            if (!have || cnt > best_count) {
                best_shift = shift;
                best_count = cnt;
                have = true;
            }
        }
        mpq_class e = best_count * rest;
        if (e < out.expectations.back())
            fail(ErrorKind::Assertion, "conditional expectation decreased");
        out.expectations.push_back(e);
        out.shifts.shifts.push_back(best_shift);
        for (std::uint32_t r = 0; r < kp; ++r)
            alive[r] = alive[r] && color_at(p, c, chosen[j], r, best_shift) == s;
        alive_count = best_count;
    }

    out.qualifying = alive_count;
    if (out.expectations.back() != mpq_class(alive_count))
        fail(ErrorKind::Assertion, "final expectation differs from the aligned count");
    if (out.qualifying < p.block_size())
        fail(ErrorKind::Assertion, "fewer than k/l aligned positions after derandomization");
    for (std::uint32_t r = 0; r < kp && out.positions.size() < p.block_size(); ++r)
        if (alive[r]) out.positions.push_back(r);
    return out;
}

Witness monochromatic_witness(const Params& p, const Hypergraph& h, const Coloring& c) {
    if (h.params() && !(*h.params() == p)) fail(ErrorKind::Input, "hypergraph built for other parameters");
    if (h.vertex_count() != p.vertex_count() || h.uniformity() != p.k())
        fail(ErrorKind::Input, "hypergraph does not match parameters");

    const MajorityProfile profile = majority_profile(p, c);
    const MajoritySelection sel = select_same_majority(p, profile);
    ShiftSearch search = derandomized_shifts(p, c, sel.color, sel.sequences);

    Witness w;
    w.color = sel.color;
    w.sequences = sel.sequences;
    w.shifts = search.shifts;
    w.positions = search.positions;
    w.qualifying = search.qualifying;
    w.edge = edge_from(p, w.sequences, w.shifts, w.positions);

    const std::vector<Vertex> idx = w.edge.indices(p);
    if (!c.monochromatic(idx, w.color)) fail(ErrorKind::Assertion, "witness edge is not monochromatic");

    auto matches = [&](std::size_t i) {
        auto e = h.edge(i);
        return std::equal(e.begin(), e.end(), idx.begin(), idx.end());
    };
    const std::uint64_t expected = full_edge_index(p, w.sequences, w.shifts, w.positions);
    if (expected < h.edge_count() && matches(expected)) {
        w.edge_index = expected;
        return w;
    }
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
        if (matches(i)) {
            w.edge_index = i;
            return w;
        }
    }
    fail(ErrorKind::Assertion, "witness edge is not an edge of the hypergraph");
}

} // namespace propb
