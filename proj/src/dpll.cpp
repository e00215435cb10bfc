#include "propb/dpll.hpp"

#include <algorithm>
#include <cstdlib>

#include "propb/errors.hpp"

namespace propb {

namespace {

// Literal codes: 2 * (v - 1) for v, 2 * (v - 1) + 1 for -v.
using Lit = std::uint32_t;

Lit encode(int lit) {
    const auto v = static_cast<std::uint32_t>(std::abs(lit)) - 1;
    return 2 * v + (lit < 0 ? 1 : 0);
}
Lit negate(Lit l) { return l ^ 1u; }
std::uint32_t var_of(Lit l) { return l >> 1; }

class Solver {
public:
    Solver(const Cnf& f, const DpllOptions& opts) : opts_(opts), nvars_(f.variable_count) {
        // duplicate literals and duplicate clauses do not change satisfiability
        std::vector<std::vector<Lit>> clauses;
        clauses.reserve(f.clauses.size());
        for (const auto& c : f.clauses) {
            std::vector<Lit> lits;
            for (int lit : c) lits.push_back(encode(lit));
            std::sort(lits.begin(), lits.end());
            lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
            clauses.push_back(std::move(lits));
        }
        std::sort(clauses.begin(), clauses.end());
        clauses.erase(std::unique(clauses.begin(), clauses.end()), clauses.end());

        occ_.resize(2 * std::size_t{nvars_});
        active_.assign(2 * std::size_t{nvars_}, 0);
        value_.assign(nvars_, kUnassigned);
        for (const auto& c : clauses) {
            const auto id = static_cast<std::uint32_t>(start_.size());
            start_.push_back(static_cast<std::uint32_t>(lits_.size()));
            len_.push_back(static_cast<std::uint32_t>(c.size()));
            for (Lit l : c) {
                lits_.push_back(l);
                occ_[l].push_back(id);
                ++active_[l];
            }
            if (c.empty()) has_empty_ = true;
        }
        sat_.assign(start_.size(), 0);
        false_.assign(start_.size(), 0);
        unsat_ = start_.size();
    }

    DpllResult solve() {
        DpllResult res;
        if (has_empty_ || !initial_units()) return finish(res, false);

        for (;;) {
            bool ok = propagate() && eliminate_pure();
            while (!ok) {
                if (!backtrack()) return finish(res, false);
                ok = propagate() && eliminate_pure();
            }
            if (unsat_ == 0) return finish(res, true);

            const Lit pick = choose();
            if (++stats_.decisions > opts_.node_budget)
                fail(ErrorKind::Budget, "DPLL decision budget exhausted");
            decisions_.push_back({trail_.size(), pick, false});
            assign(pick);
        }
    }

private:
    static constexpr std::int8_t kUnassigned = -1;

    struct Decision {
        std::size_t trail_pos;
        Lit lit;
        bool flipped;
    };

    bool is_true(Lit l) const {
        const auto v = value_[var_of(l)];
        return v != kUnassigned && v == ((l & 1u) ? 0 : 1);
    }
    bool is_assigned(Lit l) const { return value_[var_of(l)] != kUnassigned; }

    void assign(Lit l) {
        value_[var_of(l)] = (l & 1u) ? 0 : 1;
        trail_.push_back(l);
        for (std::uint32_t c : occ_[l]) {
            if (sat_[c]++ == 0) {
                --unsat_;
                for (std::uint32_t i = 0; i < len_[c]; ++i) --active_[lits_[start_[c] + i]];
            }
        }
        for (std::uint32_t c : occ_[negate(l)]) ++false_[c];
    }

    void unassign_to(std::size_t pos) {
        while (trail_.size() > pos) {
            const Lit l = trail_.back();
            trail_.pop_back();
            for (std::uint32_t c : occ_[negate(l)]) --false_[c];
            for (std::uint32_t c : occ_[l]) {
                if (--sat_[c] == 0) {
                    ++unsat_;
                    for (std::uint32_t i = 0; i < len_[c]; ++i) ++active_[lits_[start_[c] + i]];
                }
            }
            value_[var_of(l)] = kUnassigned;
        }
        qhead_ = std::min(qhead_, trail_.size());
    }

    bool initial_units() {
        for (std::uint32_t c = 0; c < len_.size(); ++c) {
            if (len_[c] != 1) continue;
            const Lit l = lits_[start_[c]];
            if (is_true(l)) continue;
            if (is_assigned(l)) return false;
            assign(l);
        }
        return true;
    }

    bool propagate() {
        while (qhead_ < trail_.size()) {
            const Lit l = trail_[qhead_++];
            for (std::uint32_t c : occ_[negate(l)]) {
                if (sat_[c] != 0) continue;
                if (false_[c] == len_[c]) {
                    ++stats_.conflicts;
                    return false;
                }
                if (false_[c] + 1 == len_[c]) {
                    for (std::uint32_t i = 0; i < len_[c]; ++i) {
                        const Lit u = lits_[start_[c] + i];
                        if (!is_assigned(u)) {
                            ++stats_.propagations;
                            assign(u);
                            break;
                        }
                    }
                }
            }
        }
        return true;
    }

    // Pure assignments only satisfy clauses, so they cannot conflict.
    bool eliminate_pure() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::uint32_t v = 0; v < nvars_; ++v) {
                if (value_[v] != kUnassigned) continue;
                const Lit pos = 2 * v, neg = 2 * v + 1;
                if (active_[pos] > 0 && active_[neg] == 0) {
                    assign(pos);
                } else if (active_[neg] > 0 && active_[pos] == 0) {
                    assign(neg);
                } else {
                    continue;
                }
                ++stats_.pure_literals;
                changed = true;
            }
        }
        qhead_ = trail_.size();
        return true;
    }

    Lit choose() const {
        std::uint32_t best_v = 0, best_score = 0;
        bool have = false;
        for (std::uint32_t v = 0; v < nvars_; ++v) {
            if (value_[v] != kUnassigned) continue;
            const std::uint32_t score = active_[2 * v] + active_[2 * v + 1];
            if (!have || score > best_score) {
                best_v = v;
                best_score = score;
                have = true;
            }
        }
        return active_[2 * best_v] >= active_[2 * best_v + 1] ? 2 * best_v : 2 * best_v + 1;
    }

    bool backtrack() {
        while (!decisions_.empty()) {
            Decision& d = decisions_.back();
            unassign_to(d.trail_pos);
            if (!d.flipped) {
                d.flipped = true;
                assign(negate(d.lit));
                return true;
            }
            decisions_.pop_back();
        }
        return false;
    }

    DpllResult& finish(DpllResult& res, bool sat) {
        res.satisfiable = sat;
        res.stats = stats_;
        if (sat) {
            res.model.assign(nvars_, false);
            for (std::uint32_t v = 0; v < nvars_; ++v) res.model[v] = value_[v] == 1;
        }
        return res;
    }

    DpllOptions opts_;
    std::uint32_t nvars_;
    std::vector<std::uint32_t> start_, len_;
    std::vector<Lit> lits_;
    std::vector<std::vector<std::uint32_t>> occ_;
    std::vector<std::uint32_t> active_; // occurrences in unsatisfied clauses
    std::vector<std::uint32_t> sat_, false_;
    std::size_t unsat_ = 0;
    std::vector<std::int8_t> value_;
    std::vector<Lit> trail_;
    std::size_t qhead_ = 0;
    std::vector<Decision> decisions_;
    DpllStats stats_;
    bool has_empty_ = false;
};

} // namespace

DpllResult dpll_satisfiable(const Cnf& f, const DpllOptions& opts) {
    f.validate();
    Solver solver(f, opts);
    DpllResult res = solver.solve();
    if (res.satisfiable && !satisfies(f, res.model))
        fail(ErrorKind::Assertion, "DPLL model does not satisfy the formula");
    return res;
}

} // namespace propb
