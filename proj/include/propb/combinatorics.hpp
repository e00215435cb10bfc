#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>
#include <mpfr.h>

namespace propb {

class Params;

/// Exact multiset edge count.
using EdgeCount = mpz_class;

/// Precision, in mantissa bits, of every BoundValue.
inline constexpr mpfr_prec_t kBoundPrecision = 128;

/// A positive real known only through an enclosing interval [lower, upper].
///
/// Both ends are computed with directed rounding of the same expression, so
/// the true value always lies inside. `upper()` is the reported (upward
/// rounded) value; `dominates()` compares against `lower()` so that an
/// inequality `x <= bound` is only ever confirmed when it truly holds.
class BoundValue {
public:
    BoundValue();
    BoundValue(const BoundValue& other);
    BoundValue& operator=(const BoundValue& other);
    ~BoundValue();

    const mpfr_t& lower() const { return lo_; }
    const mpfr_t& upper() const { return hi_; }
    mpfr_t& lower() { return lo_; }
    mpfr_t& upper() { return hi_; }

    /// True iff x <= the bound is certain (x <= lower end).
    bool dominates(const mpz_class& x) const;

    double upper_double() const;
    /// Upper end rendered with `digits` significant digits, e.g. "4.84e5".
    std::string to_short_string(int digits = 3) const;

private:
    mpfr_t lo_;
    mpfr_t hi_;
};

/// Exact C(n, r); zero when r > n.
mpz_class binomial(std::uint64_t n, std::uint64_t r);

/// C(2l-1, l) * k'^l * C(k', k/l).
EdgeCount m_formula(const Params& params);
/// Same product for any pair passing check_pair, without the 32-bit limits
/// of Params.
EdgeCount m_formula(std::uint64_t k, std::uint64_t l);

/// (e*n/r)^r. Throws Domain when r == 0 or r > n.
BoundValue binom_upper_bound(std::uint64_t n, std::uint64_t r);

/// 2^(2l + l^2) * k^l * 2^k * e^(k/l). Validates (k, l) first.
BoundValue prop12_bound(std::uint64_t k, std::uint64_t l);

/// Divisor l of k minimizing m(k, l) exactly; ties go to the smaller l.
std::uint64_t choose_l(std::uint64_t k);

} // namespace propb
