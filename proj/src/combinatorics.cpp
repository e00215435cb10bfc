#include "propb/combinatorics.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "propb/construction.hpp"
#include "propb/errors.hpp"

namespace propb {

BoundValue::BoundValue() {
    mpfr_init2(lo_, kBoundPrecision);
    mpfr_init2(hi_, kBoundPrecision);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

BoundValue::BoundValue(const BoundValue& other) : BoundValue() {
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

BoundValue& BoundValue::operator=(const BoundValue& other) {
    if (this != &other) {
        mpfr_set(lo_, other.lo_, MPFR_RNDD);
        mpfr_set(hi_, other.hi_, MPFR_RNDU);
    }
    return *this;
}

BoundValue::~BoundValue() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

bool BoundValue::dominates(const mpz_class& x) const {
    return mpfr_cmp_z(lo_, x.get_mpz_t()) >= 0;
}

double BoundValue::upper_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

std::string BoundValue::to_short_string(int digits) const {
    if (mpfr_zero_p(hi_)) return "0";
    // display only: nearest rounding, mantissa in [1, 10)
    mpfr_exp_t exp10 = 0;
    char* raw = mpfr_get_str(nullptr, &exp10, 10, static_cast<std::size_t>(digits), hi_, MPFR_RNDN);
    std::string mant(raw);
    mpfr_free_str(raw);
    std::string out;
    out += mant[0];
    if (mant.size() > 1) {
        out += '.';
        out += mant.substr(1);
    }
    long e = static_cast<long>(exp10) - 1;
    if (e != 0) out += "e" + std::to_string(e);
    return out;
}

namespace {

mpz_class binomial_z(const mpz_class& n, std::uint64_t r) {
    mpz_class out;
    if (n < 0) return 0;
    if (mpz_cmp_ui(n.get_mpz_t(), r) < 0) return 0;
    mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(r));
    return out;
}

void exp_int(mpfr_t out, std::uint64_t x, mpfr_rnd_t rnd) {
    mpfr_set_ui(out, static_cast<unsigned long>(x), MPFR_RNDN); // exact for x < 2^64 at 128 bits
    mpfr_exp(out, out, rnd);
}

// 2^(2l + l^2) * k^l * 2^k * e^(k/l), one rounding direction
void prop12_expr(mpfr_t out, std::uint64_t k, std::uint64_t l, mpfr_rnd_t rnd) {
    mpfr_t t;
    mpfr_init2(t, kBoundPrecision);
    mpfr_ui_pow_ui(out, static_cast<unsigned long>(k), static_cast<unsigned long>(l), rnd);
    exp_int(t, k / l, rnd);
    mpfr_mul(out, out, t, rnd);
    mpfr_mul_2ui(out, out, static_cast<unsigned long>(2 * l + l * l + k), rnd);
    mpfr_clear(t);
}

void binom_bound_expr(mpfr_t out, std::uint64_t n, std::uint64_t r, mpfr_rnd_t rnd) {
    exp_int(out, 1, rnd);
    mpfr_mul_ui(out, out, static_cast<unsigned long>(n), rnd);
    mpfr_div_ui(out, out, static_cast<unsigned long>(r), rnd);
    mpfr_pow_ui(out, out, static_cast<unsigned long>(r), rnd);
}

} // namespace

mpz_class binomial(std::uint64_t n, std::uint64_t r) {
    if (r > n) return 0;
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
    return out;
}

EdgeCount m_formula(const Params& p) {
    mpz_class kp = p.k_prime();
    mpz_class shifts;
    mpz_pow_ui(shifts.get_mpz_t(), kp.get_mpz_t(), p.l());
    return binomial(p.sequence_count(), p.l()) * shifts * binomial(p.k_prime(), p.block_size());
}

EdgeCount m_formula(std::uint64_t k, std::uint64_t l) {
    check_pair(k, l);
    mpz_class kp = 1;
    mpz_mul_2exp(kp.get_mpz_t(), kp.get_mpz_t(), static_cast<mp_bitcnt_t>(l));
    kp = kp * static_cast<unsigned long>(k / l);
    mpz_class shifts;
    mpz_pow_ui(shifts.get_mpz_t(), kp.get_mpz_t(), static_cast<unsigned long>(l));
    return binomial(2 * l - 1, l) * shifts * binomial_z(kp, k / l);
}

BoundValue binom_upper_bound(std::uint64_t n, std::uint64_t r) {
    if (r == 0 || r > n) fail(ErrorKind::Domain, "binom_upper_bound needs 1 <= r <= n");
    BoundValue b;
    binom_bound_expr(b.lower(), n, r, MPFR_RNDD);
    binom_bound_expr(b.upper(), n, r, MPFR_RNDU);
    return b;
}

BoundValue prop12_bound(std::uint64_t k, std::uint64_t l) {
    check_pair(k, l);
    BoundValue b;
    prop12_expr(b.lower(), k, l, MPFR_RNDD);
    prop12_expr(b.upper(), k, l, MPFR_RNDU);
    return b;
}

std::uint64_t choose_l(std::uint64_t k) {
    if (k == 0) fail(ErrorKind::Parameter, "k must be positive");
    if (k > 1024) fail(ErrorKind::Parameter, "choose_l supports k <= 1024");
    std::uint64_t best = 1;
    mpz_class best_m = m_formula(k, 1);
    for (std::uint64_t l = 2; l <= k; ++l) {
        if (k % l != 0) continue;
        mpz_class m = m_formula(k, l);
        if (m < best_m) {
            best_m = m;
            best = l;
        }
    }
    return best;
}

} // namespace propb
