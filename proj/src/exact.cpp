#include "matchfab/exact.hpp"

#include <cmath>

namespace matchfab {

BigInt pow2(unsigned long e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

BigInt pow4(unsigned long e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 4, e);
    return r;
}

BigInt pow_ui(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

std::optional<BigInt> exact_sqrt(const BigInt& v) {
    if (sgn(v) < 0) return std::nullopt;
    if (!mpz_perfect_square_p(v.get_mpz_t())) return std::nullopt;
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
    return r;
}

std::optional<unsigned long> exact_log2(const BigInt& v) {
    if (sgn(v) <= 0) return std::nullopt;
    if (mpz_popcount(v.get_mpz_t()) != 1) return std::nullopt;
    return mpz_sizeinbase(v.get_mpz_t(), 2) - 1;
}

double log2_approx(const BigInt& v) {
    if (auto e = exact_log2(v)) return static_cast<double>(*e);
    long exp2 = 0;
    double mant = mpz_get_d_2exp(&exp2, v.get_mpz_t()); // v = mant * 2^exp2, mant in [0.5, 1)
    return std::log2(mant) + static_cast<double>(exp2);
}

std::string to_decimal(const BigInt& v) { return v.get_str(10); }

BigInt from_decimal(const std::string& s) {
    BigInt r;
    if (mpz_set_str(r.get_mpz_t(), s.c_str(), 10) != 0)
        throw Error("not a decimal integer: '" + s + "'");
    return r;
}

Rational make_rational(const BigInt& num, const BigInt& den) {
    if (sgn(den) == 0) throw DomainError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str(10);
    return r.get_str(10);
}

double to_double(const Rational& r) { return r.get_d(); }

std::uint64_t mod_u64(const BigInt& v, std::uint64_t m) {
    BigInt r, mm;
    mpz_import(mm.get_mpz_t(), 1, 1, sizeof(m), 0, 0, &m);
    mpz_mod(r.get_mpz_t(), v.get_mpz_t(), mm.get_mpz_t());
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, r.get_mpz_t());
    return out;
}

} // namespace matchfab
