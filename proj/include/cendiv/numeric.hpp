#pragma once

#include <cstdint>
#include <string>
#include <gmpxx.h>

namespace cendiv {

// Exact integer and rational scalars. GMP supplies the representation; the
// wrappers below keep construction canonical (lowest terms, positive
// denominator, which mpq_class guarantees after canonicalize()).
using BigInt = mpz_class;
using Rational = mpq_class;

Rational make_rational(const BigInt& num, const BigInt& den);
Rational rational_from_string(const std::string& s);
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

// Deterministic Miller-Rabin, valid for all 0 <= n < 2^63.
bool is_prime_i64(std::int64_t n);

std::int64_t mulmod_i64(std::int64_t a, std::int64_t b, std::int64_t m);
std::int64_t powmod_i64(std::int64_t base, std::uint64_t exp, std::int64_t m);
// Inverse of a modulo prime m; throws precondition_error if gcd(a, m) != 1.
std::int64_t invmod_i64(std::int64_t a, std::int64_t m);

// nu_p(m): the exponent of p in m, with nu_0(m) := 0.
int nu_p(std::int64_t m, std::int64_t p);

// splitmix64: the seeded generator used by every randomized path in the
// library. The recurrence (documented so corpora are portable):
//   state += 0x9E3779B97F4A7C15
//   z = state; z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   output = z ^ (z >> 31)
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound), bound >= 1.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

private:
    std::uint64_t state_;
};

// FNV-1a over bytes; used to derive deterministic seeds from canonical strings.
std::uint64_t fnv1a64(const std::string& bytes);

} // namespace cendiv
