#include "cendiv/numeric.hpp"
#include "cendiv/errors.hpp"

namespace cendiv {

Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0)
        throw precondition_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        return make_rational(num, den);
    } catch (const std::invalid_argument&) {
        throw parse_error("malformed rational '" + s + "'");
    }
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const BigInt& z) { return z.get_str(); }

std::int64_t mulmod_i64(std::int64_t a, std::int64_t b, std::int64_t m) {
    return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % m);
}

std::int64_t powmod_i64(std::int64_t base, std::uint64_t exp, std::int64_t m) {
    std::int64_t r = 1 % m;
    base %= m;
    if (base < 0) base += m;
    while (exp) {
        if (exp & 1) r = mulmod_i64(r, base, m);
        base = mulmod_i64(base, base, m);
        exp >>= 1;
    }
    return r;
}

std::int64_t invmod_i64(std::int64_t a, std::int64_t m) {
    std::int64_t t = 0, new_t = 1, r = m, new_r = a % m;
    if (new_r < 0) new_r += m;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t; new_t = tmp;
        tmp = r - q * new_r;
        r = new_r; new_r = tmp;
    }
    if (r != 1)
        throw precondition_error("invmod: element not invertible");
    if (t < 0) t += m;
    return t;
}

bool is_prime_i64(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    std::int64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // These witnesses decide primality for every n < 3.3 * 10^24.
    for (std::int64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::int64_t x = powmod_i64(a, static_cast<std::uint64_t>(d), n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_i64(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

int nu_p(std::int64_t m, std::int64_t p) {
    if (p == 0) return 0;
    if (m <= 0)
        throw precondition_error("nu_p: argument must be positive");
    int s = 0;
    while (m % p == 0) { m /= p; ++s; }
    return s;
}

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return h;
}

} // namespace cendiv
