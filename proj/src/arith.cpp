#include "etaq/arith.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "etaq/checked_int.hpp"
#include "etaq/errors.hpp"

namespace etaq {

std::string to_string(int128 v)
{
    if (v == 0)
        return "0";
    bool neg = v < 0;
    /* magnitude in unsigned so that the minimum value survives */
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v)
                              : static_cast<unsigned __int128>(v);
    std::string s;
    while (u != 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg)
        s.push_back('-');
    return {s.rbegin(), s.rend()};
}

SigmaTable::SigmaTable(int64_t limit)
{
    if (limit < 1)
        throw std::invalid_argument("SigmaTable: limit must be >= 1");
    values_.assign(static_cast<std::size_t>(limit) + 1, 0);
    for (int64_t d = 1; d <= limit; ++d)
        for (int64_t m = d; m <= limit; m += d)
            values_[m] += d;
}

int64_t SigmaTable::at(int64_t n) const
{
    if (n < 1 || n > limit())
        throw std::out_of_range("SigmaTable: index " + std::to_string(n)
                                + " outside [1, " + std::to_string(limit())
                                + "]");
    return values_[n];
}

int64_t SigmaTable::scaled(int64_t n, int64_t d) const
{
    if (n < 1 || d < 1)
        throw std::invalid_argument("sigma_scaled: arguments must be >= 1");
    return n % d == 0 ? at(n / d) : 0;
}

int64_t SigmaTable::weighted(int64_t a, int64_t b, int64_t n) const
{
    if (a < 1 || b < 1)
        throw std::invalid_argument("weighted_sigma: a, b must be >= 1");
    return a * scaled(n, a) + b * scaled(n, b);
}

PrimeSieve::PrimeSieve(int64_t limit, int64_t budget)
{
    if (limit < 2)
        throw std::invalid_argument("sieve_primes: limit must be >= 2");
    if (limit > budget)
        throw resource_limit("sieve_primes: limit " + std::to_string(limit)
                             + " exceeds budget " + std::to_string(budget));
    flags_.assign(static_cast<std::size_t>(limit) + 1, true);
    flags_[0] = flags_[1] = false;
    for (int64_t i = 2; i * i <= limit; ++i)
        if (flags_[i])
            for (int64_t j = i * i; j <= limit; j += i)
                flags_[j] = false;
}

bool PrimeSieve::is_prime(int64_t n) const
{
    if (n < 0 || n > limit())
        throw std::out_of_range("PrimeSieve: query outside sieved range");
    return flags_[n];
}

std::vector<int64_t> PrimeSieve::primes() const
{
    std::vector<int64_t> out;
    for (int64_t n = 2; n <= limit(); ++n)
        if (flags_[n])
            out.push_back(n);
    return out;
}

std::size_t PrimeSieve::count() const
{
    std::size_t c = 0;
    for (bool f : flags_)
        c += f;
    return c;
}

PrimeSieve sieve_primes(int64_t limit)
{
    return PrimeSieve(limit);
}

int64_t sigma(int64_t n)
{
    if (n < 1)
        throw std::invalid_argument("sigma: n must be >= 1");
    int64_t s = 0;
    for (int64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            s += d;
            if (d != n / d)
                s += n / d;
        }
    }
    return s;
}

int64_t sigma_scaled(int64_t n, int64_t d)
{
    if (n < 1 || d < 1)
        throw std::invalid_argument("sigma_scaled: arguments must be >= 1");
    return n % d == 0 ? sigma(n / d) : 0;
}

int64_t weighted_sigma(int64_t a, int64_t b, int64_t n)
{
    if (a < 1 || b < 1 || n < 1)
        throw std::invalid_argument("weighted_sigma: arguments must be >= 1");
    return a * sigma_scaled(n, a) + b * sigma_scaled(n, b);
}

bool is_prime(int64_t n)
{
    if (n < 2)
        return false;
    if (n % 2 == 0)
        return n == 2;
    for (int64_t d = 3; d <= n / d; d += 2)
        if (n % d == 0)
            return false;
    return true;
}

int64_t gcd(int64_t a, int64_t b)
{
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b != 0) {
        int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

int64_t isqrt(int64_t n)
{
    if (n < 0)
        throw std::invalid_argument("isqrt: negative argument");
    auto r = static_cast<int64_t>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && r > n / r)
        --r;
    while ((r + 1) <= n / (r + 1))
        ++r;
    return r;
}

bool is_square(int64_t n)
{
    if (n < 0)
        return false;
    int64_t r = isqrt(n);
    return r * r == n;
}

int kronecker(int64_t a, int64_t n)
{
    if (n == 0)
        throw std::invalid_argument("kronecker: n must be nonzero");
    static constexpr int tab2[8] = {0, 1, 0, -1, 0, -1, 0, 1};

    int k = 1;
    if (n < 0) {
        n = -n;
        if (a < 0)
            k = -1;
    }
    if (n % 2 == 0 && a % 2 == 0)
        return 0;
    int v = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++v;
    }
    if (v % 2 == 1)
        k *= tab2[mod(a, 8)];

    a = mod(a, n);
    while (a != 0) {
        v = 0;
        while (a % 2 == 0) {
            a /= 2;
            ++v;
        }
        if (v % 2 == 1)
            k *= tab2[n & 7];
        if (a & n & 2)
            k = -k;
        int64_t r = a;
        a = n % r;
        n = r;
    }
    return n == 1 ? k : 0;
}

int64_t powmod(int64_t base, int64_t exp, int64_t m)
{
    if (m < 1 || exp < 0)
        throw std::invalid_argument("powmod: bad modulus or exponent");
    int128 result = 1 % m;
    int128 b = mod(base, m);
    while (exp > 0) {
        if (exp & 1)
            result = result * b % m;
        b = b * b % m;
        exp >>= 1;
    }
    return static_cast<int64_t>(result);
}

int64_t invmod(int64_t a, int64_t m)
{
    int64_t old_r = mod(a, m), r = m;
    int64_t old_s = 1, s = 0;
    while (r != 0) {
        int64_t q = old_r / r;
        int64_t t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    if (old_r != 1)
        throw std::invalid_argument("invmod: not invertible");
    return mod(old_s, m);
}

namespace {

void require_prime_1_mod_4(int64_t p, char const * who)
{
    if (p % 4 != 1 || !is_prime(p))
        throw std::invalid_argument(std::string(who)
                                    + ": p must be a prime = 1 (mod 4)");
}

} // namespace

int64_t gauss_doubling(int64_t p)
{
    require_prime_1_mod_4(p, "gauss_doubling");
    int64_t const top = (p - 1) / 2;
    int64_t const k = (p - 1) / 4;
    int128 num = 1, den = 1;
    for (int64_t i = 1; i <= k; ++i) {
        num = num * (top - k + i) % p;
        den = den * i % p;
    }
    int128 inv = invmod(static_cast<int64_t>(den), p);
    return static_cast<int64_t>(num * inv % p);
}

int64_t jacobsthal(int64_t p)
{
    require_prime_1_mod_4(p, "jacobsthal");
    int64_t s = 0;
    for (int64_t n = 0; n < p; ++n) {
        int128 cube = int128(n) * n % p * n % p;
        int64_t v = mod(static_cast<int64_t>((cube - 4 * int128(n)) % p), p);
        s += kronecker(v, p);
    }
    return s;
}

} // namespace etaq
