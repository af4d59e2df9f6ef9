#ifndef ETAQ_ARITH_HPP
#define ETAQ_ARITH_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace etaq {

/*
 * Divisor sums sigma(1..limit), built once by a divisor-summing sieve and
 * read-only afterwards. Index 0 is unused storage.
 */
class SigmaTable
{
    std::vector<int64_t> values_;

    public:
    explicit SigmaTable(int64_t limit);

    int64_t limit() const { return static_cast<int64_t>(values_.size()) - 1; }

    int64_t operator[](int64_t n) const { return values_[n]; }
    int64_t at(int64_t n) const;

    /* sigma(n/d) when d | n, else 0 */
    int64_t scaled(int64_t n, int64_t d) const;

    /* a*sigma(n/a) + b*sigma(n/b) */
    int64_t weighted(int64_t a, int64_t b, int64_t n) const;
};

class PrimeSieve
{
    std::vector<bool> flags_;

    public:
    /* Largest limit accepted unless a budget is passed explicitly. */
    static constexpr int64_t default_budget = int64_t(1) << 32;

    explicit PrimeSieve(int64_t limit, int64_t budget = default_budget);

    int64_t limit() const { return static_cast<int64_t>(flags_.size()) - 1; }
    bool is_prime(int64_t n) const;
    std::vector<int64_t> primes() const;
    std::size_t count() const;
};

int64_t sigma(int64_t n);
int64_t sigma_scaled(int64_t n, int64_t d);
int64_t weighted_sigma(int64_t a, int64_t b, int64_t n);

PrimeSieve sieve_primes(int64_t limit);

/* Trial division; fine at the sizes used here. */
bool is_prime(int64_t n);

int64_t gcd(int64_t a, int64_t b);
int64_t isqrt(int64_t n);
bool is_square(int64_t n);

/* Kronecker symbol (a/n), n != 0 */
int kronecker(int64_t a, int64_t n);

int64_t powmod(int64_t base, int64_t exp, int64_t m);
int64_t invmod(int64_t a, int64_t m);

/*
 * binomial((p-1)/2, (p-1)/4) mod p for a prime p = 1 (mod 4).
 * Equals 2x mod p where p = x^2 + y^2 with x = 1 (mod 4).
 */
int64_t gauss_doubling(int64_t p);

/*
 * sum_{n=0}^{p-1} ((n^3 - 4n)/p) for a prime p = 1 (mod 4).
 * Equals -2x with x as in gauss_doubling.
 */
int64_t jacobsthal(int64_t p);

} // namespace etaq

#endif /* ETAQ_ARITH_HPP */
