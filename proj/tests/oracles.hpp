#ifndef ETAQ_TESTS_ORACLES_HPP
#define ETAQ_TESTS_ORACLES_HPP

/*
 * Brute-force reference computations used only by the tests. Nothing here
 * calls into the library, so agreement is a genuine cross-check.
 */

#include <cstdint>
#include <utility>
#include <vector>

namespace oracle {

inline int64_t sigma(int64_t n)
{
    int64_t s = 0;
    for (int64_t d = 1; d <= n; ++d)
        if (n % d == 0)
            s += d;
    return s;
}

inline bool is_prime(int64_t n)
{
    if (n < 2)
        return false;
    for (int64_t d = 2; d < n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

/* Euler's criterion; p an odd prime */
inline int legendre(int64_t a, int64_t p)
{
    int64_t r = ((a % p) + p) % p;
    if (r == 0)
        return 0;
    int64_t acc = 1;
    for (int64_t i = 0; i < (p - 1) / 2; ++i)
        acc = acc * r % p;
    return acc == 1 ? 1 : -1;
}

/* row (p-1)/2 of Pascal's triangle mod p */
inline int64_t binom_mod(int64_t n, int64_t k, int64_t p)
{
    std::vector<int64_t> row{1};
    for (int64_t i = 1; i <= n; ++i) {
        std::vector<int64_t> next(i + 1, 1);
        for (int64_t j = 1; j < i; ++j)
            next[j] = (row[j - 1] + row[j]) % p;
        row = std::move(next);
    }
    return row[k];
}

/*
 * Coefficients of q prod_k (1 - q^{ak})^3 (1 - q^{bk})^3 up to q^N,
 * multiplying one linear factor (1 - q^s) at a time into a fresh buffer.
 * Result is 1-based: out[n] = lambda(a,b;n), out[0] unused.
 */
inline std::vector<__int128> lambda(int64_t a, int64_t b, int64_t N)
{
    std::vector<__int128> poly(N, 0); /* degree 0..N-1 */
    poly[0] = 1;
    for (int64_t step : {a, b}) {
        for (int64_t s = step; s < N; s += step) {
            for (int rep = 0; rep < 3; ++rep) {
                std::vector<__int128> next(poly);
                for (int64_t i = s; i < N; ++i)
                    next[i] -= poly[i - s];
                poly = std::move(next);
            }
        }
    }
    std::vector<__int128> out(N + 1, 0);
    for (int64_t n = 1; n <= N; ++n)
        out[n] = poly[n - 1];
    return out;
}

/* all (x, y) with ax^2 + bxy + cy^2 = n, by scanning a generous box */
inline std::vector<std::pair<int64_t, int64_t>> reps(int64_t a, int64_t b, int64_t c, int64_t n)
{
    std::vector<std::pair<int64_t, int64_t>> out;
    int64_t bound = 1;
    while (bound * bound <= 4 * n * (a > c ? a : c))
        ++bound;
    for (int64_t x = -bound; x <= bound; ++x)
        for (int64_t y = -bound; y <= bound; ++y)
            if (a * x * x + b * x * y + c * y * y == n)
                out.emplace_back(x, y);
    return out;
}

inline int64_t mod4(int64_t v)
{
    return ((v % 4) + 4) % 4;
}

} // namespace oracle

#endif /* ETAQ_TESTS_ORACLES_HPP */
