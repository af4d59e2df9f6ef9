#ifndef ETAQ_ETASERIES_HPP
#define ETAQ_ETASERIES_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "etaq/checked_int.hpp"

namespace etaq {

/*
 * Coefficients lambda(a,b;n) of
 *
 *     q * prod_{k>=1} (1 - q^{ak})^3 (1 - q^{bk})^3 = sum_{n>=1} lambda(a,b;n) q^n.
 */
struct LambdaParams
{
    int64_t a;
    int64_t b;

    LambdaParams(int64_t a_, int64_t b_);

    bool operator==(LambdaParams const &) const = default;
    auto operator<=>(LambdaParams const &) const = default;
};

enum class Method { sparse, newton, naive };

std::string_view method_name(Method m);
std::optional<Method> parse_method(std::string_view name);

/* One term (-1)^k (2k+1) q^{k(k+1)/2} of the lacunary cube series. */
struct JacobiTerm
{
    int64_t k;
    int64_t exponent;
    int64_t coefficient;

    bool operator==(JacobiTerm const &) const = default;
};

std::vector<JacobiTerm> jacobi_cube(int64_t limit);

/*
 * Exact table of lambda(a,b;1..N). Indexing is 1-based, exactly as the
 * coefficient is usually written; value(1) is always 1.
 */
class CoeffTable
{
    LambdaParams params_;
    Method method_;
    std::vector<int128> values_; /* values_[n-1] = lambda(n) */

    public:
    CoeffTable(LambdaParams params, Method method, std::vector<int128> values);

    LambdaParams params() const { return params_; }
    Method method() const { return method_; }
    int64_t limit() const { return static_cast<int64_t>(values_.size()); }

    /* lambda(a,b;n), 1 <= n <= limit(); throws std::out_of_range otherwise */
    int128 at(int64_t n) const;
    int128 operator[](int64_t n) const { return values_[n - 1]; }

    std::span<int128 const> raw() const { return values_; }

    bool operator==(CoeffTable const & o) const { return values_ == o.values_; }
};

/*
 * sparse: double sum over pairs of Jacobi terms, O(N / sqrt(ab)) visits.
 * newton: divisor-sum recurrence, O(N^2).
 * naive:  truncated product, factor by factor.
 * All three return identical tables; overflow throws etaq::overflow_error.
 */
CoeffTable lambda_table(LambdaParams params, int64_t n_max, Method method);

/* Multiplicities k_1..k_n with sum i*k_i = n; mult[i-1] = k_i. */
struct PartitionTerm
{
    std::vector<int> mult;
};

void for_each_partition(int n, std::function<void(PartitionTerm const &)> const & f);

inline constexpr int default_partition_cap = 40;

/*
 * lambda(a,b;n+1) as the exact rational sum over partitions of n of
 * (-3)^{sum k_i} prod c_i^{k_i} / prod (i^{k_i} k_i!), c_i = a sigma(i/a) + b sigma(i/b).
 */
int128 lambda_multinomial(LambdaParams params, int64_t n,
                          int cap = default_partition_cap);

/* sum of xy over x = y = 1 (mod 4), ax^2 + by^2 = 8n + a + b; equals lambda(a,b;n+1) */
int128 lambda_from_reps(LambdaParams params, int64_t n);

} // namespace etaq

#endif /* ETAQ_ETASERIES_HPP */
