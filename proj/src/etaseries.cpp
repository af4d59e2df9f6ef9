#include "etaq/etaseries.hpp"

#include <stdexcept>
#include <string>

#include "etaq/arith.hpp"
#include "etaq/errors.hpp"
#include "etaq/quadform.hpp"

namespace etaq {

LambdaParams::LambdaParams(int64_t a_, int64_t b_) : a(a_), b(b_)
{
    if (a < 1 || b < 1)
        throw std::invalid_argument("LambdaParams: a and b must be >= 1");
}

std::string_view method_name(Method m)
{
    switch (m) {
    case Method::sparse: return "sparse";
    case Method::newton: return "newton";
    case Method::naive: return "naive";
    }
    return "?";
}

std::optional<Method> parse_method(std::string_view name)
{
    if (name == "sparse") return Method::sparse;
    if (name == "newton") return Method::newton;
    if (name == "naive") return Method::naive;
    return std::nullopt;
}

std::vector<JacobiTerm> jacobi_cube(int64_t limit)
{
    if (limit < 0)
        throw std::invalid_argument("jacobi_cube: limit must be >= 0");
    std::vector<JacobiTerm> terms;
    for (int64_t k = 0;; ++k) {
        int64_t t = k * (k + 1) / 2;
        if (t > limit)
            break;
        terms.push_back({k, t, (k % 2 == 0 ? 1 : -1) * (2 * k + 1)});
    }
    return terms;
}

CoeffTable::CoeffTable(LambdaParams params, Method method,
                       std::vector<int128> values)
    : params_(params), method_(method), values_(std::move(values))
{
    if (values_.empty() || values_.front() != 1)
        throw internal_inconsistency("CoeffTable: leading coefficient must be 1");
}

int128 CoeffTable::at(int64_t n) const
{
    if (n < 1 || n > limit())
        throw std::out_of_range("CoeffTable: index " + std::to_string(n)
                                + " outside [1, " + std::to_string(limit())
                                + "]");
    return values_[n - 1];
}

namespace {

/* v[e] = coefficient of q^e in the product, e = 0..n_max-1 */
std::vector<int128> build_sparse(LambdaParams p, int64_t n_max)
{
    std::vector<int128> v(static_cast<std::size_t>(n_max), 0);
    int64_t const top = n_max - 1;
    auto const ka = jacobi_cube(top / p.a);
    auto const mb = jacobi_cube(top / p.b);
    for (auto const & tk : ka) {
        int64_t const base = p.a * tk.exponent;
        for (auto const & tm : mb) {
            int64_t const e = base + p.b * tm.exponent;
            if (e > top)
                break;
            v[e] = checked_add(v[e], int128(tk.coefficient) * tm.coefficient);
        }
    }
    return v;
}

std::vector<int128> build_newton(LambdaParams p, int64_t n_max)
{
    std::vector<int128> v(static_cast<std::size_t>(n_max), 0);
    v[0] = 1;
    if (n_max == 1)
        return v;
    SigmaTable const sig(n_max - 1);
    std::vector<int64_t> c(static_cast<std::size_t>(n_max), 0);
    for (int64_t k = 1; k < n_max; ++k)
        c[k] = sig.weighted(p.a, p.b, k);

    /* n * lambda(n+1) = -3 * sum_{k=1}^{n} c_k lambda(n+1-k) */
    for (int64_t n = 1; n < n_max; ++n) {
        int128 acc = 0;
        for (int64_t k = 1; k <= n; ++k) {
            if (c[k] == 0 || v[n - k] == 0)
                continue;
            acc = checked_add(acc, checked_mul(c[k], v[n - k]));
        }
        acc = checked_mul(acc, 3);
        if (acc % n != 0)
            throw internal_inconsistency(
                "newton recurrence: inexact division at n = "
                + std::to_string(n));
        v[n] = -(acc / n);
    }
    return v;
}

/* multiply in place by (1 - q^s)^3 = 1 - 3t + 3t^2 - t^3, truncated */
void mul_cube_factor(std::vector<int128> & v, int64_t s)
{
    auto const len = static_cast<int64_t>(v.size());
    for (int64_t i = len - 1; i >= s; --i) {
        int128 x = checked_sub(v[i], checked_mul(3, v[i - s]));
        if (i >= 2 * s)
            x = checked_add(x, checked_mul(3, v[i - 2 * s]));
        if (i >= 3 * s)
            x = checked_sub(x, v[i - 3 * s]);
        v[i] = x;
    }
}

std::vector<int128> build_naive(LambdaParams p, int64_t n_max)
{
    std::vector<int128> v(static_cast<std::size_t>(n_max), 0);
    v[0] = 1;
    for (int64_t step : {p.a, p.b})
        for (int64_t s = step; s <= n_max - 1; s += step)
            mul_cube_factor(v, s);
    return v;
}

} // namespace

CoeffTable lambda_table(LambdaParams params, int64_t n_max, Method method)
{
    if (n_max < 1)
        throw std::invalid_argument("lambda_table: N must be >= 1");
    switch (method) {
    case Method::sparse:
        return {params, method, build_sparse(params, n_max)};
    case Method::newton:
        return {params, method, build_newton(params, n_max)};
    case Method::naive:
        return {params, method, build_naive(params, n_max)};
    }
    throw std::invalid_argument("lambda_table: unknown method");
}

int128 lambda_from_reps(LambdaParams params, int64_t n)
{
    if (n < 0)
        throw std::invalid_argument("lambda_from_reps: n must be >= 0");
    QuadForm const form{params.a, 0, params.b};
    int128 sum = 0;
    for (auto const & r : normalized_reps(form, 8 * n + params.a + params.b))
        sum = checked_add(sum, checked_mul(r.x, r.y));
    return sum;
}

} // namespace etaq
