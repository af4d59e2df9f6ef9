#include <gmpxx.h>

#include <stdexcept>
#include <string>

#include "etaq/arith.hpp"
#include "etaq/errors.hpp"
#include "etaq/etaseries.hpp"

namespace etaq {

namespace {

void partitions_rec(int part, int remaining, PartitionTerm & t,
                    std::function<void(PartitionTerm const &)> const & f)
{
    if (remaining == 0) {
        f(t);
        return;
    }
    if (part == 0)
        return;
    for (int k = remaining / part; k >= 0; --k) {
        t.mult[part - 1] = k;
        partitions_rec(part - 1, remaining - k * part, t, f);
    }
    t.mult[part - 1] = 0;
}

int128 to_int128(mpz_class const & z)
{
    if (mpz_sizeinbase(z.get_mpz_t(), 2) > 127)
        throw overflow_error("lambda_multinomial: result exceeds 128-bit range");
    mpz_class mag = abs(z);
    mpz_class lo = mag & mpz_class("18446744073709551615");
    mpz_class hi = mag >> 64;
    unsigned __int128 u = (static_cast<unsigned __int128>(hi.get_ui()) << 64)
                          | lo.get_ui();
    auto v = static_cast<int128>(u);
    return sgn(z) < 0 ? -v : v;
}

} // namespace

void for_each_partition(int n, std::function<void(PartitionTerm const &)> const & f)
{
    if (n < 0)
        throw std::invalid_argument("for_each_partition: n must be >= 0");
    PartitionTerm t{std::vector<int>(static_cast<std::size_t>(n), 0)};
    partitions_rec(n, n, t, f);
}

int128 lambda_multinomial(LambdaParams params, int64_t n, int cap)
{
    if (n < 0)
        throw std::invalid_argument("lambda_multinomial: n must be >= 0");
    if (n > cap)
        throw cap_exceeded("lambda_multinomial: n = " + std::to_string(n)
                           + " exceeds partition cap " + std::to_string(cap));
    if (n == 0)
        return 1;

    std::vector<mpz_class> c(static_cast<std::size_t>(n) + 1);
    for (int64_t i = 1; i <= n; ++i)
        c[i] = static_cast<long>(weighted_sigma(params.a, params.b, i));

    mpq_class sum = 0;
    for_each_partition(static_cast<int>(n), [&](PartitionTerm const & t) {
        mpz_class num = 1, den = 1;
        unsigned long parts = 0;
        for (int i = 1; i <= n; ++i) {
            auto const k = static_cast<unsigned long>(t.mult[i - 1]);
            if (k == 0)
                continue;
            parts += k;
            mpz_class pw;
            mpz_pow_ui(pw.get_mpz_t(), c[i].get_mpz_t(), k);
            num *= pw;
            mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(i), k);
            den *= pw;
            mpz_fac_ui(pw.get_mpz_t(), k);
            den *= pw;
        }
        mpz_class three_pow;
        mpz_ui_pow_ui(three_pow.get_mpz_t(), 3, parts);
        num *= (parts % 2 == 0) ? three_pow : mpz_class(-three_pow);
        mpq_class term(num, den);
        term.canonicalize();
        sum += term;
    });

    if (sum.get_den() != 1)
        throw internal_inconsistency("lambda_multinomial: non-integral sum at n = "
                                     + std::to_string(n));
    return to_int128(sum.get_num());
}

} // namespace etaq
