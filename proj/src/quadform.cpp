#include "etaq/quadform.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>

#include "etaq/arith.hpp"
#include "etaq/checked_int.hpp"

namespace etaq {

namespace {

struct ext_gcd_result
{
    int128 u, v, g;
};

/* u*x + v*y = g = gcd(x, y), g >= 0 */
ext_gcd_result ext_gcd(int128 x, int128 y)
{
    int128 old_r = x, r = y;
    int128 old_s = 1, s = 0;
    int128 old_t = 0, t = 1;
    while (r != 0) {
        int128 q = old_r / r;
        int128 tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0)
        return {-old_s, -old_t, -old_r};
    return {old_s, old_t, old_r};
}

int128 floor_div(int128 x, int128 y)
{
    int128 q = x / y;
    if ((x % y != 0) && ((x < 0) != (y < 0)))
        --q;
    return q;
}

int128 mod128(int128 x, int128 m)
{
    int128 r = x % m;
    return r < 0 ? r + m : r;
}

int64_t narrow(int128 v)
{
    if (v > INT64_MAX || v < INT64_MIN)
        throw overflow_error("quadratic form coefficient exceeds 64 bits");
    return static_cast<int64_t>(v);
}

} // namespace

bool QuadForm::is_primitive() const
{
    return gcd(gcd(a, b), c) == 1;
}

bool QuadForm::is_reduced() const
{
    if (!(std::abs(b) <= a && a <= c))
        return false;
    if ((std::abs(b) == a || a == c) && b < 0)
        return false;
    return true;
}

std::ostream & operator<<(std::ostream & os, QuadForm const & f)
{
    return os << "[" << f.a << ", " << f.b << ", " << f.c << "]";
}

bool is_discriminant(int64_t d)
{
    return d < 0 && (mod(d, 4) == 0 || mod(d, 4) == 1);
}

Discriminant::Discriminant(int64_t d_) : d(d_), conductor(1), unit_weight(2)
{
    if (!is_discriminant(d))
        throw std::invalid_argument("discriminant must be negative and = 0, 1 (mod 4), got "
                                    + std::to_string(d));
    for (int64_t f = isqrt(-d); f >= 1; --f) {
        if (d % (f * f) == 0 && is_discriminant(d / (f * f))) {
            conductor = f;
            break;
        }
    }
    unit_weight = d == -3 ? 6 : d == -4 ? 4 : 2;
}

bool ClassGroup::contains(QuadForm const & f) const
{
    return std::find(classes.begin(), classes.end(), f) != classes.end();
}

QuadForm principal_form(int64_t d)
{
    Discriminant const disc(d);
    int64_t const b = mod(d, 2);
    return {1, b, (b * b - d) / 4};
}

QuadForm reduce(QuadForm f)
{
    if (!f.is_positive_definite())
        throw std::invalid_argument("reduce: form is not positive definite");
    int128 a = f.a, b = f.b, c = f.c;
    for (;;) {
        if (b <= -a || b > a) {
            int128 k = floor_div(a - b, 2 * a);
            c = a * k * k + b * k + c;
            b = b + 2 * a * k;
        }
        if (a > c) {
            std::swap(a, c);
            b = -b;
            continue;
        }
        break;
    }
    if (b < 0 && a == c)
        b = -b;
    return {narrow(a), narrow(b), narrow(c)};
}

ClassGroup class_group(int64_t d)
{
    ClassGroup g{Discriminant(d), {}};
    int64_t const absd = -d;
    for (int64_t a = 1; 3 * a * a <= absd; ++a) {
        for (int64_t b = -a + 1; b <= a; ++b) {
            if (mod(b - d, 2) != 0)
                continue;
            int64_t const num = b * b - d;
            if (num % (4 * a) != 0)
                continue;
            int64_t const c = num / (4 * a);
            if (c < a || (a == c && b < 0))
                continue;
            QuadForm const f{a, b, c};
            if (f.is_primitive())
                g.classes.push_back(f);
        }
    }
    std::sort(g.classes.begin(), g.classes.end());
    return g;
}

/* Dirichlet composition through a concordant pair (Cohen, Alg. 5.4.7). */
QuadForm compose(QuadForm const & f1_in, QuadForm const & f2_in)
{
    if (!f1_in.is_positive_definite() || !f2_in.is_positive_definite())
        throw std::invalid_argument("compose: forms must be positive definite");
    if (f1_in.discriminant() != f2_in.discriminant())
        throw std::invalid_argument("compose: discriminants differ");
    if (!f1_in.is_primitive() || !f2_in.is_primitive())
        throw std::invalid_argument("compose: forms must be primitive");

    QuadForm f1 = f1_in, f2 = f2_in;
    if (f1.a > f2.a)
        std::swap(f1, f2);
    int128 const disc = f1.discriminant();
    int128 const a1 = f1.a, b1 = f1.b;
    int128 const a2 = f2.a, b2 = f2.b, c2 = f2.c;

    int128 const s = (b1 + b2) / 2;
    int128 const n = b2 - s;

    int128 y1, d;
    if (a2 % a1 == 0) {
        y1 = 0;
        d = a1;
    } else {
        auto const e = ext_gcd(a2, a1);
        y1 = e.u;
        d = e.g;
    }

    int128 x2, y2, d1;
    if (s % d == 0) {
        y2 = -1;
        x2 = 0;
        d1 = d;
    } else {
        auto const e = ext_gcd(s, d);
        x2 = e.u;
        y2 = -e.v;
        d1 = e.g;
    }

    int128 const v1 = a1 / d1;
    int128 const v2 = a2 / d1;
    int128 const r = mod128(y1 * y2 * n - x2 * c2, v1);
    int128 const b3 = b2 + 2 * v2 * r;
    int128 const a3 = v1 * v2;
    int128 const num = b3 * b3 - disc;
    if (num % (4 * a3) != 0)
        throw internal_inconsistency("compose: non-integral third coefficient");
    return reduce({narrow(a3), narrow(b3), narrow(num / (4 * a3))});
}

QuadForm inverse(QuadForm const & f)
{
    return reduce({f.a, -f.b, f.c});
}

RepSet representations(QuadForm const & f, int64_t n)
{
    if (!f.is_positive_definite())
        throw std::invalid_argument("representations: form is not positive definite");
    if (n < 1)
        throw std::invalid_argument("representations: n must be >= 1");
    RepSet out{f, n, {}};

    /* f(x, y) = n  <=>  (2ax + by)^2 = 4an - |d| y^2 */
    int128 const absd = -static_cast<int128>(f.discriminant());
    int128 const four_an = 4 * int128(f.a) * n;
    auto const y_max = static_cast<int64_t>(isqrt(narrow(four_an / absd)));
    for (int64_t y = -y_max; y <= y_max; ++y) {
        int128 const delta = four_an - absd * y * y;
        if (delta < 0)
            continue;
        int64_t const s = isqrt(narrow(delta));
        if (int128(s) * s != delta)
            continue;
        for (int64_t root : {s, -s}) {
            int128 const num = int128(root) - int128(f.b) * y;
            if (num % (2 * f.a) == 0)
                out.solutions.push_back({narrow(num / (2 * f.a)), y});
            if (s == 0)
                break;
        }
    }
    std::sort(out.solutions.begin(), out.solutions.end());
    return out;
}

std::vector<Representation> normalized_reps(QuadForm const & f, int64_t n)
{
    if (f.b != 0)
        throw std::invalid_argument("normalized_reps: form must be diagonal [a, 0, b]");
    std::vector<Representation> out;
    for (auto const & r : representations(f, n).solutions)
        if (mod(r.x, 4) == 1 && mod(r.y, 4) == 1)
            out.push_back(r);
    return out;
}

std::optional<Representation> find_rep(int64_t a, int64_t b, int64_t m)
{
    if (a < 1 || b < 1 || m < 1)
        throw std::invalid_argument("find_rep: arguments must be >= 1");
    for (int64_t x = 0; a * x * x <= m; ++x) {
        int64_t const rest = m - a * x * x;
        if (rest % b == 0 && is_square(rest / b))
            return Representation{x, isqrt(rest / b)};
    }
    return std::nullopt;
}

} // namespace etaq
