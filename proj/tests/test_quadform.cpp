#include <doctest.h>

#include "etaq/arith.hpp"
#include "etaq/quadform.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

using namespace etaq;

namespace {

std::vector<Representation> oracle_reps(QuadForm const & f, int64_t n)
{
    std::vector<Representation> out;
    for (auto [x, y] : oracle::reps(f.a, f.b, f.c, n))
        out.push_back({x, y});
    std::sort(out.begin(), out.end());
    return out;
}

int64_t R(QuadForm const & f, int64_t n)
{
    return static_cast<int64_t>(representations(f, n).count());
}

/* R(K, n) for every class of H(d) and 1 <= n <= limit */
std::map<QuadForm, std::vector<int64_t>> rep_counts(ClassGroup const & g, int64_t limit)
{
    std::map<QuadForm, std::vector<int64_t>> out;
    for (auto const & k : g.classes) {
        std::vector<int64_t> v(limit + 1, 0);
        for (int64_t n = 1; n <= limit; ++n)
            v[n] = R(k, n);
        out[k] = std::move(v);
    }
    return out;
}

} // namespace

TEST_CASE("QuadForm basics")
{
    QuadForm const f{3, 2, 5};
    CHECK(f.discriminant() == -56);
    CHECK(f.is_positive_definite());
    CHECK(f.is_primitive());
    CHECK_FALSE(QuadForm{2, 2, 2}.is_primitive());
    CHECK(f(1, -1) == 6);
    std::ostringstream os;
    os << QuadForm{1, 0, -15};
    CHECK(os.str() == "[1, 0, -15]");
}

TEST_CASE("discriminants, conductors and unit weights")
{
    CHECK(is_discriminant(-3));
    CHECK(is_discriminant(-4));
    CHECK_FALSE(is_discriminant(-5));
    CHECK_FALSE(is_discriminant(5));
    CHECK_FALSE(is_discriminant(0));
    CHECK(Discriminant(-3).unit_weight == 6);
    CHECK(Discriminant(-4).unit_weight == 4);
    CHECK(Discriminant(-12).unit_weight == 2);
    CHECK(Discriminant(-12).conductor == 2);
    CHECK(Discriminant(-60).conductor == 2);
    CHECK(Discriminant(-15).conductor == 1);
    CHECK(Discriminant(-20).conductor == 1);
    CHECK(Discriminant(-27).conductor == 3);
    CHECK(Discriminant(-16).conductor == 2);
    CHECK(Discriminant(-63).conductor == 3);
    CHECK(Discriminant(-108).conductor == 6);
    CHECK_THROWS_AS(Discriminant(-5), std::invalid_argument);
}

TEST_CASE("reduce examples")
{
    CHECK(reduce({1, 0, 3}) == QuadForm{1, 0, 3});
    CHECK(reduce({3, 2, 3}) == QuadForm{3, 2, 3});
    CHECK(reduce({5, 6, 2}) == QuadForm{1, 0, 1});
    CHECK(reduce({3, -3, 5}) == QuadForm{3, 3, 5});
    CHECK(reduce({3, -2, 3}) == QuadForm{3, 2, 3});
    CHECK_THROWS_AS(reduce({-1, 0, -1}), std::invalid_argument);
}

TEST_CASE("reduce is idempotent, preserves the discriminant and the represented values")
{
    for (int64_t a = 1; a <= 12; ++a)
        for (int64_t b = -15; b <= 15; ++b)
            for (int64_t c = 1; c <= 12; ++c) {
                QuadForm const f{a, b, c};
                if (!f.is_positive_definite())
                    continue;
                QuadForm const r = reduce(f);
                REQUIRE(r.is_reduced());
                REQUIRE(r.discriminant() == f.discriminant());
                REQUIRE(reduce(r) == r);
                for (int64_t n = 1; n <= 30; ++n)
                    REQUIRE(R(r, n) == R(f, n));
            }
}

TEST_CASE("class groups of the sample discriminants")
{
    CHECK(class_group(-12).classes == std::vector<QuadForm>{{1, 0, 3}});
    CHECK(class_group(-28).classes == std::vector<QuadForm>{{1, 0, 7}});
    CHECK(class_group(-60).classes == std::vector<QuadForm>{{1, 0, 15}, {3, 0, 5}});
    CHECK_THROWS_AS(class_group(5), std::invalid_argument);
    CHECK_THROWS_AS(class_group(-6), std::invalid_argument);
}

TEST_CASE("class numbers")
{
    std::map<int64_t, std::size_t> const h{
        {-3, 1}, {-4, 1}, {-7, 1}, {-8, 1}, {-15, 2}, {-20, 2}, {-23, 3}, {-24, 2},
        {-47, 5}, {-56, 4}, {-71, 7}, {-84, 4}, {-104, 6}, {-163, 1}, {-12, 1}, {-27, 1},
    };
    for (auto [d, n] : h) {
        CAPTURE(d);
        auto const g = class_group(d);
        CHECK(g.order() == n);
        CHECK(g.principal() == principal_form(d));
        for (auto const & f : g.classes) {
            CHECK(f.is_reduced());
            CHECK(f.is_primitive());
            CHECK(f.discriminant() == d);
            CHECK(reduce(f) == f);
        }
    }
}

TEST_CASE("compose and inverse examples")
{
    CHECK(compose({1, 0, 15}, {3, 0, 5}) == QuadForm{3, 0, 5});
    CHECK(compose({3, 0, 5}, {3, 0, 5}) == QuadForm{1, 0, 15});
    CHECK(compose({1, 0, 3}, {1, 0, 3}) == QuadForm{1, 0, 3});
    CHECK(inverse({1, 0, 3}) == QuadForm{1, 0, 3});
    CHECK(inverse({3, 0, 5}) == QuadForm{3, 0, 5});
    CHECK(inverse({2, 1, 3}) == QuadForm{2, -1, 3});
    CHECK(compose({2, 1, 3}, {2, -1, 3}) == QuadForm{1, 1, 6});
    CHECK(compose({2, 1, 3}, {2, 1, 3}) == QuadForm{2, -1, 3});
    CHECK_THROWS_AS(compose({1, 0, 3}, {1, 0, 1}), std::invalid_argument);
}

TEST_CASE("group laws on small class groups")
{
    int tested = 0;
    for (int64_t d = -3; d >= -400; --d) {
        if (!is_discriminant(d))
            continue;
        auto const g = class_group(d);
        if (g.order() > 4)
            continue;
        ++tested;
        CAPTURE(d);
        QuadForm const e = g.principal();
        for (auto const & x : g.classes) {
            REQUIRE(compose(e, x) == x);
            REQUIRE(compose(x, e) == x);
            REQUIRE(g.contains(inverse(x)));
            REQUIRE(compose(x, inverse(x)) == e);
            for (auto const & y : g.classes) {
                QuadForm const xy = compose(x, y);
                REQUIRE(g.contains(xy));
                REQUIRE(xy == compose(y, x));
                for (auto const & z : g.classes)
                    REQUIRE(compose(xy, z) == compose(x, compose(y, z)));
            }
        }
    }
    CHECK(tested > 50);
}

TEST_CASE("composition respects products of represented values")
{
    /* K1(x1,y1) K2(x2,y2) is represented by K1 K2 or K1 K2^-1 */
    for (int64_t d : {-23, -47, -56, -71, -84, -104}) {
        auto const g = class_group(d);
        for (auto const & k1 : g.classes)
            for (auto const & k2 : g.classes) {
                int64_t const n1 = k1(1, 0), n2 = k2(1, 0);
                if (gcd(n1, n2) != 1)
                    continue;
                bool const via_product = R(compose(k1, k2), n1 * n2) > 0;
                bool const via_quotient = R(compose(k1, inverse(k2)), n1 * n2) > 0;
                CHECK((via_product || via_quotient));
            }
    }
}

TEST_CASE("representation count examples")
{
    CHECK(R({3, 0, 5}, 8) == 4);
    CHECK(R({1, 0, 15}, 8) == 0);
    CHECK(R({1, 0, 15}, 16) == 6);
    CHECK(R({3, 0, 5}, 16) == 0);
    CHECK(representations({3, 0, 5}, 8).solutions
          == std::vector<Representation>{{-1, -1}, {-1, 1}, {1, -1}, {1, 1}});
    CHECK(representations({1, 0, 15}, 16).solutions
          == std::vector<Representation>{{-4, 0}, {-1, -1}, {-1, 1}, {1, -1}, {1, 1}, {4, 0}});
    CHECK_THROWS_AS(representations({1, 0, 1}, 0), std::invalid_argument);
    CHECK_THROWS_AS(representations({1, 3, 1}, 5), std::invalid_argument);
}

TEST_CASE("representations agree with a box scan")
{
    for (QuadForm f : {QuadForm{1, 0, 1}, {1, 1, 1}, {2, 1, 3}, {3, 2, 5}, {1, 0, 15},
                       {3, 0, 5}, {4, -3, 7}, {5, 4, 9}, {2, 2, 11}})
        for (int64_t n = 1; n <= 250; ++n) {
            auto const got = representations(f, n);
            REQUIRE(got.solutions == oracle_reps(f, n));
            REQUIRE(got.count() == got.solutions.size());
        }
}

TEST_CASE("R(K, n) = R(K^-1, n)")
{
    for (int64_t d : {-23, -47, -56, -71, -84, -104}) {
        for (auto const & k : class_group(d).classes)
            for (int64_t n = 1; n <= 200; ++n)
                REQUIRE(R(k, n) == R(inverse(k), n));
    }
}

TEST_CASE("normalized_reps examples")
{
    CHECK(normalized_reps({1, 0, 3}, 28) == std::vector<Representation>{{1, -3}, {5, 1}});
    CHECK(normalized_reps({1, 0, 1}, 2) == std::vector<Representation>{{1, 1}});
    CHECK(normalized_reps({1, 0, 7}, 8) == std::vector<Representation>{{1, 1}});
    CHECK_THROWS_AS(normalized_reps({1, 1, 3}, 5), std::invalid_argument);
}

TEST_CASE("find_rep examples")
{
    CHECK(find_rep(1, 1, 5) == Representation{1, 2});
    CHECK(find_rep(1, 7, 11) == Representation{2, 1});
    CHECK(find_rep(3, 5, 17) == Representation{2, 1});
    CHECK_FALSE(find_rep(1, 1, 3).has_value());
    CHECK(find_rep(1, 1, 25) == Representation{0, 5});
    CHECK_THROWS_AS(find_rep(0, 1, 5), std::invalid_argument);
}

TEST_CASE("representation of primes by classes")
{
    for (int64_t d : {-12, -20, -24, -40, -60}) {
        CAPTURE(d);
        Discriminant const disc(d);
        auto const g = class_group(d);
        int const w = disc.unit_weight;
        for (int64_t p : sieve_primes(500).primes()) {
            if (disc.conductor % p == 0)
                continue;
            CAPTURE(p);
            int const k = kronecker(d, p);
            std::vector<QuadForm> hit;
            for (auto const & f : g.classes)
                if (R(f, p) > 0)
                    hit.push_back(f);
            REQUIRE((!hit.empty()) == (k == 0 || k == 1));
            if (k == 0) {
                REQUIRE(hit.size() == 1);
                REQUIRE(inverse(hit[0]) == hit[0]);
                REQUIRE(R(hit[0], p) == w);
            }
            if (k == 1) {
                QuadForm const a = hit[0];
                for (auto const & f : g.classes) {
                    int64_t expected = 0;
                    if (f == a || f == inverse(a))
                        expected = (a == inverse(a)) ? 2 * w : w;
                    REQUIRE(R(f, p) == expected);
                }
            }
        }
    }
}

TEST_CASE("representation counts convolve over the class group")
{
    for (int64_t d : {-12, -20, -24, -40, -52, -60, -84}) {
        CAPTURE(d);
        auto const g = class_group(d);
        int const w = Discriminant(d).unit_weight;
        auto const counts = rep_counts(g, 3600);
        for (int64_t n1 = 1; n1 <= 60; ++n1)
            for (int64_t n2 = 1; n2 <= 60; ++n2) {
                if (gcd(n1, n2) != 1)
                    continue;
                for (auto const & k : g.classes) {
                    int64_t sum = 0;
                    for (auto const & k1 : g.classes)
                        for (auto const & k2 : g.classes)
                            if (compose(k1, k2) == k)
                                sum += counts.at(k1)[n1] * counts.at(k2)[n2];
                    REQUIRE(w * counts.at(k)[n1 * n2] == sum);
                }
            }
    }
}

TEST_CASE("solutions of aX^2 + bY^2 = (ab+1)p")
{
    int instances = 0;
    for (int64_t a = 1; a <= 9; a += 2)
        for (int64_t b = 1; b <= 9; b += 2) {
            if (gcd(a, b) != 1)
                continue;
            int64_t const m = isqrt(a * b + 1);
            bool const square = m * m == a * b + 1;
            for (int64_t p : sieve_primes(500).primes()) {
                if (p == 2 || p == a || p == b || (a * b + 1) % p == 0)
                    continue;
                auto const rep = find_rep(a, b, p);
                if (!rep)
                    continue;
                ++instances;
                int64_t const x = rep->x, y = rep->y;
                std::set<Representation> expected;
                for (int64_t e : {1, -1})
                    for (int64_t s1 : {1, -1})
                        for (int64_t s2 : {1, -1})
                            expected.insert({s1 * (x + e * b * y), s2 * (a * x - e * y)});
                if (square)
                    for (int64_t s1 : {1, -1})
                        for (int64_t s2 : {1, -1})
                            expected.insert({s1 * m * x, s2 * m * y});
                auto const got = representations({a, 0, b}, (a * b + 1) * p);
                REQUIRE(got.count() == (square ? 12u : 8u));
                REQUIRE(std::set<Representation>(got.solutions.begin(), got.solutions.end())
                        == expected);
            }
        }
    CHECK(instances > 100);
}

TEST_CASE("solutions of aX^2 + bY^2 = (a+b)p")
{
    int instances = 0;
    for (int64_t a = 1; a <= 9; ++a)
        for (int64_t b = 1; b <= 9; ++b) {
            if (gcd(a, b) != 1)
                continue;
            if ((a - 1) * (b - 1) == 0 && is_square(a + b))
                continue;
            for (int64_t p : sieve_primes(500).primes()) {
                if (p == 2 || p == a * b || p == a * b + 1)
                    continue;
                auto const rep = find_rep(1, a * b, p);
                if (!rep)
                    continue;
                ++instances;
                int64_t const x = rep->x, y = rep->y;
                std::set<Representation> expected;
                for (int64_t e : {1, -1})
                    for (int64_t s1 : {1, -1})
                        for (int64_t s2 : {1, -1})
                            expected.insert({s1 * (x + e * b * y), s2 * (x - e * a * y)});
                auto const got = representations({a, 0, b}, (a + b) * p);
                REQUIRE(got.count() == 8u);
                REQUIRE(std::set<Representation>(got.solutions.begin(), got.solutions.end())
                        == expected);
            }
        }
    CHECK(instances > 100);
}

TEST_CASE("R([a,0,b], 2p) is 0 or 2w(-4ab) when ab = 1 (mod 4)")
{
    int instances = 0;
    for (int64_t a = 1; a <= 15; ++a)
        for (int64_t b = 1; b <= 15; ++b) {
            if (gcd(a, b) != 1 || (a * b) % 4 != 1)
                continue;
            int const w = Discriminant(-4 * a * b).unit_weight;
            for (int64_t p : sieve_primes(500).primes()) {
                if (p == 2)
                    continue;
                int64_t const r = R({a, 0, b}, 2 * p);
                if (r == 0)
                    continue;
                ++instances;
                REQUIRE(r == 2 * w);
            }
        }
    CHECK(instances > 100);
}

TEST_CASE("R(K, 4p) is 0 or 2w(-ab) for ambiguous K when ab = 3 (mod 4)")
{
    int instances = 0;
    for (int64_t a = 1; a <= 15; ++a)
        for (int64_t b = a; b <= 15; ++b) {
            if ((a * b) % 4 != 3)
                continue;
            int const w = Discriminant(-a * b).unit_weight;
            for (auto const & k : class_group(-4 * a * b).classes) {
                if (inverse(k) != k)
                    continue;
                for (int64_t p : sieve_primes(500).primes()) {
                    if (p == 2 || (a * b) % p == 0)
                        continue;
                    int64_t const r = R(k, 4 * p);
                    if (r == 0)
                        continue;
                    ++instances;
                    REQUIRE(r == 2 * w);
                }
            }
        }
    CHECK(instances > 100);
}
