#ifndef ETAQ_QUADFORM_HPP
#define ETAQ_QUADFORM_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

namespace etaq {

/* ax^2 + bxy + cy^2 */
struct QuadForm
{
    int64_t a;
    int64_t b;
    int64_t c;

    int64_t discriminant() const { return b * b - 4 * a * c; }
    bool is_positive_definite() const { return a > 0 && discriminant() < 0; }
    bool is_primitive() const;

    /*
     * |b| <= a <= c, and b >= 0 whenever |b| = a or a = c. Exactly one
     * reduced form per class, so class equality is field equality.
     */
    bool is_reduced() const;

    int64_t operator()(int64_t x, int64_t y) const
    {
        return a * x * x + b * x * y + c * y * y;
    }

    bool operator==(QuadForm const &) const = default;
    auto operator<=>(QuadForm const &) const = default;
};

std::ostream & operator<<(std::ostream & os, QuadForm const & f);

bool is_discriminant(int64_t d);

/*
 * A negative discriminant with its conductor (largest f with d/f^2 still a
 * discriminant) and unit weight w(d) in {2, 4, 6}.
 */
struct Discriminant
{
    int64_t d;
    int64_t conductor;
    int unit_weight;

    /* throws std::invalid_argument unless d < 0 and d = 0, 1 (mod 4) */
    explicit Discriminant(int64_t d);
};

struct ClassGroup
{
    Discriminant disc;
    std::vector<QuadForm> classes; /* reduced, principal first, then by (a, b) */

    QuadForm principal() const { return classes.front(); }
    std::size_t order() const { return classes.size(); }
    bool contains(QuadForm const & f) const;
};

QuadForm principal_form(int64_t d);

QuadForm reduce(QuadForm f);
ClassGroup class_group(int64_t d);
QuadForm compose(QuadForm const & f1, QuadForm const & f2);
QuadForm inverse(QuadForm const & f);

struct Representation
{
    int64_t x;
    int64_t y;

    bool operator==(Representation const &) const = default;
    auto operator<=>(Representation const &) const = default;
};

/* Every (x, y) with f(x, y) = n, sorted. */
struct RepSet
{
    QuadForm form;
    int64_t n;
    std::vector<Representation> solutions;

    std::size_t count() const { return solutions.size(); }
};

RepSet representations(QuadForm const & f, int64_t n);

/* Solutions of [a,0,b] = n with x = y = 1 (mod 4). */
std::vector<Representation> normalized_reps(QuadForm const & f, int64_t n);

/*
 * Some x, y >= 0 with a x^2 + b y^2 = m: smallest x first, then smallest y.
 */
std::optional<Representation> find_rep(int64_t a, int64_t b, int64_t m);

} // namespace etaq

#endif /* ETAQ_QUADFORM_HPP */
