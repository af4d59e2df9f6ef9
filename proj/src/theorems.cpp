#include "etaq/theorems.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <functional>
#include <stdexcept>
#include <thread>

#include "etaq/arith.hpp"
#include "etaq/errors.hpp"

namespace etaq {

namespace {

struct CaseInfo
{
    CaseId id;
    std::string_view name;
    ParamKind kind;
};

constexpr std::array<CaseInfo, 22> case_table{{
    {CaseId::T3_1, "T3.1", ParamKind::a_and_b},
    {CaseId::C3_1, "C3.1", ParamKind::fixed},
    {CaseId::C3_2, "C3.2", ParamKind::fixed},
    {CaseId::T3_2i, "T3.2i", ParamKind::a_and_b},
    {CaseId::T3_2ii, "T3.2ii", ParamKind::a_and_b},
    {CaseId::C3_3, "C3.3", ParamKind::a_and_b},
    {CaseId::C3_4, "C3.4", ParamKind::a_only},
    {CaseId::C3_5, "C3.5", ParamKind::a_and_b},
    {CaseId::T3_3, "T3.3", ParamKind::a_and_b},
    {CaseId::E1_6, "E1.6", ParamKind::fixed},
    {CaseId::E1_7, "E1.7", ParamKind::fixed},
    {CaseId::E1_8, "E1.8", ParamKind::fixed},
    {CaseId::E3_1, "E3.1", ParamKind::fixed},
    {CaseId::E3_2, "E3.2", ParamKind::fixed},
    {CaseId::E3_3, "E3.3", ParamKind::fixed},
    {CaseId::E3_4, "E3.4", ParamKind::fixed},
    {CaseId::E3_5, "E3.5", ParamKind::fixed},
    {CaseId::E3_6, "E3.6", ParamKind::fixed},
    {CaseId::T4_1, "T4.1", ParamKind::a_and_b},
    {CaseId::T4_2, "T4.2", ParamKind::a_and_b},
    {CaseId::T4_3, "T4.3", ParamKind::a_and_b},
    {CaseId::T5_3, "T5.3", ParamKind::fixed},
}};

CaseInfo const & info(CaseId id)
{
    for (auto const & ci : case_table)
        if (ci.id == id)
            return ci;
    throw std::invalid_argument("unknown case");
}

bool is_product_case(CaseId id)
{
    return id == CaseId::T4_1 || id == CaseId::T4_2 || id == CaseId::T4_3;
}

int64_t exact_div(int64_t num, int64_t den, std::string_view what)
{
    if (num % den != 0)
        throw internal_inconsistency("index for " + std::string(what)
                                     + " is not integral: " + std::to_string(num)
                                     + " / " + std::to_string(den));
    return num / den;
}

bool in(int64_t r, std::initializer_list<int64_t> set)
{
    return std::find(set.begin(), set.end(), r) != set.end();
}

using Lhs = std::function<std::optional<int128>(Representation)>;

struct Check
{
    std::string label;
    LambdaParams lambda;
    int64_t index;
    Lhs lhs; /* nullopt when a parity claim the proof relies on fails */
};

/* p = form_a x^2 + form_b y^2, restricted by accept */
struct Hypotheses
{
    std::string violated;
    int64_t form_a = 1;
    int64_t form_b = 1;
    std::function<bool(Representation)> accept;
    std::string accept_text;
};

Lhs scaled_norm(int64_t coef, int64_t p, std::function<int(Representation)> sign)
{
    /* sign * (4 coef x^2 - 2p) */
    return [=](Representation r) -> std::optional<int128> {
        return sign(r) * (4 * int128(coef) * r.x * r.x - 2 * int128(p));
    };
}

/* (-1)^{y/2 + shift} * value(r), nullopt for odd y */
Lhs half_y_sign(int64_t shift, std::function<int128(Representation)> value)
{
    return [=](Representation r) -> std::optional<int128> {
        if (r.y % 2 != 0)
            return std::nullopt;
        return sign_pow(shift + r.y / 2) * value(r);
    };
}

std::function<int128(Representation)> four_x2_minus_2p(int64_t coef, int64_t p)
{
    return [=](Representation r) {
        return 4 * int128(coef) * r.x * r.x - 2 * int128(p);
    };
}

std::function<int128(Representation)> two_p_minus_4y2(int64_t coef, int64_t p)
{
    return [=](Representation r) {
        return 2 * int128(p) - 4 * int128(coef) * r.y * r.y;
    };
}

Hypotheses hypotheses(ConstructionCase const & c, int64_t p)
{
    Hypotheses h;
    h.accept = [](Representation) { return true; };
    auto odd_x = [&] {
        h.accept = [](Representation r) { return r.x % 2 != 0; };
        h.accept_text = " with x odd";
    };
    auto fail = [&](std::string why) { h.violated = std::move(why); };
    auto set_form = [&](int64_t fa, int64_t fb) {
        h.form_a = fa;
        h.form_b = fb;
    };

    switch (c.id()) {
    case CaseId::T3_1: {
        int64_t const a = c.a(), b = c.b();
        set_form(a, b);
        if (p == a || p == b)
            fail("p = a or p = b");
        else if ((a * b + 1) % p == 0)
            fail("p divides ab+1");
        break;
    }
    case CaseId::C3_1:
        set_form(1, 1);
        odd_x();
        if (p % 4 != 1)
            fail("p != 1 (mod 4)");
        break;
    case CaseId::C3_2:
        set_form(1, 5);
        if (!in(p % 20, {1, 9}))
            fail("p != 1, 9 (mod 20)");
        break;
    case CaseId::T3_2i:
    case CaseId::C3_3: {
        int64_t const ab = c.a() * c.b();
        set_form(1, ab);
        if (p == ab || p == ab + 1)
            fail("p = ab or p = ab+1");
        break;
    }
    case CaseId::T3_2ii:
    case CaseId::C3_5: {
        int64_t const ab = c.a() * c.b();
        set_form(1, ab);
        if (p % 8 != 1)
            fail("p != 1 (mod 8)");
        else if (p == ab || p == ab + 1)
            fail("p = ab or p = ab+1");
        break;
    }
    case CaseId::C3_4:
        set_form(1, 16 * c.a());
        break;
    case CaseId::T3_3: {
        int64_t const a = c.a(), b = c.b();
        set_form(a, b);
        if (mod(p - a, 8) != 0)
            fail("p != a (mod 8)");
        else if (p == a)
            fail("p = a");
        else if ((a * b + 1) % p == 0)
            fail("p divides ab+1");
        break;
    }
    case CaseId::E1_6:
        set_form(1, 7);
        if (!in(p % 7, {1, 2, 4}))
            fail("p != 1, 2, 4 (mod 7)");
        break;
    case CaseId::E1_7:
        set_form(1, 1);
        odd_x();
        if (p % 4 != 1)
            fail("p != 1 (mod 4)");
        break;
    case CaseId::E1_8:
        set_form(1, 3);
        if (p % 3 != 1)
            fail("p != 1 (mod 3)");
        break;
    case CaseId::E3_1:
        set_form(1, 2);
        if (p % 8 != 1)
            fail("p != 1 (mod 8)");
        break;
    case CaseId::E3_2:
        set_form(1, 6);
        if (p % 24 != 1)
            fail("p != 1 (mod 24)");
        break;
    case CaseId::E3_3:
        set_form(1, 10);
        if (!in(p % 40, {1, 9}))
            fail("p != 1, 9 (mod 40)");
        break;
    case CaseId::E3_4:
        set_form(1, 12);
        if (p % 24 != 1)
            fail("p != 1 (mod 24)");
        break;
    case CaseId::E3_5:
        set_form(3, 2);
        if (p % 24 != 11)
            fail("p != 11 (mod 24)");
        break;
    case CaseId::E3_6:
        set_form(5, 2);
        if (!in(p % 40, {13, 37}))
            fail("p != 13, 37 (mod 40)");
        break;
    default:
        throw std::invalid_argument("not a construction case: "
                                    + std::string(case_name(c.id())));
    }
    return h;
}

/* Only called once p is known to be represented; indices are then integral. */
std::vector<Check> checks_for(ConstructionCase const & c, int64_t p, LambdaCache & cache)
{
    auto const name = case_name(c.id());
    auto plain = [](std::function<int128(Representation)> v) -> Lhs {
        return [v](Representation r) -> std::optional<int128> { return v(r); };
    };
    std::vector<Check> out;

    switch (c.id()) {
    case CaseId::T3_1: {
        int64_t const a = c.a(), b = c.b();
        int64_t const idx = exact_div((a * b + 1) * p - a - b, 8, name) + 1;
        out.push_back({"lambda", {a, b}, idx, scaled_norm(a, p, [a, b](Representation r) {
                           return sign_pow((a + b) / 2 * r.x + (b + 1) / 2);
                       })});
        break;
    }
    case CaseId::C3_1:
        out.push_back({"lambda", {1, 1}, exact_div(p - 1, 4, name) + 1,
                       plain(four_x2_minus_2p(1, p))});
        break;
    case CaseId::C3_2:
        out.push_back({"lambda", {1, 5}, exact_div(3 * p + 1, 4, name),
                       scaled_norm(1, p, [](Representation r) { return sign_pow(r.x - 1); })});
        break;
    case CaseId::T3_2i: {
        int64_t const a = c.a(), b = c.b();
        int64_t const idx = exact_div((a + b) * (p - 1), 8, name) + 1;
        out.push_back({"lambda", {a, b}, idx, scaled_norm(1, p, [a, b](Representation r) {
                           return sign_pow((a * b + 1) / 2 * r.y);
                       })});
        break;
    }
    case CaseId::T3_2ii: {
        int64_t const a = c.a(), b = c.b();
        int64_t const idx = exact_div((a + b) * (p - 1), 8, name) + 1;
        out.push_back({"lambda", {a, b}, idx, half_y_sign(0, four_x2_minus_2p(1, p))});
        break;
    }
    case CaseId::C3_3:
    case CaseId::C3_5: {
        int64_t const a = c.a(), b = c.b();
        int64_t const lhs_idx = exact_div((a + b) * (p - 1), 8, name) + 1;
        int64_t const rhs_idx = exact_div((a * b + 1) * (p - 1), 8, name) + 1;
        int128 const lhs = cache.value({a, b}, lhs_idx);
        out.push_back({"lambda(a,b) = lambda(1,ab)", {1, a * b}, rhs_idx,
                       [lhs](Representation) -> std::optional<int128> { return lhs; }});
        break;
    }
    case CaseId::C3_4: {
        int64_t const a = c.a();
        int64_t const idx = exact_div((a + 4) * p - a + 4, 8, name);
        out.push_back({"lambda", {a, 4}, idx,
                       scaled_norm(1, p, [](Representation r) { return sign_pow(r.y); })});
        break;
    }
    case CaseId::T3_3: {
        int64_t const a = c.a(), b = c.b();
        int64_t const idx = exact_div((a * b + 1) * p - a - b, 8, name) + 1;
        out.push_back({"lambda via x", {a, b}, idx,
                       half_y_sign((a - 1) / 2, four_x2_minus_2p(a, p))});
        out.push_back({"lambda via y", {a, b}, idx,
                       half_y_sign((a - 1) / 2, two_p_minus_4y2(b, p))});
        break;
    }
    case CaseId::E1_6:
        out.push_back({"lambda", {1, 7}, p, plain(four_x2_minus_2p(1, p))});
        break;
    case CaseId::E1_7:
        out.push_back({"lambda", {1, 1}, exact_div(p + 3, 4, name),
                       plain(four_x2_minus_2p(1, p))});
        break;
    case CaseId::E1_8:
        out.push_back({"lambda(2,6;p)", {2, 6}, p, plain(four_x2_minus_2p(1, p))});
        out.push_back({"lambda(1,3;(p+1)/2)", {1, 3}, exact_div(p + 1, 2, name),
                       plain(four_x2_minus_2p(1, p))});
        break;
    case CaseId::E3_1:
        out.push_back({"lambda", {1, 2}, exact_div(3 * p + 5, 8, name),
                       half_y_sign(0, four_x2_minus_2p(1, p))});
        break;
    case CaseId::E3_2:
        out.push_back({"lambda", {1, 6}, exact_div(7 * p + 1, 8, name),
                       half_y_sign(0, four_x2_minus_2p(1, p))});
        break;
    case CaseId::E3_3:
        out.push_back({"lambda", {1, 10}, exact_div(11 * p - 3, 8, name),
                       half_y_sign(0, four_x2_minus_2p(1, p))});
        break;
    case CaseId::E3_4:
        out.push_back({"lambda", {1, 12}, exact_div(13 * p - 5, 8, name),
                       half_y_sign(0, four_x2_minus_2p(1, p))});
        break;
    case CaseId::E3_5:
        /* (-1)^{y/2} (8y^2 - 2p) */
        out.push_back({"lambda", {2, 3}, exact_div(7 * p + 3, 8, name),
                       half_y_sign(0, [p](Representation r) {
                           return 8 * int128(r.y) * r.y - 2 * int128(p);
                       })});
        break;
    case CaseId::E3_6:
        out.push_back({"lambda", {2, 5}, exact_div(11 * p + 1, 8, name),
                       half_y_sign(0, two_p_minus_4y2(2, p))});
        break;
    default:
        throw std::invalid_argument("not a construction case");
    }
    return out;
}

Representation primary_of(std::vector<Representation> const & reps)
{
    std::optional<Representation> best;
    for (auto const & r : reps)
        if (r.x >= 0 && r.y >= 0 && (!best || r < *best))
            best = r;
    return best ? *best : reps.front();
}

/* Evaluate every check at every representation; all must agree with the table. */
void run_checks(std::vector<Check> const & checks,
                std::vector<Representation> const & reps, int64_t p,
                LambdaCache & cache, Verdict & v)
{
    Representation const primary = primary_of(reps);
    v.status = Status::holds;
    for (auto const & chk : checks) {
        int128 const rhs = cache.value(chk.lambda, chk.index);
        for (auto const & r : reps) {
            auto const lhs = chk.lhs(r);
            Witness w{p, r.x, r.y, chk.index, lhs.value_or(0), rhs, chk.label};
            bool bad = false;
            if (!lhs) {
                bad = true;
                if (v.reason.empty())
                    v.reason = "y is odd where it must be even";
            } else if (*lhs != rhs) {
                bad = true;
            }
            if (bad) {
                v.status = Status::falsified;
                v.failures.push_back(w);
            }
            if (r == primary)
                v.checks.push_back(w);
        }
    }
    if (v.status == Status::falsified && v.reason.empty())
        v.reason = "sides differ";
}

Verdict not_applicable(std::string why)
{
    Verdict v;
    v.status = Status::not_applicable;
    v.reason = std::move(why);
    return v;
}

void require_prime(int64_t p)
{
    if (!is_prime(p))
        throw std::invalid_argument(std::to_string(p) + " is not prime");
}

std::string form_text(int64_t a, int64_t b)
{
    return "[" + std::to_string(a) + ", 0, " + std::to_string(b) + "]";
}

} // namespace

std::vector<CaseId> all_cases()
{
    std::vector<CaseId> out;
    for (auto const & ci : case_table)
        out.push_back(ci.id);
    return out;
}

std::string_view case_name(CaseId id)
{
    return info(id).name;
}

std::optional<CaseId> parse_case(std::string_view name)
{
    for (auto const & ci : case_table)
        if (ci.name == name)
            return ci.id;
    return std::nullopt;
}

ParamKind case_param_kind(CaseId id)
{
    return info(id).kind;
}

bool params_admissible(CaseId id, LambdaParams params)
{
    int64_t const a = params.a, b = params.b;
    bool const coprime = gcd(a, b) == 1;
    switch (id) {
    case CaseId::T3_1:
        return a % 2 == 1 && b % 2 == 1;
    case CaseId::T3_2i:
    case CaseId::C3_3:
        return coprime && (a * b) % 2 == 1;
    case CaseId::T3_2ii:
    case CaseId::C3_5:
        return coprime && a % 2 == 1 && b % 2 == 0 && b % 8 != 0;
    case CaseId::T3_3:
        return a % 2 == 1 && b % 2 == 0 && b % 8 != 0;
    case CaseId::C3_4:
        return a % 2 == 1 && b == 4;
    case CaseId::T4_1:
        return a % 8 != 0 && b % 8 != 0;
    case CaseId::T4_2:
        return coprime && (a * b) % 4 == 1;
    case CaseId::T4_3:
        return (a * b) % 2 == 1 && a * b != 3 && (a + b) % 8 == 4;
    default:
        return true;
    }
}

std::vector<LambdaParams> admissible_grid(CaseId id, int64_t max)
{
    std::vector<LambdaParams> out;
    switch (case_param_kind(id)) {
    case ParamKind::fixed:
        break;
    case ParamKind::a_only:
        for (int64_t a = 1; a <= max; ++a)
            if (params_admissible(id, {a, 4}))
                out.emplace_back(a, 4);
        break;
    case ParamKind::a_and_b:
        for (int64_t a = 1; a <= max; ++a)
            for (int64_t b = 1; b <= max; ++b)
                if (params_admissible(id, {a, b}))
                    out.emplace_back(a, b);
        break;
    }
    return out;
}

ConstructionCase::ConstructionCase(CaseId id, std::optional<LambdaParams> params)
    : id_(id), params_(params)
{
    switch (case_param_kind(id)) {
    case ParamKind::fixed:
        params_.reset();
        return;
    case ParamKind::a_only:
        if (!params_)
            throw std::invalid_argument(std::string(case_name(id)) + " needs parameter a");
        params_ = LambdaParams(params_->a, 4);
        break;
    case ParamKind::a_and_b:
        if (!params_)
            throw std::invalid_argument(std::string(case_name(id))
                                        + " needs parameters a and b");
        break;
    }
    if (!params_admissible(id, *params_))
        throw std::invalid_argument("parameters (" + std::to_string(params_->a) + ", "
                                    + std::to_string(params_->b)
                                    + ") violate the side conditions of "
                                    + std::string(case_name(id)));
}

std::string_view status_name(Status s)
{
    switch (s) {
    case Status::holds: return "holds";
    case Status::not_applicable: return "not_applicable";
    case Status::falsified: return "falsified";
    }
    return "?";
}

std::shared_ptr<CoeffTable const> LambdaCache::table(LambdaParams params, int64_t min_limit)
{
    std::pair<int64_t, int64_t> const key = std::minmax(params.a, params.b);
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = tables_.find(key);
    if (it != tables_.end() && it->second->limit() >= min_limit)
        return it->second;

    int64_t const grown = it != tables_.end() ? 2 * it->second->limit() : 1024;
    int64_t const limit = std::max(min_limit, grown);
    LambdaParams const canon(key.first, key.second);
    auto built = std::make_shared<CoeffTable const>(lambda_table(canon, limit, Method::sparse));
    if (it == tables_.end() && audit_prefix_ > 0) {
        int64_t const prefix = std::min(limit, audit_prefix_);
        auto const ref = lambda_table(canon, prefix, Method::newton);
        for (int64_t n = 1; n <= prefix; ++n)
            if ((*built)[n] != ref[n])
                throw internal_inconsistency("sparse/newton audit mismatch at n = "
                                             + std::to_string(n));
    }
    tables_[key] = built;
    return built;
}

int128 LambdaCache::value(LambdaParams params, int64_t n)
{
    return table(params, n)->at(n);
}

void LambdaCache::preload(CoeffTable const & t)
{
    LambdaParams const lp = t.params();
    std::pair<int64_t, int64_t> const key = std::minmax(lp.a, lp.b);
    std::lock_guard<std::mutex> lock(mutex_);
    tables_[key] = std::make_shared<CoeffTable const>(t);
}

Verdict verify_construction(ConstructionCase const & c, int64_t p, LambdaCache & cache)
{
    require_prime(p);
    if (is_product_case(c.id()) || c.id() == CaseId::T5_3)
        throw std::invalid_argument("verify_construction: unsupported case "
                                    + std::string(case_name(c.id())));
    if (p == 2)
        return not_applicable("p must be odd");

    Hypotheses const h = hypotheses(c, p);
    if (!h.violated.empty())
        return not_applicable(h.violated);

    std::vector<Representation> reps;
    for (auto const & r : representations({h.form_a, 0, h.form_b}, p).solutions)
        if (h.accept(r))
            reps.push_back(r);
    if (reps.empty())
        return not_applicable("p is not represented by " + form_text(h.form_a, h.form_b)
                              + h.accept_text);

    Verdict v;
    run_checks(checks_for(c, p, cache), reps, p, cache, v);
    return v;
}

std::vector<Witness> evaluate_at(ConstructionCase const & c, int64_t p,
                                 Representation rep, LambdaCache & cache)
{
    require_prime(p);
    Hypotheses const h = hypotheses(c, p);
    if (!h.violated.empty())
        throw std::invalid_argument("evaluate_at: hypothesis fails: " + h.violated);
    if (QuadForm{h.form_a, 0, h.form_b}(rep.x, rep.y) != p || !h.accept(rep))
        throw std::invalid_argument("evaluate_at: not a valid representation of p");
    Verdict v;
    run_checks(checks_for(c, p, cache), {rep}, p, cache, v);
    return v.checks;
}

Verdict verify_product(ConstructionCase const & c, int64_t p, LambdaCache & cache)
{
    require_prime(p);
    if (!is_product_case(c.id()))
        throw std::invalid_argument("verify_product: unsupported case "
                                    + std::string(case_name(c.id())));
    if (p == 2)
        return not_applicable("p must be odd");

    int64_t const a = c.a(), b = c.b();
    int64_t target = 0; /* = 8n + a + b */
    switch (c.id()) {
    case CaseId::T4_1:
        target = p;
        break;
    case CaseId::T4_2:
        target = 2 * p;
        break;
    default:
        if ((a * b) % p == 0)
            return not_applicable("p divides ab");
        target = 4 * p;
        break;
    }
    int64_t const rest = target - a - b;
    if (rest < 0 || (c.id() != CaseId::T4_3 && rest % 8 != 0))
        return not_applicable(std::to_string(target) + " is not of the form 8n + a + b");
    /* a + b = 4 (mod 8) makes 4p - a - b divisible by 8 */
    int64_t const n = exact_div(rest, 8, case_name(c.id()));

    auto const reps = normalized_reps({a, 0, b}, target);
    if (reps.empty())
        return not_applicable(std::to_string(target) + " has no representation by "
                              + form_text(a, b) + " with x = y = 1 (mod 4)");
    int128 const lam = cache.value({a, b}, n + 1);
    int128 const pp = p;
    int128 const lam2 = checked_mul(lam, lam);
    Verdict v;
    v.status = Status::holds;
    for (auto const & r : reps) {
        int128 const x2 = int128(r.x) * r.x;
        int128 lhs = 0, rhs = 0;
        switch (c.id()) {
        case CaseId::T4_1: {
            int128 const t = 2 * a * x2 - pp;
            lhs = checked_mul(t, t);
            rhs = checked_sub(pp * pp, checked_mul(4 * int128(a) * b, lam2));
            break;
        }
        case CaseId::T4_2: {
            int128 const t = a * x2 - pp;
            lhs = checked_mul(t, t);
            rhs = checked_sub(pp * pp, checked_mul(int128(a) * b, lam2));
            break;
        }
        default: {
            int128 const t = a * x2 - 2 * pp;
            lhs = checked_mul(t, t);
            rhs = checked_sub(4 * pp * pp, checked_mul(int128(a) * b, lam2));
            break;
        }
        }
        Witness const xy{p, r.x, r.y, n + 1, int128(r.x) * r.y, lam, "xy"};
        Witness const rec{p, r.x, r.y, n + 1, lhs, rhs, "recovery"};
        for (auto const & w : {xy, rec}) {
            if (r == reps.front())
                v.checks.push_back(w);
            if (!w.agrees())
                v.failures.push_back(w);
        }
    }
    if (reps.size() > 1) {
        /* the identity presumes a single normalized representation */
        Representation const r = reps.front();
        v.failures.push_back({p, r.x, r.y, n + 1, static_cast<int128>(reps.size()), 1,
                              "uniqueness"});
        v.reason = "normalized representation of " + std::to_string(target) + " by "
                   + form_text(a, b) + " is not unique";
    }
    if (!v.failures.empty()) {
        v.status = Status::falsified;
        if (v.reason.empty())
            v.reason = "sides differ";
    }
    return v;
}

Verdict verify_thm53(int64_t p, LambdaCache & cache)
{
    require_prime(p);
    if (p <= 5)
        throw std::invalid_argument("verify_thm53: p must exceed 5");

    int64_t const r = p % 30;
    LambdaParams const lp{3, 5};
    Verdict v;
    v.status = Status::holds;

    auto zero_checks = [&](std::vector<std::pair<std::string, int64_t>> const & idx) {
        for (auto const & [label, index] : idx) {
            int128 const rhs = cache.value(lp, index);
            Witness w{p, 0, 0, index, 0, rhs, label};
            v.checks.push_back(w);
            if (!w.agrees()) {
                v.status = Status::falsified;
                v.failures.push_back(w);
            }
        }
    };
    auto rep_checks = [&](int64_t fa, int64_t fb, std::vector<Check> checks) {
        auto const reps = representations({fa, 0, fb}, p).solutions;
        if (reps.empty()) {
            v.status = Status::falsified;
            v.reason = "p is not represented by " + form_text(fa, fb);
            for (auto const & chk : checks)
                v.failures.push_back({p, 0, 0, chk.index, 0,
                                      cache.value(chk.lambda, chk.index), chk.label});
            return;
        }
        Verdict sub;
        run_checks(checks, reps, p, cache, sub);
        v.checks.insert(v.checks.end(), sub.checks.begin(), sub.checks.end());
        v.failures.insert(v.failures.end(), sub.failures.begin(), sub.failures.end());
        if (sub.status == Status::falsified)
            v.status = Status::falsified;
    };
    auto plain = [](std::function<int128(Representation)> f) -> Lhs {
        return [f](Representation rep) -> std::optional<int128> { return f(rep); };
    };

    if (in(r, {1, 19}))
        rep_checks(1, 15, {{"lambda(3,5;p)", lp, p, plain(four_x2_minus_2p(1, p))}});
    else
        zero_checks({{"lambda(3,5;p)", p}});

    if (in(r, {17, 23})) {
        int128 const pp = p;
        rep_checks(3, 5, {
            {"lambda(3,5;2p)", lp, 2 * p, plain([pp](Representation q) {
                 return 2 * pp - 12 * int128(q.x) * q.x; })},
            {"lambda(3,5;3p)", lp, 3 * p, plain([pp](Representation q) {
                 return 36 * int128(q.x) * q.x - 6 * pp; })},
            {"lambda(3,5;5p)", lp, 5 * p, plain([pp](Representation q) {
                 return 10 * pp - 60 * int128(q.x) * q.x; })},
        });
    } else {
        zero_checks({{"lambda(3,5;2p)", 2 * p}, {"lambda(3,5;3p)", 3 * p},
                     {"lambda(3,5;5p)", 5 * p}});
    }
    if (v.status == Status::falsified && v.reason.empty())
        v.reason = "sides differ";
    return v;
}

Verdict verify(ConstructionCase const & c, int64_t p, LambdaCache & cache)
{
    require_prime(p);
    if (p == 2)
        return not_applicable("p must be odd");
    if (is_product_case(c.id()))
        return verify_product(c, p, cache);
    if (c.id() == CaseId::T5_3)
        return p <= 5 ? not_applicable("p must exceed 5") : verify_thm53(p, cache);
    return verify_construction(c, p, cache);
}

/* ---- closed forms ---- */

namespace {

struct FamilyInfo
{
    Family f;
    std::string_view name;
};

constexpr std::array<FamilyInfo, 6> family_table{{
    {Family::L13, "L13"},
    {Family::L17, "L17"},
    {Family::L35, "L35"},
    {Family::L115, "L115"},
    {Family::KF, "KF"},
    {Family::LEMMA51, "LEMMA51"},
}};

/* 1/2 sum over x^2 + k y^2 = m of (x^2 - k y^2) */
int128 half_norm_sum(int64_t k, int64_t m)
{
    int128 s = 0;
    for (auto const & r : representations({1, 0, k}, m).solutions)
        s += int128(r.x) * r.x - int128(k) * r.y * r.y;
    if (s % 2 != 0)
        throw internal_inconsistency("closed form: odd sum for m = " + std::to_string(m));
    return s / 2;
}

} // namespace

std::string_view family_name(Family f)
{
    for (auto const & fi : family_table)
        if (fi.f == f)
            return fi.name;
    return "?";
}

std::optional<Family> parse_family(std::string_view name)
{
    for (auto const & fi : family_table)
        if (fi.name == name)
            return fi.f;
    return std::nullopt;
}

std::optional<std::pair<LambdaParams, int64_t>> closed_form_target(Family f, int64_t n)
{
    switch (f) {
    case Family::L13: return std::pair{LambdaParams{1, 3}, n + 1};
    case Family::L17: return std::pair{LambdaParams{1, 7}, 2 * n + 1};
    case Family::L35: return std::pair{LambdaParams{3, 5}, 2 * n + 1};
    case Family::L115: return std::pair{LambdaParams{1, 15}, 4 * n + 1};
    case Family::KF: return std::pair{LambdaParams{1, 1}, n + 1};
    case Family::LEMMA51: return std::nullopt;
    }
    return std::nullopt;
}

Lemma51Sides lemma51_sides(LambdaParams params, int64_t n)
{
    int64_t const a = params.a, b = params.b;
    if ((a * b) % 4 != 3)
        throw std::invalid_argument("lemma51_sides: ab must be 3 (mod 4)");
    if (n < 0)
        throw std::invalid_argument("lemma51_sides: n must be >= 0");
    int64_t const m = 2 * n + 1;
    int128 lhs = 0;
    for (auto const & r : representations({1, 0, a * b}, m).solutions)
        if (mod(r.x + a * r.y, 4) == 1)
            lhs += (int128(r.x) + int128(a) * r.y) * (int128(r.x) - int128(b) * r.y);
    return {lhs, half_norm_sum(a * b, m)};
}

int128 closed_form(Family f, int64_t n, std::optional<LambdaParams> lemma_params)
{
    if (n < 0)
        throw std::invalid_argument("closed_form: n must be >= 0");
    switch (f) {
    case Family::L13: return half_norm_sum(3, 2 * n + 1);
    case Family::L17: return half_norm_sum(7, 2 * n + 1);
    case Family::L35:
    case Family::L115: return half_norm_sum(15, 2 * n + 1);
    case Family::KF: {
        int128 s = 0;
        for (auto const & r : representations({1, 0, 1}, 4 * n + 1).solutions)
            if (mod(r.x, 4) == 1)
                s += int128(r.x) * r.x - int128(r.y) * r.y;
        return s;
    }
    case Family::LEMMA51: {
        if (!lemma_params)
            throw std::invalid_argument("closed_form: LEMMA51 needs parameters a, b");
        auto const sides = lemma51_sides(*lemma_params, n);
        if (sides.lhs != sides.rhs)
            throw internal_inconsistency("closed_form: the two sides of LEMMA51 differ at n = "
                                         + std::to_string(n));
        return sides.rhs;
    }
    }
    throw std::invalid_argument("closed_form: unknown family");
}

/* ---- range reports ---- */

RangeReport range_report(CaseId id, std::vector<LambdaParams> const & grid,
                         int64_t p_max, LambdaCache & cache, unsigned threads)
{
    RangeReport rep;
    rep.case_name = std::string(case_name(id));
    rep.p_max = p_max;

    std::vector<ConstructionCase> cases;
    if (case_param_kind(id) == ParamKind::fixed) {
        cases.emplace_back(id);
    } else {
        std::vector<LambdaParams> sorted = grid;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (auto const & lp : sorted) {
            cases.emplace_back(id, lp);
            rep.params.push_back(*cases.back().params());
        }
    }

    std::vector<int64_t> primes;
    if (p_max >= 3)
        for (int64_t q : sieve_primes(p_max).primes())
            if (q != 2)
                primes.push_back(q);

    struct Instance
    {
        int64_t p;
        std::size_t case_index;
    };
    std::vector<Instance> work;
    for (int64_t q : primes)
        for (std::size_t i = 0; i < cases.size(); ++i)
            work.push_back({q, i});

    std::vector<Verdict> results(work.size());
    std::vector<std::exception_ptr> errors(work.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t const k = next.fetch_add(1);
            if (k >= work.size())
                return;
            try {
                results[k] = verify(cases[work[k].case_index], work[k].p, cache);
            } catch (...) {
                errors[k] = std::current_exception();
            }
        }
    };
    unsigned const n_threads = std::max(1u, threads);
    if (n_threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < n_threads; ++t)
            pool.emplace_back(worker);
        for (auto & th : pool)
            th.join();
    }
    for (auto const & e : errors)
        if (e)
            std::rethrow_exception(e);

    for (auto const & v : results) {
        switch (v.status) {
        case Status::holds:
            ++rep.checked;
            break;
        case Status::falsified:
            ++rep.checked;
            ++rep.falsified;
            rep.witnesses.insert(rep.witnesses.end(), v.failures.begin(), v.failures.end());
            break;
        case Status::not_applicable:
            ++rep.skipped;
            break;
        }
    }
    return rep;
}

} // namespace etaq
