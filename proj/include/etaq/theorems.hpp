#ifndef ETAQ_THEOREMS_HPP
#define ETAQ_THEOREMS_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "etaq/checked_int.hpp"
#include "etaq/etaseries.hpp"
#include "etaq/quadform.hpp"

namespace etaq {

/*
 * Every identity checked by the harness. T = theorem, C = corollary,
 * E = displayed formula; names in the CLI use a dot (T3.1, E3.5, ...).
 */
enum class CaseId {
    T3_1, C3_1, C3_2, T3_2i, T3_2ii, C3_3, C3_4, C3_5, T3_3,
    E1_6, E1_7, E1_8, E3_1, E3_2, E3_3, E3_4, E3_5, E3_6,
    T4_1, T4_2, T4_3,
    T5_3,
};

std::vector<CaseId> all_cases();
std::string_view case_name(CaseId id);
std::optional<CaseId> parse_case(std::string_view name);

enum class ParamKind { fixed, a_only, a_and_b };
ParamKind case_param_kind(CaseId id);

/* Parameter-level side conditions (parity, coprimality, ...). */
bool params_admissible(CaseId id, LambdaParams params);

/* All admissible ordered (a, b) with 1 <= a, b <= max; for a_only cases b = 4. */
std::vector<LambdaParams> admissible_grid(CaseId id, int64_t max);

class ConstructionCase
{
    CaseId id_;
    std::optional<LambdaParams> params_;

    public:
    /* throws std::invalid_argument if params are missing or inadmissible */
    explicit ConstructionCase(CaseId id,
                              std::optional<LambdaParams> params = std::nullopt);

    CaseId id() const { return id_; }
    std::optional<LambdaParams> params() const { return params_; }
    int64_t a() const { return params_->a; }
    int64_t b() const { return params_->b; }
};

enum class Status { holds, not_applicable, falsified };
std::string_view status_name(Status s);

struct Witness
{
    int64_t p = 0;
    int64_t x = 0;
    int64_t y = 0;
    int64_t index = 0; /* lambda index, as in lambda(a,b;index) */
    int128 lhs = 0;
    int128 rhs = 0;
    std::string label;

    bool agrees() const { return lhs == rhs; }
};

struct Verdict
{
    Status status = Status::not_applicable;
    std::string reason;           /* violated hypothesis, or what failed */
    std::vector<Witness> checks;  /* evaluated at the primary representation */
    std::vector<Witness> failures;
};

/*
 * Shared lambda tables, one per unordered {a, b}, grown on demand with the
 * sparse method. The first 1024 entries of each build are audited against
 * the Newton recurrence. Safe for concurrent use.
 */
class LambdaCache
{
    mutable std::mutex mutex_;
    std::map<std::pair<int64_t, int64_t>, std::shared_ptr<CoeffTable const>> tables_;
    int64_t audit_prefix_;

    public:
    explicit LambdaCache(int64_t audit_prefix = 1024) : audit_prefix_(audit_prefix) {}

    std::shared_ptr<CoeffTable const> table(LambdaParams params, int64_t min_limit);
    int128 value(LambdaParams params, int64_t n);

    /* Installs a table for its unordered pair, used as is within its limit. */
    void preload(CoeffTable const & t);
};

Verdict verify_construction(ConstructionCase const & c, int64_t p, LambdaCache & cache);
Verdict verify_product(ConstructionCase const & c, int64_t p, LambdaCache & cache);
Verdict verify_thm53(int64_t p, LambdaCache & cache);

/* Dispatches on the case kind; p = 2 and (for T5.3) p <= 5 are not_applicable. */
Verdict verify(ConstructionCase const & c, int64_t p, LambdaCache & cache);

/*
 * Both sides of every check of a construction case, evaluated at one given
 * representation of p (which must satisfy the case's representation).
 * Used to confirm that sign choices never change the outcome.
 */
std::vector<Witness> evaluate_at(ConstructionCase const & c, int64_t p,
                                 Representation rep, LambdaCache & cache);

enum class Family { L13, L17, L35, L115, KF, LEMMA51 };

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);

/* The lambda(a,b;index) a closed form equals; LEMMA51 has none. */
std::optional<std::pair<LambdaParams, int64_t>> closed_form_target(Family f, int64_t n);

struct Lemma51Sides
{
    int128 lhs;
    int128 rhs;
};

/* ab = 3 (mod 4) */
Lemma51Sides lemma51_sides(LambdaParams params, int64_t n);

/*
 * L13:  1/2 sum_{x^2+3y^2=2n+1}  (x^2-3y^2)   = lambda(1,3;n+1)
 * L17:  1/2 sum_{x^2+7y^2=2n+1}  (x^2-7y^2)   = lambda(1,7;2n+1)
 * L35:  1/2 sum_{x^2+15y^2=2n+1} (x^2-15y^2)  = lambda(3,5;2n+1)
 * L115: same sum                               = lambda(1,15;4n+1)
 * KF:   sum_{x=1 (4), x^2+y^2=4n+1} (x^2-y^2)  = lambda(1,1;n+1)
 * LEMMA51 needs params and throws internal_inconsistency if its sides differ.
 */
int128 closed_form(Family f, int64_t n,
                   std::optional<LambdaParams> lemma_params = std::nullopt);

struct RangeReport
{
    std::string case_name;
    std::vector<LambdaParams> params;
    int64_t p_max = 0;
    int64_t checked = 0;
    int64_t skipped = 0;
    int64_t falsified = 0;
    std::vector<Witness> witnesses; /* falsifying only */
};

/*
 * Verdicts over all odd primes <= p_max and every point of the grid (ignored
 * for fixed cases). The result does not depend on the thread count.
 */
RangeReport range_report(CaseId id, std::vector<LambdaParams> const & grid,
                         int64_t p_max, LambdaCache & cache, unsigned threads = 1);

} // namespace etaq

#endif /* ETAQ_THEOREMS_HPP */
