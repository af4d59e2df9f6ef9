#include "etaq/cli.hpp"

#include <CLI11.hpp>

#include <optional>
#include <sstream>
#include <stdexcept>

#include "etaq/errors.hpp"
#include "etaq/etaseries.hpp"
#include "etaq/quadform.hpp"
#include "etaq/report.hpp"
#include "etaq/theorems.hpp"

namespace etaq {

namespace {

struct usage_error : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

constexpr int64_t lambda_row_budget = 200'000'000;

struct CliConfig
{
    int64_t a = 0;
    int64_t b = 0;
    int64_t n = -1;
    int64_t n_max = 0;
    int64_t p_max = 0;
    int64_t grid_max = 0;
    int64_t disc = 0;
    std::string form;
    std::string method = "sparse";
    std::string case_name;
    std::string family;
    bool json = false;
    bool normalized = false;
    unsigned threads = 1;
};

QuadForm parse_form(std::string const & text)
{
    std::istringstream is(text);
    QuadForm f{};
    char c1 = 0, c2 = 0;
    if (!(is >> f.a >> c1 >> f.b >> c2 >> f.c) || c1 != ',' || c2 != ',' || !is.eof())
        throw usage_error("--form expects a,b,c");
    int128 const d = int128(f.b) * f.b - 4 * int128(f.a) * f.c;
    if (d < INT64_MIN || d > INT64_MAX)
        throw overflow_error("discriminant of --form exceeds 64 bits");
    if (!f.is_positive_definite())
        throw usage_error("--form must be positive definite");
    return f;
}

int run_lambda(CliConfig const & cfg, std::ostream & out)
{
    if (cfg.a < 1 || cfg.b < 1)
        throw usage_error("--a and --b must be >= 1");
    if (cfg.n_max < 1)
        throw usage_error("--n-max must be >= 1");
    if (cfg.n_max > lambda_row_budget)
        throw resource_limit("--n-max exceeds " + std::to_string(lambda_row_budget));
    LambdaParams const lp{cfg.a, cfg.b};

    if (cfg.method == "multinomial") {
        if (cfg.n_max - 1 > default_partition_cap)
            throw usage_error("--n-max exceeds the partition cap "
                              + std::to_string(default_partition_cap + 1));
        for (int64_t n = 1; n <= cfg.n_max; ++n)
            out << n << '\t' << to_string(lambda_multinomial(lp, n - 1)) << '\n';
        return exit_ok;
    }
    auto const method = parse_method(cfg.method);
    if (!method)
        throw usage_error("unknown --method " + cfg.method);
    auto const table = lambda_table(lp, cfg.n_max, *method);
    std::string buf;
    for (int64_t n = 1; n <= table.limit(); ++n) {
        buf += std::to_string(n);
        buf += '\t';
        buf += to_string(table[n]);
        buf += '\n';
    }
    out << buf;
    return exit_ok;
}

int run_verify(CliConfig const & cfg, std::ostream & out)
{
    auto const id = parse_case(cfg.case_name);
    if (!id)
        throw usage_error("unknown case '" + cfg.case_name + "'");
    if (cfg.p_max < 3)
        throw usage_error("--p-max must be >= 3");

    std::vector<LambdaParams> grid;
    switch (case_param_kind(*id)) {
    case ParamKind::fixed:
        break;
    case ParamKind::a_only:
        if (cfg.grid_max > 0)
            grid = admissible_grid(*id, cfg.grid_max);
        else if (cfg.a >= 1)
            grid.emplace_back(cfg.a, 4);
        else
            throw usage_error(cfg.case_name + " needs --a or --grid-max");
        break;
    case ParamKind::a_and_b:
        if (cfg.grid_max > 0)
            grid = admissible_grid(*id, cfg.grid_max);
        else if (cfg.a >= 1 && cfg.b >= 1)
            grid.emplace_back(cfg.a, cfg.b);
        else
            throw usage_error(cfg.case_name + " needs --a and --b, or --grid-max");
        break;
    }
    for (auto const & lp : grid)
        if (!params_admissible(*id, lp))
            throw usage_error("parameters violate the side conditions of " + cfg.case_name);

    LambdaCache cache;
    auto const rep = range_report(*id, grid, cfg.p_max, cache, cfg.threads);
    if (cfg.json)
        out << to_json(rep).dump(2) << '\n';
    else
        out << to_tsv(rep);
    return rep.witnesses.empty() && rep.falsified == 0 ? exit_ok : exit_falsified;
}

int run_reps(CliConfig const & cfg, std::ostream & out)
{
    QuadForm const f = parse_form(cfg.form);
    if (cfg.n < 1)
        throw usage_error("--n must be >= 1");
    std::vector<Representation> sols;
    if (cfg.normalized) {
        if (f.b != 0)
            throw usage_error("--normalized needs a diagonal form a,0,c");
        sols = normalized_reps(f, cfg.n);
    } else {
        sols = representations(f, cfg.n).solutions;
    }
    for (auto const & r : sols)
        out << r.x << '\t' << r.y << '\n';
    out << "count\t" << sols.size() << '\n';
    return exit_ok;
}

int run_classgroup(CliConfig const & cfg, std::ostream & out)
{
    if (!is_discriminant(cfg.disc))
        throw usage_error("--disc must be negative and = 0, 1 (mod 4)");
    for (auto const & f : class_group(cfg.disc).classes)
        out << f.a << '\t' << f.b << '\t' << f.c << '\n';
    return exit_ok;
}

int run_closed(CliConfig const & cfg, std::ostream & out)
{
    auto const fam = parse_family(cfg.family);
    if (!fam)
        throw usage_error("unknown family '" + cfg.family + "'");
    int64_t lo = 0, hi = 0;
    if (cfg.n >= 0) {
        lo = hi = cfg.n;
    } else if (cfg.n_max >= 0) {
        hi = cfg.n_max;
    } else {
        throw usage_error("--n or --n-max must be >= 0");
    }

    std::optional<LambdaParams> lp;
    if (*fam == Family::LEMMA51) {
        if (cfg.a < 1 || cfg.b < 1 || (cfg.a * cfg.b) % 4 != 3)
            throw usage_error("LEMMA51 needs --a, --b with ab = 3 (mod 4)");
        lp.emplace(cfg.a, cfg.b);
    }

    bool all_equal = true;
    LambdaCache cache;
    for (int64_t n = lo; n <= hi; ++n) {
        if (lp) {
            auto const s = lemma51_sides(*lp, n);
            all_equal = all_equal && s.lhs == s.rhs;
            out << n << '\t' << to_string(s.lhs) << '\t' << to_string(s.rhs) << '\n';
            continue;
        }
        int128 const value = closed_form(*fam, n);
        auto const target = closed_form_target(*fam, n);
        int128 const lam = cache.value(target->first, target->second);
        all_equal = all_equal && value == lam;
        out << n << '\t' << to_string(value) << '\t' << to_string(lam) << '\n';
    }
    return all_equal ? exit_ok : exit_falsified;
}

} // namespace

int run_cli(std::vector<std::string> const & args, std::ostream & out, std::ostream & err)
{
    CLI::App app{"Exact coefficients of q prod (1-q^{ak})^3 (1-q^{bk})^3 and "
                 "verification of the identities built on them",
                 "etaq"};
    app.require_subcommand(1);
    CliConfig cfg;

    auto * lam = app.add_subcommand("lambda", "print n<TAB>lambda(a,b;n) for n = 1..n-max");
    lam->add_option("--a", cfg.a)->required();
    lam->add_option("--b", cfg.b)->required();
    lam->add_option("--n-max", cfg.n_max)->required();
    lam->add_option("--method", cfg.method, "sparse | newton | naive | multinomial");

    auto * ver = app.add_subcommand("verify", "check one identity over a prime range");
    ver->add_option("--case", cfg.case_name, "T3.1, C3.1, ..., E1.6, ..., T4.1, T5.3")
        ->required();
    ver->add_option("--a", cfg.a);
    ver->add_option("--b", cfg.b);
    ver->add_option("--grid-max", cfg.grid_max, "all admissible a, b <= grid-max");
    ver->add_option("--p-max", cfg.p_max)->required();
    ver->add_flag("--json", cfg.json, "full JSON report");
    ver->add_option("--threads", cfg.threads, "worker threads (output is identical)");

    auto * reps = app.add_subcommand("reps", "list (x, y) with ax^2 + bxy + cy^2 = n");
    reps->add_option("--form", cfg.form, "a,b,c")->required();
    reps->add_option("--n", cfg.n)->required();
    reps->add_flag("--normalized", cfg.normalized, "only x = y = 1 (mod 4)");

    auto * cg = app.add_subcommand("classgroup", "reduced primitive forms of discriminant d");
    cg->add_option("--disc", cfg.disc)->required();

    auto * cl = app.add_subcommand("closed", "closed-form sums next to the table value");
    cl->add_option("--family", cfg.family, "L13 | L17 | L35 | L115 | KF | LEMMA51")
        ->required();
    cl->add_option("--n", cfg.n);
    cfg.n_max = -1;
    cl->add_option("--n-max", cfg.n_max);
    cl->add_option("--a", cfg.a);
    cl->add_option("--b", cfg.b);

    std::vector<std::string> argv_store{"etaq"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char const *> argv;
    for (auto const & s : argv_store)
        argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (CLI::ParseError const & e) {
        int const code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*lam) {
            if (cfg.n_max < 1)
                throw usage_error("--n-max must be >= 1");
            return run_lambda(cfg, out);
        }
        if (*ver)
            return run_verify(cfg, out);
        if (*reps)
            return run_reps(cfg, out);
        if (*cg)
            return run_classgroup(cfg, out);
        if (*cl)
            return run_closed(cfg, out);
    } catch (overflow_error const & e) {
        err << "overflow: " << e.what() << '\n';
        return exit_overflow;
    } catch (internal_inconsistency const & e) {
        err << "internal inconsistency: " << e.what() << '\n';
        return exit_falsified;
    } catch (cap_exceeded const & e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (resource_limit const & e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (std::invalid_argument const & e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

} // namespace etaq
