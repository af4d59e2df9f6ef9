#include "etaq/report.hpp"

#include <cctype>
#include <sstream>

namespace etaq {

namespace {

std::string params_text(RangeReport const & r)
{
    if (r.params.empty())
        return "-";
    std::string s;
    for (auto const & lp : r.params) {
        if (!s.empty())
            s += ";";
        s += std::to_string(lp.a) + "," + std::to_string(lp.b);
    }
    return s;
}

bool is_decimal(nlohmann::json const & v)
{
    if (!v.is_string())
        return false;
    auto const & s = v.get_ref<std::string const &>();
    std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

} // namespace

nlohmann::json to_json(RangeReport const & r)
{
    nlohmann::json j;
    j["case"] = r.case_name;
    j["params"] = nlohmann::json::array();
    for (auto const & lp : r.params)
        j["params"].push_back({{"a", std::to_string(lp.a)}, {"b", std::to_string(lp.b)}});
    j["p_max"] = std::to_string(r.p_max);
    j["checked"] = std::to_string(r.checked);
    j["skipped"] = std::to_string(r.skipped);
    j["falsified"] = std::to_string(r.falsified);
    j["witnesses"] = nlohmann::json::array();
    for (auto const & w : r.witnesses)
        j["witnesses"].push_back({
            {"p", std::to_string(w.p)},
            {"x", std::to_string(w.x)},
            {"y", std::to_string(w.y)},
            {"index", std::to_string(w.index)},
            {"lhs", to_string(w.lhs)},
            {"rhs", to_string(w.rhs)},
        });
    return j;
}

std::string to_tsv(RangeReport const & r)
{
    std::ostringstream os;
    os << "case\tparams\tp_max\tchecked\tskipped\tfalsified\n";
    os << r.case_name << '\t' << params_text(r) << '\t' << r.p_max << '\t' << r.checked
       << '\t' << r.skipped << '\t' << r.falsified << '\n';
    for (auto const & w : r.witnesses)
        os << "witness\t" << w.p << '\t' << w.x << '\t' << w.y << '\t' << w.index << '\t'
           << to_string(w.lhs) << '\t' << to_string(w.rhs) << '\n';
    return os.str();
}

std::string validate_report_json(nlohmann::json const & j)
{
    if (!j.is_object())
        return "report is not an object";
    for (char const * key : {"case", "params", "p_max", "checked", "skipped",
                             "falsified", "witnesses"})
        if (!j.contains(key))
            return std::string("missing key: ") + key;
    if (j.size() != 7)
        return "unexpected extra keys";
    if (!j["case"].is_string())
        return "case must be a string";
    for (char const * key : {"p_max", "checked", "skipped", "falsified"})
        if (!is_decimal(j[key]))
            return std::string(key) + " must be a decimal string";
    if (!j["params"].is_array())
        return "params must be an array";
    for (auto const & p : j["params"])
        if (!p.is_object() || p.size() != 2 || !p.contains("a") || !p.contains("b")
            || !is_decimal(p["a"]) || !is_decimal(p["b"]))
            return "params entries must be {a, b} decimal strings";
    if (!j["witnesses"].is_array())
        return "witnesses must be an array";
    for (auto const & w : j["witnesses"]) {
        if (!w.is_object() || w.size() != 6)
            return "witness must have exactly p, x, y, index, lhs, rhs";
        for (char const * key : {"p", "x", "y", "index", "lhs", "rhs"})
            if (!w.contains(key) || !is_decimal(w[key]))
                return std::string("witness.") + key + " must be a decimal string";
    }
    return {};
}

} // namespace etaq
