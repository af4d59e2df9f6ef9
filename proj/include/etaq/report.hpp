#ifndef ETAQ_REPORT_HPP
#define ETAQ_REPORT_HPP

#include <string>

#include <json.hpp>

#include "etaq/theorems.hpp"

namespace etaq {

/*
 * {case, params, p_max, checked, skipped, falsified,
 *  witnesses: [{p, x, y, index, lhs, rhs}]}
 *
 * Every number is a decimal string; params is a list of {a, b}.
 */
nlohmann::json to_json(RangeReport const & r);

/* Header line, one summary row, then one "witness" row per falsifying witness. */
std::string to_tsv(RangeReport const & r);

/* Schema check for the JSON above; returns an empty string when valid. */
std::string validate_report_json(nlohmann::json const & j);

} // namespace etaq

#endif /* ETAQ_REPORT_HPP */
