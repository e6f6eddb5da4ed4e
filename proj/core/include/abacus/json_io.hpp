#pragma once

// Stable JSON for coefficient tables: a list of
// {"index": [parts...], "num": "<int>", "den": "<int>"} records in
// reverse-lexicographic order of the index.

#include <string>

#include "abacus/symfun.hpp"

namespace abacus {

std::string to_json(const PowerSumPolynomial& f);
std::string to_json(const SchurExpansion& s);

PowerSumPolynomial power_sum_from_json(const std::string& text);
SchurExpansion schur_from_json(const std::string& text);

}  // namespace abacus
