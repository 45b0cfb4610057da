#pragma once

#include <string>
#include <vector>

#include "lincount/cohomology.hpp"
#include "lincount/partition.hpp"

namespace lincount {

/// One factor of a Schubert class expression: sigma_lambda raised to a power.
struct ExprFactor {
    Partition lambda;
    long long power = 1;
};

/// Parses a product of tokens `s[a,b,...]` with optional `^n` powers joined
/// by `*`, e.g. "s[1]^6 * s[2,1]". `s[]` is the unit class. Whitespace is
/// allowed between tokens. Throws ParseError on malformed input.
std::vector<ExprFactor> parse_schubert_expr(const std::string& text);

/// Evaluates the expression in the given box.
CohomologyClass eval_schubert_expr(const std::string& text, const BoxShape& box);

}  // namespace lincount
