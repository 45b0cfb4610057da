#pragma once

#include <string>
#include <vector>

#include "lincount/bigint.hpp"

namespace lincount {

struct CheckCase {
    std::string name;
    bool pass = false;
    std::string lhs;
    std::string rhs;
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckCase> cases;

    bool all_pass() const {
        for (const auto& c : cases)
            if (!c.pass) return false;
        return true;
    }
    int failures() const {
        int n = 0;
        for (const auto& c : cases)
            if (!c.pass) ++n;
        return n;
    }
};

/// Triple equality of the r = 1 closed forms against the Schubert integral,
/// over (g,d) with 1 <= g <= max_g and ceil((g+2)/2) <= d <= g+4.
SuiteResult suite_r1(int max_g);

/// Closed form = integral = degeneration sum = (r+1)^g over the balanced
/// grid rg+r <= d <= rg+r+2, g <= max_g, r <= max_r.
SuiteResult suite_large_d(int max_g, int max_r);

/// Filling counts against the Schubert integral (no largeness assumption),
/// the (r+1)^g value for d >= g+r, the shape factorization, and the
/// per-shape red counts against the sigma_{1^r}^g coefficients.
SuiteResult suite_tableaux(int max_g, int max_r);

/// Both recursion identities, the k = 1 reduction to the incidence count,
/// and the 2^g stable range.
SuiteResult suite_cps(int max_g);

/// m = 0 reduction to the plain integral, and product formula = integral
/// wherever d >= rg+r+lambda_tot, for profiles of size up to 3.
SuiteResult suite_ramified(int max_g, int max_r);

/// Closed factorial form against the engine integral for r,s <= 3, with the
/// three small values pinned.
SuiteResult suite_castelnuovo();

/// Runs the named suite ("r1", "large-d", "tableaux", "cps", "ramified",
/// "castelnuovo") or all of them. Throws InvalidArgument on unknown names.
std::vector<SuiteResult> run_suites(const std::string& which, int max_g, int max_r);

}  // namespace lincount
