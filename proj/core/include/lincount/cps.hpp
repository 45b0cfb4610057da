#pragma once

#include "lincount/bigint.hpp"

namespace lincount {

/// Count of degree-d maps from a general genus-g curve to P^1 where the
/// first k marked points share one image and the remaining n-k images are
/// general; n = 2d+1-g. Indexing note: this (g,d,k) convention is the only
/// one accepted here (elsewhere d is sometimes written g+1+l and k called r).
struct CpsProblem {
    int g = 0;
    int d = 1;
    int k = 1;
    long long n = 0;  // 2d+1-g
};

/// Validates 1 <= k <= min(d, n). Throws InvalidK otherwise.
CpsProblem make_cps(int g, int d, int k);

/// Difference of two Grassmannian integrals: the count in Gr(2,d+1) with a
/// sigma_{k-1} condition, minus the base-point correction in Gr(2,d) with
/// sigma_{k-2}. The correction is structurally absent for k = 1 (no second
/// box is built). The result is asserted nonnegative.
Int cps_degree(const CpsProblem& p);

struct RecursionSides {
    Int lhs;
    Int rhs;
};

/// Both sides of the descent identity, computed independently through
/// cps_degree: L'(g,d,1) vs L'(g-1,d-1,1) + L'(g-1,d,2), and for k > 1
/// L'(g,d,k) vs L'(g-1,d-1,k-1) + L'(g-1,d,k+1).
/// Throws InvalidK if any of the three subproblems is malformed.
RecursionSides recursion_check(int g, int d, int k);

}  // namespace lincount
