#pragma once

#include <string>
#include <vector>

#include "lincount/bigint.hpp"
#include "lincount/cohomology.hpp"
#include "lincount/partition.hpp"

namespace lincount {

/// Where a count problem sits relative to the proven ranges. A problem can
/// satisfy several conditions at once; the stored tag is the first match in
/// the order below. Empty is checked before RankOne so that a vacuous
/// problem (rho < 0) reports as vacuous even when r = 1.
enum class Regime { LargeD, MinimalN, Empty, RankOne, Unproven };

const char* regime_name(Regime r);

/// A validated incidence-count problem: degree-d maps from a general genus-g
/// curve to P^r hitting n general points, n forced by n*r = dr+d+r-rg.
struct CountProblem {
    int g = 0;
    int r = 1;
    int d = 1;
    long long n = 0;    // marked points, from the balancing equation
    long long rho = 0;  // Brill-Noether number g-(r+1)(g-d+r)
    Regime regime = Regime::Unproven;

    bool proven() const { return regime != Regime::Unproven; }
};

/// Validates (g,r,d) and derives n, rho and the regime tag.
/// Throws NotBalanced when r does not divide dr+d+r-rg.
CountProblem classify(int g, int r, int d);

/// (r+1)^g, valid when d >= rg+r. The raw overload checks only that
/// inequality, so unbalanced triples can still be evaluated.
Int tevelev_large_d(int g, int r, int d);
Int tevelev_large_d(const CountProblem& p);

struct IntegralResult {
    Int value;
    bool proven;  // enumerativity is established only in the tagged regimes
};

/// The Schubert integral over Gr(r+1,d+1) of sigma_{1^r}^g times the sum of
/// products of row classes in total degree (r+1)(d-r)-rg. Zero when that
/// degree is negative.
IntegralResult tevelev_integral(const CountProblem& p);

/// (r+1)^g - (rg+1), the count at the sharp boundary d = rg.
/// Throws RegimeViolation when rg = 0.
Int boundary_value(int g, int r);

struct R1ClosedForms {
    Int sum_form;       // pairing route: sum of two-row pairings
    Int binomial_form;  // squared-factor binomial sum
    Int cps_form;       // 2^g minus boundary binomial corrections
};

/// The three r = 1 closed forms; valid for 2d-2-g >= 0 (else RegimeViolation).
/// All three must agree; callers may assert equality.
R1ClosedForms r1_closed_forms(int g, int d);

/// Integral of sigma_{a,b} * sigma_1^g over Gr(2,d+1), evaluated by the
/// closed form (a-b+1)/(g+1) * C(g+1,d-b), cross-checked internally against
/// C(g,d-b-1) - C(g,d-b). The division must be exact.
/// Throws DegreeMismatch unless a+b+g = 2(d-1).
Int gr2_pairing(int a, int b, int g, int d);

/// Degree in the space of (r+1)-tuples of degree-d polynomials of the
/// closure of the pullback of the Schubert cycle Sigma_lambda:
/// integral of sigma_lambda against the row-class sum in degree
/// (r+1)(d-r) - |lambda|. Throws CodimTooLarge when |lambda| > d-r.
Int pullback_degree(const Partition& lambda, int r, int d);

/// Sum over |lambda| = rg of beta_lambda * pullback_degree(lambda), the
/// degeneration route to (r+1)^g. Throws RegimeViolation outside LargeD.
Int degeneration_sum(const CountProblem& p);

/// g! * (1! * ... * r!) / (s! * ... * (s+r)!) with g = rs+s; equals the
/// number of linear series of dimension r and degree rs+r on a general
/// curve of genus rs+s. The quotient is exact.
Int castelnuovo(int r, int s);

/// Incidence problem with ramification profiles lambda_1..lambda_m imposed
/// at m further fixed points; each profile has at most r parts.
struct RamifiedProblem {
    int g = 0;
    int r = 1;
    int d = 1;
    std::vector<Partition> ramification;
    long long lambda_tot = 0;
    long long n = 0;
};

/// Validates the profile list and the balancing equation
/// n*r = dr+d+r-lambda_tot-gr. Throws NotBalanced / PartitionOutsideBox.
RamifiedProblem make_ramified(int g, int r, int d, std::vector<Partition> ramification);

/// (r+1)^g * prod_j pullback_degree(lambda_j); needs d >= rg+r+lambda_tot.
Int ramified_large_d(const RamifiedProblem& rp);

/// Integral of sigma_{1^r}^g * prod_j sigma_{lambda_j} * row-class sum in
/// degree (r+1)(d-r)-rg-lambda_tot. Proven when d >= rg+r+lambda_tot,
/// n = r+2, or r = 1.
IntegralResult ramified_integral(const RamifiedProblem& rp);

}  // namespace lincount
