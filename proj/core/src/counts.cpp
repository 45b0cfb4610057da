#include "lincount/counts.hpp"

#include <algorithm>

namespace lincount {

const char* regime_name(Regime r) {
    switch (r) {
        case Regime::LargeD: return "LargeD";
        case Regime::MinimalN: return "MinimalN";
        case Regime::Empty: return "Empty";
        case Regime::RankOne: return "RankOne";
        case Regime::Unproven: return "Unproven";
    }
    return "Unproven";
}

namespace {

void check_grd(int g, int r, int d) {
    if (g < 0) throw Error(ErrorCode::InvalidArgument, "genus must be nonnegative");
    if (r < 1) throw Error(ErrorCode::InvalidArgument, "target dimension r must be positive");
    if (d < 1) throw Error(ErrorCode::InvalidArgument, "degree d must be positive");
}

long long large_d_threshold(int g, int r) {
    return static_cast<long long>(r) * g + r;
}

}  // namespace

CountProblem classify(int g, int r, int d) {
    check_grd(g, r, d);
    long long numerator =
        static_cast<long long>(d) * r + d + r - static_cast<long long>(r) * g;
    if (numerator % r != 0)
        throw Error(ErrorCode::NotBalanced,
                    "no generically finite count: r=" + std::to_string(r) + " does not divide dr+d+r-rg=" +
                        std::to_string(numerator));
    CountProblem p;
    p.g = g;
    p.r = r;
    p.d = d;
    p.n = numerator / r;
    p.rho = g - static_cast<long long>(r + 1) * (g - d + r);
    if (d >= large_d_threshold(g, r))
        p.regime = Regime::LargeD;
    else if (p.n == r + 2)
        p.regime = Regime::MinimalN;
    else if (p.rho < 0)
        p.regime = Regime::Empty;
    else if (r == 1)
        p.regime = Regime::RankOne;
    else
        p.regime = Regime::Unproven;
    return p;
}

Int tevelev_large_d(int g, int r, int d) {
    check_grd(g, r, d);
    if (d < large_d_threshold(g, r))
        throw Error(ErrorCode::RegimeViolation,
                    "closed form needs d >= rg+r, got d=" + std::to_string(d));
    return pow_int(r + 1, g);
}

Int tevelev_large_d(const CountProblem& p) {
    return tevelev_large_d(p.g, p.r, p.d);
}

IntegralResult tevelev_integral(const CountProblem& p) {
    // total degree of the row-class sum; equals rho, so Empty short-circuits
    long long total = static_cast<long long>(p.r + 1) * (p.d - p.r) - static_cast<long long>(p.r) * p.g;
    if (total < 0) return {Int(0), p.proven()};
    BoxShape box(p.r + 1, p.d - p.r);
    CohomologyClass power = sigma1r_power_table(p.g, box);
    CohomologyClass sum = special_sum(total, box);
    return {integrate(lr_multiply(power, sum)), p.proven()};
}

Int boundary_value(int g, int r) {
    if (g < 0 || r < 1) throw Error(ErrorCode::InvalidArgument, "need g >= 0, r >= 1");
    long long d = static_cast<long long>(r) * g;
    if (d < 1)
        throw Error(ErrorCode::RegimeViolation, "boundary value needs rg >= 1");
    classify(g, r, static_cast<int>(d));  // must be a well-posed problem
    return pow_int(r + 1, g) - (d + 1);
}

Int gr2_pairing(int a, int b, int g, int d) {
    if (b < 0 || a < b || g < 0 || d < 1)
        throw Error(ErrorCode::InvalidArgument, "need a >= b >= 0, g >= 0, d >= 1");
    if (a > d - 1)
        throw Error(ErrorCode::PartitionOutsideBox,
                    "sigma_{a,b} needs a <= d-1 in Gr(2,d+1)");
    if (static_cast<long long>(a) + b + g != 2LL * (d - 1))
        throw Error(ErrorCode::DegreeMismatch,
                    "pairing needs a+b+g = 2(d-1): " + std::to_string(a) + "+" + std::to_string(b) +
                        "+" + std::to_string(g) + " != " + std::to_string(2LL * (d - 1)));
    Int scaled = Int(a - b + 1) * binomial(g + 1, d - b);
    Int value = exact_div(scaled, g + 1);
    Int alternate = binomial(g, static_cast<long long>(d) - b - 1) - binomial(g, static_cast<long long>(d) - b);
    if (value != alternate)
        throw std::logic_error("two-row pairing forms disagree: " + value.str() + " vs " +
                               alternate.str());
    return value;
}

R1ClosedForms r1_closed_forms(int g, int d) {
    if (g < 0 || d < 1) throw Error(ErrorCode::InvalidArgument, "need g >= 0, d >= 1");
    long long s = 2LL * d - 2 - g;
    if (s < 0)
        throw Error(ErrorCode::RegimeViolation,
                    "closed forms need 2d-2-g >= 0, got " + std::to_string(s));

    R1ClosedForms out;

    // Route 1: expand the sum of products of two row classes into two-row
    // Schubert classes; the shape (a,b) with a+b = 2d-2-g appears a-b+1 times.
    out.sum_form = 0;
    for (long long b = 0; 2 * b <= s; ++b) {
        long long a = s - b;
        if (a > d - 1) continue;
        Int pairing = gr2_pairing(static_cast<int>(a), static_cast<int>(b), g, d);
        out.sum_form += Int(a - b + 1) * pairing;
    }

    // Route 2: direct binomial sum with the squared factor.
    out.binomial_form = 0;
    for (long long i = 0; 2 * i <= s; ++i) {
        Int term = Int(s - 2 * i + 1) * Int(s - 2 * i + 1) * binomial(g + 1, d - i);
        out.binomial_form += exact_div(term, g + 1);
    }

    // Route 3: 2^g with corrections supported only when d <= g.
    Int correction = 0;
    for (long long i = 0; i <= static_cast<long long>(g) - d - 1; ++i)
        correction += binomial(g, i);
    out.cps_form = pow_int(2, g) - 2 * correction +
                   Int(static_cast<long long>(g) - d - 1) * binomial(g, static_cast<long long>(g) - d) +
                   Int(static_cast<long long>(d) - g - 1) * binomial(g, static_cast<long long>(g) - d + 1);
    return out;
}

Int pullback_degree(const Partition& lambda, int r, int d) {
    check_grd(0, r, d);
    long long codim = lambda.size();
    if (codim > static_cast<long long>(d) - r)
        throw Error(ErrorCode::CodimTooLarge,
                    "pullback degree needs |lambda| <= d-r, got |lambda|=" + std::to_string(codim));
    BoxShape box(r + 1, d - r);
    if (!lambda.fits(box))
        throw Error(ErrorCode::PartitionOutsideBox,
                    "lambda " + format_partition(lambda) + " does not fit Gr(r+1,d+1)");
    long long total = box.dimension() - codim;
    CohomologyClass cls = CohomologyClass::schubert(box, lambda);
    return integrate(lr_multiply(cls, special_sum(total, box)));
}

Int degeneration_sum(const CountProblem& p) {
    if (p.regime != Regime::LargeD)
        throw Error(ErrorCode::RegimeViolation,
                    "degeneration sum is established only for d >= rg+r");
    BoxShape box(p.r + 1, p.d - p.r);
    CohomologyClass beta = sigma1r_power_table(p.g, box);
    Int sum = 0;
    for (const auto& [lambda, coeff] : beta.terms())
        sum += coeff * pullback_degree(lambda, p.r, p.d);
    return sum;
}

Int castelnuovo(int r, int s) {
    if (r < 1 || s < 1) throw Error(ErrorCode::InvalidArgument, "need r >= 1, s >= 1");
    long long g = static_cast<long long>(r) * s + s;
    Int num = factorial(g);
    for (int i = 1; i <= r; ++i) num *= factorial(i);
    Int den = 1;
    for (int i = 0; i <= r; ++i) den *= factorial(s + i);
    return exact_div(num, den);
}

RamifiedProblem make_ramified(int g, int r, int d, std::vector<Partition> ramification) {
    check_grd(g, r, d);
    RamifiedProblem rp;
    rp.g = g;
    rp.r = r;
    rp.d = d;
    rp.lambda_tot = 0;
    for (const auto& lam : ramification) {
        if (lam.length() > r)
            throw Error(ErrorCode::PartitionOutsideBox,
                        "ramification profile " + format_partition(lam) + " must have at most r=" +
                            std::to_string(r) + " parts");
        rp.lambda_tot += lam.size();
    }
    long long numerator = static_cast<long long>(d) * r + d + r - rp.lambda_tot -
                          static_cast<long long>(g) * r;
    if (numerator % r != 0)
        throw Error(ErrorCode::NotBalanced,
                    "r does not divide dr+d+r-lambda_tot-gr=" + std::to_string(numerator));
    rp.n = numerator / r;
    rp.ramification = std::move(ramification);
    return rp;
}

Int ramified_large_d(const RamifiedProblem& rp) {
    long long threshold = large_d_threshold(rp.g, rp.r) + rp.lambda_tot;
    if (rp.d < threshold)
        throw Error(ErrorCode::RegimeViolation,
                    "product formula needs d >= rg+r+lambda_tot = " + std::to_string(threshold));
    Int value = pow_int(rp.r + 1, rp.g);
    for (const auto& lam : rp.ramification) value *= pullback_degree(lam, rp.r, rp.d);
    return value;
}

IntegralResult ramified_integral(const RamifiedProblem& rp) {
    bool proven = rp.d >= large_d_threshold(rp.g, rp.r) + rp.lambda_tot ||
                  rp.n == rp.r + 2 || rp.r == 1;
    long long total = static_cast<long long>(rp.r + 1) * (rp.d - rp.r) -
                      static_cast<long long>(rp.r) * rp.g - rp.lambda_tot;
    if (total < 0) return {Int(0), proven};
    BoxShape box(rp.r + 1, rp.d - rp.r);
    CohomologyClass acc = sigma1r_power_table(rp.g, box);
    for (const auto& lam : rp.ramification)
        acc = lr_multiply(acc, CohomologyClass::schubert(box, lam));
    return {integrate(lr_multiply(acc, special_sum(total, box))), proven};
}

}  // namespace lincount
