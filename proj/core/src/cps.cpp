#include "lincount/cps.hpp"

#include <algorithm>
#include <string>

#include "lincount/cohomology.hpp"
#include "lincount/error.hpp"

namespace lincount {

CpsProblem make_cps(int g, int d, int k) {
    if (g < 0 || d < 1)
        throw Error(ErrorCode::InvalidK, "need g >= 0 and d >= 1, got g=" + std::to_string(g) +
                                             " d=" + std::to_string(d));
    CpsProblem p;
    p.g = g;
    p.d = d;
    p.k = k;
    p.n = 2LL * d + 1 - g;
    if (k < 1 || k > d || k > p.n)
        throw Error(ErrorCode::InvalidK, "need 1 <= k <= min(d, n) = min(" + std::to_string(d) +
                                             ", " + std::to_string(p.n) + "), got k=" +
                                             std::to_string(k));
    return p;
}

namespace {

// integral over Gr(2, cols+2) of sigma_1^g * sigma_a * special_sum(total)
Int secancy_integral(int g, int a, int cols, long long total) {
    if (total < 0) return 0;
    BoxShape box(2, cols);
    CohomologyClass acc = sigma1r_power_table(g, box);
    acc = lr_multiply(acc, CohomologyClass::schubert(box, a == 0 ? Partition{} : Partition{a}));
    return integrate(lr_multiply(acc, special_sum(total, box)));
}

}  // namespace

Int cps_degree(const CpsProblem& p) {
    long long t1 = 2LL * (p.d - 1) - p.g - (p.k - 1);
    Int first = secancy_integral(p.g, p.k - 1, p.d - 1, t1);
    if (p.k == 1) return first;

    long long t2 = 2LL * (p.d - 2) - p.g - (p.k - 2);
    Int second = secancy_integral(p.g, p.k - 2, p.d - 2, t2);
    Int value = first - second;
    if (value < 0)
        throw std::logic_error("negative coincidence count for (g,d,k)=(" + std::to_string(p.g) +
                               "," + std::to_string(p.d) + "," + std::to_string(p.k) +
                               "): " + value.str());
    return value;
}

RecursionSides recursion_check(int g, int d, int k) {
    CpsProblem top = make_cps(g, d, k);
    CpsProblem left = (k == 1) ? make_cps(g - 1, d - 1, 1) : make_cps(g - 1, d - 1, k - 1);
    CpsProblem right = (k == 1) ? make_cps(g - 1, d, 2) : make_cps(g - 1, d, k + 1);
    return {cps_degree(top), cps_degree(left) + cps_degree(right)};
}

}  // namespace lincount
