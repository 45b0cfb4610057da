#include "lincount/crosscheck.hpp"

#include <algorithm>

#include "lincount/cohomology.hpp"
#include "lincount/counts.hpp"
#include "lincount/cps.hpp"
#include "lincount/error.hpp"
#include "lincount/tableaux.hpp"

namespace lincount {

namespace {

std::string grd(int g, int r, int d) {
    return "g=" + std::to_string(g) + " r=" + std::to_string(r) + " d=" + std::to_string(d);
}

void add_case(SuiteResult& suite, std::string name, const Int& lhs, const Int& rhs) {
    suite.cases.push_back({std::move(name), lhs == rhs, lhs.str(), rhs.str()});
}

bool balanced(int g, int r, int d) {
    long long numerator = static_cast<long long>(d) * r + d + r - static_cast<long long>(r) * g;
    return numerator % r == 0;
}

}  // namespace

SuiteResult suite_r1(int max_g) {
    SuiteResult suite{"r1", {}};
    for (int g = 1; g <= max_g; ++g) {
        for (int d = (g + 3) / 2; d <= g + 4; ++d) {
            R1ClosedForms forms = r1_closed_forms(g, d);
            Int integral = tevelev_integral(classify(g, 1, d)).value;
            bool pass = integral == forms.sum_form && integral == forms.binomial_form &&
                        integral == forms.cps_form;
            suite.cases.push_back({"closed-forms " + grd(g, 1, d), pass, integral.str(),
                                   forms.sum_form.str() + "," + forms.binomial_form.str() + "," +
                                       forms.cps_form.str()});
        }
    }
    return suite;
}

SuiteResult suite_large_d(int max_g, int max_r) {
    SuiteResult suite{"large-d", {}};
    for (int g = 0; g <= max_g; ++g) {
        for (int r = 1; r <= max_r; ++r) {
            for (int d = r * g + r; d <= r * g + r + 2; ++d) {
                if (!balanced(g, r, d)) continue;
                CountProblem p = classify(g, r, d);
                Int expected = pow_int(r + 1, g);
                Int closed = tevelev_large_d(p);
                IntegralResult integral = tevelev_integral(p);
                Int degen = degeneration_sum(p);
                bool pass = closed == expected && integral.value == expected &&
                            degen == expected && integral.proven;
                suite.cases.push_back({"triangle " + grd(g, r, d), pass,
                                       closed.str() + "," + integral.value.str() + "," + degen.str(),
                                       expected.str()});
            }
        }
    }
    return suite;
}

SuiteResult suite_tableaux(int max_g, int max_r) {
    SuiteResult suite{"tableaux", {}};
    for (int g = 0; g <= max_g; ++g) {
        for (int r = 1; r <= max_r; ++r) {
            for (int d = r + 1; d <= g + r + 2; ++d) {
                long long total =
                    static_cast<long long>(r + 1) * (d - r) - static_cast<long long>(r) * g;
                if (total < 0) continue;  // grid too small to place the red cells
                Int fillings = count_fillings(g, r, d);

                BoxShape box(r + 1, d - r);
                Int integral =
                    integrate(lr_multiply(sigma1r_power_table(g, box), special_sum(total, box)));
                add_case(suite, "fillings-vs-integral " + grd(g, r, d), fillings, integral);

                if (d >= g + r)
                    add_case(suite, "fillings-power " + grd(g, r, d), fillings, pow_int(r + 1, g));

                auto by_shape = count_by_red_shape(g, r, d);
                Int factored = 0;
                for (const auto& [shape, counts] : by_shape)
                    factored += counts.red_count * counts.blue_count;
                add_case(suite, "shape-factorization " + grd(g, r, d), factored, fillings);

                BoxShape red_box(r + 1, std::min(d - r, g));
                CohomologyClass beta = sigma1r_power_table(g, red_box);
                bool red_match = by_shape.size() == beta.terms().size();
                for (const auto& [shape, counts] : by_shape)
                    red_match = red_match && counts.red_count == beta.coefficient(shape);
                suite.cases.push_back({"red-counts-vs-power " + grd(g, r, d), red_match,
                                       std::to_string(by_shape.size()) + " shapes",
                                       std::to_string(beta.terms().size()) + " terms"});
            }
        }
    }
    return suite;
}

SuiteResult suite_cps(int max_g) {
    SuiteResult suite{"cps", {}};
    for (int g = 0; g <= max_g; ++g) {
        for (int d = 1; d <= g + 3; ++d) {
            long long n = 2LL * d + 1 - g;
            // k = 1 reduction to the plain incidence count
            if (n >= 1) {
                Int lhs = cps_degree(make_cps(g, d, 1));
                Int rhs = tevelev_integral(classify(g, 1, d)).value;
                add_case(suite,
                         "k1-reduction g=" + std::to_string(g) + " d=" + std::to_string(d), lhs,
                         rhs);
            }
            for (int k = 1; k <= std::min<long long>(d, std::max<long long>(n, 0)); ++k) {
                if (g >= 1) {
                    try {
                        RecursionSides sides = recursion_check(g, d, k);
                        add_case(suite,
                                 "recursion g=" + std::to_string(g) + " d=" + std::to_string(d) +
                                     " k=" + std::to_string(k),
                                 sides.lhs, sides.rhs);
                    } catch (const Error&) {
                        // a subproblem is malformed; the identity does not apply
                    }
                }
                if (n >= d + k + 1) {
                    Int value = cps_degree(make_cps(g, d, k));
                    add_case(suite,
                             "stable-range g=" + std::to_string(g) + " d=" + std::to_string(d) +
                                 " k=" + std::to_string(k),
                             value, pow_int(2, g));
                }
            }
        }
    }
    return suite;
}

SuiteResult suite_ramified(int max_g, int max_r) {
    SuiteResult suite{"ramified", {}};
    for (int g = 0; g <= max_g; ++g) {
        for (int r = 1; r <= max_r; ++r) {
            for (int d = 1; d <= r * g + r + 3; ++d) {
                if (!balanced(g, r, d)) continue;
                Int plain = tevelev_integral(classify(g, r, d)).value;
                Int reduced = ramified_integral(make_ramified(g, r, d, {})).value;
                add_case(suite, "m0-reduction " + grd(g, r, d), reduced, plain);
            }

            std::vector<Partition> small_profiles;
            for (const auto& lam : partitions_in_box(BoxShape(r, 3)))
                if (!lam.empty() && lam.size() <= 3) small_profiles.push_back(lam);
            std::vector<std::vector<Partition>> profiles;
            for (const auto& lam : small_profiles) {
                profiles.push_back({lam});
                for (const auto& second : small_profiles)
                    if (!(second < lam)) profiles.push_back({lam, second});
            }
            for (const auto& profile : profiles) {
                long long tot = 0;
                std::string tag;
                for (const auto& lam : profile) {
                    tot += lam.size();
                    tag += " [" + format_partition(lam) + "]";
                }
                for (long long d = static_cast<long long>(r) * g + r + tot;
                     d <= static_cast<long long>(r) * g + r + tot + 2; ++d) {
                    long long numerator = d * r + d + r - tot - static_cast<long long>(g) * r;
                    if (numerator % r != 0) continue;
                    RamifiedProblem rp = make_ramified(g, r, static_cast<int>(d), profile);
                    Int product = ramified_large_d(rp);
                    IntegralResult integral = ramified_integral(rp);
                    bool pass = product == integral.value && integral.proven;
                    suite.cases.push_back({"product-vs-integral " + grd(g, r, static_cast<int>(d)) +
                                               tag,
                                           pass, product.str(), integral.value.str()});
                }
            }
        }
    }
    return suite;
}

SuiteResult suite_castelnuovo() {
    SuiteResult suite{"castelnuovo", {}};
    add_case(suite, "spot r=1 s=2", castelnuovo(1, 2), 2);
    add_case(suite, "spot r=2 s=1", castelnuovo(2, 1), 1);
    add_case(suite, "spot r=1 s=3", castelnuovo(1, 3), 5);
    for (int r = 1; r <= 3; ++r) {
        for (int s = 1; s <= 3; ++s) {
            int g = r * s + s;
            BoxShape box(r + 1, r * s);
            Int integral = integrate(sigma1r_power_table(g, box));
            add_case(suite, "closed-vs-integral r=" + std::to_string(r) + " s=" + std::to_string(s),
                     castelnuovo(r, s), integral);
        }
    }
    return suite;
}

std::vector<SuiteResult> run_suites(const std::string& which, int max_g, int max_r) {
    std::vector<SuiteResult> out;
    bool all = which == "all";
    bool known = all;
    if (all || which == "r1") out.push_back(suite_r1(max_g)), known = true;
    if (all || which == "large-d") out.push_back(suite_large_d(max_g, max_r)), known = true;
    if (all || which == "tableaux") out.push_back(suite_tableaux(max_g, max_r)), known = true;
    if (all || which == "cps") out.push_back(suite_cps(max_g)), known = true;
    if (all || which == "ramified") out.push_back(suite_ramified(max_g, max_r)), known = true;
    if (all || which == "castelnuovo") out.push_back(suite_castelnuovo()), known = true;
    if (!known)
        throw Error(ErrorCode::InvalidArgument, "unknown crosscheck suite: '" + which + "'");
    return out;
}

}  // namespace lincount
