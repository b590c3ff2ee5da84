#ifndef HANKEL_LAB_SELFTEST_HPP
#define HANKEL_LAB_SELFTEST_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hankel_lab/coefmap.hpp"
#include "hankel_lab/hankel.hpp"
#include "hankel_lab/powser.hpp"
#include "hankel_lab/sampling.hpp"
#include "hankel_lab/schwarz.hpp"
#include "hankel_lab/search.hpp"

namespace hankel_lab {

using closed_form_fn = std::function<coefficient_triple(const class_params&, const schwarz_coeffs&)>;

struct selftest_options {
    std::uint64_t seed = 0;
    /// Replaceable so a harness can check that a broken formula is caught.
    closed_form_fn closed_form = closed_form_coefficients;
};

struct suite_result {
    std::string name;
    bool passed = false;
    /// Worst observed value of the suite's checked quantity.
    double worst = 0.0;
    std::string detail;
};

namespace detail {

inline suite_result suite_series(sampler& s)
{
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        series a = series::constant(cplx{1.0}, 8);
        for (std::size_t k = 1; k <= 8; ++k) {
            a[k] = s.disk_point();
        }
        series prod = series::constant(cplx{1.0}, 8);
        for (int m = 0; m <= 4; ++m) {
            const series p = pow(a, static_cast<double>(m));
            for (std::size_t k = 0; k <= 8; ++k) {
                worst = std::max(worst, std::abs(p[k] - prod[k]));
            }
            prod = prod * a;
        }
        const double beta = s.uniform(-3.0, 3.0);
        const series one = pow(a, beta) * pow(a, -beta);
        const series back = exp(log(a));
        for (std::size_t k = 0; k <= 8; ++k) {
            worst = std::max(worst, std::abs(one[k] - (k == 0 ? cplx{1.0} : cplx{})));
            worst = std::max(worst, std::abs(back[k] - a[k]));
        }
    }
    return {"series-identities", worst <= 1e-12, worst, "pow/mul, pow(b)pow(-b)=1, exp(log)"};
}

inline suite_result suite_oracle(sampler& s, const closed_form_fn& closed_form)
{
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        const class_params p = s.any_params();
        const schwarz_coeffs c = coeffs_from_schur(s.schur());
        worst = std::max(worst, scaled_discrepancy(closed_form(p, c), solve_coefficients(p, omega_series(c))));
    }
    return {"closed-form-vs-solver", worst <= 1e-10, worst, "max scaled coefficient discrepancy"};
}

inline suite_result suite_schur(sampler& s)
{
    bool ok = true;
    double worst_tight = 0.0;
    for (int i = 0; i < 2000; ++i) {
        ok = ok && validate_coeffs(coeffs_from_schur(s.schur()));
        const schwarz_coeffs c = coeffs_from_schur(s.schur_boundary());
        const double d = 1.0 - std::norm(c.c1);
        const double lhs = std::abs(c.c3 * d + std::conj(c.c1) * c.c2 * c.c2);
        worst_tight = std::max(worst_tight, std::abs(lhs - (d * d - std::norm(c.c2))));
        ok = ok && validate_coeffs(c);
    }
    return {"schur-soundness", ok && worst_tight <= 1e-12, worst_tight, "boundary equality residual"};
}

inline suite_result suite_extremal(const closed_form_fn& closed_form)
{
    double worst = 0.0;
    const schwarz_coeffs ext = coeffs_of(extremal_omega());
    for (int i = 1; i <= 10; ++i) {
        const double a = 0.05 + 0.05 * (i - 1);
        for (int k = 1; k <= 10; ++k) {
            const class_params p(a, region_gamma_max(a) * (k / 10.0));
            const double b = bound(p);
            worst = std::max(worst, std::abs(std::abs(h22(closed_form(p, ext))) - b) / b);
        }
    }
    return {"extremal-attainment", worst <= 1e-12, worst, "relative error of |H2(2)| vs bound"};
}

inline suite_result suite_chain(sampler& s, const closed_form_fn& closed_form)
{
    double worst_first = -1e300;
    double worst_second = -1e300;
    for (int i = 0; i < 2000; ++i) {
        const class_params p = s.region_params();
        const schwarz_coeffs c = coeffs_from_schur(s.schur());
        const double h = std::abs(h22(closed_form(p, c)));
        const double tb = triangle_bound(p, c);
        worst_first = std::max(worst_first, h - tb);
        worst_second = std::max(worst_second, tb - bound(p));
    }
    const bool ok = worst_first <= 1e-10 && worst_second <= 1e-10;
    return {"domination-chain", ok, std::max(worst_first, worst_second), "max excess over next link"};
}

inline suite_result suite_margin()
{
    const margin_certificate cert = certify_margin(1e-3);
    return {"margin-polynomial", cert.pass(), cert.min_value, "min over [0,2] (concave, single peak)"};
}

inline suite_result suite_region()
{
    const region_certificate cert = certify_region(20);
    const bool ok = cert.quad_nonpositive() && cert.nu1_bounded() && cert.dominance();
    return {"region-facts", ok, cert.min_dominance_margin, "min endpoint dominance margin"};
}

inline suite_result suite_search(std::uint64_t seed)
{
    search_config cfg;
    cfg.restarts = 8;
    cfg.max_iterations = 300;
    cfg.seed = seed;
    double worst = 0.0;
    bool ok = true;
    for (double a : {0.1, 0.3, 0.5}) {
        const class_params p(a, region_gamma_max(a));
        const search_report r = maximize_h22(p, cfg);
        ok = ok && r.gap >= -1e-8 && r.gap <= 1e-6;
        worst = std::max(worst, std::abs(r.gap));
    }
    return {"search-sharpness", ok, worst, "max |gap| at gamma_max"};
}

inline suite_result suite_starlike(sampler& s)
{
    bool ok = true;
    for (int i = 0; i < 100; ++i) {
        const double a = s.open_uniform(0.0, 2.0 / std::numbers::pi * 0.999);
        ok = ok && starlike_gamma_threshold(a) < starlike_order(a) && starlike_order(a) > 0.0;
    }
    return {"starlike-formulas", ok, 0.0, "threshold below order"};
}

} // namespace detail

/// Reduced-size run of the invariant checks, one result per suite.
inline std::vector<suite_result> run_selftest(const selftest_options& opt = {})
{
    sampler s(opt.seed);
    std::vector<suite_result> out;
    out.push_back(detail::suite_series(s));
    out.push_back(detail::suite_oracle(s, opt.closed_form));
    out.push_back(detail::suite_schur(s));
    out.push_back(detail::suite_extremal(opt.closed_form));
    out.push_back(detail::suite_chain(s, opt.closed_form));
    out.push_back(detail::suite_margin());
    out.push_back(detail::suite_region());
    out.push_back(detail::suite_search(opt.seed));
    out.push_back(detail::suite_starlike(s));
    return out;
}

inline bool all_passed(const std::vector<suite_result>& results)
{
    return std::all_of(results.begin(), results.end(), [](const suite_result& r) { return r.passed; });
}

} // namespace hankel_lab

#endif
