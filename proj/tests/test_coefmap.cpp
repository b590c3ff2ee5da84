#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include <gtest/gtest.h>

#include "hankel_lab/coefmap.hpp"
#include "hankel_lab/sampling.hpp"
#include "hankel_lab/schwarz.hpp"
#include "oracles.hpp"

using namespace hankel_lab;

namespace {

double max_error(const coefficient_triple& x, const coefficient_triple& y)
{
    return std::max({std::abs(x.a2 - y.a2), std::abs(x.a3 - y.a3), std::abs(x.a4 - y.a4)});
}

} // namespace

TEST(ClassParams, DomainAndRegion)
{
    EXPECT_THROW(class_params(0.0, 0.5), std::invalid_argument);
    EXPECT_THROW(class_params(1.0, 0.5), std::invalid_argument);
    EXPECT_THROW(class_params(0.5, 0.0), std::invalid_argument);
    EXPECT_THROW(class_params(0.5, 1.1), std::invalid_argument);
    EXPECT_NO_THROW(class_params(0.5, 1.0));

    EXPECT_TRUE(in_theorem_region({0.2, 0.62}));
    EXPECT_FALSE(in_theorem_region({0.2, 0.63}));
    EXPECT_FALSE(in_theorem_region({0.5, 0.2})); // gamma_max(0.5) = 0.125
    EXPECT_FALSE(in_theorem_region({0.6, 0.001}));
    EXPECT_DOUBLE_EQ(region_gamma_max(0.2), 0.62);
}

TEST(RhsSeries, Examples)
{
    EXPECT_EQ(rhs_series(series(8), 0.4, 8), series::constant(1.0, 8));

    const double g = 0.37;
    const auto ref = oracle::cayley_power(g, 8);
    const series r1 = rhs_series(series::variable(8), g, 8);
    const series r2 = rhs_series(extremal_omega(8), g, 8);
    for (std::size_t k = 0; k <= 8; ++k) {
        EXPECT_NEAR(std::abs(r1[k] - ref[k]), 0.0, 1e-13);
        // omega = z^2 substitutes z -> z^2
        const cplx expect = k % 2 == 0 ? ref[k / 2] : cplx{};
        EXPECT_NEAR(std::abs(r2[k] - expect), 0.0, 1e-13);
    }
    EXPECT_NEAR(r2[2].real(), 2.0 * g, 1e-15);
    EXPECT_NEAR(r2[4].real(), 2.0 * g * g, 1e-15);

    EXPECT_THROW(rhs_series(series({0.1, 1.0}, 4), g, 4), std::domain_error);
}

TEST(SolveCoefficients, ZeroOmegaGivesIdentity)
{
    const coefficient_triple t = solve_coefficients({0.4, 0.7}, series(8));
    EXPECT_EQ(t, coefficient_triple{});
}

TEST(SolveCoefficients, ExtremalOmega)
{
    for (double a : {0.1, 0.45, 0.9}) {
        for (double g : {0.05, 0.5, 1.0}) {
            const coefficient_triple t = solve_coefficients({a, g}, extremal_omega());
            EXPECT_NEAR(std::abs(t.a2), 0.0, 1e-15);
            EXPECT_NEAR(std::abs(t.a4), 0.0, 1e-15);
            EXPECT_NEAR(std::abs(t.a3 - 2.0 * g / (2.0 - a)), 0.0, 1e-14);
        }
    }
}

TEST(SolveCoefficients, FrozenRealExample)
{
    // alpha = 1/2, gamma = 1/4, omega = 0.3 z; exact rational substitution
    // gives a2 = 3/10, a3 = 3/40, a4 = 189/10000 (nu = 7/2).
    const class_params p(0.5, 0.25);
    const coefficient_triple t = solve_coefficients(p, series({0.0, 0.3}, 8));
    EXPECT_NEAR(std::abs(t.a2 - 0.3), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(t.a3 - 0.075), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(t.a4 - 0.0189), 0.0, 1e-14);
    EXPECT_NEAR(coefficient_nu(p), 3.5, 1e-14);

    const coefficient_triple cf = closed_form_coefficients(p, {0.3, 0.0, 0.0});
    EXPECT_LE(max_error(cf, t), 1e-14);
}

TEST(SolveCoefficients, RejectsShortOmega)
{
    EXPECT_THROW(solve_coefficients({0.3, 0.3}, series({0.0, 0.5}, 2)), std::invalid_argument);
}

TEST(SolveCoefficients, MemberSatisfiesFunctionalEquation)
{
    // plug the solved f back into the left side at every stored order
    // alpha kept away from 1, where a_9 grows like (1 - alpha)^-8
    sampler s(21);
    for (int i = 0; i < 20; ++i) {
        const class_params p(s.open_uniform(0.0, 0.6), 1.0 - s.uniform());
        series omega(8);
        for (std::size_t k = 1; k <= 8; ++k) {
            omega[k] = 0.5 * s.disk_point();
        }
        const series f = solve_class_member(p, omega);
        series g(8);
        for (std::size_t k = 0; k <= 8; ++k) {
            g[k] = f[k + 1];
        }
        const series lhs = pow(g, -(1.0 + p.alpha())) * derivative(f).with_order(8);
        const series rhs = rhs_series(omega, p.gamma(), 8);
        for (std::size_t k = 0; k <= 8; ++k) {
            EXPECT_NEAR(std::abs(lhs[k] - rhs[k]), 0.0, 1e-10);
        }
    }
}

TEST(ClosedForm, Examples)
{
    const class_params p(0.3, 0.4);
    EXPECT_EQ(closed_form_coefficients(p, {}), coefficient_triple{});
    const coefficient_triple t = closed_form_coefficients(p, {0.0, 1.0, 0.0});
    EXPECT_EQ(t.a2, cplx{});
    EXPECT_EQ(t.a4, cplx{});
    EXPECT_NEAR(t.a3.real(), 0.8 / 1.7, 1e-15);
}

TEST(ClosedForm, AgreesWithSolverOnRandomAdmissibleSamples)
{
    sampler s(1);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const class_params p = s.any_params();
        const schwarz_coeffs c = coeffs_from_schur(s.schur());
        const coefficient_triple x = closed_form_coefficients(p, c);
        const coefficient_triple y = solve_coefficients(p, omega_series(c));
        worst = std::max(worst, scaled_discrepancy(x, y));
        if (std::max({std::abs(y.a2), std::abs(y.a3), std::abs(y.a4)}) <= 10.0) {
            EXPECT_LE(max_error(x, y), 1e-10);
        }
    }
    EXPECT_LE(worst, 1e-10);
}

TEST(ClosedForm, RotationCovariance)
{
    sampler s(2);
    for (int i = 0; i < 200; ++i) {
        const class_params p = s.any_params();
        const schwarz_coeffs c = coeffs_from_schur(s.schur());
        const cplx e = s.circle_point();
        // omega(e z) through the series machinery
        const series rotated = compose(omega_series(c), e * series::variable(8));
        const coefficient_triple base = solve_coefficients(p, omega_series(c));
        const coefficient_triple rot = solve_coefficients(p, rotated);
        const coefficient_triple expect{e * base.a2, e * e * base.a3, e * e * e * base.a4};
        EXPECT_LE(scaled_discrepancy(rot, expect), 1e-10);
    }
}

TEST(ClosedForm, RealInputsGiveRealCoefficients)
{
    sampler s(4);
    for (int i = 0; i < 200; ++i) {
        const class_params p = s.any_params();
        const schur_params g{s.uniform(), s.uniform(-1.0, 1.0), s.uniform(-1.0, 1.0)};
        const schwarz_coeffs c = coeffs_from_schur(g);
        for (const auto& t : {closed_form_coefficients(p, c), solve_coefficients(p, omega_series(c))}) {
            EXPECT_LE(std::abs(t.a2.imag()), 1e-13);
            EXPECT_LE(std::abs(t.a3.imag()), 1e-13);
            EXPECT_LE(std::abs(t.a4.imag()), 1e-13);
        }
    }
}
