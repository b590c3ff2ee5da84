#ifndef HANKEL_LAB_COEFMAP_HPP
#define HANKEL_LAB_COEFMAP_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>

#include "hankel_lab/powser.hpp"

namespace hankel_lab {

using cplx = std::complex<double>;

/// Parameters (alpha, gamma) of the class
///   |arg[(z/f)^{1+alpha} f'(z)]| < gamma*pi/2,  0 < alpha < 1, 0 < gamma <= 1.
///
/// Construction admits the whole rectangle; the sharp-bound region is a
/// separate predicate because the search deliberately explores outside it.
class class_params {
public:
    class_params(double alpha, double gamma) : alpha_(alpha), gamma_(gamma)
    {
        if (!(alpha > 0.0 && alpha < 1.0)) {
            throw std::invalid_argument("alpha must lie in (0,1)");
        }
        if (!(gamma > 0.0 && gamma <= 1.0)) {
            throw std::invalid_argument("gamma must lie in (0,1]");
        }
    }

    double alpha() const noexcept { return alpha_; }
    double gamma() const noexcept { return gamma_; }

    friend bool operator==(const class_params&, const class_params&) = default;

private:
    double alpha_;
    double gamma_;
};

/// Largest gamma of the sharp region at this alpha: (alpha^2 - 4 alpha + 2) / 2.
inline double region_gamma_max(double alpha) noexcept
{
    return 0.5 * (alpha * alpha - 4.0 * alpha + 2.0);
}

/// 2 - sqrt(2), the supremum of alpha in the sharp region.
inline const double region_alpha_sup = 2.0 - std::sqrt(2.0);

inline bool in_theorem_region(const class_params& p) noexcept
{
    return p.alpha() < region_alpha_sup && p.gamma() <= region_gamma_max(p.alpha());
}

/// Taylor coefficients c1, c2, c3 of a Schwarz function.
struct schwarz_coeffs {
    cplx c1{};
    cplx c2{};
    cplx c3{};

    friend bool operator==(const schwarz_coeffs&, const schwarz_coeffs&) = default;
};

/// Taylor coefficients a2, a3, a4 of a class member f(z) = z + a2 z^2 + ...
struct coefficient_triple {
    cplx a2{};
    cplx a3{};
    cplx a4{};

    friend bool operator==(const coefficient_triple&, const coefficient_triple&) = default;
};

/// omega(z) = c1 z + c2 z^2 + c3 z^3 as a series of the given order (>= 3).
inline series omega_series(const schwarz_coeffs& c, std::size_t order = 8)
{
    if (order < 3) {
        throw std::invalid_argument("omega_series: order must be at least 3");
    }
    return series({cplx{}, c.c1, c.c2, c.c3}, order);
}

/// ((1 + omega)/(1 - omega))^gamma to `order`. omega is read as a polynomial:
/// it is truncated or zero-extended to `order` first.
inline series rhs_series(const series& omega, double gamma, std::size_t order)
{
    if (omega[0] != cplx{}) {
        throw std::domain_error("rhs_series: omega must vanish at the origin");
    }
    const series w = omega.with_order(order);
    const series one = series::constant(cplx{1.0}, order);
    return pow((one + w) / (one - w), gamma);
}

/// Solves (f/z)^{-(1+alpha)} f' = ((1+omega)/(1-omega))^gamma for the
/// coefficients of f. Returns f to order omega.order() + 1.
///
/// The z^n equation is linear in a_{n+1} with coefficient n - alpha, which
/// is nonzero for 0 < alpha < 1, so each coefficient is fixed by the lower
/// ones: evaluate the residual with a_{n+1} = 0 and divide.
inline series solve_class_member(const class_params& p, const series& omega)
{
    const std::size_t n_max = omega.order();
    const series rhs = rhs_series(omega, p.gamma(), n_max);
    const double exponent = -(1.0 + p.alpha());

    // g = f/z = 1 + a2 z + ... + a_{N+1} z^N
    series g = series::constant(cplx{1.0}, n_max);
    for (std::size_t n = 1; n <= n_max; ++n) {
        series fprime(n_max);
        for (std::size_t k = 0; k <= n_max; ++k) {
            fprime[k] = static_cast<double>(k + 1) * g[k];
        }
        const series lhs = pow(g, exponent) * fprime;
        g[n] = (rhs[n] - lhs[n]) / (static_cast<double>(n) - p.alpha());
    }

    series f(n_max + 1);
    for (std::size_t k = 0; k <= n_max; ++k) {
        f[k + 1] = g[k];
    }
    return f;
}

inline coefficient_triple solve_coefficients(const class_params& p, const series& omega)
{
    if (omega.order() < 3) {
        throw std::invalid_argument("solve_coefficients: omega order must be at least 3");
    }
    const series f = solve_class_member(p, omega);
    return {f[2], f[3], f[4]};
}

/// mu(alpha, gamma) = 2(5 - alpha) gamma / ((1 - alpha)(2 - alpha)).
inline double coefficient_mu(const class_params& p) noexcept
{
    const double a = p.alpha();
    return 2.0 * (5.0 - a) * p.gamma() / ((1.0 - a) * (2.0 - a));
}

/// nu(alpha, gamma) = 1/3 + (2/3)(alpha^2 - 6 alpha + 17) gamma^2 / ((1 - alpha)^3 (2 - alpha)).
inline double coefficient_nu(const class_params& p) noexcept
{
    const double a = p.alpha();
    const double g = p.gamma();
    const double om = 1.0 - a;
    return 1.0 / 3.0 + (2.0 / 3.0) * (a * a - 6.0 * a + 17.0) * g * g / (om * om * om * (2.0 - a));
}

inline coefficient_triple closed_form_coefficients(const class_params& p, const schwarz_coeffs& c)
{
    const double a = p.alpha();
    const double g = p.gamma();
    const double om = 1.0 - a;
    const double mu = coefficient_mu(p);
    const double nu = coefficient_nu(p);
    return {
        2.0 * g / om * c.c1,
        2.0 * g / (2.0 - a) * c.c2 + 2.0 * (3.0 - a) * g * g / (om * om * (2.0 - a)) * c.c1 * c.c1,
        2.0 * g / (3.0 - a) * (c.c3 + mu * c.c1 * c.c2 + nu * c.c1 * c.c1 * c.c1),
    };
}

/// max_n |x_n - y_n| / max(1, |y_n|): absolute for unit-size coefficients,
/// relative for the large ones produced as alpha approaches 1.
inline double scaled_discrepancy(const coefficient_triple& x, const coefficient_triple& y) noexcept
{
    auto one = [](cplx u, cplx v) { return std::abs(u - v) / std::max(1.0, std::abs(v)); };
    return std::max({one(x.a2, y.a2), one(x.a3, y.a3), one(x.a4, y.a4)});
}

} // namespace hankel_lab

#endif
