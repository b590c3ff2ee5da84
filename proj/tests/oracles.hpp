// Test-only reference computations. None of these go through the library's
// series recursions, so agreement with them is evidence, not tautology.
#ifndef HANKEL_LAB_TESTS_ORACLES_HPP
#define HANKEL_LAB_TESTS_ORACLES_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "hankel_lab/coefmap.hpp"
#include "hankel_lab/schwarz.hpp"

namespace oracle {

using cplx = std::complex<double>;
using poly = std::vector<cplx>;

/// Plain truncated convolution.
inline poly mul(const poly& a, const poly& b, std::size_t order)
{
    poly r(order + 1);
    for (std::size_t i = 0; i < a.size() && i <= order; ++i) {
        for (std::size_t j = 0; j < b.size() && i + j <= order; ++j) {
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

/// Schoolbook long division a/b by successive leading-term elimination.
inline poly long_divide(poly a, const poly& b, std::size_t order)
{
    a.resize(order + 1);
    poly q(order + 1);
    for (std::size_t k = 0; k <= order; ++k) {
        q[k] = a[k] / b[0];
        for (std::size_t j = 0; j < b.size() && k + j <= order; ++j) {
            a[k + j] -= q[k] * b[j];
        }
    }
    return q;
}

/// ((1+z)/(1-z))^gamma = exp(2 gamma atanh z) with atanh z = z + z^3/3 + z^5/5 + ...,
/// summed as the exponential power series sum_m (2 gamma atanh z)^m / m!.
inline poly cayley_power(double gamma, std::size_t order)
{
    poly s(order + 1);
    for (std::size_t k = 1; k <= order; k += 2) {
        s[k] = 2.0 * gamma / static_cast<double>(k);
    }
    poly result(order + 1);
    poly term(order + 1);
    term[0] = 1.0;
    for (std::size_t m = 0; m <= order; ++m) {
        for (std::size_t k = 0; k <= order; ++k) {
            result[k] += term[k];
        }
        term = mul(term, s, order);
        for (auto& t : term) {
            t /= static_cast<double>(m + 1);
        }
    }
    return result;
}

/// Coefficients c1..c3 of omega = z*phi0 from the Moebius recursion
/// phi_k = (g_k + z phi_{k+1}) / (1 + conj(g_k) z phi_{k+1}), phi_2 = g2,
/// built with convolution and long division only.
inline hankel_lab::schwarz_coeffs schur_by_moebius(const hankel_lab::schur_params& g)
{
    constexpr std::size_t n = 4;
    auto step = [](cplx gk, const poly& tail) {
        poly z_tail(n + 1);
        for (std::size_t k = 0; k < n; ++k) {
            z_tail[k + 1] = tail[k];
        }
        poly num = z_tail;
        num[0] += gk;
        poly den(n + 1);
        for (std::size_t k = 0; k <= n; ++k) {
            den[k] = std::conj(gk) * z_tail[k];
        }
        den[0] += 1.0;
        return long_divide(num, den, n);
    };
    poly phi2(n + 1);
    phi2[0] = g.g2;
    const poly phi1 = step(g.g1, phi2);
    const poly phi0 = step(g.g0, phi1);
    return {phi0[0], phi0[1], phi0[2]};
}

using big = boost::multiprecision::cpp_bin_float_50;

inline double starlike_order_hp(double alpha)
{
    const big pi = boost::math::constants::pi<big>();
    const big r = sqrt(big(2) / (pi * big(alpha)) - 1);
    return static_cast<double>(big(2) / pi * atan(r));
}

inline double starlike_threshold_hp(double alpha)
{
    const big pi = boost::math::constants::pi<big>();
    const big r = sqrt(big(2) / (pi * big(alpha)) - 1);
    return static_cast<double>(big(2) / pi * atan(r) - big(alpha) * r);
}

/// Central difference with step h.
template <typename F>
auto central_difference(F&& f, double x, double h)
{
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

} // namespace oracle

#endif
