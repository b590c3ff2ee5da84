#ifndef HANKEL_LAB_HANKEL_HPP
#define HANKEL_LAB_HANKEL_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "hankel_lab/coefmap.hpp"

namespace hankel_lab {

/// Slack separating a strict inequality from a numerical tie.
inline constexpr double strict_slack = 1e-12;

/// Second Hankel determinant a2 a4 - a3^2.
inline cplx h22(const coefficient_triple& a) noexcept
{
    return a.a2 * a.a4 - a.a3 * a.a3;
}

/// Sharp bound (2 gamma / (2 - alpha))^2 on |a2 a4 - a3^2|. Only proven
/// inside the region (see in_theorem_region); evaluated anywhere so that
/// scans can compare against it.
inline double bound(const class_params& p) noexcept
{
    const double r = 2.0 * p.gamma() / (2.0 - p.alpha());
    return r * r;
}

/// Quantities produced along the chain of estimates
///   |H| <= scale * (|c1||c3| + mu1 |c1|^2 |c2| + |1/3 - nu1| |c1|^4 + K |c2|^2)
///       <= scale * F(c1),  F(c1) = K + A c1^2 + B c1^4,
/// with scale = 4 gamma^2 / ((1-alpha)(3-alpha)) and K = (1-alpha)(3-alpha)/(2-alpha)^2.
struct proof_intermediates {
    double mu;
    double nu;
    double mu1;
    double nu1;
    double quad;    ///< A
    double quartic; ///< B
    double k;       ///< K = F(0)
    double scale;
};

inline proof_intermediates compute_intermediates(const class_params& p) noexcept
{
    const double a = p.alpha();
    const double g = p.gamma();
    const double om = 1.0 - a;
    const double tw = 2.0 - a;
    const double tw2 = tw * tw;

    proof_intermediates r{};
    r.mu = coefficient_mu(p);
    r.nu = coefficient_nu(p);
    r.mu1 = 2.0 * g / tw2;
    r.nu1 = (a * a - 10.0 * a + 13.0) * g * g / (3.0 * om * om * tw2);
    r.quad = (2.0 * g - (a * a - 4.0 * a + 2.0)) / tw2;
    r.quartic = std::abs(1.0 / 3.0 - r.nu1) - (2.0 * g + 1.0) / tw2;
    r.k = om * (3.0 - a) / tw2;
    r.scale = 4.0 * g * g / (om * (3.0 - a));
    return r;
}

/// The quartic majorant F(c1) on [0,1].
inline double f_majorant(const class_params& p, double c1)
{
    if (!(c1 >= 0.0 && c1 <= 1.0)) {
        throw std::domain_error("f_majorant: c1 must lie in [0,1]");
    }
    const auto q = compute_intermediates(p);
    const double s = c1 * c1;
    return q.k + q.quad * s + q.quartic * s * s;
}

/// max of F over [0,1], which in the region is attained at c1 = 0.
inline double f_majorant_peak(const class_params& p) noexcept
{
    return compute_intermediates(p).k;
}

/// Right-hand side of the triangle-inequality estimate; depends on the
/// moduli of c only.
inline double triangle_bound(const class_params& p, const schwarz_coeffs& c) noexcept
{
    const auto q = compute_intermediates(p);
    const double x1 = std::abs(c.c1);
    const double x2 = std::abs(c.c2);
    const double x3 = std::abs(c.c3);
    const double x1s = x1 * x1;
    return q.scale * (x1 * x3 + q.mu1 * x1s * x2 + std::abs(1.0 / 3.0 - q.nu1) * x1s * x1s + q.k * x2 * x2);
}

/// K - |1/3 - nu1|, the margin by which F(0) dominates F(1).
inline double endpoint_dominance_margin(const class_params& p) noexcept
{
    const auto q = compute_intermediates(p);
    return q.k - std::abs(1.0 / 3.0 - q.nu1);
}

inline bool endpoint_dominance_holds(const class_params& p) noexcept
{
    return endpoint_dominance_margin(p) > strict_slack;
}

/// 4(1-a)^2 (4a^2 - 16a + 13) - (a^2 - 4a + 2)^2 (a^2 - 10a + 13); its
/// nonnegativity on (0, 2 - sqrt 2) is what makes the endpoint dominance
/// hold at gamma = gamma_max(alpha).
inline double endpoint_margin_poly(double alpha) noexcept
{
    const double a = alpha;
    const double om = 1.0 - a;
    const double t = a * a - 4.0 * a + 2.0;
    return 4.0 * om * om * (4.0 * a * a - 16.0 * a + 13.0) - t * t * (a * a - 10.0 * a + 13.0);
}

namespace detail {
inline void require_t_range(double t)
{
    if (!(t >= 0.0 && t <= 2.0)) {
        throw std::domain_error("t must lie in [0,2]");
    }
}
} // namespace detail

/// endpoint_margin_poly rewritten in t = a^2 - 4a + 2 (a = 2 - sqrt(2 + t)),
/// divided by 4: (2+t)[30 + 19t - t^2 - (20 + 6t) sqrt(2+t)] / 4.
inline double margin_in_t(double t)
{
    detail::require_t_range(t);
    const double s = std::sqrt(2.0 + t);
    return 0.25 * (2.0 + t) * (30.0 + 19.0 * t - t * t - (20.0 + 6.0 * t) * s);
}

inline double margin_in_t_d1(double t)
{
    detail::require_t_range(t);
    const double s = std::sqrt(2.0 + t);
    return 0.25 * (68.0 + 34.0 * t - 3.0 * t * t - (42.0 + 15.0 * t) * s);
}

inline double margin_in_t_d2(double t)
{
    detail::require_t_range(t);
    const double s = std::sqrt(2.0 + t);
    return 0.125 * (68.0 - 12.0 * t - 45.0 * s - 12.0 / s);
}

/// sqrt(2/(pi a) - 1), shared by the two starlikeness formulas.
namespace detail {
inline double starlike_radical(double alpha)
{
    if (!(alpha > 0.0 && alpha < 2.0 / std::numbers::pi)) {
        throw std::domain_error("alpha must lie in (0, 2/pi)");
    }
    return std::sqrt(2.0 / (std::numbers::pi * alpha) - 1.0);
}
} // namespace detail

/// Largest gamma for which the class is known to be strongly starlike:
/// (2/pi) atan(r) - alpha r, r = sqrt(2/(pi alpha) - 1).
inline double starlike_gamma_threshold(double alpha)
{
    const double r = detail::starlike_radical(alpha);
    return 2.0 / std::numbers::pi * std::atan(r) - alpha * r;
}

/// The corresponding order of strong starlikeness, (2/pi) atan(r).
inline double starlike_order(double alpha)
{
    return 2.0 / std::numbers::pi * std::atan(detail::starlike_radical(alpha));
}

/// Grid summary of the sign facts for margin_in_t on [0,2].
struct margin_certificate {
    double step = 0.0;
    std::size_t points = 0;
    double min_value = std::numeric_limits<double>::infinity();
    double argmin = 0.0;
    double max_d2 = -std::numeric_limits<double>::infinity();
    double d1_at_0 = 0.0;
    double d1_at_2 = 0.0;
    std::size_t d1_sign_changes = 0;

    bool nonnegative() const noexcept { return min_value >= -1e-9; }
    bool concave() const noexcept { return max_d2 <= -1e-3; }
    bool single_peak() const noexcept { return d1_sign_changes == 1; }
    bool pass() const noexcept { return nonnegative() && concave() && single_peak(); }
};

/// Samples t = 2i/n, n = round(2/step), so both endpoints are always visited.
inline margin_certificate certify_margin(double step)
{
    if (!(step > 0.0 && step <= 1e-2)) {
        throw std::invalid_argument("certify_margin: step must lie in (0, 1e-2]");
    }
    margin_certificate cert;
    const auto n = static_cast<std::size_t>(std::llround(2.0 / step));
    cert.step = 2.0 / static_cast<double>(n);
    cert.points = n + 1;
    cert.d1_at_0 = margin_in_t_d1(0.0);
    cert.d1_at_2 = margin_in_t_d1(2.0);

    double prev_d1 = cert.d1_at_0;
    for (std::size_t i = 0; i <= n; ++i) {
        const double t = 2.0 * static_cast<double>(i) / static_cast<double>(n);
        const double v = margin_in_t(t);
        if (v < cert.min_value) {
            cert.min_value = v;
            cert.argmin = t;
        }
        cert.max_d2 = std::max(cert.max_d2, margin_in_t_d2(t));
        const double d1 = margin_in_t_d1(t);
        if (i > 0 && std::signbit(d1) != std::signbit(prev_d1)) {
            ++cert.d1_sign_changes;
        }
        prev_d1 = d1;
    }
    return cert;
}

/// Facts about the region checked over an interior grid
/// alpha_i = (i+1) a_sup/(n+1), gamma_j = (j+1)/n * gamma_max(alpha_i).
struct region_certificate {
    std::size_t points = 0;
    double max_quad = -std::numeric_limits<double>::infinity();
    double min_nu1 = std::numeric_limits<double>::infinity();
    double max_nu1 = -std::numeric_limits<double>::infinity();
    double min_dominance_margin = std::numeric_limits<double>::infinity();

    bool quad_nonpositive() const noexcept { return max_quad <= 0.0; }
    bool nu1_bounded() const noexcept { return min_nu1 > 0.0 && max_nu1 < 13.0 / 12.0; }
    bool dominance(double margin = 1e-9) const noexcept { return min_dominance_margin > margin; }
};

inline region_certificate certify_region(std::size_t n)
{
    region_certificate cert;
    for (std::size_t i = 0; i < n; ++i) {
        const double a = region_alpha_sup * static_cast<double>(i + 1) / static_cast<double>(n + 1);
        for (std::size_t j = 0; j < n; ++j) {
            const double g = region_gamma_max(a) * (static_cast<double>(j + 1) / static_cast<double>(n));
            const class_params p(a, g);
            const auto q = compute_intermediates(p);
            cert.max_quad = std::max(cert.max_quad, q.quad);
            cert.min_nu1 = std::min(cert.min_nu1, q.nu1);
            cert.max_nu1 = std::max(cert.max_nu1, q.nu1);
            cert.min_dominance_margin = std::min(cert.min_dominance_margin, endpoint_dominance_margin(p));
            ++cert.points;
        }
    }
    return cert;
}

} // namespace hankel_lab

#endif
