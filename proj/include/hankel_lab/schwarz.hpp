#ifndef HANKEL_LAB_SCHWARZ_HPP
#define HANKEL_LAB_SCHWARZ_HPP

#include <complex>
#include <cstddef>
#include <stdexcept>

#include "hankel_lab/coefmap.hpp"
#include "hankel_lab/powser.hpp"

namespace hankel_lab {

/// Slack used by the coefficient-body membership tests.
inline constexpr double constraint_tolerance = 1e-12;

/// First three Schur parameters of a Schwarz function omega = z*phi0, where
///   phi_k = (g_k + z phi_{k+1}) / (1 + conj(g_k) z phi_{k+1}),  phi_2 = g2.
/// Every point of the closed polydisk gives an admissible (c1, c2, c3) and
/// every admissible triple arises this way.
struct schur_params {
    cplx g0{};
    cplx g1{};
    cplx g2{};

    friend bool operator==(const schur_params&, const schur_params&) = default;
};

inline bool in_closed_polydisk(const schur_params& g) noexcept
{
    return std::abs(g.g0) <= 1.0 && std::abs(g.g1) <= 1.0 && std::abs(g.g2) <= 1.0;
}

/// c1 = g0, c2 = (1-|g0|^2) g1, c3 = (1-|g0|^2)[(1-|g1|^2) g2 - conj(g0) g1^2].
/// No validation; callers that can produce out-of-disk input use coeffs_from_schur.
inline schwarz_coeffs coeffs_from_schur_unchecked(const schur_params& g) noexcept
{
    const double d0 = 1.0 - std::norm(g.g0);
    const double d1 = 1.0 - std::norm(g.g1);
    return {
        g.g0,
        d0 * g.g1,
        d0 * (d1 * g.g2 - std::conj(g.g0) * g.g1 * g.g1),
    };
}

inline schwarz_coeffs coeffs_from_schur(const schur_params& g)
{
    if (!in_closed_polydisk(g)) {
        throw std::domain_error("coeffs_from_schur: Schur parameter outside the closed unit disk");
    }
    return coeffs_from_schur_unchecked(g);
}

/// Inverse of coeffs_from_schur. When a parameter reaches the unit circle the
/// function is a finite Blaschke product and later parameters are set to 0.
inline schur_params schur_from_coeffs(const schwarz_coeffs& c, double eps = 1e-14) noexcept
{
    schur_params g{c.c1, cplx{}, cplx{}};
    const double d0 = 1.0 - std::norm(c.c1);
    if (d0 <= eps) {
        return g;
    }
    g.g1 = c.c2 / d0;
    const double d1 = 1.0 - std::norm(g.g1);
    if (d1 <= eps) {
        return g;
    }
    g.g2 = (c.c3 / d0 + std::conj(g.g0) * g.g1 * g.g1) / d1;
    return g;
}

/// |c1| <= 1, |c2| <= 1 - |c1|^2 and
/// |c3 (1 - |c1|^2) + conj(c1) c2^2| <= (1 - |c1|^2)^2 - |c2|^2.
inline bool validate_coeffs(const schwarz_coeffs& c, double tol = constraint_tolerance) noexcept
{
    const double d = 1.0 - std::norm(c.c1);
    if (std::abs(c.c1) > 1.0 + tol) {
        return false;
    }
    if (std::abs(c.c2) > d + tol) {
        return false;
    }
    const double lhs = std::abs(c.c3 * d + std::conj(c.c1) * c.c2 * c.c2);
    return lhs <= d * d - std::norm(c.c2) + tol;
}

/// The rotated form of the constraints when c1 is real in [0,1]:
/// |c2| <= 1 - c1^2 and |c3| <= 1 - c1^2 - |c2|^2/(1 + c1).
/// This is implied by validate_coeffs but weaker than it.
inline bool validate_coeffs_normalized(const schwarz_coeffs& c, double tol = constraint_tolerance)
{
    if (c.c1.imag() != 0.0 || c.c1.real() < 0.0 || c.c1.real() > 1.0) {
        throw std::domain_error("validate_coeffs_normalized: c1 must be real in [0,1]");
    }
    const double c1 = c.c1.real();
    const double d = 1.0 - c1 * c1;
    if (std::abs(c.c2) > d + tol) {
        return false;
    }
    return std::abs(c.c3) <= d - std::norm(c.c2) / (1.0 + c1) + tol;
}

/// omega(z) = z^2, the Schwarz function of the extremal class member.
inline series extremal_omega(std::size_t order = 8)
{
    return omega_series({cplx{}, cplx{1.0}, cplx{}}, order);
}

inline schwarz_coeffs coeffs_of(const series& omega)
{
    return {omega.coeff(1), omega.coeff(2), omega.coeff(3)};
}

} // namespace hankel_lab

#endif
