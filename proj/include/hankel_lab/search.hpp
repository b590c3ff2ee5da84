#ifndef HANKEL_LAB_SEARCH_HPP
#define HANKEL_LAB_SEARCH_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numbers>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "hankel_lab/coefmap.hpp"
#include "hankel_lab/hankel.hpp"
#include "hankel_lab/parallel.hpp"
#include "hankel_lab/schwarz.hpp"

namespace hankel_lab {

struct search_config {
    std::size_t restarts = 64;
    std::size_t max_iterations = 500;
    double tolerance = 1e-9;
    std::uint64_t seed = 0;
    std::size_t grid_resolution = 21;

    void validate() const
    {
        if (restarts < 1 || max_iterations < 1 || grid_resolution < 1) {
            throw std::invalid_argument("search_config: counts must be positive");
        }
        if (!(tolerance > 0.0 && tolerance < 1e-3)) {
            throw std::invalid_argument("search_config: tolerance must lie in (0, 1e-3)");
        }
    }
};

struct search_report {
    schur_params best_schur;
    schwarz_coeffs best_coeffs;
    coefficient_triple best_triple;
    double attained = 0.0;
    double theoretical = 0.0;
    /// theoretical - attained, unclipped: a negative value in the region
    /// means the bound was exceeded.
    double gap = 0.0;
    bool in_region = false;
    std::size_t iterations_used = 0;
    std::size_t restarts_converged = 0;
};

/// |a2 a4 - a3^2| of the class member generated by g.
inline double h22_objective(const class_params& p, const schur_params& g)
{
    return std::abs(h22(closed_form_coefficients(p, coeffs_from_schur_unchecked(g))));
}

namespace detail {

/// Search coordinates (g0, Re g1, Im g1, Re g2, Im g2) with g0 real.
using point = std::array<double, 5>;

inline schur_params to_schur(const point& x)
{
    return {cplx{x[0]}, cplx{x[1], x[2]}, cplx{x[3], x[4]}};
}

inline void clamp_to_disk(double& re, double& im)
{
    const double r = std::hypot(re, im);
    if (r > 1.0) {
        re /= r;
        im /= r;
    }
}

/// Projection onto [0,1] x closed disk x closed disk.
inline point project(point x)
{
    x[0] = std::clamp(x[0], 0.0, 1.0);
    clamp_to_disk(x[1], x[2]);
    clamp_to_disk(x[3], x[4]);
    return x;
}

inline bool inside(const point& x)
{
    return x == project(x);
}

struct local_result {
    point x{};
    double value = 0.0; // maximized objective
    std::size_t iterations = 0;
    bool converged = false;
};

/// Nelder-Mead maximization with every trial point projected back onto the
/// feasible set. Converged when the spread of objective values across the
/// simplex falls below tol relative to the best value.
template <typename Objective>
local_result nelder_mead_max(Objective&& objective, const point& start, double step,
                             std::size_t max_iterations, double tol)
{
    constexpr std::size_t n = 5;
    std::array<point, n + 1> simplex;
    std::array<double, n + 1> cost; // minimized: -objective

    simplex[0] = project(start);
    for (std::size_t i = 0; i < n; ++i) {
        point v = simplex[0];
        v[i] += step;
        if (!inside(v)) {
            v[i] = simplex[0][i] - step;
        }
        simplex[i + 1] = project(v);
    }
    for (std::size_t i = 0; i <= n; ++i) {
        cost[i] = -objective(simplex[i]);
    }

    std::array<std::size_t, n + 1> order;
    local_result out;
    for (; out.iterations < max_iterations; ++out.iterations) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return cost[a] < cost[b]; });
        const std::size_t best = order.front();
        const std::size_t worst = order.back();
        const std::size_t second = order[n - 1];

        const double spread = cost[worst] - cost[best];
        if (spread <= tol * std::abs(cost[best]) || spread == 0.0) {
            out.converged = true;
            break;
        }

        point centroid{};
        for (std::size_t i = 0; i <= n; ++i) {
            if (i == worst) {
                continue;
            }
            for (std::size_t d = 0; d < n; ++d) {
                centroid[d] += simplex[i][d] / static_cast<double>(n);
            }
        }
        auto along = [&](double coef) {
            point p;
            for (std::size_t d = 0; d < n; ++d) {
                p[d] = centroid[d] + coef * (simplex[worst][d] - centroid[d]);
            }
            return project(p);
        };

        const point reflected = along(-1.0);
        const double fr = -objective(reflected);
        if (fr < cost[best]) {
            const point expanded = along(-2.0);
            const double fe = -objective(expanded);
            if (fe < fr) {
                simplex[worst] = expanded;
                cost[worst] = fe;
            } else {
                simplex[worst] = reflected;
                cost[worst] = fr;
            }
            continue;
        }
        if (fr < cost[second]) {
            simplex[worst] = reflected;
            cost[worst] = fr;
            continue;
        }
        const bool outside = fr < cost[worst];
        const point contracted = along(outside ? -0.5 : 0.5);
        const double fc = -objective(contracted);
        if (fc < (outside ? fr : cost[worst])) {
            simplex[worst] = contracted;
            cost[worst] = fc;
            continue;
        }
        for (std::size_t i = 0; i <= n; ++i) {
            if (i == best) {
                continue;
            }
            for (std::size_t d = 0; d < n; ++d) {
                simplex[i][d] = simplex[best][d] + 0.5 * (simplex[i][d] - simplex[best][d]);
            }
            simplex[i] = project(simplex[i]);
            cost[i] = -objective(simplex[i]);
        }
    }

    const auto it = std::min_element(cost.begin(), cost.end());
    const auto idx = static_cast<std::size_t>(it - cost.begin());
    out.x = simplex[idx];
    out.value = -cost[idx];
    return out;
}

/// Uniform point of [0,1] x disk x disk drawn from a per-restart stream.
inline point random_start(std::uint64_t seed, std::size_t restart)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(restart), static_cast<std::uint32_t>(restart >> 32)};
    std::mt19937_64 rng(seq);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    point x{};
    x[0] = unit(rng);
    for (std::size_t k : {1u, 3u}) {
        const double r = std::sqrt(unit(rng));
        const double th = 2.0 * std::numbers::pi * unit(rng);
        x[k] = r * std::cos(th);
        x[k + 1] = r * std::sin(th);
    }
    return x;
}

} // namespace detail

/// Multistart maximization of |H2(2)| over the Schwarz coefficient body at
/// fixed (alpha, gamma). Restart 0 starts at the extremal point g = (0,1,0),
/// the rest at seeded random points. g0 is kept real and nonnegative, which
/// loses nothing because rotating omega only rotates H2(2).
inline search_report maximize_h22(const class_params& p, const search_config& config = {})
{
    config.validate();
    auto objective = [&p](const detail::point& x) { return h22_objective(p, detail::to_schur(x)); };

    std::vector<detail::local_result> runs(config.restarts);
    parallel_for(config.restarts, [&](std::size_t r) {
        const detail::point start = r == 0 ? detail::point{0.0, 1.0, 0.0, 0.0, 0.0}
                                           : detail::random_start(config.seed, r);
        runs[r] = detail::nelder_mead_max(objective, start, r == 0 ? 0.05 : 0.2,
                                          config.max_iterations, config.tolerance);
    });

    search_report rep;
    std::size_t best = 0;
    for (std::size_t r = 0; r < runs.size(); ++r) {
        if (runs[r].value > runs[best].value) {
            best = r;
        }
        rep.iterations_used += runs[r].iterations;
        rep.restarts_converged += runs[r].converged ? 1 : 0;
    }
    rep.best_schur = detail::to_schur(runs[best].x);
    rep.best_coeffs = coeffs_from_schur_unchecked(rep.best_schur);
    rep.best_triple = closed_form_coefficients(p, rep.best_coeffs);
    rep.attained = runs[best].value;
    rep.theoretical = bound(p);
    rep.gap = rep.theoretical - rep.attained;
    rep.in_region = in_theorem_region(p);
    return rep;
}

/// Exhaustive lower bound for the supremum of |H2(2)|: maximum over the
/// product grid g0, |g1|, |g2| in {k/(res-1)} and arg g1, arg g2 in
/// {2 pi k/(res-1)}. Grids nest whenever (res-1) divides (res'-1), and the
/// extremal node (0,1,0) is always present.
inline double brute_force_grid(const class_params& p, std::size_t resolution)
{
    if (resolution < 5) {
        throw std::invalid_argument("brute_force_grid: resolution must be at least 5");
    }
    const std::size_t m = resolution - 1;
    std::vector<double> radius(resolution);
    for (std::size_t k = 0; k < resolution; ++k) {
        radius[k] = static_cast<double>(k) / static_cast<double>(m);
    }
    std::vector<cplx> phase(m);
    for (std::size_t k = 0; k < m; ++k) {
        phase[k] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(m));
    }

    std::vector<double> best(resolution, 0.0);
    parallel_for(resolution, [&](std::size_t i0) {
        double local = 0.0;
        const cplx g0{radius[i0]};
        for (double r1 : radius) {
            for (const cplx& e1 : phase) {
                for (double r2 : radius) {
                    for (const cplx& e2 : phase) {
                        local = std::max(local, h22_objective(p, {g0, r1 * e1, r2 * e2}));
                    }
                }
            }
        }
        best[i0] = local;
    });
    return *std::max_element(best.begin(), best.end());
}

} // namespace hankel_lab

#endif
