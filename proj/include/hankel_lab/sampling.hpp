#ifndef HANKEL_LAB_SAMPLING_HPP
#define HANKEL_LAB_SAMPLING_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>

#include "hankel_lab/coefmap.hpp"
#include "hankel_lab/schwarz.hpp"

namespace hankel_lab {

/// Seeded sampler for parameters and Schur points used by sweeps.
class sampler {
public:
    explicit sampler(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo = 0.0, double hi = 1.0)
    {
        return std::uniform_real_distribution<double>(lo, hi)(rng_);
    }

    /// Uniform in the closed unit disk.
    cplx disk_point()
    {
        return std::polar(std::sqrt(uniform()), 2.0 * std::numbers::pi * uniform());
    }

    cplx circle_point() { return std::polar(1.0, 2.0 * std::numbers::pi * uniform()); }

    schur_params schur() { return {disk_point(), disk_point(), disk_point()}; }

    /// Schur point with |g2| = 1, where the third constraint is tight.
    schur_params schur_boundary() { return {disk_point(), disk_point(), circle_point()}; }

    /// Open interval (lo, hi), redrawing the lower endpoint.
    double open_uniform(double lo, double hi)
    {
        for (;;) {
            const double v = uniform(lo, hi);
            if (v > lo) {
                return v;
            }
        }
    }

    class_params any_params() { return {open_uniform(0.0, 1.0), 1.0 - uniform()}; }

    class_params region_params()
    {
        const double a = open_uniform(0.0, region_alpha_sup);
        return {a, region_gamma_max(a) * (1.0 - uniform())};
    }

    std::mt19937_64& engine() noexcept { return rng_; }

private:
    std::mt19937_64 rng_;
};

} // namespace hankel_lab

#endif
