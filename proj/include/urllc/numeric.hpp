#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace urllc {

using Integrand = std::function<double(double)>;

// Adaptive Gauss-Kronrod (G7/K15) on a finite interval.
double integrate(const Integrand& f, double a, double b, double rel_tol = 1e-13);

// Integral over [0, inf) of f, for integrands that decay exponentially.
// `survival` must be a tail bound (e.g. 1 - F(t)); the integration cut T is
// grown until survival(T) < tail_tol.
double integrate_to_infinity(const Integrand& f, const Integrand& survival,
                             double scale_hint, double tail_tol = 1e-12,
                             double rel_tol = 1e-13);

// Two-sample-free Kolmogorov-Smirnov distance between an empirical sample
// and a continuous model CDF. Sorts a copy of the sample.
double ks_distance(std::vector<double> sample, const Integrand& cdf);

// Mean and 95% normal-approximation half-width; half-width is 0 when n == 1.
struct MeanCi {
    double mean = 0.0;
    double ci = 0.0;
    double sd = 0.0;
    std::size_t n = 0;
};
MeanCi mean_ci(const std::vector<double>& xs);

inline constexpr double kZ95 = 1.959963984540054;

}  // namespace urllc
