#include "urllc/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "urllc/errors.hpp"

namespace urllc {

double integrate(const Integrand& f, double a, double b, double rel_tol) {
    if (!(b > a)) return 0.0;
    double err = 0.0;
    double l1 = 0.0;
    double v = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, a, b, 12, rel_tol,
                                                                            &err, &l1);
    if (!std::isfinite(v)) throw NumericError("quadrature produced a non-finite value");
    // Boost returns its best estimate when the depth limit is hit; accept it
    // unless the error estimate is grossly off.
    if (err > 1e-6 * std::max(1.0, l1))
        throw NumericError("quadrature did not converge on [" + std::to_string(a) + ", " +
                           std::to_string(b) + "], error estimate " + std::to_string(err));
    return v;
}

double integrate_to_infinity(const Integrand& f, const Integrand& survival, double scale_hint,
                             double tail_tol, double rel_tol) {
    if (!(scale_hint > 0.0)) throw NumericError("integrate_to_infinity needs a positive scale");
    double t_cut = scale_hint;
    int grow = 0;
    while (survival(t_cut) >= tail_tol) {
        t_cut *= 2.0;
        if (++grow > 200) throw NumericError("tail did not decay below tolerance");
    }
    // Split at geometric breakpoints so the adaptive rule sees the fast
    // initial transient and the slow tail separately.
    double total = 0.0;
    double lo = 0.0;
    double hi = std::min(scale_hint, t_cut);
    while (lo < t_cut) {
        total += integrate(f, lo, hi, rel_tol);
        lo = hi;
        hi = std::min(hi * 4.0, t_cut);
    }
    return total;
}

double ks_distance(std::vector<double> sample, const Integrand& cdf) {
    if (sample.empty()) return 0.0;
    std::sort(sample.begin(), sample.end());
    const double n = static_cast<double>(sample.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        double f = cdf(sample[i]);
        d = std::max(d, std::max(f - static_cast<double>(i) / n,
                                 static_cast<double>(i + 1) / n - f));
    }
    return d;
}

MeanCi mean_ci(const std::vector<double>& xs) {
    MeanCi r;
    r.n = xs.size();
    if (xs.empty()) {
        r.mean = std::numeric_limits<double>::quiet_NaN();
        return r;
    }
    for (double x : xs) {
        if (!std::isfinite(x)) {
            r.mean = x;
            r.ci = std::numeric_limits<double>::infinity();
            r.sd = std::numeric_limits<double>::infinity();
            return r;
        }
    }
    // Two-pass for accuracy; order is fixed so the result is reproducible.
    double s = 0.0;
    for (double x : xs) s += x;
    r.mean = s / static_cast<double>(xs.size());
    if (xs.size() == 1) return r;
    double ss = 0.0;
    for (double x : xs) ss += (x - r.mean) * (x - r.mean);
    r.sd = std::sqrt(ss / static_cast<double>(xs.size() - 1));
    r.ci = kZ95 * r.sd / std::sqrt(static_cast<double>(xs.size()));
    return r;
}

}  // namespace urllc
