#include "urllc/queueing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "urllc/errors.hpp"
#include "urllc/numeric.hpp"

namespace urllc {

namespace {

// (1 - exp(-z)) / z, equal to 1 at z = 0.
double phi1(double z) { return std::abs(z) < 1e-300 ? 1.0 : -std::expm1(-z) / z; }

double binomial(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

// ---------------------------------------------------------------- generic law

double InterarrivalLaw::lst_derivative(double s) const {
    double h = 1e-6 * std::max(1.0, s + 1.0 / scale());
    double lo = std::max(0.0, s - h);
    return (lst(s + h) - lst(lo)) / (s + h - lo);
}

double InterarrivalLaw::lst_divided_difference(double x, double y) const {
    if (std::abs(y - x) <= 1e-9 * std::max(std::abs(x), std::abs(y)) + 1e-300)
        return lst_derivative(0.5 * (x + y));
    return (lst(y) - lst(x)) / (y - x);
}

// ---------------------------------------------------------------- exponential

ExponentialLaw::ExponentialLaw(double rate) : rate_(rate) {
    if (!(rate > 0.0) || !std::isfinite(rate)) throw ParameterError("rate must be > 0");
}

double ExponentialLaw::cdf(double t) const { return t <= 0.0 ? 0.0 : -std::expm1(-rate_ * t); }
double ExponentialLaw::survival(double t) const { return t <= 0.0 ? 1.0 : std::exp(-rate_ * t); }
double ExponentialLaw::lst_derivative(double s) const { return -rate_ / ((rate_ + s) * (rate_ + s)); }
double ExponentialLaw::lst_divided_difference(double x, double y) const {
    return -rate_ / ((rate_ + x) * (rate_ + y));
}

// -------------------------------------------------------------- deterministic

DeterministicLaw::DeterministicLaw(double period) : period_(period) {
    if (!(period > 0.0) || !std::isfinite(period)) throw ParameterError("period must be > 0");
}

double DeterministicLaw::lst(double s) const { return std::exp(-s * period_); }
double DeterministicLaw::lst_derivative(double s) const { return -period_ * std::exp(-s * period_); }

// ----------------------------------------------------------- vehicle arrivals

ArrivalLaw::ArrivalLaw(double rho_v, double coverage_l, double lambda_s)
    : rho_v_(rho_v), coverage_l_(coverage_l), lambda_s_(lambda_s), m_(rho_v * coverage_l) {
    if (!(rho_v >= 0.0) || !(coverage_l >= 0.0))
        throw ParameterError("rho_v and coverage_l must be >= 0");
    if (!(lambda_s > 0.0) || !std::isfinite(lambda_s))
        throw ParameterError("lambda_s must be > 0");
    if (!(m_ > 0.0) || !std::isfinite(m_))
        throw ModelError("no vehicles on the covered segment (rho_v * L = 0)");

    const double sd = std::sqrt(m_);
    n_lo_ = std::max(1, static_cast<int>(std::floor(m_ - 13.0 * sd - 10.0)));
    const int n_hi = static_cast<int>(std::ceil(m_ + 13.0 * sd + 25.0));
    const double log_norm = std::log(-std::expm1(-m_));
    const double log_m = std::log(m_);
    w_.reserve(static_cast<std::size_t>(n_hi - n_lo_ + 1));
    for (int n = n_lo_; n <= n_hi; ++n)
        w_.push_back(std::exp(-m_ + n * log_m - std::lgamma(n + 1.0) - log_norm));
}

double ArrivalLaw::survival(double t) const {
    if (t < 0.0) throw DomainError("t must be >= 0");
    const double e = std::exp(-lambda_s_ * t);
    const double den = -std::expm1(-m_);
    double num;
    if (m_ * e > 1.0)
        num = std::exp(m_ * std::expm1(-lambda_s_ * t)) - std::exp(-m_);
    else
        num = std::exp(-m_) * std::expm1(m_ * e);
    return std::clamp(num / den, 0.0, 1.0);
}

double ArrivalLaw::cdf(double t) const { return 1.0 - survival(t); }

double ArrivalLaw::pdf(double t) const {
    if (t < 0.0) throw DomainError("t must be >= 0");
    const double e = std::exp(-lambda_s_ * t);
    return lambda_s_ * m_ * std::exp(-m_ + m_ * e - lambda_s_ * t) / -std::expm1(-m_);
}

double ArrivalLaw::mean() const {
    double s = 0.0;
    for (std::size_t i = 0; i < w_.size(); ++i) s += w_[i] / (lambda_s_ * (n_lo_ + static_cast<int>(i)));
    return s;
}

double ArrivalLaw::lst(double s) const {
    double acc = 0.0;
    for (std::size_t i = 0; i < w_.size(); ++i) {
        double r = lambda_s_ * (n_lo_ + static_cast<int>(i));
        acc += w_[i] * r / (r + s);
    }
    return acc;
}

double ArrivalLaw::lst_derivative(double s) const {
    double acc = 0.0;
    for (std::size_t i = 0; i < w_.size(); ++i) {
        double r = lambda_s_ * (n_lo_ + static_cast<int>(i));
        acc -= w_[i] * r / ((r + s) * (r + s));
    }
    return acc;
}

double ArrivalLaw::lst_divided_difference(double x, double y) const {
    double acc = 0.0;
    for (std::size_t i = 0; i < w_.size(); ++i) {
        double r = lambda_s_ * (n_lo_ + static_cast<int>(i));
        acc -= w_[i] * r / ((r + x) * (r + y));
    }
    return acc;
}

double ArrivalLaw::scale() const { return 1.0 / (lambda_s_ * std::max(1.0, m_)); }

double ArrivalLaw::mean_by_quadrature() const {
    return integrate_to_infinity([this](double t) { return t * pdf(t); },
                                 [this](double t) { return survival(t); }, scale());
}

double ArrivalLaw::lst_by_quadrature(double s) const {
    return integrate_to_infinity([this, s](double t) { return std::exp(-s * t) * pdf(t); },
                                 [this](double t) { return survival(t); }, scale());
}

double interarrival_cdf(double t, const ArrivalLaw& law) { return law.cdf(t); }
double interarrival_pdf(double t, const ArrivalLaw& law) { return law.pdf(t); }
double mean_interarrival(const ArrivalLaw& law) { return law.mean_by_quadrature(); }

// ------------------------------------------------------------------ delta

double delta_residual(const InterarrivalLaw& law, double mu, int c, double delta) {
    return law.lst(c * mu * (1.0 - delta)) - delta;
}

double solve_delta(const InterarrivalLaw& law, double mu, int c) {
    if (!(mu > 0.0) || !std::isfinite(mu)) throw ParameterError("mu must be > 0");
    if (c < 1) throw ParameterError("c must be >= 1");
    const double load = 1.0 / (law.mean() * c * mu);
    if (!(load < 1.0)) throw StabilityError("unstable queue: lambda/(c mu) = " + std::to_string(load));

    const double cm = c * mu;
    auto g = [&](double d) { return law.lst(cm * (1.0 - d)) - d; };
    double lo = 1e-12, hi = 1.0 - 1e-12;
    double glo = g(lo), ghi = g(hi);
    if (!(glo > 0.0) || !(ghi < 0.0))
        throw NumericError("delta root not bracketed on (1e-12, 1 - 1e-12)");

    while (hi - lo > 1e-7) {
        double mid = 0.5 * (lo + hi);
        (g(mid) > 0.0 ? lo : hi) = mid;
    }
    // Newton polish, kept inside the bracket.
    double d = 0.5 * (lo + hi);
    for (int it = 0; it < 60; ++it) {
        double gd = g(d);
        if (gd == 0.0) break;
        (gd > 0.0 ? lo : hi) = d;
        double gp = -cm * law.lst_derivative(cm * (1.0 - d)) - 1.0;
        double next = d - gd / gp;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::abs(next - d) <= 1e-17 + 4e-16 * d) {
            d = next;
            break;
        }
        d = next;
    }
    return d;
}

// --------------------------------------------------------- sojourn constants

double epsilon_l(int l, const InterarrivalLaw& law, double mu) {
    if (l < 1) throw ParameterError("l must be >= 1");
    return law.lst(l * mu);
}

double d_k(int k, const std::vector<double>& eps) {
    if (k < 0 || static_cast<std::size_t>(k) > eps.size()) throw ParameterError("k out of range");
    double d = 1.0;
    for (int l = 1; l <= k; ++l) d *= eps[l - 1] / (1.0 - eps[l - 1]);
    return d;
}

double k_star(int c, double delta, const std::vector<double>& eps) {
    if (c < 1 || eps.size() < static_cast<std::size_t>(c)) throw ParameterError("need eps_1..eps_c");
    if (delta == 0.0) return 0.0;
    double sum = 1.0 / (1.0 - delta);
    for (int k = 1; k <= c; ++k) {
        double ek = eps[k - 1];
        sum += binomial(c, k) / (d_k(k, eps) * (1.0 - ek)) * (c * (1.0 - ek) - k) /
               (c * (1.0 - delta) - k);
    }
    return 1.0 / sum;
}

double k_star(int c, double delta, const std::vector<double>& eps, const InterarrivalLaw& law,
              double mu) {
    if (c < 1 || eps.size() < static_cast<std::size_t>(c)) throw ParameterError("need eps_1..eps_c");
    if (delta == 0.0) return 0.0;
    const double x = c * mu * (1.0 - delta);
    double sum = 1.0 / (1.0 - delta);
    for (int k = 1; k <= c; ++k) {
        double ek = eps[k - 1];
        // (c(1-eps_k) - k) / (c(1-delta) - k) rewritten with delta = lst(x).
        double ratio = 1.0 + c * mu * law.lst_divided_difference(k * mu, x);
        sum += binomial(c, k) / (d_k(k, eps) * (1.0 - ek)) * ratio;
    }
    return 1.0 / sum;
}

QueueModel make_queue(std::shared_ptr<const InterarrivalLaw> law, double mu, int c) {
    if (!law) throw ParameterError("queue needs an arrival law");
    QueueModel qm;
    qm.mu = mu;
    qm.c = c;
    qm.lambda = law->rate();
    qm.delta = solve_delta(*law, mu, c);
    qm.eps.reserve(static_cast<std::size_t>(c));
    for (int l = 1; l <= c; ++l) qm.eps.push_back(epsilon_l(l, *law, mu));
    qm.k_star = c == 1 ? qm.delta * (1.0 - qm.delta) : k_star(c, qm.delta, qm.eps, *law, mu);
    qm.law = std::move(law);
    return qm;
}

double waiting_probability(const QueueModel& qm) { return qm.k_star / (1.0 - qm.delta); }

double dwell_time_cdf(double t, const QueueModel& qm) {
    if (t <= 0.0) return 0.0;
    const double p = waiting_probability(qm);
    const double r = qm.c * qm.mu * (1.0 - qm.delta);
    const double mu = qm.mu;
    // P(Exp(r) + Exp(mu) > t)
    const double er = std::exp(-r * t);
    const double both = er + r * t * er * phi1((mu - r) * t);
    const double surv = (1.0 - p) * std::exp(-mu * t) + p * both;
    return std::clamp(1.0 - surv, 0.0, 1.0);
}

double dwell_time_cdf_sum_form(double t, const QueueModel& qm) {
    if (t <= 0.0) return 0.0;
    const double r = qm.c * qm.mu * (1.0 - qm.delta);
    return -std::expm1(-qm.mu * t) + qm.k_star / (1.0 - qm.delta) * -std::expm1(-r * t);
}

double mean_dwell(const QueueModel& qm) {
    if (qm.c == 1) return 1.0 / (qm.mu * (1.0 - qm.delta));
    return mean_dwell_general(qm);
}

double mean_dwell_general(const QueueModel& qm) {
    const double om = 1.0 - qm.delta;
    return 1.0 / qm.mu + qm.k_star / (qm.c * qm.mu * om * om);
}

double mean_dwell_or_inf(std::shared_ptr<const InterarrivalLaw> law, double mu) {
    if (!(mu > 0.0)) return std::numeric_limits<double>::infinity();
    if (!(law->mean() * mu > 1.0)) return std::numeric_limits<double>::infinity();
    try {
        double d = solve_delta(*law, mu, 1);
        return 1.0 / (mu * (1.0 - d));
    } catch (const StabilityError&) {
        return std::numeric_limits<double>::infinity();
    } catch (const NumericError&) {
        // Load so close to one that the root cannot be bracketed.
        return std::numeric_limits<double>::infinity();
    }
}

// ------------------------------------------------------------------ sampler

InverseCdfSampler::InverseCdfSampler(std::function<double(double)> cdf, double scale,
                                     std::size_t grid)
    : cdf_(std::move(cdf)), scale_(scale) {
    if (!(scale > 0.0)) throw ParameterError("sampler scale must be > 0");
    if (grid < 2) throw ParameterError("grid needs at least two knots");
    knots_.resize(grid);
    knots_[0] = quantile(0.0);
    for (std::size_t i = 1; i < grid; ++i)
        knots_[i] = quantile(static_cast<double>(i) / static_cast<double>(grid));
}

double InverseCdfSampler::quantile(double u) const {
    // u = 0 maps to the left end of the support.
    u = std::max(u, std::numeric_limits<double>::min());
    double lo = 0.0, hi = scale_;
    int grow = 0;
    while (cdf_(hi) < u) {
        lo = hi;
        hi *= 2.0;
        if (++grow > 2000) throw NumericError("quantile search diverged");
    }
    for (int it = 0; it < 400 && hi - lo > 1e-12 * hi; ++it) {
        double mid = 0.5 * (lo + hi);
        (cdf_(mid) < u ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double InverseCdfSampler::sample(Rng& rng) const {
    const double u = uniform_open(rng);
    const double pos = u * static_cast<double>(knots_.size());
    const auto i = static_cast<std::size_t>(pos);
    if (i + 1 >= knots_.size()) return quantile(u);
    const double f = pos - static_cast<double>(i);
    return knots_[i] + f * (knots_[i + 1] - knots_[i]);
}

// ---------------------------------------------------------------------- DES

std::vector<double> des_gimc(const std::function<double(Rng&)>& next_interarrival, double mu,
                             int c, std::size_t n_jobs, std::uint64_t seed, const DesOptions& opt) {
    if (!(mu > 0.0)) throw ParameterError("mu must be > 0");
    if (c < 1) throw ParameterError("c must be >= 1");
    if (n_jobs < 1) throw ParameterError("n_jobs must be >= 1");
    const std::size_t spacing = std::max<std::size_t>(1, opt.spacing);
    Rng rng = make_rng(seed);
    std::exponential_distribution<double> service(mu);

    // Remaining work on each server, measured from the current arrival.
    std::vector<double> busy(static_cast<std::size_t>(c), 0.0);
    std::vector<double> out;
    out.reserve(n_jobs);
    const std::size_t total = opt.warmup + n_jobs * spacing;
    for (std::size_t j = 0; j < total; ++j) {
        auto it = std::min_element(busy.begin(), busy.end());
        const double wait = *it;
        const double s = service(rng);
        *it = wait + s;
        if (j >= opt.warmup && (j - opt.warmup) % spacing == 0) out.push_back(wait + s);
        const double a = next_interarrival(rng);
        for (double& b : busy) b = std::max(0.0, b - a);
    }
    return out;
}

std::vector<double> des_gim1(const ArrivalLaw& law, double mu, int c, std::size_t n_jobs,
                             std::uint64_t seed, const DesOptions& opt) {
    InverseCdfSampler sampler([&law](double t) { return law.cdf(t); }, law.scale());
    return des_gimc([&sampler](Rng& r) { return sampler.sample(r); }, mu, c, n_jobs, seed, opt);
}

}  // namespace urllc
