#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "urllc/rng.hpp"

namespace urllc {

// Renewal inter-arrival distribution seen by a queue.
class InterarrivalLaw {
public:
    virtual ~InterarrivalLaw() = default;

    virtual double cdf(double t) const = 0;
    virtual double survival(double t) const { return 1.0 - cdf(t); }
    virtual double mean() const = 0;
    // Laplace-Stieltjes transform E[exp(-s T)], s >= 0.
    virtual double lst(double s) const = 0;
    virtual double lst_derivative(double s) const;
    // (lst(y) - lst(x)) / (y - x), continuous at y == x.
    virtual double lst_divided_difference(double x, double y) const;
    // Natural time scale, used to seed searches and quadrature cuts.
    virtual double scale() const { return mean(); }

    double rate() const { return 1.0 / mean(); }
};

class ExponentialLaw final : public InterarrivalLaw {
public:
    explicit ExponentialLaw(double rate);
    double cdf(double t) const override;
    double survival(double t) const override;
    double mean() const override { return 1.0 / rate_; }
    double lst(double s) const override { return rate_ / (rate_ + s); }
    double lst_derivative(double s) const override;
    double lst_divided_difference(double x, double y) const override;

private:
    double rate_;
};

class DeterministicLaw final : public InterarrivalLaw {
public:
    explicit DeterministicLaw(double period);
    double cdf(double t) const override { return t >= period_ ? 1.0 : 0.0; }
    double mean() const override { return period_; }
    double lst(double s) const override;
    double lst_derivative(double s) const override;

private:
    double period_;
};

// Message inter-arrivals at an RSU covering a segment of length L: a
// Poisson(rho L) number of vehicles, conditioned on at least one, each
// emitting a Poisson(lambda_s) stream.
//
//   F(t) = 1 - (exp(-rho L (1 - exp(-lambda_s t))) - exp(-rho L)) / (1 - exp(-rho L))
//
// F is also the mixture over n >= 1 of Exp(n lambda_s) with zero-truncated
// Poisson weights, which gives exact series for the transform and the mean.
class ArrivalLaw final : public InterarrivalLaw {
public:
    ArrivalLaw(double rho_v, double coverage_l, double lambda_s);

    double rho_v() const { return rho_v_; }
    double coverage_l() const { return coverage_l_; }
    double lambda_s() const { return lambda_s_; }
    double expected_vehicles() const { return m_; }

    double cdf(double t) const override;
    double survival(double t) const override;
    double pdf(double t) const;
    double mean() const override;  // series form
    double lst(double s) const override;
    double lst_derivative(double s) const override;
    double lst_divided_difference(double x, double y) const override;
    double scale() const override;

    // Quadrature counterparts of the series quantities.
    double mean_by_quadrature() const;
    double lst_by_quadrature(double s) const;

private:
    double rho_v_, coverage_l_, lambda_s_, m_;
    int n_lo_ = 1;
    std::vector<double> w_;  // w_[i] is the weight of n = n_lo_ + i vehicles
};

double interarrival_cdf(double t, const ArrivalLaw& law);
double interarrival_pdf(double t, const ArrivalLaw& law);
double mean_interarrival(const ArrivalLaw& law);  // quadrature of t f(t)

// Root of lst(c mu (1 - delta)) = delta on (0, 1).
double solve_delta(const InterarrivalLaw& law, double mu, int c = 1);
double delta_residual(const InterarrivalLaw& law, double mu, int c, double delta);

double epsilon_l(int l, const InterarrivalLaw& law, double mu);
// D_0 = 1, D_k = prod_{l<=k} eps_l / (1 - eps_l). eps[0] holds eps_1.
double d_k(int k, const std::vector<double>& eps);
// Normalising constant K*; eps must hold eps_1..eps_c. The plain form
// divides by c (1 - delta) - k, which vanishes when delta = 1 - k/c.
double k_star(int c, double delta, const std::vector<double>& eps);
// Same constant, with the ratio evaluated through the transform's divided
// difference so the removable singularity is harmless.
double k_star(int c, double delta, const std::vector<double>& eps, const InterarrivalLaw& law,
              double mu);

struct QueueModel {
    std::shared_ptr<const InterarrivalLaw> law;
    double mu = 0.0;
    int c = 1;
    double lambda = 0.0;
    double delta = 0.0;
    double k_star = 0.0;
    std::vector<double> eps;  // eps_1..eps_c
};

// Throws StabilityError when lambda / (c mu) >= 1.
QueueModel make_queue(std::shared_ptr<const InterarrivalLaw> law, double mu, int c = 1);

// P(wait > 0) = K* / (1 - delta).
double waiting_probability(const QueueModel& qm);
// Sojourn-time CDF: FIFO wait convolved with an Exp(mu) service.
double dwell_time_cdf(double t, const QueueModel& qm);
// Sum form W(t) = 1 - e^{-mu t} + K*/(1-delta) (1 - e^{-c mu (1-delta) t});
// its limit exceeds one, kept for comparison only.
double dwell_time_cdf_sum_form(double t, const QueueModel& qm);
// 1/(mu (1 - delta)) for c = 1, else the general expression.
double mean_dwell(const QueueModel& qm);
// 1/mu + K*/(c mu (1-delta)^2) for any c.
double mean_dwell_general(const QueueModel& qm);

// Mean sojourn for an RSU with the given law and service rate; +inf when the
// queue is unstable.
double mean_dwell_or_inf(std::shared_ptr<const InterarrivalLaw> law, double mu);

// Inverse-CDF sampler: exact quantiles by bisection, cached on a uniform grid
// in probability with linear interpolation between knots.
class InverseCdfSampler {
public:
    InverseCdfSampler(std::function<double(double)> cdf, double scale, std::size_t grid = 4096);
    double quantile(double u) const;
    double sample(Rng& rng) const;
    double operator()(Rng& rng) const { return sample(rng); }

private:
    std::function<double(double)> cdf_;
    double scale_;
    std::vector<double> knots_;
};

struct DesOptions {
    std::size_t warmup = 0;   // jobs discarded before recording
    std::size_t spacing = 1;  // record every spacing-th job after warmup
};

// FIFO GI/M/c. Returns n_jobs sojourn times (wait + service).
std::vector<double> des_gimc(const std::function<double(Rng&)>& next_interarrival, double mu,
                             int c, std::size_t n_jobs, std::uint64_t seed,
                             const DesOptions& opt = {});

// DES with inter-arrivals drawn from the vehicle law by inverse CDF.
std::vector<double> des_gim1(const ArrivalLaw& law, double mu, int c, std::size_t n_jobs,
                             std::uint64_t seed, const DesOptions& opt = {});

}  // namespace urllc
