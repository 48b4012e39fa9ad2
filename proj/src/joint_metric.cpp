#include "urllc/joint_metric.hpp"

#include <cmath>

#include "urllc/errors.hpp"

namespace urllc {

void JointMetricParams::validate() const {
    if (!(omega >= 0.0)) throw ParameterError("omega must be >= 0");
    if (!(p_req > 0.0 && p_req <= 1.0)) throw ParameterError("p_req must lie in (0, 1]");
    if (!(t_req > 0.0)) throw ParameterError("t_req must be > 0");
    if (!std::isfinite(a_p) || !std::isfinite(a_t)) throw ParameterError("utility weights must be finite");
}

double reliability_utility(double p, const JointMetricParams& params) {
    if (!(params.p_req > 0.0)) throw ParameterError("p_req must be > 0");
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError("reliability must lie in [0, 1]");
    return std::exp(params.a_p * (p - params.p_req) / params.p_req);
}

double latency_utility(double t, const JointMetricParams& params) {
    if (!(params.t_req > 0.0)) throw ParameterError("t_req must be > 0");
    if (!(t >= 0.0)) throw DomainError("latency must be >= 0");
    if (std::isinf(t)) return 0.0;
    return std::exp(params.a_t * (params.t_req - t) / params.t_req);
}

double joint_function(double i_t, double i_p, double omega) {
    if (!(i_t >= 0.0) || !(i_p >= 0.0)) throw DomainError("utilities must be >= 0");
    return std::hypot(i_t, omega * i_p);
}

}  // namespace urllc
