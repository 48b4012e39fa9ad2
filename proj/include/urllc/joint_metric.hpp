#pragma once

namespace urllc {

struct JointMetricParams {
    double omega = 10.0;
    double a_p = 1.0;
    double a_t = 1.0;
    double p_req = 0.99;
    double t_req = 10e-3;  // seconds

    void validate() const;
};

// exp(a_p (P - P_req) / P_req)
double reliability_utility(double p, const JointMetricParams& params);

// exp(a_t (T_req - T) / T_req); an infinite latency maps to 0.
double latency_utility(double t, const JointMetricParams& params);

// Euclidean norm of (i_t, omega i_p).
double joint_function(double i_t, double i_p, double omega);

}  // namespace urllc
