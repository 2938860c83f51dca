#pragma once

#include <vector>

#include "eecast/net/types.hpp"

namespace eecast::relax {

/// Linearization point for one successive-approximation iteration, plus
/// bookkeeping. Treated as an immutable value: every step produces a new
/// state, so concurrent solves never share mutable data.
struct SolverState {
    net::BeamformerSet w_prev;
    std::vector<double> beta_prev;  // interference-plus-noise per user, > 0
    net::SelectionVector a_prev;    // relaxed, in [0,1]
    double alpha = 1.5;             // penalty exponent, >= 1
    int iteration = 0;
    std::vector<double> objective_history;

    void validate(const net::NetworkConfig& cfg) const;
};

/// Variables of the relaxed fractional program in original (unscaled) space.
struct RelaxedVariables {
    net::BeamformerSet w;
    std::vector<double> gamma;        // per-user SINR variable
    std::vector<Eigen::VectorXd> v;   // per-antenna transmit power, watts
    std::vector<Eigen::VectorXd> a;   // per-antenna selection, [0,1]
    std::vector<double> beta;         // per-user interference-plus-noise
    std::vector<double> r;            // per-group rate
};

/// Charnes-Cooper scaled image of RelaxedVariables: every field multiplied
/// by phi > 0.
struct ScaledVariables {
    double phi = 1.0;
    RelaxedVariables bars;
};

/// Thrown when a CC solution comes back with phi below kPhiFloor; the
/// fractional denominator would have to exceed 1/kPhiFloor watts.
struct DegenerateCcSolution : std::runtime_error {
    using std::runtime_error::runtime_error;
};

ScaledVariables scale_to_cc(const RelaxedVariables& x, double phi);
RelaxedVariables recover_from_cc(const ScaledVariables& xbar);

/// Value of the scaled denominator (1/eta) sum v_bar + P_RF sum a_bar +
/// phi P_sta; at any accepted CC solution this is <= 1.
double cc_denominator(const ScaledVariables& xbar, const net::NetworkConfig& cfg,
                      const net::PowerModel& pm);

/// Relaxed-problem power (1/eta) sum v + P_RF sum a + P_sta in watts.
double relaxed_power(const RelaxedVariables& x, const net::NetworkConfig& cfg,
                     const net::PowerModel& pm);

/// Minimum number of active antennas at BS b: the number of groups it
/// serves that contain at least one user with a nonzero SINR target.
int remark1_count(const net::NetworkConfig& cfg, int b);

}  // namespace eecast::relax
