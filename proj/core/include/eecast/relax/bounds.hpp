#pragma once

#include <Eigen/Dense>
#include <stdexcept>

namespace eecast::relax {

/// Numerical floors, see the module notes in state.hpp.
inline constexpr double kChiExpansionFloor = 1e-4;  // keeps chi from locking an antenna off
inline constexpr double kPhiFloor = 1e-9;           // below this a CC solution is degenerate

/// Floor applied to interference iterates before forming the SINR surrogate;
/// the interference-plus-noise variable can never drop below the noise power.
inline double beta_floor(double noise_power) { return noise_power * (1.0 - 1e-9); }

/// Affine lower bound on the quadratic-over-linear SINR term |h w|^2 / beta,
/// expanded at (w_prev, beta_prev). Tight at the expansion point.
double psi_bound(const Eigen::VectorXcd& w_prev, double beta_prev, const Eigen::RowVectorXcd& h,
                 const Eigen::VectorXcd& w, double beta);

/// Affine lower bound on a^alpha at expansion point a_prev, for a in [0,1]
/// and alpha >= 1. With alpha == 1 this is the identity. The expansion point
/// is clamped to kChiExpansionFloor so a zero iterate cannot zero the slope
/// permanently.
double chi_bound(double a_prev, double alpha, double a);

/// Same bound without the expansion clamp; used by property tests that
/// exercise the raw tangency identity.
double chi_bound_unclamped(double a_prev, double alpha, double a);

}  // namespace eecast::relax
