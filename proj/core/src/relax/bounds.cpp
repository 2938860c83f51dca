#include "eecast/relax/bounds.hpp"

#include <cmath>

namespace eecast::relax {

double psi_bound(const Eigen::VectorXcd& w_prev, double beta_prev, const Eigen::RowVectorXcd& h,
                 const Eigen::VectorXcd& w, double beta) {
    if (!(beta_prev > 0.0)) throw std::invalid_argument("psi_bound: beta_prev must be positive");
    const std::complex<double> hw_prev = h * w_prev;
    const std::complex<double> hw = h * w;
    // 2 Re((h w_prev)* (h w)) / beta_prev - (|h w_prev| / beta_prev)^2 beta
    const double cross = 2.0 * (hw_prev.real() * hw.real() + hw_prev.imag() * hw.imag());
    const double ratio = std::abs(hw_prev) / beta_prev;
    return cross / beta_prev - ratio * ratio * beta;
}

double chi_bound_unclamped(double a_prev, double alpha, double a) {
    if (a_prev < 0.0) throw std::invalid_argument("chi_bound: a_prev must be nonnegative");
    if (alpha < 1.0) throw std::invalid_argument("chi_bound: alpha must be >= 1");
    if (alpha == 1.0) return a;  // exact identity, no expansion dependence
    return (1.0 - alpha) * std::pow(a_prev, alpha) + alpha * std::pow(a_prev, alpha - 1.0) * a;
}

double chi_bound(double a_prev, double alpha, double a) {
    return chi_bound_unclamped(std::max(a_prev, kChiExpansionFloor), alpha, a);
}

}  // namespace eecast::relax
