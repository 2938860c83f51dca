#include "eecast/relax/state.hpp"

#include <cmath>

#include "eecast/relax/bounds.hpp"

namespace eecast::relax {

void SolverState::validate(const net::NetworkConfig& cfg) const {
    if (alpha < 1.0) throw std::invalid_argument("SolverState: alpha must be >= 1");
    if (static_cast<int>(beta_prev.size()) != cfg.num_users())
        throw std::invalid_argument("SolverState: beta size mismatch");
    for (int k = 0; k < cfg.num_users(); ++k)
        if (beta_prev[k] < beta_floor(cfg.noise_power[k]))
            throw std::invalid_argument("SolverState: beta below noise floor");
    a_prev.validate_bounds();
}

namespace {
RelaxedVariables scaled_copy(const RelaxedVariables& x, double factor) {
    RelaxedVariables out = x;
    for (auto& wg : out.w.w) wg *= factor;
    for (auto& g : out.gamma) g *= factor;
    for (auto& vb : out.v) vb *= factor;
    for (auto& ab : out.a) ab *= factor;
    for (auto& bk : out.beta) bk *= factor;
    for (auto& rg : out.r) rg *= factor;
    return out;
}
}  // namespace

ScaledVariables scale_to_cc(const RelaxedVariables& x, double phi) {
    if (!(phi > 0.0)) throw std::invalid_argument("scale_to_cc: phi must be positive");
    return {phi, scaled_copy(x, phi)};
}

RelaxedVariables recover_from_cc(const ScaledVariables& xbar) {
    if (!(xbar.phi > kPhiFloor))
        throw DegenerateCcSolution("recover_from_cc: phi below floor, degenerate CC solution");
    return scaled_copy(xbar.bars, 1.0 / xbar.phi);
}

double cc_denominator(const ScaledVariables& xbar, const net::NetworkConfig& cfg,
                      const net::PowerModel& pm) {
    double v_sum = 0.0, a_sum = 0.0;
    for (int b = 0; b < cfg.num_bs; ++b) {
        v_sum += xbar.bars.v[b].sum();
        a_sum += xbar.bars.a[b].sum();
    }
    return v_sum / pm.pa_efficiency + pm.rf_chain_power * a_sum + xbar.phi * pm.static_power;
}

double relaxed_power(const RelaxedVariables& x, const net::NetworkConfig& cfg,
                     const net::PowerModel& pm) {
    double v_sum = 0.0, a_sum = 0.0;
    for (int b = 0; b < cfg.num_bs; ++b) {
        v_sum += x.v[b].sum();
        a_sum += x.a[b].sum();
    }
    return v_sum / pm.pa_efficiency + pm.rf_chain_power * a_sum + pm.static_power;
}

int remark1_count(const net::NetworkConfig& cfg, int b) {
    int count = 0;
    const auto [g0, g1] = cfg.group_range(b);
    for (int g = g0; g < g1; ++g)
        for (int k : cfg.users_of_group[g])
            if (cfg.sinr_targets[k] > 0.0) {
                ++count;
                break;
            }
    return count;
}

}  // namespace eecast::relax
