#include "eecast/net/metrics.hpp"

#include <cmath>
#include <limits>

namespace eecast::net {

namespace {
void check_dims(const BeamformerSet& w, const ChannelSet& H, const NetworkConfig& cfg) {
    if (static_cast<int>(w.w.size()) != cfg.num_groups())
        throw std::invalid_argument("beamformer/group count mismatch");
    if (H.num_bs() != cfg.num_bs || H.num_users() != cfg.num_users())
        throw std::invalid_argument("channel/config dimension mismatch");
    for (int g = 0; g < cfg.num_groups(); ++g)
        if (w.w[g].size() != cfg.antennas_per_bs[cfg.bs_of_group[g]])
            throw std::invalid_argument("beamformer length mismatch for group");
}
}  // namespace

double sinr(const BeamformerSet& w, const ChannelSet& H, const NetworkConfig& cfg, int k) {
    check_dims(w, H, cfg);
    const int g = cfg.group_of_user[k];
    const std::complex<double> own = H.at(cfg.bs_of_group[g], k) * w.w[g];
    double interference = 0.0;
    for (int u = 0; u < cfg.num_groups(); ++u) {
        if (u == g) continue;
        const std::complex<double> x = H.at(cfg.bs_of_group[u], k) * w.w[u];
        interference += std::norm(x);
    }
    return std::norm(own) / (cfg.noise_power[k] + interference);
}

double user_rate(const BeamformerSet& w, const ChannelSet& H, const NetworkConfig& cfg, int k) {
    return std::log1p(sinr(w, H, cfg, k));
}

double group_rate(const BeamformerSet& w, const ChannelSet& H, const NetworkConfig& cfg, int g) {
    double r = std::numeric_limits<double>::infinity();
    for (int k : cfg.users_of_group[g]) r = std::min(r, user_rate(w, H, cfg, k));
    return r;
}

double sum_group_rate(const BeamformerSet& w, const ChannelSet& H, const NetworkConfig& cfg) {
    double s = 0.0;
    for (int g = 0; g < cfg.num_groups(); ++g) s += group_rate(w, H, cfg, g);
    return s;
}

double total_power(const BeamformerSet& w, const SelectionVector& a, const NetworkConfig& cfg,
                   const PowerModel& pm) {
    double pa = 0.0;
    for (const auto& wg : w.w) pa += wg.squaredNorm();
    double rf = 0.0;
    for (int b = 0; b < cfg.num_bs; ++b) rf += a.a[b].sum();
    return pa / pm.pa_efficiency + pm.rf_chain_power * rf + pm.static_power;
}

double antenna_power(const BeamformerSet& w, const NetworkConfig& cfg, int b, int i) {
    return w.antenna_slice(cfg, b, i).squaredNorm();
}

double energy_efficiency(const BeamformerSet& w, const SelectionVector& a, const ChannelSet& H,
                         const NetworkConfig& cfg, const PowerModel& pm) {
    return sum_group_rate(w, H, cfg) / total_power(w, a, cfg, pm);
}

}  // namespace eecast::net
