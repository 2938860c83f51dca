#include "eecast/net/types.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>

#include "eecast/net/rng.hpp"

namespace eecast::net {

int NetworkConfig::total_antennas() const {
    return std::accumulate(antennas_per_bs.begin(), antennas_per_bs.end(), 0);
}

std::pair<int, int> NetworkConfig::group_range(int b) const {
    int first = -1, last = -1;
    for (int g = 0; g < num_groups(); ++g) {
        if (bs_of_group[g] == b) {
            if (first < 0) first = g;
            last = g + 1;
        }
    }
    if (first < 0) return {0, 0};
    return {first, last};
}

void NetworkConfig::validate() const {
    if (num_bs <= 0) throw std::invalid_argument("NetworkConfig: num_bs must be positive");
    if (static_cast<int>(antennas_per_bs.size()) != num_bs)
        throw std::invalid_argument("NetworkConfig: antennas_per_bs size mismatch");
    for (int n : antennas_per_bs)
        if (n < 0) throw std::invalid_argument("NetworkConfig: negative antenna count");

    const int G = num_groups();
    const int K = num_users();
    if (G <= 0 || K <= 0) throw std::invalid_argument("NetworkConfig: needs groups and users");
    if (static_cast<int>(users_of_group.size()) != G)
        throw std::invalid_argument("NetworkConfig: users_of_group size mismatch");
    if (static_cast<int>(sinr_targets.size()) != K || static_cast<int>(noise_power.size()) != K)
        throw std::invalid_argument("NetworkConfig: per-user arrays size mismatch");

    for (int g = 0; g < G; ++g) {
        const int b = bs_of_group[g];
        if (b < 0 || b >= num_bs) throw std::invalid_argument("NetworkConfig: bs_of_group out of range");
        // groups served by one BS must occupy a contiguous index range
        if (g > 0 && bs_of_group[g] < bs_of_group[g - 1])
            throw std::invalid_argument("NetworkConfig: group indices not contiguous per BS");
    }

    // group user sets must be disjoint and cover all users
    std::vector<int> seen(K, 0);
    for (int g = 0; g < G; ++g) {
        for (int k : users_of_group[g]) {
            if (k < 0 || k >= K) throw std::invalid_argument("NetworkConfig: user index out of range");
            if (seen[k]++) throw std::invalid_argument("NetworkConfig: user in two groups");
            if (group_of_user[k] != g)
                throw std::invalid_argument("NetworkConfig: group_of_user inconsistent");
        }
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
        throw std::invalid_argument("NetworkConfig: user not covered by any group");

    for (int k = 0; k < K; ++k) {
        if (sinr_targets[k] < 0.0) throw std::invalid_argument("NetworkConfig: negative SINR target");
        if (noise_power[k] <= 0.0) throw std::invalid_argument("NetworkConfig: noise power must be positive");
    }
    if (path_loss.size() != 0 && (path_loss.rows() != num_bs || path_loss.cols() != K))
        throw std::invalid_argument("NetworkConfig: path_loss dimensions mismatch");
}

NetworkConfig make_uniform_config(int num_bs, int antennas, int groups_per_bs, int users_per_group,
                                  double sinr_target_linear, double noise_power_w) {
    NetworkConfig cfg;
    cfg.num_bs = num_bs;
    cfg.antennas_per_bs.assign(num_bs, antennas);
    const int G = num_bs * groups_per_bs;
    const int K = G * users_per_group;
    cfg.bs_of_group.resize(G);
    cfg.users_of_group.resize(G);
    cfg.group_of_user.resize(K);
    for (int g = 0; g < G; ++g) {
        cfg.bs_of_group[g] = g / groups_per_bs;
        for (int j = 0; j < users_per_group; ++j) {
            const int k = g * users_per_group + j;
            cfg.users_of_group[g].push_back(k);
            cfg.group_of_user[k] = g;
        }
    }
    cfg.sinr_targets.assign(K, sinr_target_linear);
    cfg.noise_power.assign(K, noise_power_w);
    cfg.validate();
    return cfg;
}

void PowerModel::validate() const {
    if (!(pa_efficiency > 0.0 && pa_efficiency <= 1.0))
        throw std::invalid_argument("PowerModel: pa_efficiency must be in (0,1]");
    if (rf_chain_power <= 0.0 || static_power <= 0.0 || max_antenna_power <= 0.0)
        throw std::invalid_argument("PowerModel: powers must be strictly positive");
}

std::uint64_t ChannelSet::content_hash() const {
    std::uint64_t acc = 0x9ae16a3b2f90404fULL;
    auto mix = [&acc](double v) {
        std::uint64_t bits;
        static_assert(sizeof(bits) == sizeof(v));
        std::memcpy(&bits, &v, sizeof(bits));
        acc = splitmix64(acc ^ bits);
    };
    for (const auto& row : h)
        for (const auto& vec : row)
            for (int i = 0; i < vec.size(); ++i) {
                mix(vec(i).real());
                mix(vec(i).imag());
            }
    return acc;
}

BeamformerSet BeamformerSet::zeros(const NetworkConfig& cfg) {
    BeamformerSet out;
    out.w.resize(cfg.num_groups());
    for (int g = 0; g < cfg.num_groups(); ++g)
        out.w[g] = Eigen::VectorXcd::Zero(cfg.antennas_per_bs[cfg.bs_of_group[g]]);
    return out;
}

Eigen::VectorXcd BeamformerSet::antenna_slice(const NetworkConfig& cfg, int b, int i) const {
    const auto [g0, g1] = cfg.group_range(b);
    Eigen::VectorXcd slice(g1 - g0);
    for (int g = g0; g < g1; ++g) slice(g - g0) = w[g](i);
    return slice;
}

SelectionVector SelectionVector::ones(const NetworkConfig& cfg, bool binary) {
    SelectionVector s;
    s.binary = binary;
    for (int b = 0; b < cfg.num_bs; ++b)
        s.a.push_back(Eigen::VectorXd::Ones(cfg.antennas_per_bs[b]));
    return s;
}

SelectionVector SelectionVector::zeros(const NetworkConfig& cfg, bool binary) {
    SelectionVector s;
    s.binary = binary;
    for (int b = 0; b < cfg.num_bs; ++b)
        s.a.push_back(Eigen::VectorXd::Zero(cfg.antennas_per_bs[b]));
    return s;
}

double SelectionVector::sum() const {
    double t = 0.0;
    for (const auto& v : a) t += v.sum();
    return t;
}

int SelectionVector::count_active(int b, double threshold) const {
    return static_cast<int>((a[b].array() > threshold).count());
}

void SelectionVector::validate_bounds() const {
    for (const auto& v : a)
        if ((v.array() < 0.0).any() || (v.array() > 1.0).any())
            throw std::invalid_argument("SelectionVector: entry outside [0,1]");
}

}  // namespace eecast::net
