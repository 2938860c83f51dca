#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace eecast::net {

/// Multi-cell multigroup multicast topology plus per-user QoS data.
///
/// Groups are numbered globally and the groups served by one base station
/// occupy a contiguous index range. Users are numbered globally; every user
/// belongs to exactly one group.
struct NetworkConfig {
    int num_bs = 0;
    std::vector<int> antennas_per_bs;              // N_b
    std::vector<int> bs_of_group;                  // serving BS per group
    std::vector<int> group_of_user;                // group per user
    std::vector<std::vector<int>> users_of_group;  // disjoint, covers all users
    std::vector<double> sinr_targets;              // linear scale, >= 0, per user
    std::vector<double> noise_power;               // watts, per user
    Eigen::MatrixXd path_loss;                     // power scale per (bs, user); empty = all ones

    int num_groups() const { return static_cast<int>(bs_of_group.size()); }
    int num_users() const { return static_cast<int>(group_of_user.size()); }
    int total_antennas() const;

    /// Contiguous [first, last) global group index range served by BS b.
    std::pair<int, int> group_range(int b) const;

    double path_loss_at(int b, int k) const {
        return path_loss.size() == 0 ? 1.0 : path_loss(b, k);
    }

    /// Throws std::invalid_argument when any structural invariant is broken.
    void validate() const;
};

/// Symmetric topology helper: B base stations, N antennas each, G_b groups
/// per BS, L users per group, one SINR target and noise power for everyone.
NetworkConfig make_uniform_config(int num_bs, int antennas, int groups_per_bs, int users_per_group,
                                  double sinr_target_linear, double noise_power_w = 1.0);

/// Transmitter power consumption model.
struct PowerModel {
    double pa_efficiency = 0.35;    // eta, in (0, 1]
    double rf_chain_power = 1.0;    // watts per active RF chain
    double static_power = 2.0;      // watts
    double max_antenna_power = 1.0; // watts, per-antenna cap

    void validate() const;
};

/// Channel row vectors h[b][k] (length N_b) for every BS-user pair.
struct ChannelSet {
    std::vector<std::vector<Eigen::RowVectorXcd>> h;  // [bs][user]

    const Eigen::RowVectorXcd& at(int b, int k) const { return h[b][k]; }
    int num_bs() const { return static_cast<int>(h.size()); }
    int num_users() const { return h.empty() ? 0 : static_cast<int>(h[0].size()); }

    /// Order-sensitive content hash; used to assert that paired experiment
    /// variants consumed identical channels.
    std::uint64_t content_hash() const;
};

/// One beamforming vector per group, length N_{b_g}.
struct BeamformerSet {
    std::vector<Eigen::VectorXcd> w;

    static BeamformerSet zeros(const NetworkConfig& cfg);

    /// Coefficients of antenna i of BS b across the groups served by b.
    Eigen::VectorXcd antenna_slice(const NetworkConfig& cfg, int b, int i) const;
};

/// Per-antenna selection values, relaxed in [0,1] or binary in {0,1}.
struct SelectionVector {
    std::vector<Eigen::VectorXd> a;  // a[b](i)
    bool binary = false;

    static SelectionVector ones(const NetworkConfig& cfg, bool binary = true);
    static SelectionVector zeros(const NetworkConfig& cfg, bool binary = true);

    double sum() const;
    int count_active(int b, double threshold = 0.5) const;
    void validate_bounds() const;  // throws when outside [0,1]
};

/// dB helpers. Power quantities configured in dBW are converted at load
/// time; all internal computation is in linear watts.
inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

}  // namespace eecast::net
