#pragma once

#include "eecast/net/types.hpp"

namespace eecast::net {

/// Received SINR of user k: own-group power over noise plus the power of
/// every other group in the network, intra- and inter-cell alike.
double sinr(const BeamformerSet& w, const ChannelSet& H, const NetworkConfig& cfg, int k);

/// log(1 + SINR), in nats.
double user_rate(const BeamformerSet& w, const ChannelSet& H, const NetworkConfig& cfg, int k);

/// Minimum user rate within group g (common multicast stream).
double group_rate(const BeamformerSet& w, const ChannelSet& H, const NetworkConfig& cfg, int g);

/// Sum of per-group minimum rates.
double sum_group_rate(const BeamformerSet& w, const ChannelSet& H, const NetworkConfig& cfg);

/// PA power (1/eta) * sum ||w_g||^2, plus RF chain power for every selected
/// antenna, plus static power.
double total_power(const BeamformerSet& w, const SelectionVector& a, const NetworkConfig& cfg,
                   const PowerModel& pm);

/// ||w_hat_{b,i}||^2 over the groups served by BS b.
double antenna_power(const BeamformerSet& w, const NetworkConfig& cfg, int b, int i);

/// Network energy efficiency in nats per joule (per unit bandwidth).
double energy_efficiency(const BeamformerSet& w, const SelectionVector& a, const ChannelSet& H,
                         const NetworkConfig& cfg, const PowerModel& pm);

inline double nats_to_bits(double nats) { return nats / std::log(2.0); }

}  // namespace eecast::net
