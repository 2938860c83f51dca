#pragma once

#include <cstdint>

#include "eecast/net/types.hpp"

namespace eecast::net {

/// Draws a quasistatic flat-fading channel set: entries are i.i.d.
/// circularly symmetric complex Gaussian with unit variance, scaled by the
/// square root of the configured per-pair path loss (default 1, worst-case
/// interference). Deterministic for a fixed seed.
ChannelSet generate_channels(const NetworkConfig& cfg, std::uint64_t seed);

}  // namespace eecast::net
