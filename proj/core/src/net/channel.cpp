#include "eecast/net/channel.hpp"

#include "eecast/net/rng.hpp"

namespace eecast::net {

ChannelSet generate_channels(const NetworkConfig& cfg, std::uint64_t seed) {
    ChannelSet H;
    H.h.resize(cfg.num_bs);
    const int K = cfg.num_users();
    for (int b = 0; b < cfg.num_bs; ++b) {
        // independent stream per BS so the draw order is insensitive to K
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(b)));
        H.h[b].resize(K);
        for (int k = 0; k < K; ++k) {
            Eigen::RowVectorXcd row(cfg.antennas_per_bs[b]);
            const double scale = std::sqrt(cfg.path_loss_at(b, k));
            for (int i = 0; i < row.size(); ++i) row(i) = scale * rng.cgaussian();
            H.h[b][k] = std::move(row);
        }
    }
    return H;
}

}  // namespace eecast::net
