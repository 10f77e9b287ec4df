#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <vector>

namespace proplab {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// One bar of an equidistant bin grid. Prices are bar extremes/endpoints,
// signed_volume is buy-positive net traded volume in the bin.
struct BinBar {
    double first = 0.0;
    double high = 0.0;
    double low = 0.0;
    double last = 0.0;
    double signed_volume = 0.0;
};

// One trading period: an M x d grid of bars, row-major by bin.
struct Episode {
    std::string id;
    std::int64_t timestamp = 0;  // epoch seconds of bin 0
    std::vector<BinBar> bars;    // size M*d, bars[i*d + a]

    const BinBar& bar(int bin, int asset, int d) const { return bars[static_cast<std::size_t>(bin) * d + asset]; }
    BinBar& bar(int bin, int asset, int d) { return bars[static_cast<std::size_t>(bin) * d + asset]; }
};

// Chronologically ordered episodes with a shared asset list and bin grid.
struct Dataset {
    std::vector<std::string> assets;
    int M = 0;
    int bin_seconds = 0;
    std::vector<Episode> episodes;

    int d() const { return static_cast<int>(assets.size()); }
    int n() const { return static_cast<int>(episodes.size()); }
};

// Regression-ready view of one episode: normalized returns and volumes,
// both M x d and dimensionless.
struct NormalizedEpisode {
    Matrix returns;  // (i, l): price change bin-0 open -> bin-i close over sigma[0, i+1]
    Matrix volumes;  // (i, l): profile-normalized signed volume

    int M() const { return static_cast<int>(returns.rows()); }
    int d() const { return static_cast<int>(returns.cols()); }
};

// A single trade print.
struct TickRecord {
    std::int64_t ts_ns = 0;
    std::string asset;
    double signed_volume = 0.0;
    double price = 0.0;
};

// One asset-day of bars built from ticks; bin i covers
// [start_ns + i*bin_seconds*1e9, start_ns + (i+1)*bin_seconds*1e9).
struct DayBars {
    std::string asset;
    std::int64_t day = 0;       // epoch days
    std::int64_t start_ns = 0;  // bin-0 open
    int bin_seconds = 0;
    std::vector<BinBar> bars;

    int bin_of(std::int64_t ts_ns) const {
        return static_cast<int>((ts_ns - start_ns) / (static_cast<std::int64_t>(bin_seconds) * 1'000'000'000LL));
    }
};

constexpr std::int64_t kNsPerDay = 86'400'000'000'000LL;

inline std::int64_t day_of_ns(std::int64_t ts_ns) { return ts_ns / kNsPerDay; }
inline std::int64_t day_of_episode(const Episode& ep) { return ep.timestamp / 86400; }

}  // namespace proplab
