#pragma once

#include "proplab/types.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace proplab {

// Maps canonical column roles to names found in a CSV header. Defaults are
// the canonical schema itself.
struct CsvSchema {
    std::string episode_id = "episode_id";
    std::string bin_index = "bin_index";
    std::string asset_id = "asset_id";
    std::string first = "first";
    std::string high = "high";
    std::string low = "low";
    std::string last = "last";
    std::string signed_volume = "signed_volume";
    std::string timestamp = "timestamp";  // optional column, epoch seconds
};

struct NormalizationConfig {
    double sigma_floor = 1e-12;       // flat-interval volatility floor
    double profile_cap_factor = 100;  // V_D/V_ti capped at M * this
    int profile_window = 20;          // rolling window length in episodes
};

struct NormalizationResult {
    std::vector<NormalizedEpisode> episodes;
    std::vector<int> excluded;  // indices of episodes dropped for having a zero-volume asset
    std::vector<std::int64_t> days;  // epoch day per retained episode
};

// Reads binned episodes from CSV. Bins absent from the file become
// zero-volume bars with prices carried forward from the previous bin.
// Episodes are ordered by timestamp (synthetic consecutive days when the
// file has no timestamp column).
Dataset load_episodes(const std::string& path, const CsvSchema& schema = {}, int bin_seconds = 300);

// Writes the canonical CSV schema; with_timestamp appends the optional
// timestamp column.
void save_episodes(const Dataset& data, const std::string& path, bool with_timestamp = true);

// Modified Garman-Klass volatility over a bar interval:
//   (1/3)(High - Low) + (2/3)|Last - First|
// with High/Low the extremes over the slice and First/Last its endpoints.
// Totally flat intervals return sigma_floor.
double interval_sigma(const BinBar* bars, int count, int stride = 1, double sigma_floor = 1e-12);
double interval_sigma(const std::vector<BinBar>& bars, double sigma_floor = 1e-12);

// Per-episode M x d grids of profile-normalized signed volume:
//   Q~_ti = Q_ti / V_D * mean_{r in window} min(V_D^(r) / V_ti^(r), cap).
// Episodes where any asset traded nothing at all are excluded.
std::vector<Matrix> normalize_volumes(const Dataset& data, const NormalizationConfig& cfg,
                                      std::vector<int>* excluded = nullptr);

// M x d grid of returns from bin-0 open to bin-i close, each divided by the
// interval volatility over [t_0, t_{i+1}].
Matrix normalized_returns(const Episode& ep, int d, const NormalizationConfig& cfg = {});

// Full pipeline: volume profiles plus return normalization.
NormalizationResult normalize_dataset(const Dataset& data, const NormalizationConfig& cfg = {});

// Tick I/O (schema: timestamp_ns,asset_id,signed_volume,price).
std::vector<TickRecord> load_ticks(const std::string& path);
void save_ticks(const std::vector<TickRecord>& ticks, const std::string& path);

// Bins ticks into per-asset-day bars. Bins with no ticks carry the previous
// close forward; bins before the first tick carry its price backward.
std::vector<DayBars> bars_from_ticks(const std::vector<TickRecord>& ticks, int bin_seconds);

}  // namespace proplab
