#pragma once

#include "dsw/segmenter.hpp"

#include <cstdint>
#include <vector>

namespace dsw {

/// Absolute (sample count) and relative (log-ratio) compression of a
/// segment mapping. Negative values mean the target subsequence is shorter
/// than the source, positive values that it is longer. `kappa` is +/-inf
/// for horizontal/vertical path segments (one span is zero).
struct Compression {
    std::int64_t k = 0;
    double kappa = 0.0;
};

/// K and kappa for s1(b:e) mapped to s2(b2:e2). Requires e >= b, e2 >= b2
/// and at least one non-zero span.
Compression compression(std::int64_t b, std::int64_t e, std::int64_t b2, std::int64_t e2);

/// Which point of a segment defines its time shift.
enum class ShiftDefinition {
    ClosestToDiagonal,  ///< 0 when endpoint shifts disagree in sign, else the smaller one
    StartPoint,         ///< b2 - b
    EndPoint,           ///< e2 - e
};

/// Time shift of the segment mapping, in samples.
std::int64_t shift(std::int64_t b, std::int64_t e, std::int64_t b2, std::int64_t e2,
                   ShiftDefinition definition = ShiftDefinition::ClosestToDiagonal);

/// Per-index amplitude deviations of the values matched to each index of
/// the first series: the shaded interval at index i is
/// [s1(i) - beta(i), s1(i) + alpha(i)].
struct AmplitudeBand {
    std::vector<double> alpha;  ///< max upward deviation, >= 0
    std::vector<double> beta;   ///< max downward deviation, >= 0

    double max_alpha() const;
    double max_beta() const;
};

/// Scan a full (rasterized) warping path and record, for every index i of
/// s1, the extremal deviations of the matched s2 values. Univariate only.
AmplitudeBand amplitude_band(const Series& s1, const Series& s2, const WarpingPath& full_path);

/// Everything reported about one segment mapping s1(b:e) -> s2(b2:e2).
/// All indices are 1-based; adjacent segments share their boundary index.
struct SegmentReport {
    std::int64_t b = 0, e = 0;    ///< span in s1
    std::int64_t b2 = 0, e2 = 0;  ///< span in s2
    std::int64_t k = 0;
    double kappa = 0.0;
    std::int64_t sigma = 0;
    double optimal_cost = 0.0;
    double linear_cost = 0.0;
};

struct MetricsReport {
    std::vector<SegmentReport> segments;
    AmplitudeBand band;
};

/// Quantify every segment of a simplified path and compute the amplitude
/// band over its full rasterization.
MetricsReport report(const SimplifiedPath& s, const Series& s1, const Series& s2,
                     ShiftDefinition definition = ShiftDefinition::ClosestToDiagonal);

}  // namespace dsw
