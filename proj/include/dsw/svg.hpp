#pragma once

#include "dsw/metrics.hpp"

#include <string>
#include <vector>

namespace dsw {

/// Visual constants for the SVG renderers. Coordinates are emitted with
/// fixed three-decimal formatting, so identical inputs produce
/// byte-identical documents.
struct RenderSpec {
    double width = 900.0;
    double height = 500.0;
    double series_gap = 90.0;  ///< vertical gap between the two series panels
    int stride = 1;            ///< draw every n-th connector in the point view

    struct Palette {
        std::string series1 = "#1f77b4";
        std::string series2 = "#ff7f0e";
        std::string connector = "#888888";
        std::string compression_block = "#ff7f0e";
        std::string amplitude_shade = "#ffbb78";
        std::string optimal_path = "#d62728";
        std::string simplified_path = "#2ca02c";
    } palette;
};

/// Segmented matching view: both series, connectors at key points only,
/// one compression block per segment with non-zero K (block length |K| in
/// sample units, centered on the shorter side's midpoint, drawn in the gap
/// between the panels), and the amplitude band shaded around the first
/// series.
std::string render_segmented(const Series& s1, const Series& s2, const SimplifiedPath& s,
                             const std::vector<SegmentReport>& reports,
                             const AmplitudeBand& band, const RenderSpec& spec);

/// Classic point-to-point matching view: one connector per path pair,
/// thinned with `spec.stride` (endpoints always drawn).
std::string render_point_to_point(const Series& s1, const Series& s2,
                                  const WarpingPath& path, const RenderSpec& spec);

/// One warping path to overlay on the cost matrix, with its stroke color.
struct PathOverlay {
    WarpingPath path;
    std::string color;
};

/// Cost-matrix heat map (lighter cells mean smaller costs) with warping
/// paths drawn through cell centers.
std::string render_matrix_paths(const CostMatrix& c, const std::vector<PathOverlay>& paths,
                                const RenderSpec& spec);

}  // namespace dsw
