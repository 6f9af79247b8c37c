#pragma once

#include "dsw/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dsw {

/// The three defining conditions of a warping path.
enum class PathCondition { Boundaries, Continuity, Monotonicity };

/// First violated condition and the 1-based path position where it occurs.
struct PathViolation {
    PathCondition condition;
    int position;
    std::string message;
};

const char* to_string(PathCondition c);

/// Check boundaries, continuity and monotonicity of `path` against series
/// lengths n and m. Returns the first violation, or nullopt when valid.
std::optional<PathViolation> validate_path(const WarpingPath& path, int n, int m);

/// One piecewise-linear piece of a simplified path, delimited by the key
/// points at path indices `b_index` and `e_index` (1-based into the
/// original path).
struct PathSegment {
    int b_index = 0;
    int e_index = 0;
    PathPoint b_point;
    PathPoint e_point;
    double optimal_cost = 0.0;  ///< cost of the original sub-path, start point excluded
    double linear_cost = 0.0;   ///< cost of the rasterized straight segment

    int length() const { return e_index - b_index; }
};

/// Cost of the optimal sub-path between path indices b < e, read off the
/// accumulated matrix in O(1): D(P(e)) - D(P(b)). The boundary point P(b)
/// is excluded so that adjacent segment costs add up without double
/// counting. Exact (telescoping) for paths produced by backtracking.
double optimal_path_cost(const WarpingPath& path, const AccumulatedCostMatrix& d,
                         int b, int e);

/**
 * Rasterize the straight line from q0 to q1 on the index lattice.
 *
 * Bresenham stepping over the step set {(1,0), (0,1), (1,1)}: per loop
 * turn the error term decides whether i, j, or both advance, and only the
 * position after the turn is emitted, so a simultaneous i+j advance yields
 * one diagonal step. The returned sequence excludes q0 and ends exactly at
 * q1; prepending q0 gives a valid warping path on the sub-rectangle.
 *
 * Returns an empty list when q0 == q1. Throws InputError when q1 is not
 * component-wise >= q0.
 */
std::vector<PathPoint> rasterize_linear(PathPoint q0, PathPoint q1);

/// Cost of the rasterized straight segment between path indices b < e:
/// the sum of C over rasterize_linear(P(b), P(e)), start point excluded,
/// end point included. Never below optimal_path_cost(b, e) when `path`
/// is an optimal path (the optimal sub-path minimizes cost).
double linear_path_cost(const WarpingPath& path, const CostMatrix& c, int b, int e);

/// Expand an ordered key-point chain into the full rasterized warping path:
/// the first key point followed by each segment's rasterization.
WarpingPath rasterize_simplified(const std::vector<PathPoint>& key_points);

}  // namespace dsw
