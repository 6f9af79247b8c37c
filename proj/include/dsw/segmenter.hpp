#pragma once

#include "dsw/dtw.hpp"
#include "dsw/path.hpp"

#include <string>
#include <vector>

namespace dsw {

/// User-facing tolerances, expressed in distance space: how far the
/// simplified distance may exceed the optimal DTW distance, as an absolute
/// amount (gamma_abs) and as a proportion (gamma_rel). Either may be zero.
struct ToleranceSpec {
    double gamma_abs = 0.0;
    double gamma_rel = 0.0;
};

/// Cost-space tolerances driving the per-segment criterion, derived from a
/// ToleranceSpec via phi. `path_length` is the length L of the path being
/// simplified; the absolute budget is spread over segments as l/L.
struct ToleranceParams {
    double delta_abs = 0.0;
    double delta_rel = 0.0;
    int path_length = 1;

    /// Verification hook: flips the direction of every criterion check so
    /// harness sanity tests can prove the bound suite actually bites.
    bool invert_check = false;
};

/// Map distance-space tolerances to cost space:
///   delta_abs = phi(d + gamma_abs) - phi(d)
///   delta_rel = phi(d * gamma_rel) / phi(d)   (0 when d == 0)
/// With phi convex and monotonically increasing (z^lambda, lambda >= 1)
/// this choice guarantees the simplified distance stays within
/// d * (1 + gamma_rel) + gamma_abs.
ToleranceParams derive_tolerances(const ToleranceSpec& spec, double d_opt,
                                  const CostFunction& f, int path_length);

/// Per-segment acceptance rule:
///   c' <= max(c + (l/L) * delta_abs, c * (1 + delta_rel))
/// evaluated with a 1e-12 absolute slack for floating-point noise.
bool tolerance_check(double linear_cost, double optimal_cost, int segment_length,
                     const ToleranceParams& params);

/// Index of the interior path point farthest (perpendicular Euclidean
/// distance) from the straight line through P(b) and P(e); ties resolve to
/// the smallest index. Requires e - b >= 2.
int farthest_point(const WarpingPath& path, int b, int e);

/// A piecewise-linear simplification of a warping path: the retained key
/// points plus one record per straight segment between them.
struct SimplifiedPath {
    std::vector<PathPoint> key_points;
    std::vector<PathSegment> segments;
    std::vector<std::string> warnings;

    int segment_count() const { return static_cast<int>(segments.size()); }

    /// Sum of rasterized segment costs (the global start-point cost is not
    /// included; add C(1,1) once when totaling a whole path).
    double linear_cost_sum() const;
};

/// Phase 1: top-down splitting. Starting from the whole path, accept each
/// work-list segment whose rasterized straight line passes the tolerance
/// criterion, otherwise split it at the point farthest from the line and
/// recurse. Segments without interior points always terminate: for an
/// optimal path their linear cost equals their optimal cost. For injected
/// suboptimal paths a failing single-step segment is accepted with a
/// warning instead.
SimplifiedPath split_phase(const WarpingPath& path, const CostMatrix& c,
                           const AccumulatedCostMatrix& d, const ToleranceParams& params);

/// Which acceptance rule Phase 2 applies when considering a merge.
enum class MergeCriterion {
    Local,   ///< per-segment criterion, as in the printed algorithm
    Global,  ///< whole-path budget re-checked after each tentative merge
};

/// Phase 2: shortest-first merging. Adjacent segment pairs are queued with
/// priority min(length of the two segments), ties broken by the smaller
/// left endpoint; a popped entry whose endpoints or midpoint have left the
/// key set is stale and discarded. A successful merge removes the shared
/// key point and enqueues the two freshly adjacent pairs.
SimplifiedPath merge_phase(const WarpingPath& path, const CostMatrix& c,
                           const AccumulatedCostMatrix& d, const SimplifiedPath& s,
                           const ToleranceParams& params,
                           MergeCriterion criterion = MergeCriterion::Local);

/// Everything produced by one end-to-end simplification run.
struct SimplifyResult {
    DtwResult dtw;
    ToleranceParams params;
    SimplifiedPath phase1;      ///< after splitting, before merging
    SimplifiedPath simplified;  ///< final result
    double simplified_cost = 0.0;      ///< sum of segment costs + C(1,1)
    double simplified_distance = 0.0;  ///< phi^{-1} of the above
};

/// Run DTW, derive cost-space tolerances, split, then merge.
SimplifyResult simplify(const Series& s1, const Series& s2, const CostFunction& f,
                        const ToleranceSpec& spec,
                        MergeCriterion criterion = MergeCriterion::Local);

/// Simplify an externally supplied warping path (e.g. from a constrained
/// DTW variant) against precomputed matrices.
struct PathSimplifyResult {
    ToleranceParams params;
    SimplifiedPath phase1;
    SimplifiedPath simplified;
    double simplified_cost = 0.0;
};
PathSimplifyResult simplify_path(const WarpingPath& path, const CostMatrix& c,
                                 const AccumulatedCostMatrix& d,
                                 const ToleranceParams& params,
                                 MergeCriterion criterion = MergeCriterion::Local);

}  // namespace dsw
