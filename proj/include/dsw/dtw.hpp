#pragma once

#include "dsw/matrix.hpp"
#include "dsw/series.hpp"

namespace dsw {

/// Result of a full dynamic time warping run. The dense matrices are kept
/// so that downstream path simplification can read per-cell costs (C) and
/// optimal segment costs (D) without recomputation.
struct DtwResult {
    CostMatrix cost_matrix;
    AccumulatedCostMatrix accumulated;
    WarpingPath path;
    double cost = 0.0;      ///< total cost along the optimal path
    double distance = 0.0;  ///< phi^{-1}(cost)
};

/// Pairwise local costs: C(i,j) = delta(s1(i), s2(j)).
CostMatrix build_cost_matrix(const Series& s1, const Series& s2, const CostFunction& f);

/// Fill the accumulated cost matrix with the standard DTW recurrence over
/// steps {(1,1), (1,0), (0,1)}.
AccumulatedCostMatrix accumulate(const CostMatrix& c);

/// Backtrack the optimal warping path from D(n,m) to D(1,1).
///
/// When predecessor cells tie, the diagonal step is preferred, then the
/// step that decrements j, then the one that decrements i. This makes the
/// returned path deterministic; callers must not rely on a particular
/// tie-broken shape, only on its cost.
WarpingPath backtrack(const AccumulatedCostMatrix& d);

/// Run the full pipeline: cost matrix, accumulation, backtracking.
DtwResult dtw(const Series& s1, const Series& s2, const CostFunction& f);

}  // namespace dsw
