#include "dsw/path.hpp"

#include "dsw/errors.hpp"

#include <cstdlib>

namespace dsw {

const char* to_string(PathCondition c) {
    switch (c) {
        case PathCondition::Boundaries: return "boundaries";
        case PathCondition::Continuity: return "continuity";
        case PathCondition::Monotonicity: return "monotonicity";
    }
    return "unknown";
}

std::optional<PathViolation> validate_path(const WarpingPath& path, int n, int m) {
    if (path.empty()) {
        return PathViolation{PathCondition::Boundaries, 1, "path is empty"};
    }
    if (path.front() != PathPoint{1, 1}) {
        return PathViolation{PathCondition::Boundaries, 1, "path must start at (1,1)"};
    }
    for (std::size_t k = 1; k < path.size(); ++k) {
        const int di = path[k].i - path[k - 1].i;
        const int dj = path[k].j - path[k - 1].j;
        const int pos = static_cast<int>(k) + 1;
        if (di < 0 || dj < 0) {
            return PathViolation{PathCondition::Monotonicity, pos,
                                 "indices may only stay equal or increase"};
        }
        if (di > 1 || dj > 1 || (di == 0 && dj == 0)) {
            return PathViolation{PathCondition::Continuity, pos,
                                 "step must be one of (1,1), (1,0), (0,1)"};
        }
    }
    if (path.back() != PathPoint{n, m}) {
        return PathViolation{PathCondition::Boundaries, static_cast<int>(path.size()),
                             "path must end at (n,m)"};
    }
    return std::nullopt;
}

static void check_segment_indices(const WarpingPath& path, int b, int e) {
    const int len = static_cast<int>(path.size());
    if (b < 1 || e > len || b >= e) {
        throw InputError("segment indices must satisfy 1 <= b < e <= |path|");
    }
}

double optimal_path_cost(const WarpingPath& path, const AccumulatedCostMatrix& d,
                         int b, int e) {
    check_segment_indices(path, b, e);
    return d(path[static_cast<std::size_t>(e) - 1]) - d(path[static_cast<std::size_t>(b) - 1]);
}

std::vector<PathPoint> rasterize_linear(PathPoint q0, PathPoint q1) {
    if (q1.i < q0.i || q1.j < q0.j) {
        throw InputError("rasterization end point must not precede the start point");
    }
    std::vector<PathPoint> out;
    if (q0 == q1) {
        return out;
    }
    out.reserve(static_cast<std::size_t>(std::max(q1.i - q0.i, q1.j - q0.j)));

    const long long df = q1.i - q0.i;
    const long long dt = static_cast<long long>(q0.j) - q1.j;  // <= 0
    long long err = df + dt;
    PathPoint q = q0;
    while (q != q1) {
        if (2 * err >= dt) {
            err += dt;
            q.i += 1;
        }
        if (2 * err <= df) {
            err += df;
            q.j += 1;
        }
        if (q.i > q1.i || q.j > q1.j) {
            throw InternalError("rasterization stepped past its end point");
        }
        out.push_back(q);
    }
    return out;
}

double linear_path_cost(const WarpingPath& path, const CostMatrix& c, int b, int e) {
    check_segment_indices(path, b, e);
    const PathPoint q0 = path[static_cast<std::size_t>(b) - 1];
    const PathPoint q1 = path[static_cast<std::size_t>(e) - 1];
    double cost = 0.0;
    for (const PathPoint& q : rasterize_linear(q0, q1)) {
        cost += c(q);
    }
    return cost;
}

WarpingPath rasterize_simplified(const std::vector<PathPoint>& key_points) {
    if (key_points.empty()) {
        throw InputError("simplified path needs at least one key point");
    }
    WarpingPath full;
    full.push_back(key_points.front());
    for (std::size_t t = 1; t < key_points.size(); ++t) {
        const auto piece = rasterize_linear(key_points[t - 1], key_points[t]);
        full.insert(full.end(), piece.begin(), piece.end());
    }
    return full;
}

}  // namespace dsw
