#include "dsw/segmenter.hpp"

#include "dsw/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace dsw {

namespace {

constexpr double kCriterionSlack = 1e-12;

PathSegment make_segment(const WarpingPath& path, const CostMatrix& c,
                         const AccumulatedCostMatrix& d, int b, int e) {
    PathSegment seg;
    seg.b_index = b;
    seg.e_index = e;
    seg.b_point = path[static_cast<std::size_t>(b) - 1];
    seg.e_point = path[static_cast<std::size_t>(e) - 1];
    seg.optimal_cost = optimal_path_cost(path, d, b, e);
    seg.linear_cost = linear_path_cost(path, c, b, e);
    return seg;
}

SimplifiedPath from_segments(std::vector<PathSegment> segments,
                             std::vector<std::string> warnings) {
    std::sort(segments.begin(), segments.end(),
              [](const PathSegment& a, const PathSegment& b) { return a.b_index < b.b_index; });
    SimplifiedPath out;
    out.warnings = std::move(warnings);
    out.key_points.reserve(segments.size() + 1);
    for (std::size_t k = 0; k < segments.size(); ++k) {
        if (k == 0) {
            out.key_points.push_back(segments[k].b_point);
        } else if (segments[k].b_index != segments[k - 1].e_index) {
            throw InternalError("simplified segments do not tile the path");
        }
        out.key_points.push_back(segments[k].e_point);
    }
    out.segments = std::move(segments);
    return out;
}

/// Locate the path indices of a key-point chain by a single forward scan.
/// Validates that the chain is an ordered subsequence of the path covering
/// both endpoints.
std::vector<int> locate_key_indices(const WarpingPath& path,
                                    const std::vector<PathPoint>& key_points) {
    std::vector<int> indices;
    indices.reserve(key_points.size());
    std::size_t cursor = 0;
    for (const PathPoint& kp : key_points) {
        while (cursor < path.size() && path[cursor] != kp) {
            ++cursor;
        }
        if (cursor == path.size()) {
            throw InputError("key points must form an ordered subsequence of the path");
        }
        indices.push_back(static_cast<int>(cursor) + 1);
    }
    if (indices.empty() || indices.front() != 1 ||
        indices.back() != static_cast<int>(path.size())) {
        throw InputError("key points must start and end at the path boundaries");
    }
    return indices;
}

}  // namespace

ToleranceParams derive_tolerances(const ToleranceSpec& spec, double d_opt,
                                  const CostFunction& f, int path_length) {
    if (spec.gamma_abs < 0.0 || spec.gamma_rel < 0.0) {
        throw InputError("tolerances must be non-negative");
    }
    if (d_opt < 0.0) {
        throw InputError("optimal distance must be non-negative");
    }
    if (path_length < 1) {
        throw InputError("path length must be >= 1");
    }
    ToleranceParams params;
    params.path_length = path_length;
    params.delta_abs = f.distance_to_cost(d_opt + spec.gamma_abs) - f.distance_to_cost(d_opt);
    // The relative margin divides by phi(d); a zero-distance match gets no
    // relative slack and relies on the absolute term alone.
    params.delta_rel =
        d_opt > 0.0 ? f.distance_to_cost(d_opt * spec.gamma_rel) / f.distance_to_cost(d_opt)
                    : 0.0;
    return params;
}

bool tolerance_check(double linear_cost, double optimal_cost, int segment_length,
                     const ToleranceParams& params) {
    const double fraction =
        static_cast<double>(segment_length) / static_cast<double>(params.path_length);
    const double margin = std::max(optimal_cost + fraction * params.delta_abs,
                                   optimal_cost * (1.0 + params.delta_rel));
    const bool ok = linear_cost <= margin + kCriterionSlack;
    return params.invert_check ? !ok : ok;
}

int farthest_point(const WarpingPath& path, int b, int e) {
    const int len = static_cast<int>(path.size());
    if (b < 1 || e > len || e - b < 2) {
        throw InputError("farthest_point requires a segment with an interior point");
    }
    const PathPoint p1 = path[static_cast<std::size_t>(b) - 1];
    const PathPoint p2 = path[static_cast<std::size_t>(e) - 1];
    const long long dx = p2.i - p1.i;
    const long long dy = p2.j - p1.j;
    // Perpendicular distance to the line through p1,p2 is |cross| / ||p2-p1||;
    // the denominator is shared, so compare integer cross products exactly.
    long long best_value = -1;
    int best_index = b + 1;
    for (int s = b + 1; s < e; ++s) {
        const PathPoint p = path[static_cast<std::size_t>(s) - 1];
        const long long cross = dx * (p1.j - p.j) - (static_cast<long long>(p1.i) - p.i) * dy;
        const long long value = std::llabs(cross);
        if (value > best_value) {
            best_value = value;
            best_index = s;
        }
    }
    return best_index;
}

SimplifiedPath split_phase(const WarpingPath& path, const CostMatrix& c,
                           const AccumulatedCostMatrix& d, const ToleranceParams& params) {
    const int len = static_cast<int>(path.size());
    if (len == 0) {
        throw InputError("cannot simplify an empty path");
    }
    if (len == 1) {
        SimplifiedPath out;
        out.key_points.push_back(path.front());
        return out;
    }

    std::vector<PathSegment> accepted;
    std::vector<std::string> warnings;
    std::vector<std::pair<int, int>> work;  // LIFO
    work.emplace_back(1, len);
    while (!work.empty()) {
        const auto [b, e] = work.back();
        work.pop_back();
        PathSegment seg = make_segment(path, c, d, b, e);
        if (tolerance_check(seg.linear_cost, seg.optimal_cost, seg.length(), params)) {
            accepted.push_back(seg);
        } else if (e - b >= 2) {
            const int s = farthest_point(path, b, e);
            work.emplace_back(s, e);
            work.emplace_back(b, s);
        } else {
            // Only reachable for suboptimal input paths, where the D-based
            // segment cost can undercut the cost of the single step.
            std::ostringstream msg;
            msg << "segment [" << b << "," << e
                << "] fails the tolerance criterion but has no interior point; accepted";
            warnings.push_back(msg.str());
            accepted.push_back(seg);
        }
    }
    return from_segments(std::move(accepted), std::move(warnings));
}

SimplifiedPath merge_phase(const WarpingPath& path, const CostMatrix& c,
                           const AccumulatedCostMatrix& d, const SimplifiedPath& s,
                           const ToleranceParams& params, MergeCriterion criterion) {
    if (s.key_points.size() <= 2) {
        return s;
    }
    const int len = static_cast<int>(path.size());
    const std::vector<int> initial = locate_key_indices(path, s.key_points);

    std::set<int> keys(initial.begin(), initial.end());
    std::map<int, PathSegment> seg_by_start;
    double linear_total = 0.0;
    for (std::size_t k = 1; k < initial.size(); ++k) {
        PathSegment seg = make_segment(path, c, d, initial[k - 1], initial[k]);
        linear_total += seg.linear_cost;
        seg_by_start.emplace(seg.b_index, seg);
    }
    // Whole-path budget for the global criterion: total optimal cost and
    // the shared start-point term.
    const double total_optimal = d(path.back()) - d(path.front());
    const double start_cost = c(path.front());

    struct Entry {
        int priority;
        int b, m, e;
        bool operator>(const Entry& other) const {
            if (priority != other.priority) return priority > other.priority;
            return b > other.b;
        }
    };
    std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> queue;
    for (std::size_t k = 1; k + 1 < initial.size(); ++k) {
        const int b = initial[k - 1], m = initial[k], e = initial[k + 1];
        queue.push({std::min(m - b, e - m), b, m, e});
    }

    while (!queue.empty()) {
        const Entry entry = queue.top();
        queue.pop();
        if (!keys.count(entry.b) || !keys.count(entry.m) || !keys.count(entry.e)) {
            continue;  // stale: a prior merge removed one of the points
        }
        PathSegment merged = make_segment(path, c, d, entry.b, entry.e);
        bool ok;
        if (criterion == MergeCriterion::Local) {
            ok = tolerance_check(merged.linear_cost, merged.optimal_cost, merged.length(),
                                 params);
        } else {
            const double candidate_total = linear_total -
                                           seg_by_start.at(entry.b).linear_cost -
                                           seg_by_start.at(entry.m).linear_cost +
                                           merged.linear_cost;
            ok = tolerance_check(candidate_total + start_cost, total_optimal + start_cost,
                                 params.path_length, params);
        }
        if (!ok) {
            continue;
        }
        linear_total -= seg_by_start.at(entry.b).linear_cost;
        linear_total -= seg_by_start.at(entry.m).linear_cost;
        linear_total += merged.linear_cost;
        seg_by_start.erase(entry.b);
        seg_by_start.erase(entry.m);
        seg_by_start.emplace(merged.b_index, merged);
        keys.erase(entry.m);

        if (entry.b > 1) {
            const auto it = keys.find(entry.b);
            const int prev = *std::prev(it);
            queue.push({std::min(entry.b - prev, entry.e - entry.b), prev, entry.b, entry.e});
        }
        if (entry.e < len) {
            const auto it = keys.find(entry.e);
            const int next = *std::next(it);
            queue.push({std::min(entry.e - entry.b, next - entry.e), entry.b, entry.e, next});
        }
    }

    std::vector<PathSegment> segments;
    segments.reserve(seg_by_start.size());
    for (auto& [_, seg] : seg_by_start) {
        segments.push_back(seg);
    }
    SimplifiedPath out = from_segments(std::move(segments), s.warnings);
    return out;
}

double SimplifiedPath::linear_cost_sum() const {
    double total = 0.0;
    for (const PathSegment& seg : segments) {
        total += seg.linear_cost;
    }
    return total;
}

PathSimplifyResult simplify_path(const WarpingPath& path, const CostMatrix& c,
                                 const AccumulatedCostMatrix& d,
                                 const ToleranceParams& params, MergeCriterion criterion) {
    PathSimplifyResult result;
    result.params = params;
    result.phase1 = split_phase(path, c, d, params);
    result.simplified = merge_phase(path, c, d, result.phase1, params, criterion);
    result.simplified_cost = result.simplified.linear_cost_sum() + c(path.front());
    return result;
}

SimplifyResult simplify(const Series& s1, const Series& s2, const CostFunction& f,
                        const ToleranceSpec& spec, MergeCriterion criterion) {
    SimplifyResult result;
    result.dtw = dtw(s1, s2, f);
    result.params = derive_tolerances(spec, result.dtw.distance, f,
                                      static_cast<int>(result.dtw.path.size()));
    PathSimplifyResult inner = simplify_path(result.dtw.path, result.dtw.cost_matrix,
                                             result.dtw.accumulated, result.params, criterion);
    result.phase1 = std::move(inner.phase1);
    result.simplified = std::move(inner.simplified);
    result.simplified_cost = inner.simplified_cost;
    result.simplified_distance = f.cost_to_distance(result.simplified_cost);
    return result;
}

}  // namespace dsw
