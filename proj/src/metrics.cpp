#include "dsw/metrics.hpp"

#include "dsw/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace dsw {

Compression compression(std::int64_t b, std::int64_t e, std::int64_t b2, std::int64_t e2) {
    if (e < b || e2 < b2) {
        throw InputError("segment spans must be non-negative");
    }
    const std::int64_t span1 = e - b;
    const std::int64_t span2 = e2 - b2;
    if (span1 == 0 && span2 == 0) {
        throw InputError("compression is undefined when both spans are zero");
    }
    Compression out;
    out.k = span2 - span1;
    if (span1 == 0) {
        out.kappa = std::numeric_limits<double>::infinity();
    } else if (span2 == 0) {
        out.kappa = -std::numeric_limits<double>::infinity();
    } else {
        out.kappa = std::log(static_cast<double>(span2) / static_cast<double>(span1));
    }
    return out;
}

std::int64_t shift(std::int64_t b, std::int64_t e, std::int64_t b2, std::int64_t e2,
                   ShiftDefinition definition) {
    const std::int64_t start = b2 - b;
    const std::int64_t end = e2 - e;
    switch (definition) {
        case ShiftDefinition::StartPoint:
            return start;
        case ShiftDefinition::EndPoint:
            return end;
        case ShiftDefinition::ClosestToDiagonal:
            break;
    }
    if (start * end < 0) {
        return 0;  // the segment crosses the diagonal
    }
    return std::llabs(start) <= std::llabs(end) ? start : end;
}

double AmplitudeBand::max_alpha() const {
    return alpha.empty() ? 0.0 : *std::max_element(alpha.begin(), alpha.end());
}

double AmplitudeBand::max_beta() const {
    return beta.empty() ? 0.0 : *std::max_element(beta.begin(), beta.end());
}

AmplitudeBand amplitude_band(const Series& s1, const Series& s2,
                             const WarpingPath& full_path) {
    if (s1.dimension() != 1 || s2.dimension() != 1) {
        throw InputError("amplitude bands are defined for univariate series only");
    }
    if (auto violation = validate_path(full_path, s1.length(), s2.length())) {
        throw InputError("amplitude band requires a valid warping path: " +
                         violation->message);
    }
    AmplitudeBand band;
    band.alpha.assign(static_cast<std::size_t>(s1.length()), 0.0);
    band.beta.assign(static_cast<std::size_t>(s1.length()), 0.0);
    for (const PathPoint& q : full_path) {
        const double v1 = s1.at(q.i);
        const double v2 = s2.at(q.j);
        const std::size_t idx = static_cast<std::size_t>(q.i) - 1;
        if (v2 >= v1) {
            band.alpha[idx] = std::max(band.alpha[idx], v2 - v1);
        }
        if (v2 <= v1) {
            band.beta[idx] = std::max(band.beta[idx], v1 - v2);
        }
    }
    return band;
}

MetricsReport report(const SimplifiedPath& s, const Series& s1, const Series& s2,
                     ShiftDefinition definition) {
    if (s.key_points.empty()) {
        throw InputError("cannot report on an empty simplified path");
    }
    MetricsReport out;
    out.segments.reserve(s.segments.size());
    for (const PathSegment& seg : s.segments) {
        SegmentReport r;
        r.b = seg.b_point.i;
        r.e = seg.e_point.i;
        r.b2 = seg.b_point.j;
        r.e2 = seg.e_point.j;
        const Compression comp = compression(r.b, r.e, r.b2, r.e2);
        r.k = comp.k;
        r.kappa = comp.kappa;
        r.sigma = shift(r.b, r.e, r.b2, r.e2, definition);
        r.optimal_cost = seg.optimal_cost;
        r.linear_cost = seg.linear_cost;
        out.segments.push_back(r);
    }
    out.band = amplitude_band(s1, s2, rasterize_simplified(s.key_points));
    return out;
}

}  // namespace dsw
