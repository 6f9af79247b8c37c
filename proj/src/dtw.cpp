#include "dsw/dtw.hpp"

#include <algorithm>
#include <limits>

namespace dsw {

CostMatrix build_cost_matrix(const Series& s1, const Series& s2, const CostFunction& f) {
    if (s1.dimension() != s2.dimension()) {
        throw InputError("series must have equal sample dimension");
    }
    const int n = s1.length();
    const int m = s2.length();
    CostMatrix c(n, m);
    if (s1.dimension() == 1) {
        for (int i = 1; i <= n; ++i) {
            const double a = s1.at(i);
            for (int j = 1; j <= m; ++j) {
                c(i, j) = f.local_cost(a, s2.at(j));
            }
        }
    } else {
        for (int i = 1; i <= n; ++i) {
            const auto a = s1.sample(i);
            for (int j = 1; j <= m; ++j) {
                c(i, j) = f.local_cost(a, s2.sample(j));
            }
        }
    }
    return c;
}

AccumulatedCostMatrix accumulate(const CostMatrix& c) {
    const int n = c.rows();
    const int m = c.cols();
    AccumulatedCostMatrix d(n, m);
    d(1, 1) = c(1, 1);
    for (int j = 2; j <= m; ++j) {
        d(1, j) = c(1, j) + d(1, j - 1);
    }
    for (int i = 2; i <= n; ++i) {
        d(i, 1) = c(i, 1) + d(i - 1, 1);
    }
    for (int i = 2; i <= n; ++i) {
        for (int j = 2; j <= m; ++j) {
            const double best = std::min({d(i - 1, j - 1), d(i - 1, j), d(i, j - 1)});
            d(i, j) = c(i, j) + best;
        }
    }
    return d;
}

WarpingPath backtrack(const AccumulatedCostMatrix& d) {
    const int n = d.rows();
    const int m = d.cols();
    WarpingPath reversed;
    reversed.reserve(static_cast<std::size_t>(n) + m);

    PathPoint q{n, m};
    reversed.push_back(q);
    while (q.i > 1 || q.j > 1) {
        // Candidates in tie-break order: diagonal, then (0,1), then (1,0).
        PathPoint next = q;
        double best = std::numeric_limits<double>::infinity();
        if (q.i > 1 && q.j > 1) {
            best = d(q.i - 1, q.j - 1);
            next = {q.i - 1, q.j - 1};
        }
        if (q.j > 1 && d(q.i, q.j - 1) < best) {
            best = d(q.i, q.j - 1);
            next = {q.i, q.j - 1};
        }
        if (q.i > 1 && d(q.i - 1, q.j) < best) {
            next = {q.i - 1, q.j};
        }
        q = next;
        reversed.push_back(q);
    }
    std::reverse(reversed.begin(), reversed.end());
    return reversed;
}

DtwResult dtw(const Series& s1, const Series& s2, const CostFunction& f) {
    DtwResult result;
    result.cost_matrix = build_cost_matrix(s1, s2, f);
    result.accumulated = accumulate(result.cost_matrix);
    result.path = backtrack(result.accumulated);
    result.cost = result.accumulated(s1.length(), s2.length());
    result.distance = f.cost_to_distance(result.cost);
    return result;
}

}  // namespace dsw
