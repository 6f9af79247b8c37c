#pragma once

#include "dsw/errors.hpp"

#include <cassert>
#include <utility>
#include <vector>

namespace dsw {

/// A point on the integer lattice of a cost matrix: `i` indexes the first
/// series, `j` the second. Indices are 1-based throughout the public API.
struct PathPoint {
    int i = 0;
    int j = 0;

    friend bool operator==(const PathPoint& a, const PathPoint& b) {
        return a.i == b.i && a.j == b.j;
    }
    friend bool operator!=(const PathPoint& a, const PathPoint& b) { return !(a == b); }
};

/// A warping path: ordered index pairs matching two series.
using WarpingPath = std::vector<PathPoint>;

/// Dense row-major matrix of doubles with 1-based accessors, used both for
/// the local cost matrix C and the accumulated cost matrix D.
class Matrix {
public:
    Matrix() = default;

    Matrix(int rows, int cols, double fill = 0.0) : rows_(rows), cols_(cols) {
        if (rows < 1 || cols < 1) {
            throw InputError("matrix dimensions must be >= 1");
        }
        data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), fill);
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& operator()(int i, int j) {
        assert(i >= 1 && i <= rows_ && j >= 1 && j <= cols_);
        return data_[static_cast<std::size_t>(i - 1) * cols_ + (j - 1)];
    }
    double operator()(int i, int j) const {
        assert(i >= 1 && i <= rows_ && j >= 1 && j <= cols_);
        return data_[static_cast<std::size_t>(i - 1) * cols_ + (j - 1)];
    }

    double& operator()(PathPoint q) { return (*this)(q.i, q.j); }
    double operator()(PathPoint q) const { return (*this)(q.i, q.j); }

    /// Checked access; throws InputError on out-of-range indices.
    double at(int i, int j) const {
        if (i < 1 || i > rows_ || j < 1 || j > cols_) {
            throw InputError("matrix index out of range");
        }
        return (*this)(i, j);
    }

    bool contains(PathPoint q) const {
        return q.i >= 1 && q.i <= rows_ && q.j >= 1 && q.j <= cols_;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> data_;
};

/// Pairwise local costs C(i,j).
using CostMatrix = Matrix;
/// Dynamic-programming accumulated costs D(i,j).
using AccumulatedCostMatrix = Matrix;

}  // namespace dsw
