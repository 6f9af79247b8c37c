#pragma once

#include "dsw/errors.hpp"

#include <span>
#include <string>
#include <vector>

namespace dsw {

/// An equidistantly sampled time series. Samples are scalars or fixed-width
/// vectors stored as 64-bit floats; values are validated to be finite at
/// construction. Instances are immutable and safe to share across threads.
///
/// Indexing follows the 1-based convention used in all reports and
/// serialized output: `at(1)` is the first sample.
class Series {
public:
    /// Univariate series.
    explicit Series(std::vector<double> values, std::string name = "");

    /// Multivariate series with a fixed sample dimension; every row of
    /// `samples` must have the same size.
    explicit Series(const std::vector<std::vector<double>>& samples, std::string name = "");

    int length() const { return length_; }
    int dimension() const { return dimension_; }
    const std::string& name() const { return name_; }

    /// Scalar value of the i-th sample (1-based). Only valid for
    /// univariate series.
    double at(int i) const;

    /// i-th sample as a span of `dimension()` values (1-based).
    std::span<const double> sample(int i) const;

    const std::vector<double>& storage() const { return data_; }

private:
    void validate() const;

    std::vector<double> data_;
    int length_ = 0;
    int dimension_ = 1;
    std::string name_;
};

/// Local cost delta(x, y) = phi(||x - y||_p) with phi(z) = z^lambda.
///
/// Both exponents must be >= 1: the norm order for it to be a norm, and
/// lambda so that phi is convex, which the combined tolerance bound of the
/// segmenter relies on. Construction rejects anything smaller.
class CostFunction {
public:
    explicit CostFunction(double lambda_exponent = 2.0, double p_norm = 2.0);

    double lambda_exponent() const { return lambda_; }
    double p_norm() const { return p_; }

    /// phi(||a - b||_p). Throws InputError on dimension mismatch.
    double local_cost(std::span<const double> a, std::span<const double> b) const;
    double local_cost(double a, double b) const;

    /// phi^{-1}(c) = c^{1/lambda}; maps accumulated cost to distance.
    double cost_to_distance(double cost) const;

    /// phi(d) = d^lambda; maps a distance back to cost space.
    double distance_to_cost(double distance) const;

private:
    double lambda_;
    double p_;
};

}  // namespace dsw
