#include "dsw/series.hpp"

#include <cmath>
#include <cstdlib>

namespace dsw {

Series::Series(std::vector<double> values, std::string name)
    : data_(std::move(values)),
      length_(static_cast<int>(data_.size())),
      dimension_(1),
      name_(std::move(name)) {
    validate();
}

Series::Series(const std::vector<std::vector<double>>& samples, std::string name)
    : name_(std::move(name)) {
    if (samples.empty()) {
        throw InputError("series must contain at least one sample");
    }
    dimension_ = static_cast<int>(samples.front().size());
    length_ = static_cast<int>(samples.size());
    data_.reserve(samples.size() * samples.front().size());
    for (const auto& row : samples) {
        if (static_cast<int>(row.size()) != dimension_) {
            throw InputError("all samples of a series must share the same dimension");
        }
        data_.insert(data_.end(), row.begin(), row.end());
    }
    validate();
}

void Series::validate() const {
    if (length_ < 1) {
        throw InputError("series must contain at least one sample");
    }
    if (dimension_ < 1) {
        throw InputError("sample dimension must be >= 1");
    }
    for (double v : data_) {
        if (!std::isfinite(v)) {
            throw InputError("series values must be finite (no NaN or infinity)");
        }
    }
}

double Series::at(int i) const {
    if (dimension_ != 1) {
        throw InputError("scalar access requires a univariate series");
    }
    if (i < 1 || i > length_) {
        throw InputError("series index out of range");
    }
    return data_[static_cast<std::size_t>(i - 1)];
}

std::span<const double> Series::sample(int i) const {
    if (i < 1 || i > length_) {
        throw InputError("series index out of range");
    }
    return {data_.data() + static_cast<std::size_t>(i - 1) * dimension_,
            static_cast<std::size_t>(dimension_)};
}

CostFunction::CostFunction(double lambda_exponent, double p_norm)
    : lambda_(lambda_exponent), p_(p_norm) {
    if (!std::isfinite(lambda_) || lambda_ < 1.0) {
        throw InputError("cost exponent lambda must be a finite value >= 1");
    }
    if (!std::isfinite(p_) || p_ < 1.0) {
        throw InputError("norm order p must be a finite value >= 1");
    }
}

double CostFunction::local_cost(double a, double b) const {
    // For scalars every p-norm reduces to the absolute difference.
    const double z = std::fabs(a - b);
    if (lambda_ == 2.0) return z * z;
    if (lambda_ == 1.0) return z;
    return std::pow(z, lambda_);
}

double CostFunction::local_cost(std::span<const double> a, std::span<const double> b) const {
    if (a.size() != b.size()) {
        throw InputError("local cost requires samples of equal dimension");
    }
    if (a.size() == 1) {
        return local_cost(a[0], b[0]);
    }
    double norm = 0.0;
    if (p_ == 2.0) {
        double sum = 0.0;
        for (std::size_t k = 0; k < a.size(); ++k) {
            const double d = a[k] - b[k];
            sum += d * d;
        }
        // phi(sqrt(s)) = s^(lambda/2); skip the square root when it cancels.
        if (lambda_ == 2.0) return sum;
        norm = std::sqrt(sum);
    } else if (p_ == 1.0) {
        for (std::size_t k = 0; k < a.size(); ++k) {
            norm += std::fabs(a[k] - b[k]);
        }
    } else {
        double sum = 0.0;
        for (std::size_t k = 0; k < a.size(); ++k) {
            sum += std::pow(std::fabs(a[k] - b[k]), p_);
        }
        norm = std::pow(sum, 1.0 / p_);
    }
    if (lambda_ == 1.0) return norm;
    if (lambda_ == 2.0) return norm * norm;
    return std::pow(norm, lambda_);
}

double CostFunction::cost_to_distance(double cost) const {
    if (cost < 0.0) {
        throw InputError("cost must be non-negative");
    }
    if (lambda_ == 1.0) return cost;
    if (lambda_ == 2.0) return std::sqrt(cost);
    return std::pow(cost, 1.0 / lambda_);
}

double CostFunction::distance_to_cost(double distance) const {
    if (distance < 0.0) {
        throw InputError("distance must be non-negative");
    }
    if (lambda_ == 1.0) return distance;
    if (lambda_ == 2.0) return distance * distance;
    return std::pow(distance, lambda_);
}

}  // namespace dsw
