#include "wmknn/metric.hpp"

#include <cmath>
#include <stdexcept>

namespace wmknn {

Norm Norm::finite(double p) {
    if (!std::isfinite(p) || p < 1.0) {
        throw std::invalid_argument("norm must be >= 1 (got " + std::to_string(p) + ")");
    }
    return Norm(p, false);
}

Norm Norm::chebyshev() { return Norm(0.0, true); }

std::string Norm::to_string() const {
    if (infinite_) return "inf";
    std::string s = std::to_string(p_);
    s.erase(s.find_last_not_of('0') + 1);
    if (!s.empty() && s.back() == '.') s.pop_back();
    return s;
}

WeightVector::WeightVector(std::vector<double> weights)
    : weights_(std::move(weights)) {
    if (weights_.empty()) {
        throw std::invalid_argument("weight vector must have at least one dimension");
    }
    double sum = 0.0;
    for (double w : weights_) {
        if (!std::isfinite(w) || w < 0.0) {
            throw std::invalid_argument("weights must be finite and non-negative");
        }
        sum += w;
    }
    const double n = static_cast<double>(weights_.size());
    if (std::abs(sum - n) > kSumTolerance * n) {
        throw std::invalid_argument("weights must sum to the dimension count (sum=" +
                                    std::to_string(sum) + ", n=" + std::to_string(n) + ")");
    }
}

WeightVector WeightVector::uniform(std::size_t n) {
    return WeightVector(std::vector<double>(n, 1.0));
}

namespace {

void check_pair(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) {
        throw std::invalid_argument("dimension mismatch: " + std::to_string(x.size()) +
                                    " vs " + std::to_string(y.size()));
    }
    if (x.empty()) {
        throw std::invalid_argument("distance of zero-dimension vectors is undefined");
    }
}

// Core kernel. weights may be null (all-ones). Summation is index-ascending;
// finite p runs through the max-scaled form M*(sum w*(|d|/M)^p)^(1/p) so that
// large p cannot overflow |d|^p.
double distance_kernel(std::span<const double> x, std::span<const double> y,
                       const double* weights, const Norm& norm) {
    const std::size_t n = x.size();
    double max_abs = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = std::abs(x[i] - y[i]);
        if (!std::isfinite(d)) {
            throw std::invalid_argument("non-finite input at dimension " + std::to_string(i));
        }
        if (d > max_abs) max_abs = d;
    }
    if (norm.is_chebyshev() || max_abs == 0.0) {
        return max_abs;
    }
    const double p = norm.p();
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double w = weights ? weights[i] : 1.0;
        if (w < 0.0) {
            throw std::invalid_argument("negative weight at dimension " + std::to_string(i));
        }
        sum += w * std::pow(std::abs(x[i] - y[i]) / max_abs, p);
    }
    return max_abs * std::pow(sum, 1.0 / p);
}

} // namespace

double minkowski_distance(std::span<const double> x, std::span<const double> y,
                          const Norm& norm) {
    check_pair(x, y);
    return distance_kernel(x, y, nullptr, norm);
}

double weighted_minkowski_distance(std::span<const double> x,
                                   std::span<const double> y,
                                   const MetricSpec& spec) {
    check_pair(x, y);
    const double* w = nullptr;
    if (spec.weights) {
        if (spec.weights->size() != x.size()) {
            throw std::invalid_argument("dimension mismatch: weights have " +
                                        std::to_string(spec.weights->size()) +
                                        " entries, vectors have " + std::to_string(x.size()));
        }
        w = spec.weights->values().data();
    }
    return distance_kernel(x, y, w, spec.norm);
}

Matrix pairwise_distance_matrix(const Matrix& a, const Matrix& b,
                                const MetricSpec& spec) {
    if (a.rows() > 0 && b.rows() > 0 && a.cols() != b.cols()) {
        throw std::invalid_argument("dimension mismatch: " + std::to_string(a.cols()) +
                                    " vs " + std::to_string(b.cols()));
    }
    Matrix out(a.rows(), b.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.rows(); ++j) {
            out.at(i, j) = weighted_minkowski_distance(a.row(i), b.row(j), spec);
        }
    }
    return out;
}

} // namespace wmknn
