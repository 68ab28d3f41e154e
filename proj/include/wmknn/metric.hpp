#ifndef WMKNN_METRIC_HPP
#define WMKNN_METRIC_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wmknn/matrix.hpp"

namespace wmknn {

/// Minkowski norm order: either a finite p >= 1 or the Chebyshev limit.
class Norm {
public:
    static Norm finite(double p);
    static Norm chebyshev();

    bool is_chebyshev() const { return infinite_; }

    /// Order p; only meaningful for finite norms.
    double p() const { return p_; }

    std::string to_string() const;

    bool operator==(const Norm&) const = default;

private:
    Norm(double p, bool infinite) : p_(p), infinite_(infinite) {}
    double p_;
    bool infinite_;
};

/// Per-dimension importance weights: w_i >= 0 and sum(w_i) = n.
class WeightVector {
public:
    explicit WeightVector(std::vector<double> weights);

    static WeightVector uniform(std::size_t n);

    std::size_t size() const { return weights_.size(); }
    double operator[](std::size_t i) const { return weights_[i]; }
    std::span<const double> values() const { return weights_; }

    /// Sum tolerance accepted at construction, per dimension count.
    static constexpr double kSumTolerance = 1e-9;

private:
    std::vector<double> weights_;
};

/// A norm plus optional weights; absent weights mean all-ones.
struct MetricSpec {
    Norm norm;
    std::optional<WeightVector> weights;
};

/// Unweighted Minkowski distance (Chebyshev for the infinite norm).
double minkowski_distance(std::span<const double> x, std::span<const double> y,
                          const Norm& norm);

/// Weighted Minkowski distance. With the Chebyshev norm the weights drop out
/// of the limit and the plain max-of-differences is returned.
double weighted_minkowski_distance(std::span<const double> x,
                                   std::span<const double> y,
                                   const MetricSpec& spec);

/// Entry (i, j) is the weighted distance between a's row i and b's row j.
Matrix pairwise_distance_matrix(const Matrix& a, const Matrix& b,
                                const MetricSpec& spec);

} // namespace wmknn

#endif
