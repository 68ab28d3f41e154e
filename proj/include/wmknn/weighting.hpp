#ifndef WMKNN_WEIGHTING_HPP
#define WMKNN_WEIGHTING_HPP

#include <functional>
#include <vector>

#include "wmknn/dataset.hpp"
#include "wmknn/metric.hpp"

namespace wmknn {

/// Interpolation constant for the weighting schema: 0 trusts the fitness-derived
/// weights fully, 1 reduces to uniform weights.
class Kappa {
public:
    explicit Kappa(double value);
    double value() const { return value_; }

private:
    double value_;
};

/// Per-class per-dimension mean and population standard deviation.
struct ClassStatistics {
    struct PerClass {
        int label;
        std::size_t count;
        std::vector<double> mean;
        std::vector<double> sd;
    };
    std::size_t dims = 0;
    std::vector<PerClass> classes;
};

/// Per-dimension class-separability scores; always non-negative.
using FitnessVector = std::vector<double>;

/// What to do when every lambda is zero and kappa < 1.
enum class DegeneratePolicy {
    UniformFallback, // fall back to all-ones weights
    Strict,          // throw
};

ClassStatistics class_statistics(const LabeledDataset& data);

/// lambda_i = sum over unordered class pairs (s,t) of |mu_s - mu_t| / (sd_s + sd_t).
/// A zero denominator contributes 0 when the means agree, otherwise the
/// denominator is floored at 1e-12.
FitnessVector fitness(const ClassStatistics& stats);

/// w_i = kappa + (1 - kappa) * n * lambda_i / sum(lambda).
WeightVector weights_from_fitness(const FitnessVector& lambdas, Kappa kappa,
                                  DegeneratePolicy policy = DegeneratePolicy::UniformFallback);

WeightVector fit_weights(const LabeledDataset& data, Kappa kappa,
                         DegeneratePolicy policy = DegeneratePolicy::UniformFallback);

/// Pluggable-fitness variant: any dataset -> FitnessVector function can stand
/// in for the built-in score.
using FitnessFunction = std::function<FitnessVector(const LabeledDataset&)>;

WeightVector fit_weights_with(const LabeledDataset& data, const FitnessFunction& fn,
                              Kappa kappa,
                              DegeneratePolicy policy = DegeneratePolicy::UniformFallback);

} // namespace wmknn

#endif
