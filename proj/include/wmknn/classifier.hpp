#ifndef WMKNN_CLASSIFIER_HPP
#define WMKNN_CLASSIFIER_HPP

#include <vector>

#include "wmknn/dataset.hpp"
#include "wmknn/metric.hpp"
#include "wmknn/weighting.hpp"

namespace wmknn {

enum class WeightMode {
    Proposed, // weights fitted from the training data
    Uniform,  // all-ones (the plain-KNN baseline)
};

/// Immutable KNN model: training data, the metric it was fitted with, and k.
struct KnnModel {
    LabeledDataset train;
    MetricSpec spec;
    std::size_t k;
};

struct Prediction {
    int label;
    std::vector<std::size_t> neighbor_indices; // ascending distance
    std::vector<double> neighbor_distances;    // non-decreasing
    std::vector<std::size_t> vote_counts;      // per class, sums to k
};

KnnModel fit(const LabeledDataset& train, std::size_t k, const Norm& norm,
             Kappa kappa, WeightMode mode,
             DegeneratePolicy policy = DegeneratePolicy::UniformFallback);

KnnModel fit_with_weights(const LabeledDataset& train, std::size_t k,
                          const Norm& norm, WeightVector weights);

/// Majority vote over the k nearest training rows. Distance ties at the k-th
/// boundary break by ascending row index; vote ties go to the tied class with
/// the closest member, then the lowest class index.
Prediction predict(const KnnModel& model, std::span<const double> query);

/// Element-wise predict, order-preserving.
std::vector<Prediction> predict_batch(const KnnModel& model, const Matrix& queries);

} // namespace wmknn

#endif
