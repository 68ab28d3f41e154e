#include "wmknn/classifier.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace wmknn {

namespace {

void check_k(std::size_t k, std::size_t train_size) {
    if (train_size == 0) throw std::invalid_argument("fit: empty training set");
    if (k < 1 || k > train_size) {
        throw std::invalid_argument("k must lie in [1, " + std::to_string(train_size) +
                                    "] (got " + std::to_string(k) + ")");
    }
}

} // namespace

KnnModel fit(const LabeledDataset& train, std::size_t k, const Norm& norm,
             Kappa kappa, WeightMode mode, DegeneratePolicy policy) {
    check_k(k, train.size());
    MetricSpec spec{norm, std::nullopt};
    if (mode == WeightMode::Proposed) {
        spec.weights = fit_weights(train, kappa, policy);
    } else {
        spec.weights = WeightVector::uniform(train.dims());
    }
    return KnnModel{train, std::move(spec), k};
}

KnnModel fit_with_weights(const LabeledDataset& train, std::size_t k,
                          const Norm& norm, WeightVector weights) {
    check_k(k, train.size());
    if (weights.size() != train.dims()) {
        throw std::invalid_argument("dimension mismatch: weights have " +
                                    std::to_string(weights.size()) +
                                    " entries, training data has " +
                                    std::to_string(train.dims()));
    }
    return KnnModel{train, MetricSpec{norm, std::move(weights)}, k};
}

Prediction predict(const KnnModel& model, std::span<const double> query) {
    const std::size_t n = model.train.size();
    std::vector<double> dist(n);
    for (std::size_t i = 0; i < n; ++i) {
        dist[i] = weighted_minkowski_distance(model.train.row(i), query, model.spec);
    }

    // k smallest by (distance, row index)
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    const auto by_distance = [&](std::size_t a, std::size_t b) {
        return dist[a] != dist[b] ? dist[a] < dist[b] : a < b;
    };
    std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(model.k),
                      order.end(), by_distance);
    order.resize(model.k);

    Prediction pred;
    pred.neighbor_indices = order;
    pred.neighbor_distances.reserve(model.k);
    pred.vote_counts.assign(model.train.num_classes(), 0);
    std::vector<double> nearest(model.train.num_classes(),
                                std::numeric_limits<double>::infinity());
    for (std::size_t i : order) {
        const auto cls = static_cast<std::size_t>(model.train.labels[i]);
        pred.neighbor_distances.push_back(dist[i]);
        pred.vote_counts[cls]++;
        nearest[cls] = std::min(nearest[cls], dist[i]);
    }

    std::size_t best = 0;
    for (std::size_t c = 1; c < pred.vote_counts.size(); ++c) {
        if (pred.vote_counts[c] > pred.vote_counts[best] ||
            (pred.vote_counts[c] == pred.vote_counts[best] && nearest[c] < nearest[best])) {
            best = c;
        }
    }
    pred.label = static_cast<int>(best);
    return pred;
}

std::vector<Prediction> predict_batch(const KnnModel& model, const Matrix& queries) {
    std::vector<Prediction> out;
    out.reserve(queries.rows());
    for (std::size_t i = 0; i < queries.rows(); ++i) {
        out.push_back(predict(model, queries.row(i)));
    }
    return out;
}

} // namespace wmknn
