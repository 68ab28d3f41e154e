#include "wmknn/weighting.hpp"

#include <cmath>
#include <stdexcept>

namespace wmknn {

Kappa::Kappa(double value) : value_(value) {
    if (!std::isfinite(value) || value < 0.0 || value > 1.0) {
        throw std::invalid_argument("kappa must lie in [0, 1] (got " +
                                    std::to_string(value) + ")");
    }
}

ClassStatistics class_statistics(const LabeledDataset& data) {
    if (data.size() == 0) throw std::invalid_argument("class_statistics: empty dataset");
    const std::size_t n = data.dims();
    const auto counts = data.class_counts();

    ClassStatistics stats;
    stats.dims = n;
    for (std::size_t c = 0; c < data.num_classes(); ++c) {
        if (counts[c] == 0) continue;
        ClassStatistics::PerClass pc;
        pc.label = static_cast<int>(c);
        pc.count = counts[c];
        pc.mean.assign(n, 0.0);
        pc.sd.assign(n, 0.0);
        stats.classes.push_back(std::move(pc));
    }

    for (auto& pc : stats.classes) {
        for (std::size_t r = 0; r < data.size(); ++r) {
            if (data.labels[r] != pc.label) continue;
            const auto row = data.row(r);
            for (std::size_t d = 0; d < n; ++d) pc.mean[d] += row[d];
        }
        const double cnt = static_cast<double>(pc.count);
        for (std::size_t d = 0; d < n; ++d) pc.mean[d] /= cnt;
        for (std::size_t r = 0; r < data.size(); ++r) {
            if (data.labels[r] != pc.label) continue;
            const auto row = data.row(r);
            for (std::size_t d = 0; d < n; ++d) {
                const double diff = row[d] - pc.mean[d];
                pc.sd[d] += diff * diff;
            }
        }
        // population standard deviation: single-sample classes get sd = 0
        for (std::size_t d = 0; d < n; ++d) pc.sd[d] = std::sqrt(pc.sd[d] / cnt);
    }
    return stats;
}

FitnessVector fitness(const ClassStatistics& stats) {
    if (stats.classes.size() < 2) {
        throw std::invalid_argument("fitness requires at least 2 classes (got " +
                                    std::to_string(stats.classes.size()) + ")");
    }
    constexpr double kDenomFloor = 1e-12;
    FitnessVector lambdas(stats.dims, 0.0);
    for (std::size_t s = 0; s < stats.classes.size(); ++s) {
        for (std::size_t t = s + 1; t < stats.classes.size(); ++t) {
            const auto& cs = stats.classes[s];
            const auto& ct = stats.classes[t];
            for (std::size_t d = 0; d < stats.dims; ++d) {
                const double num = std::abs(cs.mean[d] - ct.mean[d]);
                if (num == 0.0) continue; // identical means contribute nothing
                lambdas[d] += num / std::max(cs.sd[d] + ct.sd[d], kDenomFloor);
            }
        }
    }
    return lambdas;
}

WeightVector weights_from_fitness(const FitnessVector& lambdas, Kappa kappa,
                                  DegeneratePolicy policy) {
    if (lambdas.empty()) throw std::invalid_argument("empty fitness vector");
    const std::size_t n = lambdas.size();
    double total = 0.0;
    for (double l : lambdas) {
        if (!std::isfinite(l) || l < 0.0) {
            throw std::invalid_argument("fitness values must be finite and non-negative");
        }
        total += l;
    }
    if (total == 0.0 && kappa.value() < 1.0) {
        if (policy == DegeneratePolicy::Strict) {
            throw std::runtime_error("degenerate fitness: all lambdas are zero");
        }
        return WeightVector::uniform(n);
    }
    std::vector<double> w(n);
    const double k = kappa.value();
    for (std::size_t i = 0; i < n; ++i) {
        w[i] = k == 1.0 ? 1.0
                        : k + (1.0 - k) * static_cast<double>(n) * lambdas[i] / total;
    }
    return WeightVector(std::move(w));
}

WeightVector fit_weights(const LabeledDataset& data, Kappa kappa,
                         DegeneratePolicy policy) {
    return weights_from_fitness(fitness(class_statistics(data)), kappa, policy);
}

WeightVector fit_weights_with(const LabeledDataset& data, const FitnessFunction& fn,
                              Kappa kappa, DegeneratePolicy policy) {
    return weights_from_fitness(fn(data), kappa, policy);
}

} // namespace wmknn
