#include "wmknn/geometry.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace wmknn {

BoundarySample unidistant_boundary(Point2 center, double radius, const MetricSpec& spec,
                                   std::size_t resolution) {
    if (radius < 0.0) throw std::invalid_argument("radius must be non-negative");
    if (resolution < 8) throw std::invalid_argument("resolution must be >= 8");
    if (spec.weights) {
        if (spec.weights->size() != 2) {
            throw std::invalid_argument("boundary weights must be 2-dimensional");
        }
        if (!spec.norm.is_chebyshev()) {
            for (std::size_t i = 0; i < 2; ++i) {
                if ((*spec.weights)[i] == 0.0) {
                    throw std::invalid_argument(
                        "boundary unbounded along axis " + std::to_string(i) +
                        ": zero weight with a finite norm");
                }
            }
        }
    }

    BoundarySample sample{center, radius, spec, {}, false};
    sample.degenerate = radius == 0.0;
    sample.points.reserve(resolution);
    const std::array<double, 2> origin{0.0, 0.0};
    for (std::size_t j = 0; j < resolution; ++j) {
        const double theta =
            2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(resolution);
        const std::array<double, 2> unit{std::cos(theta), std::sin(theta)};
        const double unit_dist = weighted_minkowski_distance(origin, unit, spec);
        const double r = sample.degenerate ? 0.0 : radius / unit_dist;
        sample.points.push_back(Point2{center[0] + r * unit[0], center[1] + r * unit[1]});
    }
    return sample;
}

std::vector<BoundarySample> boundary_family(Point2 center, double radius,
                                            const std::vector<Norm>& norms,
                                            const std::vector<WeightVector>& weight_list,
                                            std::size_t resolution) {
    std::vector<BoundarySample> out;
    out.reserve(norms.size() * weight_list.size());
    for (const auto& norm : norms) {
        for (const auto& w : weight_list) {
            out.push_back(unidistant_boundary(center, radius, MetricSpec{norm, w}, resolution));
        }
    }
    return out;
}

BoundarySample knn_region(const KnnModel& model, Point2 query, std::size_t resolution) {
    if (model.train.dims() != 2) {
        throw std::invalid_argument("knn_region requires a 2-D model");
    }
    const Prediction pred = predict(model, query);
    const double radius = pred.neighbor_distances.back();
    return unidistant_boundary(query, radius, model.spec, resolution);
}

std::string boundaries_to_csv(const std::vector<BoundarySample>& boundaries) {
    std::ostringstream out;
    out << "series_id,p,weights,theta,x,y\n";
    for (std::size_t s = 0; s < boundaries.size(); ++s) {
        const auto& b = boundaries[s];
        std::string wtag = "1:1";
        if (b.spec.weights) {
            std::ostringstream ws;
            ws << (*b.spec.weights)[0] << ':' << (*b.spec.weights)[1];
            wtag = ws.str();
        }
        const std::size_t res = b.points.size();
        for (std::size_t j = 0; j < res; ++j) {
            const double theta =
                2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(res);
            out << s << ',' << b.spec.norm.to_string() << ',' << wtag << ',' << theta
                << ',' << b.points[j][0] << ',' << b.points[j][1] << '\n';
        }
    }
    return out.str();
}

} // namespace wmknn
