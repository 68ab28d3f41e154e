#ifndef WMKNN_GEOMETRY_HPP
#define WMKNN_GEOMETRY_HPP

#include <array>
#include <string>
#include <vector>

#include "wmknn/classifier.hpp"
#include "wmknn/metric.hpp"

namespace wmknn {

using Point2 = std::array<double, 2>;

/// Closed polyline of points at a common weighted-Minkowski distance from a
/// center, ordered by angle.
struct BoundarySample {
    Point2 center;
    double radius; // the common distance value D
    MetricSpec spec;
    std::vector<Point2> points;
    bool degenerate = false; // D == 0: every point collapses onto the center
};

/// Samples the locus d(center, x) = D at `resolution` uniformly spaced angles.
/// Radii come from metric homogeneity: r(theta) = D / d(0, unit(theta)).
BoundarySample unidistant_boundary(Point2 center, double radius, const MetricSpec& spec,
                                   std::size_t resolution = 360);

/// Cartesian product of norms x weight vectors, one boundary per combination.
std::vector<BoundarySample> boundary_family(Point2 center, double radius,
                                            const std::vector<Norm>& norms,
                                            const std::vector<WeightVector>& weight_list,
                                            std::size_t resolution = 360);

/// Boundary through the k-th nearest training neighbor of the query; the
/// region a KNN vote draws its reference samples from.
BoundarySample knn_region(const KnnModel& model, Point2 query,
                          std::size_t resolution = 360);

/// CSV rows "series_id,p,weights,theta,x,y" for a family of boundaries.
std::string boundaries_to_csv(const std::vector<BoundarySample>& boundaries);

} // namespace wmknn

#endif
