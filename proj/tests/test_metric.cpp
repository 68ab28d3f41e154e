#include "doctest.h"

#include <cmath>
#include <limits>
#include <vector>

#include "wmknn/metric.hpp"
#include "wmknn/rng.hpp"

using namespace wmknn;

namespace {

// Independent special-case oracles, coded directly from the textbook formulas.
double manhattan_oracle(std::span<const double> x, std::span<const double> y) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += std::abs(x[i] - y[i]);
    return s;
}

double euclidean_oracle(std::span<const double> x, std::span<const double> y) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += (x[i] - y[i]) * (x[i] - y[i]);
    return std::sqrt(s);
}

std::vector<double> random_vec(Rng& rng, std::size_t n, double lo = -10.0, double hi = 10.0) {
    std::vector<double> v(n);
    for (auto& x : v) x = lo + (hi - lo) * rng.next_unit();
    return v;
}

WeightVector random_weights(Rng& rng, std::size_t n, double lo = 0.1, double hi = 2.0) {
    std::vector<double> w(n);
    double sum = 0.0;
    for (auto& x : w) {
        x = lo + (hi - lo) * rng.next_unit();
        sum += x;
    }
    for (auto& x : w) x *= static_cast<double>(n) / sum;
    return WeightVector(w);
}

} // namespace

TEST_CASE("norm construction rejects p < 1") {
    CHECK_THROWS_AS(Norm::finite(0.5), std::invalid_argument);
    CHECK_THROWS_AS(Norm::finite(-1.0), std::invalid_argument);
    CHECK_THROWS_AS(Norm::finite(std::numeric_limits<double>::quiet_NaN()),
                    std::invalid_argument);
    CHECK(Norm::finite(1.0).p() == 1.0);
    CHECK(Norm::chebyshev().is_chebyshev());
}

TEST_CASE("weight vector validates entries and sum") {
    CHECK_THROWS_AS(WeightVector({-0.5, 2.5}), std::invalid_argument);
    CHECK_THROWS_AS(WeightVector({1.0, 0.5}), std::invalid_argument); // sum != n
    CHECK_THROWS_AS(WeightVector({}), std::invalid_argument);
    const WeightVector w({1.5, 0.5});
    CHECK(w[0] == 1.5);
    CHECK(WeightVector::uniform(3).size() == 3);
}

TEST_CASE("minkowski distance known values") {
    const std::vector<double> a{0.0, 0.0}, b{3.0, 4.0};
    CHECK(minkowski_distance(a, b, Norm::finite(2.0)) == doctest::Approx(5.0));
    const std::vector<double> c{1.0, 2.0}, d{4.0, 6.0};
    CHECK(minkowski_distance(c, d, Norm::finite(1.0)) == doctest::Approx(7.0));
    CHECK(minkowski_distance(c, d, Norm::chebyshev()) == doctest::Approx(4.0));
    // (3^3 + 4^3)^(1/3), frozen from a high-precision evaluation
    CHECK(minkowski_distance(c, d, Norm::finite(3.0)) ==
          doctest::Approx(4.497941445275415).epsilon(1e-12));
}

TEST_CASE("minkowski distance error paths") {
    const std::vector<double> a{0.0, 0.0}, b{1.0};
    CHECK_THROWS_WITH_AS(minkowski_distance(a, b, Norm::finite(2.0)),
                         doctest::Contains("2 vs 1"), std::invalid_argument);
    CHECK_THROWS_AS(minkowski_distance({}, {}, Norm::finite(2.0)), std::invalid_argument);
    const std::vector<double> c{0.0, std::numeric_limits<double>::infinity()};
    CHECK_THROWS_AS(minkowski_distance(a, c, Norm::finite(2.0)), std::invalid_argument);
}

TEST_CASE("weighted distance known values") {
    const std::vector<double> o{0.0, 0.0}, p34{3.0, 4.0}, ones{1.0, 1.0};
    const MetricSpec uniform{Norm::finite(2.0), WeightVector({1.0, 1.0})};
    CHECK(weighted_minkowski_distance(o, p34, uniform) == doctest::Approx(5.0));

    const MetricSpec skew{Norm::finite(2.0), WeightVector({1.5, 0.5})};
    CHECK(weighted_minkowski_distance(o, ones, skew) ==
          doctest::Approx(1.4142135623730951).epsilon(1e-12)); // sqrt(1.5 + 0.5)

    const MetricSpec skew_inf{Norm::chebyshev(), WeightVector({1.5, 0.5})};
    CHECK(weighted_minkowski_distance(o, ones, skew_inf) == doctest::Approx(1.0));
}

TEST_CASE("pairwise distance matrix") {
    Matrix a(2, 2, {0.0, 0.0, 3.0, 4.0});
    const MetricSpec spec{Norm::finite(2.0), WeightVector({1.0, 1.0})};
    const Matrix d = pairwise_distance_matrix(a, a, spec);
    CHECK(d.at(0, 0) == 0.0);
    CHECK(d.at(0, 1) == doctest::Approx(5.0));
    CHECK(d.at(1, 0) == doctest::Approx(5.0));
    CHECK(d.at(1, 1) == 0.0);

    Matrix s1(1, 2, {0.0, 0.0}), s2(1, 2, {1.0, 1.0});
    const MetricSpec skew{Norm::finite(2.0), WeightVector({1.5, 0.5})};
    const Matrix e = pairwise_distance_matrix(s1, s2, skew);
    CHECK(e.at(0, 0) == doctest::Approx(1.4142135623730951));
    CHECK(e.at(0, 0) == weighted_minkowski_distance(s1.row(0), s2.row(0), skew));

    const Matrix empty = pairwise_distance_matrix(s1, Matrix(0, 2), spec);
    CHECK(empty.rows() == 1);
    CHECK(empty.cols() == 0);
}

TEST_CASE("metric axioms on random triples") {
    Rng rng(7);
    const std::vector<Norm> norms{Norm::finite(1.0), Norm::finite(2.0),
                                  Norm::finite(3.5), Norm::chebyshev()};
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = 1 + rng.next_below(8);
        const auto x = random_vec(rng, n);
        const auto y = random_vec(rng, n);
        const auto z = random_vec(rng, n);
        const MetricSpec spec{norms[trial % norms.size()], random_weights(rng, n)};
        const double dxy = weighted_minkowski_distance(x, y, spec);
        const double dyx = weighted_minkowski_distance(y, x, spec);
        const double dxz = weighted_minkowski_distance(x, z, spec);
        const double dzy = weighted_minkowski_distance(z, y, spec);
        REQUIRE(dxy >= 0.0);
        REQUIRE(dxy == doctest::Approx(dyx).epsilon(1e-9));
        REQUIRE(dxy <= (dxz + dzy) * (1.0 + 1e-9));
        REQUIRE(weighted_minkowski_distance(x, x, spec) == 0.0);
    }
}

TEST_CASE("homogeneity: d(0, c*x) = |c| * d(0, x)") {
    Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng.next_below(6);
        const auto x = random_vec(rng, n);
        const std::vector<double> zero(n, 0.0);
        const double c = -4.0 + 8.0 * rng.next_unit();
        std::vector<double> cx(n);
        for (std::size_t i = 0; i < n; ++i) cx[i] = c * x[i];
        const MetricSpec spec{trial % 2 ? Norm::finite(1.0 + 4.0 * rng.next_unit())
                                        : Norm::chebyshev(),
                              random_weights(rng, n)};
        const double lhs = weighted_minkowski_distance(zero, cx, spec);
        const double rhs = std::abs(c) * weighted_minkowski_distance(zero, x, spec);
        REQUIRE(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
}

TEST_CASE("special cases match independent oracles") {
    Rng rng(13);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = 1 + rng.next_below(8);
        const auto x = random_vec(rng, n);
        const auto y = random_vec(rng, n);
        REQUIRE(minkowski_distance(x, y, Norm::finite(1.0)) ==
                doctest::Approx(manhattan_oracle(x, y)).epsilon(1e-9));
        REQUIRE(minkowski_distance(x, y, Norm::finite(2.0)) ==
                doctest::Approx(euclidean_oracle(x, y)).epsilon(1e-9));
    }
}

TEST_CASE("weight sandwich bound and the Chebyshev limit") {
    Rng rng(17);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = 2 + rng.next_below(6);
        const auto x = random_vec(rng, n);
        const auto y = random_vec(rng, n);
        const auto w = random_weights(rng, n, 0.5, 1.5);
        for (double p : {1.0, 2.0, 5.0, 100.0}) {
            const Norm norm = Norm::finite(p);
            const double dw =
                weighted_minkowski_distance(x, y, MetricSpec{norm, w});
            const double du = minkowski_distance(x, y, norm);
            if (du == 0.0) continue;
            double wmin = w[0], wmax = w[0];
            for (std::size_t i = 1; i < n; ++i) {
                wmin = std::min(wmin, w[i]);
                wmax = std::max(wmax, w[i]);
            }
            const double ratio = dw / du;
            REQUIRE(ratio >= std::pow(wmin, 1.0 / p) * (1.0 - 1e-12));
            REQUIRE(ratio <= std::pow(wmax, 1.0 / p) * (1.0 + 1e-12));
            if (p == 100.0) {
                // sandwich consequence: at p=100 the weighting moves the
                // distance by well under 1%
                const double bound =
                    std::max(std::pow(wmax, 0.01) - 1.0, 1.0 - std::pow(wmin, 0.01));
                REQUIRE(std::abs(dw - du) / du <= bound + 1e-12);
            }
        }
    }
}

TEST_CASE("in 2-D the p=100 weighted distance is within 1% of Chebyshev") {
    // provable in 2-D: d_w / d_cheb lies in [(min w)^0.01, 2^0.01] = [0.9931, 1.0070];
    // in higher dimensions near-ties among the largest |delta| can push past 1%
    Rng rng(23);
    for (int trial = 0; trial < 500; ++trial) {
        const auto x = random_vec(rng, 2);
        const auto y = random_vec(rng, 2);
        const auto w = random_weights(rng, 2, 0.5, 1.5);
        const double dw =
            weighted_minkowski_distance(x, y, MetricSpec{Norm::finite(100.0), w});
        const double cheb = minkowski_distance(x, y, Norm::chebyshev());
        if (cheb == 0.0) continue;
        REQUIRE(std::abs(dw - cheb) / cheb <= 0.01);
    }
}

TEST_CASE("all-ones weights are bit-identical to the unweighted distance") {
    Rng rng(19);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng.next_below(8);
        const auto x = random_vec(rng, n);
        const auto y = random_vec(rng, n);
        const Norm norm = trial % 2 ? Norm::finite(1.0 + 9.0 * rng.next_unit())
                                    : Norm::chebyshev();
        const MetricSpec spec{norm, WeightVector::uniform(n)};
        REQUIRE(weighted_minkowski_distance(x, y, spec) ==
                minkowski_distance(x, y, norm));
    }
}

TEST_CASE("large p does not overflow") {
    const std::vector<double> a{0.0, 0.0}, b{100.0, 50.0};
    const double d = minkowski_distance(a, b, Norm::finite(200.0));
    CHECK(std::isfinite(d));
    CHECK(d == doctest::Approx(100.0).epsilon(1e-2));
}
