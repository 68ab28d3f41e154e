#ifndef WMKNN_DATASET_HPP
#define WMKNN_DATASET_HPP

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "wmknn/matrix.hpp"

namespace wmknn {

/// Raised for problems with input files or their contents (distinct from
/// argument validation errors so the CLI can map them to their own exit code).
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Feature matrix plus dense class labels. Labels are re-encoded to 0..m-1 in
/// lexicographic order of the original class names.
struct LabeledDataset {
    Matrix features;
    std::vector<int> labels;
    std::vector<std::string> class_names;
    std::vector<std::string> dim_names;
    std::string id;

    std::size_t size() const { return features.rows(); }
    std::size_t dims() const { return features.cols(); }
    std::size_t num_classes() const { return class_names.size(); }
    std::span<const double> row(std::size_t i) const { return features.row(i); }

    std::vector<std::size_t> class_counts() const;

    /// Dataset restricted to the given rows (order preserved).
    LabeledDataset subset(const std::vector<std::size_t>& rows) const;
};

/// Label column selected by header name or zero-based index.
using LabelColumn = std::variant<std::string, std::size_t>;

LabeledDataset load_csv(const std::string& path, const LabelColumn& label_column,
                        bool has_header);

void write_csv(const LabeledDataset& data, const std::string& path);

/// Two Gaussian blobs in 2-D with per-axis spreads, class means `separation`
/// apart along x. Rows alternate between classes A and B.
LabeledDataset synthetic_two_class(std::size_t n_per_class, double x_spread,
                                   double y_spread, double separation,
                                   std::uint64_t seed);

/// Two-class high-dimension/low-sample set: unit Gaussian noise everywhere,
/// with the first n_informative dimensions mean-shifted for class B.
LabeledDataset synthetic_gene_like(std::size_t n_samples, std::size_t n_dims,
                                   std::size_t n_informative, std::uint64_t seed,
                                   double shift = 1.0);

struct PreprocessSpec {
    bool standardize = false;
};

/// Per-dimension affine transform fitted on a row subset.
struct FittedTransform {
    std::vector<double> mean;
    std::vector<double> scale; // 1/sd; 0 for zero-variance dimensions

    void apply(Matrix& m) const;
};

struct PreprocessResult {
    LabeledDataset data;
    FittedTransform transform;
};

/// Fits statistics on fit_rows only, applies the transform to every row.
/// Zero-variance dimensions map to zero instead of dividing by zero.
PreprocessResult preprocess(const LabeledDataset& data, const PreprocessSpec& spec,
                            const std::vector<std::size_t>& fit_rows);

} // namespace wmknn

#endif
