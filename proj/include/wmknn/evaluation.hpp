#ifndef WMKNN_EVALUATION_HPP
#define WMKNN_EVALUATION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "wmknn/classifier.hpp"
#include "wmknn/dataset.hpp"

namespace wmknn {

/// Per-sample fold index, stratified per class.
struct FoldAssignment {
    std::vector<int> fold_of;
    int num_folds;
    std::uint64_t seed;

    std::vector<std::size_t> fold_rows(int fold) const;
    std::vector<std::size_t> complement_rows(int fold) const;
};

/// Per class, indices are shuffled with the seeded generator and dealt
/// round-robin to folds, so per-class fold sizes differ by at most 1.
FoldAssignment stratified_folds(const std::vector<int>& labels, int num_folds,
                                std::uint64_t seed);

double accuracy(const std::vector<int>& predictions, const std::vector<int>& truth);

struct ExperimentSpec {
    std::string dataset_id;
    std::vector<std::size_t> ks{1, 3, 5};
    std::vector<int> fold_counts{3, 5, 10};
    Norm norm = Norm::finite(2.0);
    double kappa = 0.0;
    bool run_uniform = true;
    bool run_proposed = true;
    std::uint64_t seed = 42;
    bool standardize = false;
    bool per_fold_average = false; // default is pooled correct/total
};

struct CellResult {
    std::string method; // "uniform" or "proposed"
    std::size_t k;
    int num_folds;
    double accuracy = 0.0;
    bool valid = false;
    std::string error;
};

struct MethodSummary {
    std::string method;
    double mean = 0.0;
    double sd = 0.0; // sample standard deviation over the grid cells
    std::size_t cells = 0;
};

struct EvaluationReport {
    std::string dataset_id;
    std::uint64_t seed;
    std::vector<CellResult> cells;
    std::vector<MethodSummary> summaries;

    const CellResult* find(const std::string& method, std::size_t k, int F) const;
    const MethodSummary* summary(const std::string& method) const;
};

/// Runs the full (method, k, F) grid. Both methods in a cell share the same
/// fold assignment; proposed-mode weights are fitted on training folds only.
EvaluationReport cross_validate(const ExperimentSpec& spec, const LabeledDataset& data);

/// Aligned text table: one row per (k, F), one accuracy column per method,
/// Mean and sd rows at the bottom.
std::string render_text(const EvaluationReport& report);

/// Machine-readable rows "dataset,method,k,folds,accuracy,seed" with a header.
std::string render_csv(const EvaluationReport& report);

struct SummaryRow {
    std::string dataset_id;
    std::string method;
    double mean;
    double sd;
};

/// Per dataset and method, the report's own mean/sd echoed (not recomputed).
std::vector<SummaryRow> summarize(const std::vector<EvaluationReport>& reports);

std::string render_summary(const std::vector<SummaryRow>& rows);

} // namespace wmknn

#endif
