#include "wmknn/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "wmknn/rng.hpp"

namespace wmknn {

std::vector<std::size_t> FoldAssignment::fold_rows(int fold) const {
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < fold_of.size(); ++i) {
        if (fold_of[i] == fold) rows.push_back(i);
    }
    return rows;
}

std::vector<std::size_t> FoldAssignment::complement_rows(int fold) const {
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < fold_of.size(); ++i) {
        if (fold_of[i] != fold) rows.push_back(i);
    }
    return rows;
}

FoldAssignment stratified_folds(const std::vector<int>& labels, int num_folds,
                                std::uint64_t seed) {
    if (num_folds < 2) throw std::invalid_argument("fold count must be >= 2");
    if (static_cast<std::size_t>(num_folds) > labels.size()) {
        throw std::invalid_argument("fold count " + std::to_string(num_folds) +
                                    " exceeds sample count " +
                                    std::to_string(labels.size()));
    }
    const int max_label = labels.empty() ? -1 : *std::max_element(labels.begin(), labels.end());

    FoldAssignment fa;
    fa.fold_of.assign(labels.size(), -1);
    fa.num_folds = num_folds;
    fa.seed = seed;
    Rng rng(seed);
    for (int cls = 0; cls <= max_label; ++cls) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < labels.size(); ++i) {
            if (labels[i] == cls) idx.push_back(i);
        }
        rng.shuffle(idx);
        for (std::size_t j = 0; j < idx.size(); ++j) {
            fa.fold_of[idx[j]] = static_cast<int>(j % static_cast<std::size_t>(num_folds));
        }
    }
    return fa;
}

double accuracy(const std::vector<int>& predictions, const std::vector<int>& truth) {
    if (predictions.size() != truth.size()) {
        throw std::invalid_argument("accuracy: length mismatch (" +
                                    std::to_string(predictions.size()) + " vs " +
                                    std::to_string(truth.size()) + ")");
    }
    if (predictions.empty()) throw std::invalid_argument("accuracy: empty input");
    std::size_t correct = 0;
    for (std::size_t i = 0; i < truth.size(); ++i) {
        if (predictions[i] == truth[i]) correct++;
    }
    return static_cast<double>(correct) / static_cast<double>(truth.size());
}

namespace {

double run_cell(const ExperimentSpec& spec, const LabeledDataset& data,
                const FoldAssignment& folds, const std::string& method, std::size_t k) {
    std::size_t correct = 0;
    double fold_acc_sum = 0.0;
    for (int f = 0; f < folds.num_folds; ++f) {
        const auto train_rows = folds.complement_rows(f);
        const auto test_rows = folds.fold_rows(f);
        if (train_rows.empty()) throw std::runtime_error("fold leaves empty training set");
        if (test_rows.empty()) continue;

        LabeledDataset train = data.subset(train_rows);
        LabeledDataset test = data.subset(test_rows);
        if (spec.standardize) {
            std::vector<std::size_t> all_train(train.size());
            std::iota(all_train.begin(), all_train.end(), std::size_t{0});
            auto prep = preprocess(train, PreprocessSpec{true}, all_train);
            train = std::move(prep.data);
            prep.transform.apply(test.features);
        }

        const auto mode = method == "proposed" ? WeightMode::Proposed : WeightMode::Uniform;
        if (mode == WeightMode::Proposed) {
            std::vector<bool> seen(train.num_classes(), false);
            std::size_t distinct = 0;
            for (int l : train.labels) {
                if (!seen[static_cast<std::size_t>(l)]) {
                    seen[static_cast<std::size_t>(l)] = true;
                    distinct++;
                }
            }
            if (distinct < 2) {
                throw std::runtime_error("single-class training set in fold " +
                                         std::to_string(f));
            }
        }
        const KnnModel model = fit(train, k, spec.norm, Kappa(spec.kappa), mode);

        std::size_t fold_correct = 0;
        for (std::size_t i = 0; i < test.size(); ++i) {
            const Prediction p = predict(model, test.row(i));
            if (p.label == test.labels[i]) fold_correct++;
        }
        correct += fold_correct;
        fold_acc_sum += static_cast<double>(fold_correct) / static_cast<double>(test.size());
    }
    if (spec.per_fold_average) {
        return fold_acc_sum / static_cast<double>(folds.num_folds);
    }
    return static_cast<double>(correct) / static_cast<double>(data.size());
}

MethodSummary summarize_method(const std::string& method,
                               const std::vector<CellResult>& cells) {
    MethodSummary s;
    s.method = method;
    std::vector<double> accs;
    for (const auto& c : cells) {
        if (c.method == method && c.valid) accs.push_back(c.accuracy);
    }
    s.cells = accs.size();
    if (accs.empty()) return s;
    s.mean = std::accumulate(accs.begin(), accs.end(), 0.0) /
             static_cast<double>(accs.size());
    if (accs.size() > 1) {
        double ss = 0.0;
        for (double a : accs) ss += (a - s.mean) * (a - s.mean);
        s.sd = std::sqrt(ss / static_cast<double>(accs.size() - 1));
    }
    return s;
}

} // namespace

const CellResult* EvaluationReport::find(const std::string& method, std::size_t k,
                                         int F) const {
    for (const auto& c : cells) {
        if (c.method == method && c.k == k && c.num_folds == F) return &c;
    }
    return nullptr;
}

const MethodSummary* EvaluationReport::summary(const std::string& method) const {
    for (const auto& s : summaries) {
        if (s.method == method) return &s;
    }
    return nullptr;
}

EvaluationReport cross_validate(const ExperimentSpec& spec, const LabeledDataset& data) {
    if (data.size() == 0) throw std::invalid_argument("cross_validate: empty dataset");
    for (std::size_t k : spec.ks) {
        if (k < 1) throw std::invalid_argument("k values must be positive");
    }
    for (int F : spec.fold_counts) {
        if (F < 2) throw std::invalid_argument("fold counts must be >= 2");
    }
    (void)Kappa(spec.kappa); // validate range up front

    EvaluationReport report;
    report.dataset_id = spec.dataset_id.empty() ? data.id : spec.dataset_id;
    report.seed = spec.seed;

    std::vector<std::string> methods;
    if (spec.run_uniform) methods.push_back("uniform");
    if (spec.run_proposed) methods.push_back("proposed");

    for (int F : spec.fold_counts) {
        // one assignment per F, shared by all k and both methods
        const auto fold_seed = mix_seed(spec.seed ^ mix_seed(static_cast<std::uint64_t>(F)));
        const FoldAssignment folds = stratified_folds(data.labels, F, fold_seed);
        for (std::size_t k : spec.ks) {
            for (const auto& method : methods) {
                CellResult cell;
                cell.method = method;
                cell.k = k;
                cell.num_folds = F;
                try {
                    cell.accuracy = run_cell(spec, data, folds, method, k);
                    cell.valid = true;
                } catch (const std::exception& e) {
                    cell.error = e.what();
                }
                report.cells.push_back(std::move(cell));
            }
        }
    }

    for (const auto& method : methods) {
        report.summaries.push_back(summarize_method(method, report.cells));
    }
    return report;
}

std::string render_text(const EvaluationReport& report) {
    std::vector<std::string> methods;
    for (const auto& s : report.summaries) methods.push_back(s.method);

    std::ostringstream out;
    out << "dataset: " << report.dataset_id << " (seed " << report.seed << ")\n";
    out << std::left << std::setw(4) << "k" << std::setw(8) << "n-fold";
    for (const auto& m : methods) out << std::setw(12) << m;
    out << '\n';

    std::vector<std::size_t> ks;
    std::vector<int> folds;
    for (const auto& c : report.cells) {
        if (std::find(ks.begin(), ks.end(), c.k) == ks.end()) ks.push_back(c.k);
        if (std::find(folds.begin(), folds.end(), c.num_folds) == folds.end()) {
            folds.push_back(c.num_folds);
        }
    }
    out << std::fixed << std::setprecision(4);
    for (std::size_t k : ks) {
        for (int F : folds) {
            out << std::left << std::setw(4) << k << std::setw(8) << F;
            for (const auto& m : methods) {
                const CellResult* c = report.find(m, k, F);
                if (c && c->valid) {
                    out << std::setw(12) << c->accuracy;
                } else {
                    out << std::setw(12) << "invalid";
                }
            }
            out << '\n';
        }
    }
    out << std::left << std::setw(12) << "Mean";
    for (const auto& m : methods) out << std::setw(12) << report.summary(m)->mean;
    out << '\n' << std::left << std::setw(12) << "sd";
    for (const auto& m : methods) out << std::setw(12) << report.summary(m)->sd;
    out << '\n';
    return out.str();
}

std::string render_csv(const EvaluationReport& report) {
    std::ostringstream out;
    out << "dataset,method,k,folds,accuracy,seed\n";
    out << std::fixed << std::setprecision(6);
    for (const auto& c : report.cells) {
        out << report.dataset_id << ',' << c.method << ',' << c.k << ','
            << c.num_folds << ',';
        if (c.valid) {
            out << c.accuracy;
        } else {
            out << "invalid";
        }
        out << ',' << report.seed << '\n';
    }
    return out.str();
}

std::vector<SummaryRow> summarize(const std::vector<EvaluationReport>& reports) {
    if (reports.empty()) throw std::invalid_argument("summarize: no reports");
    std::vector<SummaryRow> rows;
    for (const auto& r : reports) {
        for (const auto& s : r.summaries) {
            rows.push_back(SummaryRow{r.dataset_id, s.method, s.mean, s.sd});
        }
    }
    return rows;
}

std::string render_summary(const std::vector<SummaryRow>& rows) {
    std::ostringstream out;
    out << "dataset,method,mean_accuracy,sd\n" << std::fixed << std::setprecision(6);
    for (const auto& r : rows) {
        out << r.dataset_id << ',' << r.method << ',' << r.mean << ',' << r.sd << '\n';
    }
    return out.str();
}

} // namespace wmknn
