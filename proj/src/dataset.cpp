#include "wmknn/dataset.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "wmknn/rng.hpp"

namespace wmknn {

std::vector<std::size_t> LabeledDataset::class_counts() const {
    std::vector<std::size_t> counts(num_classes(), 0);
    for (int l : labels) counts[static_cast<std::size_t>(l)]++;
    return counts;
}

LabeledDataset LabeledDataset::subset(const std::vector<std::size_t>& rows) const {
    LabeledDataset out;
    out.features = Matrix(rows.size(), dims());
    out.labels.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto src = row(rows[i]);
        std::copy(src.begin(), src.end(), out.features.row(i).begin());
        out.labels.push_back(labels[rows[i]]);
    }
    out.class_names = class_names;
    out.dim_names = dim_names;
    out.id = id;
    return out;
}

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

double parse_cell(const std::string& cell, std::size_t row, std::size_t col) {
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(cell.c_str(), &end);
    if (end == cell.c_str() || *end != '\0' || errno == ERANGE || !std::isfinite(v)) {
        throw DataError("unparseable cell '" + cell + "' at row " + std::to_string(row) +
                        ", column " + std::to_string(col));
    }
    return v;
}

} // namespace

LabeledDataset load_csv(const std::string& path, const LabelColumn& label_column,
                        bool has_header) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open file: " + path);

    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) lines.push_back(std::move(line));
    }
    if (lines.empty()) throw DataError("empty file: " + path);

    std::vector<std::string> header;
    std::size_t first_data = 0;
    if (has_header) {
        header = split_line(lines[0]);
        first_data = 1;
        for (std::size_t i = 0; i < header.size(); ++i) {
            for (std::size_t j = i + 1; j < header.size(); ++j) {
                if (header[i] == header[j]) {
                    throw DataError("duplicate header name '" + header[i] + "' in " + path);
                }
            }
        }
    }
    if (first_data >= lines.size()) throw DataError("no data rows in " + path);

    const std::size_t n_cols = split_line(lines[first_data]).size();
    std::size_t label_idx;
    if (std::holds_alternative<std::string>(label_column)) {
        const auto& name = std::get<std::string>(label_column);
        if (!has_header) throw DataError("label column by name requires a header");
        const auto it = std::find(header.begin(), header.end(), name);
        if (it == header.end()) throw DataError("label column '" + name + "' not found");
        label_idx = static_cast<std::size_t>(it - header.begin());
    } else {
        label_idx = std::get<std::size_t>(label_column);
        if (label_idx >= n_cols) {
            throw DataError("label column index " + std::to_string(label_idx) +
                            " out of range (" + std::to_string(n_cols) + " columns)");
        }
    }

    const std::size_t n_rows = lines.size() - first_data;
    const std::size_t n_dims = n_cols - 1;
    if (n_dims == 0) throw DataError("no feature columns in " + path);

    LabeledDataset out;
    out.features = Matrix(n_rows, n_dims);
    out.labels.resize(n_rows);
    std::vector<std::string> raw_labels(n_rows);
    for (std::size_t r = 0; r < n_rows; ++r) {
        const auto cells = split_line(lines[first_data + r]);
        if (cells.size() != n_cols) {
            throw DataError("ragged row " + std::to_string(r) + ": expected " +
                            std::to_string(n_cols) + " cells, got " +
                            std::to_string(cells.size()));
        }
        std::size_t d = 0;
        for (std::size_t c = 0; c < n_cols; ++c) {
            if (c == label_idx) {
                raw_labels[r] = cells[c];
            } else {
                out.features.at(r, d++) = parse_cell(cells[c], r, c);
            }
        }
    }

    // Stable name->index map: lexicographic over original label strings.
    std::map<std::string, int> encoding;
    for (const auto& l : raw_labels) encoding.emplace(l, 0);
    int next = 0;
    for (auto& [name, code] : encoding) {
        code = next++;
        out.class_names.push_back(name);
    }
    for (std::size_t r = 0; r < n_rows; ++r) out.labels[r] = encoding[raw_labels[r]];

    if (has_header) {
        for (std::size_t c = 0; c < n_cols; ++c) {
            if (c != label_idx) out.dim_names.push_back(header[c]);
        }
    }
    out.id = path;
    return out;
}

void write_csv(const LabeledDataset& data, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write file: " + path);
    for (std::size_t d = 0; d < data.dims(); ++d) {
        out << (d < data.dim_names.size() ? data.dim_names[d] : "f" + std::to_string(d))
            << ',';
    }
    out << "class\n";
    char buf[32];
    for (std::size_t r = 0; r < data.size(); ++r) {
        for (double v : data.row(r)) {
            std::snprintf(buf, sizeof buf, "%.17g", v);
            out << buf << ',';
        }
        out << data.class_names[static_cast<std::size_t>(data.labels[r])] << '\n';
    }
}

LabeledDataset synthetic_two_class(std::size_t n_per_class, double x_spread,
                                   double y_spread, double separation,
                                   std::uint64_t seed) {
    if (n_per_class < 1) throw std::invalid_argument("n_per_class must be >= 1");
    if (x_spread <= 0.0 || y_spread <= 0.0) {
        throw std::invalid_argument("spreads must be positive");
    }
    Rng rng(seed);
    LabeledDataset out;
    out.features = Matrix(2 * n_per_class, 2);
    out.labels.resize(2 * n_per_class);
    out.class_names = {"A", "B"};
    out.dim_names = {"x", "y"};
    out.id = "synthetic_two_class";
    for (std::size_t i = 0; i < 2 * n_per_class; ++i) {
        const int cls = static_cast<int>(i % 2);
        out.features.at(i, 0) = cls * separation + x_spread * rng.next_gaussian();
        out.features.at(i, 1) = y_spread * rng.next_gaussian();
        out.labels[i] = cls;
    }
    return out;
}

LabeledDataset synthetic_gene_like(std::size_t n_samples, std::size_t n_dims,
                                   std::size_t n_informative, std::uint64_t seed,
                                   double shift) {
    if (n_samples < 4) throw std::invalid_argument("n_samples must be >= 4");
    if (n_informative > n_dims) {
        throw std::invalid_argument("n_informative exceeds n_dims");
    }
    Rng rng(seed);
    LabeledDataset out;
    out.features = Matrix(n_samples, n_dims);
    out.labels.resize(n_samples);
    out.class_names = {"healthy", "tumor"};
    out.id = "synthetic_gene_like";
    for (std::size_t i = 0; i < n_samples; ++i) {
        const int cls = static_cast<int>(i % 2);
        for (std::size_t d = 0; d < n_dims; ++d) {
            double v = rng.next_gaussian();
            if (cls == 1 && d < n_informative) v += shift;
            out.features.at(i, d) = v;
        }
        out.labels[i] = cls;
    }
    return out;
}

void FittedTransform::apply(Matrix& m) const {
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            m.at(r, c) = (m.at(r, c) - mean[c]) * scale[c];
        }
    }
}

PreprocessResult preprocess(const LabeledDataset& data, const PreprocessSpec& spec,
                            const std::vector<std::size_t>& fit_rows) {
    if (fit_rows.empty()) throw std::invalid_argument("preprocess: empty fit set");
    PreprocessResult res;
    res.data = data;
    const std::size_t n = data.dims();
    res.transform.mean.assign(n, 0.0);
    res.transform.scale.assign(n, 1.0);
    if (!spec.standardize) return res;

    const double count = static_cast<double>(fit_rows.size());
    for (std::size_t c = 0; c < n; ++c) {
        double mean = 0.0;
        for (std::size_t r : fit_rows) mean += data.features.at(r, c);
        mean /= count;
        double var = 0.0;
        for (std::size_t r : fit_rows) {
            const double d = data.features.at(r, c) - mean;
            var += d * d;
        }
        const double sd = std::sqrt(var / count);
        res.transform.mean[c] = mean;
        res.transform.scale[c] = sd > 0.0 ? 1.0 / sd : 0.0;
    }
    res.transform.apply(res.data.features);
    return res;
}

} // namespace wmknn
