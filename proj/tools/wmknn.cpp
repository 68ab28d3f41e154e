// Command-line front end: reproducible experiment runs and figure-data
// exports on top of the wmknn library.
//
// Exit codes: 0 success, 1 usage error, 2 data/file error, 3 runtime error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "wmknn/classifier.hpp"
#include "wmknn/dataset.hpp"
#include "wmknn/evaluation.hpp"
#include "wmknn/geometry.hpp"
#include "wmknn/weighting.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace wmknn;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitRuntime = 3;

struct CommonOpts {
    std::string data_path;
    std::string label_col = "class";
    bool no_header = false;
    std::string p = "2";
    double kappa = 0.0;
    std::uint64_t seed = 42;
    bool standardize = false;
    std::string out_dir = "wmknn_out";
};

Norm parse_norm(const std::string& p) {
    if (p == "inf" || p == "Inf" || p == "INF") return Norm::chebyshev();
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(p, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("norm must be a number or 'inf' (got '" + p + "')");
    }
    if (used != p.size()) {
        throw std::invalid_argument("norm must be a number or 'inf' (got '" + p + "')");
    }
    return Norm::finite(value); // rejects p < 1 with its own message
}

LabelColumn parse_label_col(const std::string& s, bool has_header) {
    if (!has_header || (!s.empty() && s.find_first_not_of("0123456789") == std::string::npos)) {
        try {
            return LabelColumn{static_cast<std::size_t>(std::stoul(s))};
        } catch (const std::exception&) {
        }
    }
    return LabelColumn{s};
}

void write_file(const fs::path& path, const std::string& contents) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write " + path.string());
    out << contents;
}

void write_config(const fs::path& out_dir, const json& config) {
    write_file(out_dir / "config.json", config.dump(2) + "\n");
}

int cmd_evaluate(const CommonOpts& opts, const std::vector<std::size_t>& ks,
                 const std::vector<int>& folds) {
    const auto data = load_csv(opts.data_path, parse_label_col(opts.label_col, !opts.no_header),
                               !opts.no_header);
    ExperimentSpec spec;
    spec.dataset_id = fs::path(opts.data_path).stem().string();
    spec.ks = ks;
    spec.fold_counts = folds;
    spec.norm = parse_norm(opts.p);
    spec.kappa = opts.kappa;
    spec.seed = opts.seed;
    spec.standardize = opts.standardize;

    const auto report = cross_validate(spec, data);

    fs::create_directories(opts.out_dir);
    write_file(fs::path(opts.out_dir) / "report.txt", render_text(report));
    write_file(fs::path(opts.out_dir) / "report.csv", render_csv(report));
    write_config(opts.out_dir,
                 json{{"command", "evaluate"},
                      {"data", opts.data_path},
                      {"label_col", opts.label_col},
                      {"has_header", !opts.no_header},
                      {"k", ks},
                      {"folds", folds},
                      {"p", spec.norm.to_string()},
                      {"kappa", opts.kappa},
                      {"seed", opts.seed},
                      {"standardize", opts.standardize},
                      {"out", opts.out_dir}});
    std::cout << render_text(report);
    return 0;
}

int cmd_weights(const CommonOpts& opts) {
    const auto data = load_csv(opts.data_path, parse_label_col(opts.label_col, !opts.no_header),
                               !opts.no_header);
    const auto lambdas = fitness(class_statistics(data));
    const auto weights = weights_from_fitness(lambdas, Kappa(opts.kappa));
    std::cout << "dimension,name,lambda,weight\n";
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        const std::string name = i < data.dim_names.size() ? data.dim_names[i]
                                                           : "f" + std::to_string(i);
        std::cout << i << ',' << name << ',' << lambdas[i] << ',' << weights[i] << '\n';
    }
    return 0;
}

int cmd_boundaries(const CommonOpts& opts, double radius, std::size_t resolution,
                   bool fig4) {
    (void)parse_norm(opts.p); // validate before any output is produced
    fs::create_directories(opts.out_dir);
    if (fig4) {
        const auto data = synthetic_two_class(100, 4.0, 1.0, 8.0, opts.seed);
        write_csv(data, (fs::path(opts.out_dir) / "fig4_scatter.csv").string());
        const Point2 query{4.0, 0.0};
        const auto norm = parse_norm(opts.p);
        const auto uniform = fit(data, 5, norm, Kappa(opts.kappa), WeightMode::Uniform);
        const auto proposed = fit(data, 5, norm, Kappa(opts.kappa), WeightMode::Proposed);
        const std::vector<BoundarySample> regions{knn_region(uniform, query, resolution),
                                                  knn_region(proposed, query, resolution)};
        write_file(fs::path(opts.out_dir) / "fig4_regions.csv", boundaries_to_csv(regions));
    } else {
        const std::vector<Norm> norms{Norm::finite(1.0), Norm::finite(2.0),
                                      Norm::finite(3.0), Norm::finite(10.0),
                                      Norm::finite(100.0), Norm::chebyshev()};
        const std::vector<WeightVector> weights{WeightVector({1.0, 1.0}),
                                                WeightVector({1.5, 0.5}),
                                                WeightVector({0.5, 1.5})};
        for (const auto& norm : norms) {
            for (const auto& w : weights) {
                const auto b = unidistant_boundary({0.0, 0.0}, radius,
                                                   MetricSpec{norm, w}, resolution);
                std::ostringstream name;
                name << "boundary_p" << norm.to_string() << "_w" << w[0] << "-" << w[1]
                     << ".csv";
                write_file(fs::path(opts.out_dir) / name.str(), boundaries_to_csv({b}));
            }
        }
    }
    write_config(opts.out_dir,
                 json{{"command", "boundaries"},
                      {"p", opts.p},
                      {"kappa", opts.kappa},
                      {"radius", radius},
                      {"resolution", resolution},
                      {"fig4", fig4},
                      {"seed", opts.seed},
                      {"out", opts.out_dir}});
    return 0;
}

struct GenerateOpts {
    std::string type = "two-class";
    std::size_t n_per_class = 100;
    double x_spread = 4.0;
    double y_spread = 1.0;
    double separation = 8.0;
    std::size_t n_samples = 60;
    std::size_t n_dims = 500;
    std::size_t n_informative = 20;
    double shift = 1.0;
    std::string out_file = "dataset.csv";
};

int cmd_generate(const CommonOpts& opts, const GenerateOpts& gen) {
    LabeledDataset data;
    if (gen.type == "two-class") {
        data = synthetic_two_class(gen.n_per_class, gen.x_spread, gen.y_spread,
                                   gen.separation, opts.seed);
    } else if (gen.type == "gene-like") {
        data = synthetic_gene_like(gen.n_samples, gen.n_dims, gen.n_informative,
                                   opts.seed, gen.shift);
    } else {
        throw CLI::ValidationError("--type must be 'two-class' or 'gene-like'");
    }
    write_csv(data, gen.out_file);
    std::cout << "wrote " << data.size() << " rows x " << data.dims()
              << " features to " << gen.out_file << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"weighted-Minkowski KNN experiments"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::vector<std::size_t> ks{1, 3, 5};
    std::vector<int> folds{3, 5, 10};
    double radius = 1.0;
    std::size_t resolution = 360;
    bool fig4 = false;
    GenerateOpts gen;

    auto add_common = [&](CLI::App* sub, bool needs_data) {
        auto* d = sub->add_option("--data", opts.data_path, "input CSV file");
        if (needs_data) d->required();
        sub->add_option("--label-col", opts.label_col, "label column name or index");
        sub->add_flag("--no-header", opts.no_header, "CSV has no header row");
        sub->add_option("--p", opts.p, "norm order (number >= 1 or 'inf')");
        sub->add_option("--kappa", opts.kappa, "weighting constant in [0,1]")
            ->check(CLI::Range(0.0, 1.0));
        sub->add_option("--seed", opts.seed, "random seed");
        sub->add_flag("--standardize", opts.standardize,
                      "z-score features using training-fold statistics");
        sub->add_option("--out", opts.out_dir, "output directory");
    };

    auto* evaluate = app.add_subcommand("evaluate", "run the cross-validation grid");
    add_common(evaluate, true);
    evaluate->add_option("--k", ks, "neighbor counts");
    evaluate->add_option("--folds", folds, "fold counts");

    auto* weights = app.add_subcommand("weights", "print per-dimension lambda and weight");
    add_common(weights, true);

    auto* boundaries = app.add_subcommand("boundaries", "emit unidistant-boundary CSVs");
    add_common(boundaries, false);
    boundaries->add_option("--radius", radius, "common distance value D");
    boundaries->add_option("--resolution", resolution, "points per boundary");
    boundaries->add_flag("--fig4", fig4, "emit KNN regions on the synthetic set");

    auto* generate = app.add_subcommand("generate", "write a synthetic dataset CSV");
    add_common(generate, false);
    generate->add_option("--type", gen.type, "two-class or gene-like");
    generate->add_option("--n-per-class", gen.n_per_class, "samples per class");
    generate->add_option("--x-spread", gen.x_spread, "x standard deviation");
    generate->add_option("--y-spread", gen.y_spread, "y standard deviation");
    generate->add_option("--separation", gen.separation, "class mean separation along x");
    generate->add_option("--n-samples", gen.n_samples, "gene-like sample count");
    generate->add_option("--n-dims", gen.n_dims, "gene-like dimension count");
    generate->add_option("--n-informative", gen.n_informative, "shifted dimensions");
    generate->add_option("--shift", gen.shift, "class mean shift of informative dims");
    generate->add_option("--out-file", gen.out_file, "output CSV path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitUsage;
    }

    try {
        if (evaluate->parsed()) return cmd_evaluate(opts, ks, folds);
        if (weights->parsed()) return cmd_weights(opts);
        if (boundaries->parsed()) return cmd_boundaries(opts, radius, resolution, fig4);
        if (generate->parsed()) return cmd_generate(opts, gen);
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
    return 0;
}
