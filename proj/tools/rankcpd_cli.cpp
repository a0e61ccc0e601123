// Command-line front end: change-point detection, synthetic data, experiment
// grids, vector ranks, diphoragram series, null-spectrum tables and
// low-discrepancy point emission.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "rankcpd/detect.hpp"
#include "rankcpd/discrepancy.hpp"
#include "rankcpd/error.hpp"
#include "rankcpd/harness.hpp"
#include "rankcpd/kernels.hpp"
#include "rankcpd/lds.hpp"
#include "rankcpd/nulldist.hpp"
#include "rankcpd/transport.hpp"

namespace {

using namespace rankcpd;

std::string format_double(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

// Applies a flat key=value configuration file to a subcommand: each key names
// one of its long flags (without the leading dashes). Values are fed through
// the option's own parser, so types and constraints match the command line.
// Flags given on the command line win; file entries for them are ignored.
void apply_config(CLI::App* cmd, const std::string& path) {
    if (path.empty()) return;
    std::ifstream in(path);
    if (!in) throw DataError("cannot read config file '" + path + "'");
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto where = [&] {
            return std::string(" (") + path + " line " + std::to_string(line_no) + ")";
        };
        auto trim = [](std::string text) {
            const auto from = text.find_first_not_of(" \t\r");
            const auto to = text.find_last_not_of(" \t\r");
            return from == std::string::npos ? std::string()
                                             : text.substr(from, to - from + 1);
        };
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw InvalidArgument("config line is not key=value" + where());
        }
        const std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (value.size() >= 2 &&
            ((value.front() == '"' && value.back() == '"') ||
             (value.front() == '\'' && value.back() == '\''))) {
            value = value.substr(1, value.size() - 2);
        }
        CLI::Option* option = cmd->get_option_no_throw("--" + key);
        if (option == nullptr) {
            throw InvalidArgument("config key '" + key + "' does not name a --" +
                                  key + " flag" + where());
        }
        if (option->count() > 0) continue;  // command-line flag wins
        option->add_result(value);
        option->run_callback();
    }
}

void require_value(const std::string& value, const std::string& flag) {
    if (value.empty()) {
        throw InvalidArgument(flag + " is required (flag or config entry)");
    }
}

harness::CsvSchema schema_from(bool no_header, const std::string& time_column) {
    harness::CsvSchema schema;
    schema.has_header = !no_header;
    if (time_column == "auto") {
        schema.time_column = harness::TimeColumn::automatic;
    } else if (time_column == "yes") {
        schema.time_column = harness::TimeColumn::yes;
    } else if (time_column == "no") {
        schema.time_column = harness::TimeColumn::no;
    } else {
        throw InvalidArgument("--time-column must be auto, yes or no");
    }
    return schema;
}

void add_schema_flags(CLI::App* cmd, bool& no_header, std::string& time_column) {
    cmd->add_flag("--no-header", no_header, "input CSV has no header row");
    cmd->add_option("--time-column", time_column,
                    "first column holds time labels: auto|yes|no")
        ->default_val("auto");
}

void write_matrix_csv(const Eigen::MatrixXd& data, const std::string& path,
                      const std::string& prefix) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot open '" + path + "' for writing");
    for (Eigen::Index c = 0; c < data.cols(); ++c) {
        if (c > 0) out << ',';
        out << prefix << (c + 1);
    }
    out << '\n';
    for (Eigen::Index r = 0; r < data.rows(); ++r) {
        for (Eigen::Index c = 0; c < data.cols(); ++c) {
            if (c > 0) out << ',';
            out << format_double(data(r, c));
        }
        out << '\n';
    }
    if (!out) throw DataError("failed writing '" + path + "'");
}

// ---------------------------------------------------------------------------
// detect

struct DetectOptions {
    std::string input;
    int tau = 30;
    double gamma = 0.1;
    std::string kernel = "star";
    double beta = 1.0;
    std::string method = "diphoragram";
    int kmax = 10;
    int iterations = 10;
    int series_terms = 100;
    double series_step = 0.5;
    int eigenvalue_count = 50;
    int nystrom_nodes = 512;
    std::string null_table;
    std::string report_path;
    std::string diphoragram_out;
    bool no_header = false;
    std::string time_column = "auto";
    bool no_timestamp = false;
};

int run_detect(const DetectOptions& opt) {
    const harness::Dataset dataset =
        harness::load_csv(opt.input, schema_from(opt.no_header, opt.time_column));

    DetectionParams params;
    params.tau = opt.tau;
    params.family = kernel_family_from_string(opt.kernel);
    params.beta = opt.beta;
    params.null_params.gamma = opt.gamma;
    params.null_params.series_terms = opt.series_terms;
    params.null_params.series_step = opt.series_step;
    params.null_params.eigenvalue_count = opt.eigenvalue_count;
    params.null_params.nystrom_nodes = opt.nystrom_nodes;
    params.iteration_cap = opt.iterations;
    params.max_changepoints = opt.kmax;
    const DetectionMethod method = detection_method_from_string(opt.method);
    if (method == DetectionMethod::sma) {
        // --kmax is an upper bound; a length-T sample cannot hold more than
        // (T-1)/tau windowed change points, so cap the search there.
        const int capacity =
            (static_cast<int>(dataset.observations.rows()) - 1) / params.tau;
        params.max_changepoints = std::min(params.max_changepoints, capacity);
    }

    const int d = static_cast<int>(dataset.observations.cols());
    Spectrum spectrum;
    if (!opt.null_table.empty()) {
        spectrum = harness::read_null_table(opt.null_table);
    } else {
        spectrum = nulldist::nystrom_spectrum(KernelSpec(params.family, params.beta, d),
                                              params.null_params.nystrom_nodes,
                                              params.null_params.eigenvalue_count);
    }

    const ChangePointReport report =
        detect::run_detection(dataset.observations, params, method, spectrum);

    harness::ReportContext context;
    context.source = opt.input;
    context.rows = static_cast<int>(dataset.observations.rows());
    context.columns = d;
    context.include_timestamp = !opt.no_timestamp;
    if (!dataset.time_labels.empty()) {
        for (int cp : report.change_points) {
            if (cp >= 1 && cp <= static_cast<int>(dataset.time_labels.size())) {
                context.time_labels.push_back(dataset.time_labels[cp - 1]);
            }
        }
    }

    if (!opt.diphoragram_out.empty()) {
        const RankedSample ranked = transport::vector_ranks(dataset.observations);
        const KernelSpec spec(params.family, params.beta, d);
        const Diphoragram diph =
            discrepancy::sliding_diphoragram(spec, ranked.points, params.tau);
        harness::write_diphoragram_csv(diph, opt.diphoragram_out);
    }

    const std::string json = harness::report_to_json(report, params, method, context);
    if (opt.report_path.empty()) {
        std::cout << json;
    } else {
        std::ofstream out(opt.report_path);
        if (!out) throw DataError("cannot open '" + opt.report_path + "' for writing");
        out << json;
        std::cout << (report.detected ? "change detected" : "no change detected");
        if (!report.change_points.empty()) {
            std::cout << " at";
            for (int cp : report.change_points) std::cout << ' ' << cp;
        }
        std::cout << "; report written to " << opt.report_path << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------
// simulate

struct SimulateOptions {
    int length = 300;
    int dim = 3;
    std::uint64_t seed = 0;
    std::string model = "null";
    std::vector<int> theta;
    double shift = 1.0;
    double scale = 2.0;
    std::string out;
};

harness::SimulationSpec build_model(const SimulateOptions& opt) {
    harness::SimulationSpec spec;
    spec.sample_length = opt.length;
    spec.dimension = opt.dim;
    spec.seed = opt.seed;
    const Eigen::VectorXd zero = Eigen::VectorXd::Zero(opt.dim);
    const Eigen::VectorXd ones = Eigen::VectorXd::Ones(opt.dim);
    auto default_theta = [&](std::vector<int> fallback) {
        return opt.theta.empty() ? fallback : opt.theta;
    };
    if (opt.model == "null") {
        spec.segments = {harness::SegmentDistribution::gaussian(zero)};
    } else if (opt.model == "mean-shift") {
        spec.change_points = default_theta({opt.length / 2});
        spec.segments = {harness::SegmentDistribution::gaussian(zero),
                         harness::SegmentDistribution::gaussian(opt.shift * ones)};
    } else if (opt.model == "variance-shift") {
        spec.change_points = default_theta({opt.length / 2});
        spec.segments = {harness::SegmentDistribution::gaussian(zero),
                         harness::SegmentDistribution::gaussian(zero, opt.scale)};
    } else if (opt.model == "mixed") {
        spec.change_points = default_theta({opt.length / 2});
        spec.segments = {harness::SegmentDistribution::gaussian(zero),
                         harness::SegmentDistribution::uniform_box(-ones, ones)};
    } else if (opt.model == "three-regime") {
        spec.change_points = default_theta(
            {(2 * opt.length) / 5, (4 * opt.length) / 5});
        spec.segments = {
            harness::SegmentDistribution::gaussian(3.0 * ones),
            harness::SegmentDistribution::uniform_box(10.0 * ones, 20.0 * ones),
            harness::SegmentDistribution::gaussian(-3.0 * ones)};
    } else {
        throw InvalidArgument("--model must be one of null, mean-shift, "
                              "variance-shift, mixed, three-regime");
    }
    if (spec.segments.size() != spec.change_points.size() + 1) {
        throw InvalidArgument("--theta must list exactly " +
                              std::to_string(spec.segments.size() - 1) +
                              " change points for model " + opt.model);
    }
    return spec;
}

int run_simulate(const SimulateOptions& opt) {
    const Eigen::MatrixXd data = harness::simulate(build_model(opt));
    write_matrix_csv(data, opt.out, "x");
    std::cout << data.rows() << " rows, " << data.cols() << " columns written to "
              << opt.out << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// experiment

struct ExperimentOptions {
    std::string preset;
    int reps = 20;
    std::uint64_t seed = 42;
    int tau = 0;  // 0 means preset default
    double gamma = 0.1;
    std::string kernel;
    double beta = 1.0;
    std::string out = "metrics.csv";
};

std::vector<harness::ExperimentCell> build_preset(const ExperimentOptions& opt) {
    std::vector<harness::ExperimentCell> grid;
    auto base_params = [&](int d, int tau, KernelFamily fallback) {
        DetectionParams params;
        params.tau = opt.tau > 0 ? opt.tau : tau;
        params.family =
            opt.kernel.empty() ? fallback : kernel_family_from_string(opt.kernel);
        params.beta = opt.beta;
        params.null_params.gamma = opt.gamma;
        (void)d;
        return params;
    };
    auto add_cell = [&](harness::ExperimentCell cell) {
        cell.sim.replications = opt.reps;
        cell.sim.seed = opt.seed + 1000 * grid.size();
        grid.push_back(std::move(cell));
    };

    if (opt.preset == "calibration") {
        for (int d : {1, 3, 5}) {
            harness::ExperimentCell cell;
            cell.label = "null-d" + std::to_string(d);
            cell.null_model = true;
            cell.sim.sample_length = 200;
            cell.sim.dimension = d;
            cell.sim.segments = {
                harness::SegmentDistribution::gaussian(Eigen::VectorXd::Zero(d))};
            cell.params = base_params(d, 30, KernelFamily::star);
            add_cell(std::move(cell));
        }
    } else if (opt.preset == "power-mean") {
        for (double shift : {0.2, 0.4, 0.6, 0.8, 1.0}) {
            const int d = 3;
            harness::ExperimentCell cell;
            cell.label = "shift-" + format_double(shift);
            cell.sim.sample_length = 200;
            cell.sim.dimension = d;
            cell.sim.change_points = {100};
            cell.sim.segments = {
                harness::SegmentDistribution::gaussian(Eigen::VectorXd::Zero(d)),
                harness::SegmentDistribution::gaussian(
                    shift * Eigen::VectorXd::Ones(d))};
            cell.params = base_params(d, 30, KernelFamily::star);
            add_cell(std::move(cell));
        }
    } else if (opt.preset == "power-variance") {
        for (double scale : {2.0, 4.0, 6.0, 8.0, 10.0}) {
            const int d = 5;
            harness::ExperimentCell cell;
            cell.label = "scale-" + format_double(scale);
            cell.sim.sample_length = 200;
            cell.sim.dimension = d;
            cell.sim.change_points = {100};
            cell.sim.segments = {
                harness::SegmentDistribution::gaussian(Eigen::VectorXd::Zero(d)),
                harness::SegmentDistribution::gaussian(Eigen::VectorXd::Zero(d),
                                                       scale)};
            cell.params = base_params(d, 30, KernelFamily::star);
            add_cell(std::move(cell));
        }
    } else if (opt.preset == "bias-ratio") {
        for (double r : {0.50, 0.45, 0.40, 0.35, 0.30}) {
            const int d = 2;
            const int length = 300;
            harness::ExperimentCell cell;
            cell.label = "r-" + format_double(r);
            cell.sim.sample_length = length;
            cell.sim.dimension = d;
            cell.sim.change_points = {
                static_cast<int>(std::llround(r * length))};
            cell.sim.segments = {
                harness::SegmentDistribution::gaussian(Eigen::VectorXd::Zero(d)),
                harness::SegmentDistribution::uniform_box(
                    -Eigen::VectorXd::Ones(d), Eigen::VectorXd::Ones(d))};
            cell.params = base_params(d, 50, KernelFamily::star);
            add_cell(std::move(cell));
        }
    } else if (opt.preset == "multi-cp") {
        const int d = 3;
        harness::ExperimentCell cell;
        cell.label = "three-regime-sma";
        cell.method = DetectionMethod::sma;
        cell.sim.sample_length = 300;
        cell.sim.dimension = d;
        cell.sim.change_points = {120, 240};
        cell.sim.segments = {
            harness::SegmentDistribution::gaussian(3.0 * Eigen::VectorXd::Ones(d)),
            harness::SegmentDistribution::uniform_box(
                10.0 * Eigen::VectorXd::Ones(d), 20.0 * Eigen::VectorXd::Ones(d)),
            harness::SegmentDistribution::gaussian(-3.0 * Eigen::VectorXd::Ones(d))};
        cell.params = base_params(d, 50, KernelFamily::centered);
        add_cell(std::move(cell));
    } else {
        throw InvalidArgument("--preset must be one of calibration, power-mean, "
                              "power-variance, bias-ratio, multi-cp");
    }
    return grid;
}

int run_experiment_cmd(const ExperimentOptions& opt) {
    const std::vector<harness::ExperimentCell> grid = build_preset(opt);
    const std::vector<harness::ExperimentMetrics> metrics =
        harness::run_experiment_grid(grid);
    harness::write_metrics_csv(metrics, opt.out);
    for (const harness::ExperimentMetrics& cell : metrics) {
        std::cout << cell.label << ": power=" << format_double(cell.power)
                  << " confidence=" << format_double(cell.confidence)
                  << " mean_abs_error=" << format_double(cell.mean_abs_error)
                  << " failures=" << cell.failures << "\n";
    }
    std::cout << "metrics written to " << opt.out << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"nonparametric multivariate change-point detection via vector "
                 "ranks and quadratic discrepancy"};
    app.set_version_flag("--version", rankcpd::kLibraryVersion);
    app.require_subcommand(1);

    // detect ---------------------------------------------------------------
    DetectOptions det;
    CLI::App* detect_cmd =
        app.add_subcommand("detect", "run change-point detection on a CSV sample");
    detect_cmd->add_option("--input", det.input, "observations CSV (T rows, d columns)");
    detect_cmd->add_option("--tau", det.tau, "window width")->default_val(30);
    detect_cmd->add_option("--gamma", det.gamma, "test level")->default_val(0.1);
    detect_cmd->add_option("--kernel", det.kernel, "kernel family: star|centered")
        ->default_val("star");
    detect_cmd->add_option("--beta", det.beta, "kernel weight in (0, 1]")
        ->default_val(1.0);
    detect_cmd
        ->add_option("--method", det.method,
                     "detector: diphoragram|distance|ratio|sma")
        ->default_val("diphoragram");
    detect_cmd->add_option("--kmax", det.kmax, "largest model size tried by sma")
        ->default_val(10);
    detect_cmd
        ->add_option("--iterations", det.iterations,
                     "multi-change-point readjustment rounds")
        ->default_val(10);
    detect_cmd->add_option("--series-terms", det.series_terms,
                           "truncation of the null CDF series");
    detect_cmd->add_option("--series-step", det.series_step,
                           "step of the null CDF series in (0, 1]");
    detect_cmd->add_option("--eigenvalues", det.eigenvalue_count,
                           "null spectrum size");
    detect_cmd->add_option("--nystrom-nodes", det.nystrom_nodes,
                           "quadrature nodes for the null spectrum");
    detect_cmd->add_option("--null-table", det.null_table,
                           "reuse a cached null-spectrum table");
    detect_cmd->add_option("--report", det.report_path, "write the JSON report here");
    detect_cmd->add_option("--diphoragram-out", det.diphoragram_out,
                           "also write the (t, delta) series CSV here");
    detect_cmd->add_flag("--no-timestamp", det.no_timestamp,
                         "omit the timestamp for byte-reproducible reports");
    bool det_no_header = false;
    std::string det_time_column = "auto";
    add_schema_flags(detect_cmd, det_no_header, det_time_column);
    std::string det_config;
    detect_cmd->add_option("--config", det_config,
                           "flat key=value file mirroring these flags (flags win)");

    // simulate ---------------------------------------------------------------
    SimulateOptions sim;
    CLI::App* simulate_cmd =
        app.add_subcommand("simulate", "draw a synthetic sample to CSV");
    simulate_cmd->add_option("--length,-T", sim.length, "sample length")
        ->default_val(300);
    simulate_cmd->add_option("--dim", sim.dim, "dimension")->default_val(3);
    simulate_cmd->add_option("--seed", sim.seed, "random seed")->default_val(0);
    simulate_cmd
        ->add_option("--model", sim.model,
                     "null|mean-shift|variance-shift|mixed|three-regime")
        ->default_val("null");
    simulate_cmd->add_option("--theta", sim.theta,
                             "change point locations (model defaults apply)");
    simulate_cmd->add_option("--shift", sim.shift, "mean shift size")->default_val(1.0);
    simulate_cmd->add_option("--scale", sim.scale, "second-regime sigma")
        ->default_val(2.0);
    simulate_cmd->add_option("--out", sim.out, "output CSV path");
    std::string sim_config;
    simulate_cmd->add_option("--config", sim_config,
                             "flat key=value file mirroring these flags (flags win)");

    // experiment -------------------------------------------------------------
    ExperimentOptions exp;
    CLI::App* experiment_cmd = app.add_subcommand(
        "experiment", "run a replicated simulation grid and emit metrics CSV");
    experiment_cmd->add_option(
        "--preset", exp.preset,
        "calibration|power-mean|power-variance|bias-ratio|multi-cp");
    experiment_cmd->add_option("--reps", exp.reps, "replications per cell")
        ->default_val(20);
    experiment_cmd->add_option("--seed", exp.seed, "master seed")->default_val(42);
    experiment_cmd->add_option("--tau", exp.tau, "override the preset window width");
    experiment_cmd->add_option("--gamma", exp.gamma, "test level")->default_val(0.1);
    experiment_cmd->add_option("--kernel", exp.kernel,
                               "override the preset kernel family");
    experiment_cmd->add_option("--beta", exp.beta, "kernel weight")->default_val(1.0);
    experiment_cmd->add_option("--out", exp.out, "metrics CSV path")
        ->default_val("metrics.csv");
    std::string exp_config;
    experiment_cmd->add_option("--config", exp_config,
                               "flat key=value file mirroring these flags (flags win)");

    // rank ---------------------------------------------------------------
    std::string rank_input, rank_out;
    bool rank_no_header = false;
    std::string rank_time_column = "auto";
    CLI::App* rank_cmd = app.add_subcommand(
        "rank", "write the vector ranks of a CSV sample (plus assignment column)");
    rank_cmd->add_option("--input", rank_input, "observations CSV")->required();
    rank_cmd->add_option("--out", rank_out, "output CSV path")->required();
    add_schema_flags(rank_cmd, rank_no_header, rank_time_column);

    // diphoragram ----------------------------------------------------------
    DetectOptions dip;  // reuse the fields we need
    bool dip_no_header = false;
    std::string dip_time_column = "auto";
    std::string dip_out;
    CLI::App* diphoragram_cmd = app.add_subcommand(
        "diphoragram", "write the sliding-window discrepancy series of a CSV sample");
    diphoragram_cmd->add_option("--input", dip.input, "observations CSV")->required();
    diphoragram_cmd->add_option("--tau", dip.tau, "window width")->default_val(30);
    diphoragram_cmd->add_option("--kernel", dip.kernel, "kernel family: star|centered")
        ->default_val("star");
    diphoragram_cmd->add_option("--beta", dip.beta, "kernel weight")->default_val(1.0);
    diphoragram_cmd->add_option("--out", dip_out, "output CSV path")->required();
    add_schema_flags(diphoragram_cmd, dip_no_header, dip_time_column);

    // null-table -------------------------------------------------------------
    int table_dim = 0, table_nodes = 512, table_count = 50;
    std::string table_kernel = "star", table_out;
    double table_beta = 1.0;
    CLI::App* table_cmd = app.add_subcommand(
        "null-table", "compute and cache the null spectrum with quantiles");
    table_cmd->add_option("--dim", table_dim, "sample dimension")->required();
    table_cmd->add_option("--kernel", table_kernel, "kernel family: star|centered")
        ->default_val("star");
    table_cmd->add_option("--beta", table_beta, "kernel weight")->default_val(1.0);
    table_cmd->add_option("--nodes", table_nodes, "quadrature node count")
        ->default_val(512);
    table_cmd->add_option("--eigenvalues", table_count, "spectrum size")
        ->default_val(50);
    table_cmd->add_option("--out", table_out, "output CSV path")->required();

    // lds ---------------------------------------------------------------
    std::int64_t lds_n = 0;
    int lds_dim = 0;
    std::string lds_out;
    CLI::App* lds_cmd =
        app.add_subcommand("lds", "emit the first n low-discrepancy points as CSV");
    lds_cmd->add_option("--n", lds_n, "number of points")->required();
    lds_cmd->add_option("--dim", lds_dim, "dimension")->required();
    lds_cmd->add_option("--out", lds_out, "output CSV path (default: stdout)");

    try {
        app.parse(argc, argv);

        if (app.got_subcommand(detect_cmd)) {
            apply_config(detect_cmd, det_config);
            require_value(det.input, "--input");
            det.no_header = det_no_header;
            det.time_column = det_time_column;
            return run_detect(det);
        }
        if (app.got_subcommand(simulate_cmd)) {
            apply_config(simulate_cmd, sim_config);
            require_value(sim.out, "--out");
            return run_simulate(sim);
        }
        if (app.got_subcommand(experiment_cmd)) {
            apply_config(experiment_cmd, exp_config);
            require_value(exp.preset, "--preset");
            return run_experiment_cmd(exp);
        }
        if (app.got_subcommand(rank_cmd)) {
            const harness::Dataset dataset = harness::load_csv(
                rank_input, schema_from(rank_no_header, rank_time_column));
            const RankedSample ranked =
                transport::vector_ranks(dataset.observations);
            harness::write_ranks_csv(ranked, rank_out);
            std::cout << "ranks written to " << rank_out << "\n";
            return 0;
        }
        if (app.got_subcommand(diphoragram_cmd)) {
            const harness::Dataset dataset = harness::load_csv(
                dip.input, schema_from(dip_no_header, dip_time_column));
            const RankedSample ranked =
                transport::vector_ranks(dataset.observations);
            const KernelSpec spec(kernel_family_from_string(dip.kernel), dip.beta,
                                  static_cast<int>(dataset.observations.cols()));
            const Diphoragram diph =
                discrepancy::sliding_diphoragram(spec, ranked.points, dip.tau);
            harness::write_diphoragram_csv(diph, dip_out);
            std::cout << "diphoragram written to " << dip_out << "\n";
            return 0;
        }
        if (app.got_subcommand(table_cmd)) {
            const Spectrum spectrum = nulldist::nystrom_spectrum(
                KernelSpec(kernel_family_from_string(table_kernel), table_beta,
                           table_dim),
                table_nodes, table_count);
            harness::write_null_table(spectrum, table_out);
            std::cout << "null table written to " << table_out << "\n";
            return 0;
        }
        if (app.got_subcommand(lds_cmd)) {
            const Eigen::MatrixXd points = lds::sobol_prefix(lds_n, lds_dim);
            if (lds_out.empty()) {
                for (Eigen::Index r = 0; r < points.rows(); ++r) {
                    for (Eigen::Index c = 0; c < points.cols(); ++c) {
                        if (c > 0) std::cout << ',';
                        std::cout << format_double(points(r, c));
                    }
                    std::cout << '\n';
                }
            } else {
                harness::write_points_csv(points, lds_out);
            }
            return 0;
        }
        return 0;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const rankcpd::DataError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return 2;
    } catch (const rankcpd::NumericError& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 3;
    } catch (const rankcpd::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
