#include "rankcpd/harness.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <istream>
#include <random>
#include <sstream>

#include <Eigen/Cholesky>

#include "json.hpp"

#include "rankcpd/error.hpp"
#include "rankcpd/lds.hpp"

namespace rankcpd::harness {
namespace {

std::string trimmed(const std::string& text) {
    std::size_t begin = 0;
    std::size_t end = text.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    return text.substr(begin, end - begin);
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::stringstream stream(line);
    while (std::getline(stream, field, ',')) fields.push_back(trimmed(field));
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

bool parse_double(const std::string& text, double& value) {
    const char* begin = text.data();
    const char* end = begin + text.size();
    const auto result = std::from_chars(begin, end, value);
    return result.ec == std::errc() && result.ptr == end;
}

bool is_time_header(std::string name) {
    std::transform(name.begin(), name.end(), name.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return name == "date" || name == "time" || name == "t" || name == "index" ||
           name == "month";
}

std::string format_double(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot open '" + path + "' for writing");
    return out;
}

// splitmix64 finalizer; the n-th stream value under a master seed is
// finalize(master + n * golden_gamma).
std::uint64_t splitmix64_finalize(std::uint64_t state) {
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Deterministic normal/uniform source: raw 53-bit uniforms from a fixed
// 64-bit generator plus an explicit Box-Muller pair, so that simulated data
// is byte-identical across standard libraries.
class SampleSource {
public:
    explicit SampleSource(std::uint64_t seed) : generator_(seed) {}

    double uniform01() { return static_cast<double>(generator_() >> 11) * 0x1p-53; }

    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double u1 = static_cast<double>((generator_() >> 11) + 1) * 0x1p-53;
        const double u2 = uniform01();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * M_PI * u2;
        spare_ = radius * std::sin(angle);
        has_spare_ = true;
        return radius * std::cos(angle);
    }

private:
    std::mt19937_64 generator_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

void validate_simulation(const SimulationSpec& spec) {
    if (spec.sample_length < 1) throw InvalidArgument("simulation needs T >= 1");
    if (spec.dimension < 1) throw InvalidArgument("simulation needs d >= 1");
    if (spec.segments.size() != spec.change_points.size() + 1) {
        throw InvalidArgument("simulation needs one segment distribution per regime "
                              "(change point count + 1)");
    }
    int previous = 0;
    for (int theta : spec.change_points) {
        if (theta <= previous || theta >= spec.sample_length) {
            throw InvalidArgument("simulation change points must be strictly ascending "
                                  "inside (0, T)");
        }
        previous = theta;
    }
    for (const SegmentDistribution& segment : spec.segments) {
        if (segment.kind == SegmentDistribution::Kind::gaussian) {
            if (segment.mean.size() != spec.dimension) {
                throw InvalidArgument("gaussian mean dimension mismatch");
            }
            if (segment.covariance.size() != 0 &&
                (segment.covariance.rows() != spec.dimension ||
                 segment.covariance.cols() != spec.dimension)) {
                throw InvalidArgument("gaussian covariance dimension mismatch");
            }
            if (segment.covariance.size() == 0 && !(segment.sigma > 0.0)) {
                throw InvalidArgument("gaussian sigma must be positive");
            }
        } else {
            if (segment.lower.size() != spec.dimension ||
                segment.upper.size() != spec.dimension) {
                throw InvalidArgument("uniform box bounds dimension mismatch");
            }
            for (int i = 0; i < spec.dimension; ++i) {
                if (!(segment.lower(i) < segment.upper(i))) {
                    throw InvalidArgument("uniform box needs lower < upper in every "
                                          "coordinate");
                }
            }
        }
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// Data ingestion

Dataset parse_csv(std::istream& input, const CsvSchema& schema,
                  const std::string& origin) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(input, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!trimmed(line).empty()) lines.push_back(line);
    }
    if (lines.empty()) throw DataError("'" + origin + "' contains no data");

    Dataset dataset;
    std::size_t first_data_line = 0;
    std::vector<std::string> header;
    if (schema.has_header) {
        header = split_fields(lines[0]);
        first_data_line = 1;
        if (lines.size() == 1) throw DataError("'" + origin + "' has a header but no rows");
    }

    const std::vector<std::string> probe = split_fields(lines[first_data_line]);
    if (probe.empty()) throw DataError("'" + origin + "' first row is empty");

    bool time_column = false;
    switch (schema.time_column) {
        case TimeColumn::yes: time_column = true; break;
        case TimeColumn::no: time_column = false; break;
        case TimeColumn::automatic: {
            double ignored = 0.0;
            const bool head_hint = !header.empty() && is_time_header(header[0]);
            const bool nonnumeric = !parse_double(probe[0], ignored);
            time_column = (head_hint || nonnumeric) && probe.size() >= 2;
            break;
        }
    }

    const std::size_t width = probe.size();
    const int data_columns = static_cast<int>(width) - (time_column ? 1 : 0);
    if (data_columns < 1) {
        throw DataError("'" + origin + "' has no numeric data columns");
    }

    const std::size_t rows = lines.size() - first_data_line;
    dataset.observations.resize(static_cast<Eigen::Index>(rows), data_columns);
    if (time_column) dataset.time_labels.reserve(rows);
    for (std::size_t r = 0; r < rows; ++r) {
        const std::vector<std::string> fields = split_fields(lines[first_data_line + r]);
        if (fields.size() != width) {
            throw DataError("'" + origin + "' row " + std::to_string(r + 1) + " has " +
                            std::to_string(fields.size()) + " fields, expected " +
                            std::to_string(width));
        }
        if (time_column) dataset.time_labels.push_back(fields[0]);
        for (int c = 0; c < data_columns; ++c) {
            double value = 0.0;
            if (!parse_double(fields[time_column ? c + 1 : c], value)) {
                throw DataError("'" + origin + "' row " + std::to_string(r + 1) +
                                ", column " + std::to_string(c + 1) +
                                ": cannot parse '" + fields[time_column ? c + 1 : c] +
                                "' as a number");
            }
            dataset.observations(static_cast<Eigen::Index>(r), c) = value;
        }
    }
    if (!header.empty()) {
        dataset.column_names.assign(header.begin() + (time_column ? 1 : 0), header.end());
    }
    return dataset;
}

Dataset load_csv(const std::string& path, const CsvSchema& schema) {
    std::ifstream input(path);
    if (!input) throw DataError("cannot open '" + path + "'");
    return parse_csv(input, schema, path);
}

// ---------------------------------------------------------------------------
// Synthetic data

SegmentDistribution SegmentDistribution::gaussian(Eigen::VectorXd mean_vector,
                                                  double sigma) {
    SegmentDistribution segment;
    segment.kind = Kind::gaussian;
    segment.mean = std::move(mean_vector);
    segment.sigma = sigma;
    return segment;
}

SegmentDistribution SegmentDistribution::uniform_box(Eigen::VectorXd lower_bound,
                                                     Eigen::VectorXd upper_bound) {
    SegmentDistribution segment;
    segment.kind = Kind::uniform;
    segment.lower = std::move(lower_bound);
    segment.upper = std::move(upper_bound);
    return segment;
}

std::uint64_t replication_seed(std::uint64_t master_seed, int index) {
    return splitmix64_finalize(master_seed +
                               (static_cast<std::uint64_t>(index) + 1) *
                                   0x9E3779B97F4A7C15ull);
}

Eigen::MatrixXd simulate(const SimulationSpec& spec, std::uint64_t seed) {
    validate_simulation(spec);
    const int d = spec.dimension;

    // Precompute Cholesky factors for full-covariance segments.
    std::vector<Eigen::MatrixXd> factors(spec.segments.size());
    for (std::size_t s = 0; s < spec.segments.size(); ++s) {
        const SegmentDistribution& segment = spec.segments[s];
        if (segment.kind == SegmentDistribution::Kind::gaussian &&
            segment.covariance.size() != 0) {
            Eigen::LLT<Eigen::MatrixXd> llt(segment.covariance);
            if (llt.info() != Eigen::Success) {
                throw InvalidArgument("gaussian covariance is not positive definite");
            }
            factors[s] = llt.matrixL();
        }
    }

    SampleSource source(seed);
    Eigen::MatrixXd data(spec.sample_length, d);
    Eigen::VectorXd draw(d);
    std::size_t segment_index = 0;
    for (int t = 0; t < spec.sample_length; ++t) {
        while (segment_index < spec.change_points.size() &&
               t >= spec.change_points[segment_index]) {
            ++segment_index;
        }
        const SegmentDistribution& segment = spec.segments[segment_index];
        if (segment.kind == SegmentDistribution::Kind::gaussian) {
            for (int c = 0; c < d; ++c) draw(c) = source.normal();
            if (segment.covariance.size() != 0) {
                data.row(t) = (segment.mean + factors[segment_index] * draw).transpose();
            } else {
                data.row(t) = (segment.mean + segment.sigma * draw).transpose();
            }
        } else {
            for (int c = 0; c < d; ++c) {
                data(t, c) = segment.lower(c) +
                             source.uniform01() * (segment.upper(c) - segment.lower(c));
            }
        }
    }
    return data;
}

Eigen::MatrixXd simulate(const SimulationSpec& spec) { return simulate(spec, spec.seed); }

// ---------------------------------------------------------------------------
// Experiments

ExperimentMetrics run_experiment(const ExperimentCell& cell) {
    ExperimentMetrics metrics;
    metrics.label = cell.label;
    metrics.replications = cell.sim.replications;

    const KernelSpec spec(cell.params.family, cell.params.beta, cell.sim.dimension);
    const Spectrum spectrum =
        nulldist::nystrom_spectrum(spec, cell.params.null_params.nystrom_nodes,
                                   cell.params.null_params.eigenvalue_count);

    const bool single_truth = cell.sim.change_points.size() == 1;
    int detections = 0;
    int clean = 0;
    double signed_sum = 0.0;
    double abs_sum = 0.0;
    int error_count = 0;
    double one_minus_p_sum = 0.0;

    for (int rep = 0; rep < cell.sim.replications; ++rep) {
        ReplicationRecord record;
        record.replication = rep;
        try {
            const Eigen::MatrixXd data =
                simulate(cell.sim, replication_seed(cell.sim.seed, rep));
            const ChangePointReport report =
                detect::run_detection(data, cell.params, cell.method, spectrum);
            record.detected = report.detected;
            record.k_hat = report.k_hat;
            if (!report.p_values.empty()) record.p_value = report.p_values.front();
            if (!report.change_points.empty()) {
                record.theta_hat = report.change_points.front();
            }
            if (single_truth && record.theta_hat >= 0) {
                record.signed_error =
                    static_cast<double>(record.theta_hat - cell.sim.change_points[0]);
            }
        } catch (const Error&) {
            record.failed = true;
        }
        metrics.records.push_back(record);

        if (record.failed) {
            ++metrics.failures;
            continue;
        }
        ++clean;
        one_minus_p_sum += 1.0 - record.p_value;
        if (record.detected) {
            ++detections;
            if (single_truth && record.theta_hat >= 0) {
                signed_sum += record.signed_error;
                abs_sum += std::abs(record.signed_error);
                ++error_count;
            }
        }
    }

    if (clean > 0) {
        metrics.power = static_cast<double>(detections) / clean;
        metrics.confidence = static_cast<double>(clean - detections) / clean;
        metrics.mean_one_minus_p = one_minus_p_sum / clean;
    }
    if (error_count > 0) {
        metrics.mean_signed_error = signed_sum / error_count;
        metrics.mean_abs_error = abs_sum / error_count;
    }
    return metrics;
}

std::vector<ExperimentMetrics> run_experiment_grid(
    const std::vector<ExperimentCell>& grid) {
    std::vector<ExperimentMetrics> metrics;
    metrics.reserve(grid.size());
    for (const ExperimentCell& cell : grid) metrics.push_back(run_experiment(cell));
    return metrics;
}

// ---------------------------------------------------------------------------
// Reports

std::string report_to_json(const ChangePointReport& report, const DetectionParams& params,
                           DetectionMethod method, const ReportContext& context) {
    nlohmann::json j;
    j["schema_version"] = kReportSchemaVersion;
    j["library"] = {{"name", kLibraryName}, {"version", kLibraryVersion}};
    // The report's own tag distinguishes estimator variants ("ratio-iter",
    // "multi-sma") beyond the subcommand-level method name.
    j["method"] = report.method.empty() ? to_string(method) : report.method;
    j["parameters"] = {{"tau", params.tau},
                       {"gamma", params.null_params.gamma},
                       {"kernel", to_string(params.family)},
                       {"beta", params.beta},
                       {"series_terms", params.null_params.series_terms},
                       {"series_step", params.null_params.series_step},
                       {"eigenvalue_count", params.null_params.eigenvalue_count},
                       {"nystrom_nodes", params.null_params.nystrom_nodes},
                       {"iteration_cap", params.iteration_cap},
                       {"max_changepoints", params.max_changepoints}};
    j["data"] = {{"source", context.source},
                 {"rows", context.rows},
                 {"columns", context.columns}};
    j["detected"] = report.detected;
    j["change_points"] = report.change_points;
    j["t_stars"] = report.t_stars;
    j["ratios"] = report.ratios;
    j["p_values"] = report.p_values;
    j["statistics"] = report.statistics;
    j["k_hat"] = report.k_hat;
    j["change_point_labels"] = context.time_labels;
    j["warnings"] = {{"short_sample", report.warning_short_sample},
                     {"insufficient_minima", report.warning_insufficient_minima},
                     {"degenerate_split", report.warning_degenerate_split},
                     {"unaccepted", report.unaccepted}};
    if (context.include_timestamp) {
        const std::time_t now = std::chrono::system_clock::to_time_t(
            std::chrono::system_clock::now());
        std::tm utc{};
        gmtime_r(&now, &utc);
        char stamp[32];
        std::strftime(stamp, sizeof(stamp), "%Y-%m-%dT%H:%M:%SZ", &utc);
        j["timestamp"] = stamp;
    }
    return j.dump(2) + "\n";
}

void write_json_report(const ChangePointReport& report, const DetectionParams& params,
                       DetectionMethod method, const ReportContext& context,
                       const std::string& path) {
    std::ofstream out = open_output(path);
    out << report_to_json(report, params, method, context);
    if (!out) throw DataError("failed writing '" + path + "'");
}

void write_diphoragram_csv(const Diphoragram& diph, const std::string& path) {
    std::ofstream out = open_output(path);
    out << "t,delta\n";
    for (std::size_t i = 0; i < diph.values.size(); ++i) {
        out << (i + 1) << ',' << format_double(diph.values[i]) << '\n';
    }
    if (!out) throw DataError("failed writing '" + path + "'");
}

void write_metrics_csv(const std::vector<ExperimentMetrics>& metrics,
                       const std::string& path) {
    std::ofstream out = open_output(path);
    out << "label,replications,failures,confidence,power,mean_signed_error,"
           "mean_abs_error,mean_one_minus_p\n";
    for (const ExperimentMetrics& cell : metrics) {
        out << cell.label << ',' << cell.replications << ',' << cell.failures << ','
            << format_double(cell.confidence) << ',' << format_double(cell.power) << ','
            << format_double(cell.mean_signed_error) << ','
            << format_double(cell.mean_abs_error) << ','
            << format_double(cell.mean_one_minus_p) << '\n';
    }
    if (!out) throw DataError("failed writing '" + path + "'");
}

void write_points_csv(const Eigen::MatrixXd& points, const std::string& path) {
    std::ofstream out = open_output(path);
    for (Eigen::Index r = 0; r < points.rows(); ++r) {
        for (Eigen::Index c = 0; c < points.cols(); ++c) {
            if (c > 0) out << ',';
            out << format_double(points(r, c));
        }
        out << '\n';
    }
    if (!out) throw DataError("failed writing '" + path + "'");
}

void write_ranks_csv(const RankedSample& ranked, const std::string& path) {
    std::ofstream out = open_output(path);
    for (Eigen::Index c = 0; c < ranked.points.cols(); ++c) out << 'y' << (c + 1) << ',';
    out << "sigma\n";
    for (Eigen::Index r = 0; r < ranked.points.rows(); ++r) {
        for (Eigen::Index c = 0; c < ranked.points.cols(); ++c) {
            out << format_double(ranked.points(r, c)) << ',';
        }
        out << (ranked.sigma[static_cast<std::size_t>(r)] + 1) << '\n';
    }
    if (!out) throw DataError("failed writing '" + path + "'");
}

void write_null_table(const Spectrum& spectrum, const std::string& path) {
    std::ofstream out = open_output(path);
    out << "kind,key,value\n";
    out << "meta,family," << to_string(spectrum.family) << '\n';
    out << "meta,beta," << format_double(spectrum.beta) << '\n';
    out << "meta,dimension," << spectrum.dimension << '\n';
    out << "meta,nodes," << spectrum.nodes << '\n';
    for (std::size_t i = 0; i < spectrum.eigenvalues.size(); ++i) {
        out << "eigenvalue," << (i + 1) << ',' << format_double(spectrum.eigenvalues[i])
            << '\n';
    }
    std::vector<double> positive;
    for (double value : spectrum.eigenvalues) {
        if (value > 0.0) positive.push_back(value);
    }
    if (!positive.empty()) {
        for (double p : {0.90, 0.95, 0.99}) {
            char key[8];
            std::snprintf(key, sizeof(key), "%.2f", p);
            out << "quantile," << key << ','
                << format_double(nulldist::weighted_chisq_quantile(positive, p)) << '\n';
        }
    }
    if (!out) throw DataError("failed writing '" + path + "'");
}

Spectrum read_null_table(const std::string& path) {
    std::ifstream input(path);
    if (!input) throw DataError("cannot open '" + path + "'");
    Spectrum spectrum;
    bool has_family = false, has_beta = false, has_dimension = false, has_nodes = false;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(input, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trimmed(line).empty() || line_number == 1) continue;  // skip header
        const std::vector<std::string> fields = split_fields(line);
        if (fields.size() != 3) {
            throw DataError("'" + path + "' line " + std::to_string(line_number) +
                            ": expected kind,key,value");
        }
        if (fields[0] == "meta") {
            if (fields[1] == "family") {
                spectrum.family = kernel_family_from_string(fields[2]);
                has_family = true;
            } else if (fields[1] == "beta") {
                if (!parse_double(fields[2], spectrum.beta)) {
                    throw DataError("'" + path + "': bad beta value");
                }
                has_beta = true;
            } else if (fields[1] == "dimension") {
                spectrum.dimension = std::stoi(fields[2]);
                has_dimension = true;
            } else if (fields[1] == "nodes") {
                spectrum.nodes = std::stoi(fields[2]);
                has_nodes = true;
            }
        } else if (fields[0] == "eigenvalue") {
            double value = 0.0;
            if (!parse_double(fields[2], value)) {
                throw DataError("'" + path + "' line " + std::to_string(line_number) +
                                ": bad eigenvalue");
            }
            spectrum.eigenvalues.push_back(value);
        }  // quantile rows are informational and skipped on load
    }
    if (!has_family || !has_beta || !has_dimension || !has_nodes ||
        spectrum.eigenvalues.empty()) {
        throw DataError("'" + path + "' is not a complete null-spectrum table");
    }
    return spectrum;
}

}  // namespace rankcpd::harness
