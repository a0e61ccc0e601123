#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "rankcpd/detect.hpp"
#include "rankcpd/nulldist.hpp"

namespace rankcpd {

inline constexpr const char* kLibraryName = "rankcpd";
inline constexpr const char* kLibraryVersion = "0.1.0";
inline constexpr int kReportSchemaVersion = 1;

namespace harness {

// ---------------------------------------------------------------------------
// Data ingestion

enum class TimeColumn { automatic, yes, no };

struct CsvSchema {
    bool has_header = true;
    // Whether the first column holds time labels rather than data. In
    // automatic mode a column is treated as time labels when its header name
    // is date/time/t/index/month or its first cell is not numeric.
    TimeColumn time_column = TimeColumn::automatic;
};

struct Dataset {
    Eigen::MatrixXd observations;          // T x d
    std::vector<std::string> column_names; // empty when the file has no header
    std::vector<std::string> time_labels;  // empty when there is no time column
};

Dataset load_csv(const std::string& path, const CsvSchema& schema = {});
Dataset parse_csv(std::istream& input, const CsvSchema& schema,
                  const std::string& origin);

// ---------------------------------------------------------------------------
// Synthetic data

struct SegmentDistribution {
    enum class Kind { gaussian, uniform };
    Kind kind = Kind::gaussian;
    // gaussian: mean vector plus either isotropic sigma or a full covariance.
    Eigen::VectorXd mean;
    double sigma = 1.0;
    Eigen::MatrixXd covariance;  // empty means sigma^2 * identity
    // uniform: per-coordinate box bounds.
    Eigen::VectorXd lower;
    Eigen::VectorXd upper;

    static SegmentDistribution gaussian(Eigen::VectorXd mean_vector, double sigma = 1.0);
    static SegmentDistribution uniform_box(Eigen::VectorXd lower_bound,
                                           Eigen::VectorXd upper_bound);
};

struct SimulationSpec {
    int sample_length = 0;
    int dimension = 0;
    std::vector<SegmentDistribution> segments;
    std::vector<int> change_points;  // ascending, strictly inside (0, T)
    std::uint64_t seed = 0;
    int replications = 1;
};

// Deterministic draw for one replication; segment s covers the 1-based index
// range (theta_{s-1}, theta_s]. Sampling uses a fixed 64-bit generator with
// an explicit Box-Muller transform so outputs are identical across standard
// libraries.
Eigen::MatrixXd simulate(const SimulationSpec& spec);
Eigen::MatrixXd simulate(const SimulationSpec& spec, std::uint64_t seed);

// Stream-split seed for replication `index` under a master seed; replications
// are order-independent.
std::uint64_t replication_seed(std::uint64_t master_seed, int index);

// ---------------------------------------------------------------------------
// Experiments

struct ExperimentCell {
    std::string label;
    SimulationSpec sim;
    DetectionParams params;
    DetectionMethod method = DetectionMethod::diphoragram;
    bool null_model = false;  // true when the simulation plants no change point
};

struct ReplicationRecord {
    int replication = 0;
    bool detected = false;
    bool failed = false;
    double p_value = 0.0;
    int theta_hat = -1;        // first estimate, -1 when none
    int k_hat = 0;
    double signed_error = 0.0; // theta_hat - true theta (single-change specs)
};

struct ExperimentMetrics {
    std::string label;
    int replications = 0;
    int failures = 0;
    double confidence = 0.0;      // share of clean runs with no detection
    double power = 0.0;           // share of clean runs with a detection
    double mean_signed_error = 0.0;
    double mean_abs_error = 0.0;
    double mean_one_minus_p = 0.0;
    std::vector<ReplicationRecord> records;
};

// Runs the cell's detector on `sim.replications` independent draws and
// aggregates the outcome rates. A spectrum computed once per cell is shared
// across replications.
ExperimentMetrics run_experiment(const ExperimentCell& cell);
std::vector<ExperimentMetrics> run_experiment_grid(const std::vector<ExperimentCell>& grid);

// ---------------------------------------------------------------------------
// Reports

struct ReportContext {
    std::string source;                    // input path or "simulated"
    int rows = 0;
    int columns = 0;
    std::vector<std::string> time_labels;  // labels for detected change points
    bool include_timestamp = true;
};

std::string report_to_json(const ChangePointReport& report, const DetectionParams& params,
                           DetectionMethod method, const ReportContext& context);
void write_json_report(const ChangePointReport& report, const DetectionParams& params,
                       DetectionMethod method, const ReportContext& context,
                       const std::string& path);
void write_diphoragram_csv(const Diphoragram& diph, const std::string& path);
void write_metrics_csv(const std::vector<ExperimentMetrics>& metrics,
                       const std::string& path);
void write_points_csv(const Eigen::MatrixXd& points, const std::string& path);
void write_ranks_csv(const RankedSample& ranked, const std::string& path);

// Null-spectrum cache: eigenvalues plus reference quantiles, reusable by the
// detect subcommand. The file records the kernel family, beta, dimension and
// node count and is validated on load.
void write_null_table(const Spectrum& spectrum, const std::string& path);
Spectrum read_null_table(const std::string& path);

}  // namespace harness
}  // namespace rankcpd
