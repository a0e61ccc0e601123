// Acceptance gate: one checked criterion per section, each printing a single
// PASS/FAIL line. Run with no argument for all criteria, or pass 1..10 / e2e
// to run one.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdarg>
#include <cstring>
#include <fstream>
#include <numeric>
#include <string>
#include <vector>

#include "json.hpp"
#include "support.hpp"

#include "rankcpd/detect.hpp"
#include "rankcpd/discrepancy.hpp"
#include "rankcpd/harness.hpp"
#include "rankcpd/kernels.hpp"
#include "rankcpd/lds.hpp"
#include "rankcpd/nulldist.hpp"
#include "rankcpd/transport.hpp"

using namespace rankcpd;
using testsupport::TestRng;

namespace {

int g_failures = 0;

void report(bool ok, const std::string& label, const std::string& detail) {
    std::printf("[%s] %s — %s\n", ok ? "PASS" : "FAIL", label.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

std::string fmt(const char* pattern, ...) {
    char buffer[512];
    va_list args;
    va_start(args, pattern);
    std::vsnprintf(buffer, sizeof(buffer), pattern, args);
    va_end(args);
    return buffer;
}

// ---------------------------------------------------------------------------
// 1. Location-estimator arithmetic: t* = 950, T = 2000, tau = 100 -> 1000.

void criterion1() {
    Diphoragram diph;
    diph.tau = 100;
    diph.sample_length = 2000;
    diph.values.assign(2000 - 100 + 1, 1.0);
    diph.values[949] = 0.5;  // t* = 950 (1-based)
    const auto [t_star, theta_hat] = detect::single_changepoint_from_diphoragram(diph);
    report(t_star == 950 && theta_hat == 1000, "criterion 1: estimator arithmetic",
           fmt("t*=%d theta_hat=%d (want 950 -> 1000)", t_star, theta_hat));
}

// ---------------------------------------------------------------------------
// 2. Assignment optimality vs exhaustive 8! brute force, 100 instances.

void criterion2() {
    TestRng rng(271828);
    int matched = 0;
    double worst_gap = 0.0;
    for (int instance = 0; instance < 100; ++instance) {
        const Eigen::MatrixXd cost = 10.0 * rng.uniform_matrix(8, 8);
        const Assignment solved = transport::optimal_assignment(cost);

        std::vector<int> perm(8);
        std::iota(perm.begin(), perm.end(), 0);
        double best = std::numeric_limits<double>::infinity();
        do {
            double total = 0.0;
            for (int i = 0; i < 8; ++i) total += cost(i, perm[i]);
            best = std::min(best, total);
        } while (std::next_permutation(perm.begin(), perm.end()));

        const double gap = std::abs(solved.cost - best);
        worst_gap = std::max(worst_gap, gap);
        if (gap <= 1e-9) ++matched;
    }
    report(matched == 100, "criterion 2: assignment optimality",
           fmt("%d/100 instances match brute force (worst gap %.2e)", matched,
               worst_gap));
}

// ---------------------------------------------------------------------------
// 3. Kernel correctness: closed form vs quadrature double centering (d <= 2),
//    integral of K over x, and the M constants.

double eta1(const KernelSpec& spec, double x, double y) {
    Eigen::VectorXd vx(1), vy(1);
    vx << x;
    vy << y;
    return kernels::eta(spec, vx, vy);
}

void criterion3() {
    bool ok = true;
    std::string detail;

    const double m_star = kernels::scale_constant(KernelFamily::star, 1.0);
    const double m_centered = kernels::scale_constant(KernelFamily::centered, 1.0);
    if (std::abs(m_star - 2.0 / 3.0) > 1e-10 ||
        std::abs(m_centered - 11.0 / 12.0) > 1e-10) {
        ok = false;
        detail += fmt("M constants off (star %.12f, centered %.12f); ", m_star,
                      m_centered);
    }

    // Double centering by quadrature, d = 1: direct 2-D midpoint grid.
    const std::vector<std::pair<double, double>> pairs = {
        {0.30, 0.70}, {0.12, 0.95}, {0.50, 0.50}};
    double worst_centering = 0.0;
    for (const KernelFamily family : {KernelFamily::star, KernelFamily::centered}) {
        const KernelSpec spec(family, 1.0, 1);
        const int nodes = 2000;
        std::vector<double> row_means(nodes, 0.0);
        double grand = 0.0;
        std::vector<double> grid(nodes);
        for (int i = 0; i < nodes; ++i) grid[i] = (i + 0.5) / nodes;
        for (int i = 0; i < nodes; ++i) {
            double acc = 0.0;
            for (int j = 0; j < nodes; ++j) acc += eta1(spec, grid[i], grid[j]);
            row_means[i] = acc / nodes;
            grand += acc;
        }
        grand /= static_cast<double>(nodes) * nodes;
        auto mean_against = [&](double point) {
            double acc = 0.0;
            for (int j = 0; j < nodes; ++j) acc += eta1(spec, point, grid[j]);
            return acc / nodes;
        };
        for (const auto& [x, y] : pairs) {
            const double quadrature =
                eta1(spec, x, y) - mean_against(x) - mean_against(y) + grand;
            Eigen::VectorXd vx(1), vy(1);
            vx << x;
            vy << y;
            const double closed = kernels::centered_kernel(spec, vx, vy);
            worst_centering = std::max(worst_centering, std::abs(closed - quadrature));
        }
        // d = 2: the product structure of eta factorizes every integral into
        // per-coordinate 1-D integrals computed numerically.
        const KernelSpec spec2(family, 1.0, 2);
        const KernelSpec factor(family, 1.0, 1);
        auto coordinate_mean = [&](double point) {
            return testsupport::midpoint(
                [&](double t) { return eta1(factor, point, t); }, 0.0, 1.0, 20000);
        };
        const double factor_grand = [&] {
            double acc = 0.0;
            for (int i = 0; i < nodes; ++i)
                for (int j = 0; j < nodes; ++j) acc += eta1(factor, grid[i], grid[j]);
            return acc / (static_cast<double>(nodes) * nodes);
        }();
        const std::vector<std::pair<Eigen::Vector2d, Eigen::Vector2d>> pairs2 = {
            {{0.30, 0.80}, {0.70, 0.25}}, {{0.12, 0.40}, {0.95, 0.52}}};
        for (const auto& [x, y] : pairs2) {
            const double eta_xy = eta1(factor, x(0), y(0)) * eta1(factor, x(1), y(1));
            const double mean_x = coordinate_mean(x(0)) * coordinate_mean(x(1));
            const double mean_y = coordinate_mean(y(0)) * coordinate_mean(y(1));
            const double quadrature =
                eta_xy - mean_x - mean_y + factor_grand * factor_grand;
            const double closed = kernels::centered_kernel(spec2, x, y);
            worst_centering = std::max(worst_centering, std::abs(closed - quadrature));
        }
    }
    if (worst_centering > 1e-6) {
        ok = false;
        detail += fmt("double-centering gap %.2e > 1e-6; ", worst_centering);
    }

    // Integral of K(., y) vanishes: piecewise Simpson split at the kinks.
    double worst_integral = 0.0;
    for (const KernelFamily family : {KernelFamily::star, KernelFamily::centered}) {
        const KernelSpec spec(family, 1.0, 1);
        for (const double y : {0.2, 0.5, 0.8}) {
            Eigen::VectorXd vy(1);
            vy << y;
            const double integral = testsupport::integrate_unit(
                [&](double x) {
                    Eigen::VectorXd vx(1);
                    vx << x;
                    return kernels::centered_kernel(spec, vx, vy);
                },
                {y, 0.5}, 4096);
            worst_integral = std::max(worst_integral, std::abs(integral));
        }
    }
    if (worst_integral > 1e-8) {
        ok = false;
        detail += fmt("integral of K over x reaches %.2e > 1e-8; ", worst_integral);
    }

    if (ok) {
        detail = fmt("centering gap %.2e, integral %.2e, M exact to 1e-10",
                     worst_centering, worst_integral);
    }
    report(ok, "criterion 3: kernel correctness", detail);
}

// ---------------------------------------------------------------------------
// 4. Null distribution: series CDF vs 200k Monte Carlo; chi2(1) quantile.

void criterion4() {
    const Spectrum spectrum =
        nulldist::nystrom_spectrum(KernelSpec(KernelFamily::star, 1.0, 3), 512, 20);
    std::vector<double> lambdas;
    for (double value : spectrum.eigenvalues)
        if (value > 0.0) lambdas.push_back(value);

    TestRng rng(99);
    const int draws = 200000;
    std::vector<double> sample(draws);
    for (int i = 0; i < draws; ++i) {
        double acc = 0.0;
        for (double lambda : lambdas) {
            const double z = rng.normal();
            acc += lambda * z * z;
        }
        sample[i] = acc;
    }
    std::sort(sample.begin(), sample.end());

    const int terms = 4096;
    double sup = 0.0;
    const double hi = sample.back();
    for (int i = 1; i <= 400; ++i) {
        const double x = hi * i / 400.0;
        const double series = nulldist::weighted_chisq_cdf(lambdas, x, terms, 0.5);
        const auto it = std::upper_bound(sample.begin(), sample.end(), x);
        const double empirical =
            static_cast<double>(it - sample.begin()) / draws;
        sup = std::max(sup, std::abs(series - empirical));
    }

    const std::vector<double> unit = {1.0};
    const double quantile = nulldist::weighted_chisq_quantile(unit, 0.95, terms, 0.5);
    const double quantile_gap = std::abs(quantile - 3.841);

    report(sup <= 0.02 && quantile_gap <= 0.02, "criterion 4: null distribution",
           fmt("sup |CDF - MC| = %.4f (<= 0.02), chi2(1) 0.95-quantile %.4f "
               "(gap %.4f <= 0.02)",
               sup, quantile, quantile_gap));
}

// ---------------------------------------------------------------------------
// 5. Calibration: T=200, d=3, tau=30, gamma=0.1, 100 null replications.

void criterion5() {
    harness::ExperimentCell cell;
    cell.label = "null-calibration";
    cell.null_model = true;
    cell.sim.sample_length = 200;
    cell.sim.dimension = 3;
    cell.sim.segments = {
        harness::SegmentDistribution::gaussian(Eigen::VectorXd::Zero(3))};
    cell.sim.replications = 100;
    cell.sim.seed = 1001;
    cell.params.tau = 30;
    cell.params.null_params.gamma = 0.1;
    const harness::ExperimentMetrics metrics = harness::run_experiment(cell);
    report(metrics.power <= 0.2 && metrics.failures == 0,
           "criterion 5: calibration",
           fmt("false-alarm rate %.2f (<= 0.2), failures %d", metrics.power,
               metrics.failures));
}

// ---------------------------------------------------------------------------
// 6. Power trend over the mean-shift grid; star vs centered at high shifts.

harness::ExperimentCell shift_cell(double shift, KernelFamily family,
                                   std::uint64_t seed) {
    const int d = 3;
    harness::ExperimentCell cell;
    cell.label = "shift";
    cell.sim.sample_length = 200;
    cell.sim.dimension = d;
    cell.sim.change_points = {100};
    cell.sim.segments = {
        harness::SegmentDistribution::gaussian(Eigen::VectorXd::Zero(d)),
        harness::SegmentDistribution::gaussian(shift * Eigen::VectorXd::Ones(d))};
    cell.sim.replications = 20;
    cell.sim.seed = seed;
    cell.params.tau = 30;
    cell.params.family = family;
    cell.params.null_params.gamma = 0.1;
    return cell;
}

void criterion6() {
    std::vector<double> shifts, star_power;
    for (int i = 2; i <= 10; ++i) shifts.push_back(i / 10.0);
    for (std::size_t i = 0; i < shifts.size(); ++i) {
        const harness::ExperimentMetrics metrics = harness::run_experiment(
            shift_cell(shifts[i], KernelFamily::star, 6000 + 100 * i));
        star_power.push_back(metrics.power);
    }
    const double rho = testsupport::spearman(shifts, star_power);

    // Paired comparison at the top of the grid: same data, other kernel.
    int star_wins = 0;
    for (std::size_t i = shifts.size() - 3; i < shifts.size(); ++i) {
        const harness::ExperimentMetrics centered = harness::run_experiment(
            shift_cell(shifts[i], KernelFamily::centered, 6000 + 100 * i));
        if (star_power[i] >= centered.power) ++star_wins;
    }

    std::string powers = "powers";
    for (double p : star_power) powers += fmt(" %.2f", p);
    report(rho > 0.0 && star_wins >= 2, "criterion 6: power trend",
           fmt("Spearman rho %.3f (> 0), star >= centered in %d/3 top cells; %s",
               rho, star_wins, powers.c_str()));
}

// ---------------------------------------------------------------------------
// 7. Single change point at scale: T=2000, d=5, shift 5, tau=100, 20 runs.

void criterion7() {
    const int d = 5;
    harness::SimulationSpec sim;
    sim.sample_length = 2000;
    sim.dimension = d;
    sim.change_points = {1000};
    sim.segments = {
        harness::SegmentDistribution::gaussian(Eigen::VectorXd::Zero(d)),
        harness::SegmentDistribution::gaussian(5.0 * Eigen::VectorXd::Ones(d))};
    DetectionParams params;
    params.tau = 100;
    const Spectrum spectrum =
        nulldist::nystrom_spectrum(KernelSpec(params.family, params.beta, d), 512, 50);

    int detected = 0, within = 0;
    for (int rep = 0; rep < 20; ++rep) {
        const Eigen::MatrixXd data =
            harness::simulate(sim, harness::replication_seed(7007, rep));
        const ChangePointReport run = detect::run_detection(
            data, params, DetectionMethod::diphoragram, spectrum);
        if (!run.detected) continue;
        ++detected;
        if (!run.change_points.empty() &&
            std::abs(run.change_points.front() - 1000) <= 50) {
            ++within;
        }
    }
    const bool ok = detected >= 18 && within * 10 >= detected * 9;
    report(ok, "criterion 7: single-change-point accuracy",
           fmt("detected %d/20 (need >= 18), |theta-1000| <= 50 in %d/%d detecting "
               "(need >= 90%%)",
               detected, within, detected));
}

// ---------------------------------------------------------------------------
// 8. Midpoint-bias trend over the split-ratio grid.

void criterion8() {
    const int d = 2, length = 300;
    const std::vector<double> ratios = {0.50, 0.45, 0.40, 0.35, 0.30};
    std::vector<double> mean_errors;
    DetectionParams params;
    params.tau = 50;
    const Spectrum spectrum =
        nulldist::nystrom_spectrum(KernelSpec(params.family, params.beta, d), 512, 50);

    for (std::size_t cell = 0; cell < ratios.size(); ++cell) {
        const int theta = static_cast<int>(std::llround(ratios[cell] * length));
        harness::SimulationSpec sim;
        sim.sample_length = length;
        sim.dimension = d;
        sim.change_points = {theta};
        sim.segments = {
            harness::SegmentDistribution::gaussian(Eigen::VectorXd::Zero(d)),
            harness::SegmentDistribution::uniform_box(-Eigen::VectorXd::Ones(d),
                                                      Eigen::VectorXd::Ones(d))};
        double error_sum = 0.0;
        int count = 0;
        for (int rep = 0; rep < 20; ++rep) {
            const Eigen::MatrixXd data =
                harness::simulate(sim, harness::replication_seed(808 + cell, rep));
            const ChangePointReport run = detect::run_detection(
                data, params, DetectionMethod::diphoragram, spectrum);
            if (run.change_points.empty()) continue;
            error_sum += run.change_points.front() - theta;
            ++count;
        }
        mean_errors.push_back(count > 0 ? error_sum / count : 0.0);
    }

    const double rho = testsupport::spearman(ratios, mean_errors);
    std::string errs = "mean signed errors";
    for (double e : mean_errors) errs += fmt(" %.1f", e);
    report(rho < 0.0, "criterion 8: midpoint-bias trend",
           fmt("Spearman(r, signed error) = %.3f (< 0: error grows toward T/2 as r "
               "drops); %s",
               rho, errs.c_str()));
}

// ---------------------------------------------------------------------------
// 9. Multiple change points: iterative correction vs blind adjustment; SMA.

void criterion9() {
    const int d = 3;
    harness::SimulationSpec sim;
    sim.sample_length = 300;
    sim.dimension = d;
    sim.change_points = {120, 240};
    sim.segments = {
        harness::SegmentDistribution::gaussian(3.0 * Eigen::VectorXd::Ones(d)),
        harness::SegmentDistribution::uniform_box(10.0 * Eigen::VectorXd::Ones(d),
                                                  20.0 * Eigen::VectorXd::Ones(d)),
        harness::SegmentDistribution::gaussian(-3.0 * Eigen::VectorXd::Ones(d))};

    DetectionParams params;
    params.tau = 50;
    params.family = KernelFamily::centered;
    params.null_params.gamma = 0.1;
    params.max_changepoints = 5;
    const KernelSpec spec(params.family, params.beta, d);
    const Spectrum spectrum =
        nulldist::nystrom_spectrum(spec, 512, 50);

    int improved = 0, sma_exact = 0;
    for (int rep = 0; rep < 20; ++rep) {
        const Eigen::MatrixXd data =
            harness::simulate(sim, harness::replication_seed(123, rep));
        const RankedSample ranked = transport::vector_ranks(data);

        const ChangePointReport multi =
            detect::multi_changepoints(spec, ranked.points, 2, params);
        double blind_error = 0.0, corrected_error = 0.0;
        for (std::size_t k = 0; k < multi.change_points.size(); ++k) {
            const double truth = k == 0 ? 120.0 : 240.0;
            const double blind =
                multi.t_stars[k] + std::llround(params.tau / 2.0);
            blind_error += std::abs(blind - truth);
            corrected_error += std::abs(multi.change_points[k] - truth);
        }
        if (corrected_error < blind_error) ++improved;

        const ChangePointReport sma = detect::sma_estimate(ranked, params, spectrum);
        if (sma.k_hat == 2 && !sma.unaccepted) ++sma_exact;
    }
    report(improved >= 14 && sma_exact >= 14, "criterion 9: multi-change-point",
           fmt("correction beats blind in %d/20 (need >= 14), SMA K=2 in %d/20 "
               "(need >= 14)",
               improved, sma_exact));
}

// ---------------------------------------------------------------------------
// 10. Structural invariants.

void criterion10() {
    bool ok = true;
    std::string detail;

    // Incremental diphoragram equals direct windowed recomputation.
    TestRng rng(555);
    {
        const int length = 400, tau = 50;
        const Eigen::MatrixXd points = rng.uniform_matrix(length, 3);
        double worst = 0.0;
        for (const KernelFamily family :
             {KernelFamily::star, KernelFamily::centered}) {
            const KernelSpec spec(family, 1.0, 3);
            const Diphoragram diph =
                discrepancy::sliding_diphoragram(spec, points, tau);
            for (int t = 1; t <= length - tau + 1; ++t) {
                const double direct = discrepancy::squared_discrepancy(
                    spec, points.middleRows(t - 1, tau));
                worst = std::max(worst, std::abs(direct - diph.values[t - 1]));
            }
        }
        if (worst > 1e-9) {
            ok = false;
            detail += fmt("incremental gap %.2e > 1e-9; ", worst);
        } else {
            detail += fmt("incremental gap %.2e; ", worst);
        }
    }

    // Affine invariance of the optimal-assignment permutation.
    {
        int invariant = 0;
        for (int instance = 0; instance < 50; ++instance) {
            const int length = 8 + static_cast<int>(rng.below(57));  // 8..64
            const int d = 1 + static_cast<int>(rng.below(4));
            const Eigen::MatrixXd data = rng.normal_matrix(length, d);
            const double scale = 0.2 + 4.8 * rng.uniform01();
            Eigen::RowVectorXd offset(d);
            for (int c = 0; c < d; ++c) offset(c) = 20.0 * (rng.uniform01() - 0.5);
            const Eigen::MatrixXd transformed =
                (scale * data).rowwise() + offset;
            if (transport::vector_ranks(data).sigma ==
                transport::vector_ranks(transformed).sigma) {
                ++invariant;
            }
        }
        if (invariant != 50) {
            ok = false;
            detail += fmt("affine invariance %d/50; ", invariant);
        } else {
            detail += "affine invariance 50/50; ";
        }
    }

    // Dyadic balance of Sobol prefixes for m <= 10.
    {
        bool balanced = true;
        const Eigen::MatrixXd points = lds::sobol_prefix(1024, 5);
        for (int m = 1; m <= 10 && balanced; ++m) {
            const int count = 1 << m;
            for (int c = 0; c < 5 && balanced; ++c) {
                std::vector<int> hits(count, 0);
                for (int i = 0; i < count; ++i) {
                    const int cell = static_cast<int>(points(i, c) * count);
                    if (cell < 0 || cell >= count || hits[cell]++ > 0) {
                        balanced = false;
                        break;
                    }
                }
            }
        }
        if (!balanced) {
            ok = false;
            detail += "dyadic balance violated; ";
        } else {
            detail += "dyadic balance m<=10; ";
        }
    }

    // Byte-identical JSON under a fixed seed, full pipeline rebuilt twice.
    {
        auto pipeline = [] {
            harness::SimulationSpec sim;
            sim.sample_length = 200;
            sim.dimension = 2;
            sim.change_points = {100};
            sim.segments = {
                harness::SegmentDistribution::gaussian(Eigen::VectorXd::Zero(2)),
                harness::SegmentDistribution::gaussian(
                    3.0 * Eigen::VectorXd::Ones(2))};
            sim.seed = 314;
            const Eigen::MatrixXd data = harness::simulate(sim);
            DetectionParams params;
            params.tau = 30;
            const ChangePointReport run =
                detect::run_detection(data, params, DetectionMethod::diphoragram);
            harness::ReportContext context;
            context.source = "simulated";
            context.rows = 200;
            context.columns = 2;
            context.include_timestamp = false;
            return harness::report_to_json(run, params,
                                           DetectionMethod::diphoragram, context);
        };
        const std::string first = pipeline();
        const std::string second = pipeline();
        if (first != second || first.empty()) {
            ok = false;
            detail += "reports differ across reruns";
        } else {
            detail += "reports byte-identical";
        }
    }

    report(ok, "criterion 10: structural invariants", detail);
}

// ---------------------------------------------------------------------------
// End-to-end on the bundled 1091 x 5 monthly-returns CSV (format-level).

void end_to_end() {
    const std::string path = std::string(TEST_DATA_DIR) + "/portfolio_returns.csv";
    const harness::Dataset dataset = harness::load_csv(path);
    bool ok = dataset.observations.rows() == 1091 && dataset.observations.cols() == 5 &&
              dataset.time_labels.size() == 1091;

    DetectionParams params;
    params.tau = 50;
    params.null_params.gamma = 0.2;
    // Five-dimensional data needs a richer spectrum: the default top-50
    // eigenvalues capture only ~78% of the kernel trace at d = 5, which
    // understates the null law; 200 restores calibration.
    params.null_params.eigenvalue_count = 200;
    const ChangePointReport run = detect::run_detection(
        dataset.observations, params, DetectionMethod::sma);
    ok = ok && !run.detected && run.k_hat == 0 && run.change_points.empty() &&
         !run.unaccepted;

    harness::ReportContext context;
    context.source = path;
    context.rows = static_cast<int>(dataset.observations.rows());
    context.columns = static_cast<int>(dataset.observations.cols());
    context.include_timestamp = true;
    for (int cp : run.change_points) {
        if (cp >= 1 && cp <= static_cast<int>(dataset.time_labels.size())) {
            context.time_labels.push_back(dataset.time_labels[cp - 1]);
        }
    }
    const std::string report_path = "acceptance_financial_report.json";
    harness::write_json_report(run, params, DetectionMethod::sma, context, report_path);

    std::ifstream in(report_path);
    nlohmann::json parsed;
    in >> parsed;
    ok = ok && parsed.at("schema_version").get<int>() == 1 &&
         parsed.at("data").at("rows").get<int>() == 1091 &&
         parsed.at("data").at("columns").get<int>() == 5 &&
         parsed.at("p_values").is_array() && !parsed.at("p_values").empty() &&
         parsed.at("change_points").size() ==
             parsed.at("change_point_labels").size() &&
         parsed.contains("timestamp");

    std::string cps = "change points";
    for (std::size_t i = 0; i < run.change_points.size(); ++i) {
        cps += fmt(" %d(%s)", run.change_points[i], context.time_labels[i].c_str());
    }
    report(ok, "end-to-end: 1091x5 monthly returns",
           fmt("rows 1091, cols 5, K=%d, %s, report well-formed", run.k_hat,
               cps.c_str()));
}

}  // namespace

int main(int argc, char** argv) {
    const std::string selector = argc > 1 ? argv[1] : "all";
    const bool all = selector == "all";
    if (all || selector == "1") criterion1();
    if (all || selector == "2") criterion2();
    if (all || selector == "3") criterion3();
    if (all || selector == "4") criterion4();
    if (all || selector == "5") criterion5();
    if (all || selector == "6") criterion6();
    if (all || selector == "7") criterion7();
    if (all || selector == "8") criterion8();
    if (all || selector == "9") criterion9();
    if (all || selector == "10") criterion10();
    if (all || selector == "e2e") end_to_end();
    return g_failures == 0 ? 0 : 1;
}
