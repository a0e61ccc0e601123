#pragma once

#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "rankcpd/discrepancy.hpp"
#include "rankcpd/kernels.hpp"
#include "rankcpd/nulldist.hpp"
#include "rankcpd/transport.hpp"

namespace rankcpd {

// Tuning of a detection run. The test level gamma lives inside null_params.
struct DetectionParams {
    int tau = 30;
    KernelFamily family = KernelFamily::star;
    double beta = 1.0;
    NullTestParams null_params{};
    int iteration_cap = 10;      // rounds of multi-change-point readjustment
    int max_changepoints = 10;   // largest model size tried by the SMA search
};

enum class DetectionMethod { diphoragram, distance, ratio_iter, sma };

DetectionMethod detection_method_from_string(std::string_view name);
std::string to_string(DetectionMethod method);

// Unified result record for all detectors.
struct ChangePointReport {
    bool detected = false;
    std::vector<int> change_points;  // ascending estimates (1-based time indices)
    std::vector<int> t_stars;        // window positions behind each estimate
    std::vector<double> ratios;      // split-fraction estimates in (0, 1)
    std::vector<double> p_values;
    std::vector<double> statistics;  // method-dependent statistic values
    std::string method;              // diphoragram | distance | ratio-iter | multi-sma
    int k_hat = 0;                   // selected model size (SMA)
    bool warning_short_sample = false;        // T below the recommended 4*tau
    bool warning_insufficient_minima = false; // fewer excluded-argmin picks than requested
    bool warning_degenerate_split = false;    // ratio iteration hit an empty side
    bool unaccepted = false;                  // SMA exhausted max_changepoints
};

namespace detect {

// Location estimate from a windowed-discrepancy series: t* is the smallest
// argmin of the series (1-based), and theta = round(t* / (1 - 1/a)) with
// a = floor(T/tau), clipped into [tau, T - tau].
std::pair<int, int> single_changepoint_from_diphoragram(const Diphoragram& diph);

// Full single-change-point pipeline on raw observations: vector ranks,
// windowed discrepancies, mean sliding discrepancy, null test; location
// estimate attached when the test rejects. A precomputed spectrum may be
// supplied to skip the eigenvalue step.
ChangePointReport detect_single(const Eigen::MatrixXd& observations,
                                const DetectionParams& params);
ChangePointReport detect_single(const Eigen::MatrixXd& observations,
                                const DetectionParams& params,
                                const Spectrum& spectrum);

// Squared distance between the empirical measures before and after a split:
// ||mu_pre - mu_post||^2 for pre = [1, theta], post = [theta + 1, T].
// Requires 2 <= theta <= T - 2.
double distance_statistic(const KernelSpec& spec, const Eigen::MatrixXd& ranked_points,
                          int theta);
double distance_statistic_from_gram(const Eigen::MatrixXd& gram, int theta);

// Distance statistic for every admissible split. Entry k holds the value at
// theta = k + 2 (theta ranges over [2, T - 2]).
std::vector<double> distance_profile_from_gram(const Eigen::MatrixXd& gram);

// Signed ratio statistic of a split:
//   varsigma(theta) = theta / T - ||mu_post|| / (||mu_pre|| + ||mu_post||).
// Both measure norms must be positive. Note that on exactly ranked samples
// the window measures nearly cancel against the almost-uniform full sample
// (theta*mu_pre + (T-theta)*mu_post = T*mu_full), so the statistic is close
// to zero at every split, not only the true one; it is a diagnostic, not a
// localizer, in that regime.
double ratio_statistic(const KernelSpec& spec, const Eigen::MatrixXd& ranked_points,
                       int theta);
double ratio_statistic_from_gram(const Eigen::MatrixXd& gram, int theta);

// Fixed-point iteration of the split fraction: r_0 = 1/2, each round splits
// at round(r * T) and sets r to the post-measure norm share. Stops when the
// step is below tol or after max_iter rounds; a degenerate split (empty
// side) stops the iteration and flags the result. The cancellation noted at
// ratio_statistic makes every fraction a near-fixed point on exactly ranked
// samples, so the iterate stays near its start there.
struct RatioIteration {
    double ratio = 0.5;
    int iterations = 0;
    bool degenerate = false;
};
RatioIteration iterate_ratio(const KernelSpec& spec,
                             const Eigen::MatrixXd& ranked_points, double tol,
                             int max_iter);

// Multiple change points: picks count argmin positions of the windowed
// series with a radius-tau exclusion around each, initializes every estimate
// at t* + tau/2, then readjusts each by the projection weight of the earlier
// regime between its neighbor segments for at most iteration_cap rounds
// (early stop when no estimate moves a full index). Estimates are returned
// ascending. If fewer than count positions are available the report carries
// the achievable number and a warning flag.
ChangePointReport multi_changepoints(const KernelSpec& spec,
                                     const Eigen::MatrixXd& ranked_points, int count,
                                     const DetectionParams& params);

// Smallest accepted model: for k = 0, 1, ..., max_changepoints, estimate k
// change points and test every induced segment for uniformity (each segment
// is re-ranked as a fresh sample; segments shorter than 2*tau fall back to
// two half-length end windows). The first k whose segments all accept is
// returned with its per-segment p-values; if none is accepted the
// max_changepoints result is returned flagged unaccepted.
ChangePointReport sma_estimate(const RankedSample& ranked, const DetectionParams& params,
                               const Spectrum& spectrum);

// Dispatch over the four detection methods on raw observations.
ChangePointReport run_detection(const Eigen::MatrixXd& observations,
                                const DetectionParams& params, DetectionMethod method);
ChangePointReport run_detection(const Eigen::MatrixXd& observations,
                                const DetectionParams& params, DetectionMethod method,
                                const Spectrum& spectrum);

}  // namespace detect
}  // namespace rankcpd
