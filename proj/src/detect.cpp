#include "rankcpd/detect.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "rankcpd/error.hpp"

namespace rankcpd {

DetectionMethod detection_method_from_string(std::string_view name) {
    if (name == "diphoragram") return DetectionMethod::diphoragram;
    if (name == "distance") return DetectionMethod::distance;
    if (name == "ratio") return DetectionMethod::ratio_iter;
    if (name == "sma") return DetectionMethod::sma;
    throw InvalidArgument("unknown detection method '" + std::string(name) +
                          "' (expected diphoragram, distance, ratio, or sma)");
}

std::string to_string(DetectionMethod method) {
    switch (method) {
        case DetectionMethod::diphoragram: return "diphoragram";
        case DetectionMethod::distance: return "distance";
        case DetectionMethod::ratio_iter: return "ratio";
        case DetectionMethod::sma: return "sma";
    }
    return "diphoragram";
}

namespace detect {
namespace {

void check_params(const DetectionParams& params, int sample_length) {
    if (params.tau < 2 || 2 * params.tau > sample_length) {
        throw InvalidArgument("bandwidth tau must satisfy 2 <= tau <= T/2, got tau=" +
                              std::to_string(params.tau) + " with T=" +
                              std::to_string(sample_length));
    }
}

void check_spectrum(const Spectrum& spectrum, const KernelSpec& spec) {
    if (spectrum.family != spec.family() || spectrum.beta != spec.beta() ||
        spectrum.dimension != spec.dimension()) {
        throw DataError("null spectrum parameters do not match the detection kernel");
    }
}

Spectrum default_spectrum(const DetectionParams& params, int dimension) {
    KernelSpec spec(params.family, params.beta, dimension);
    return nulldist::nystrom_spectrum(spec, params.null_params.nystrom_nodes,
                                      params.null_params.eigenvalue_count);
}

double clamped_norm(double squared) { return std::sqrt(std::max(squared, 0.0)); }

// Split statistics shared by the distance and ratio estimators.
struct SplitInners {
    double pre = 0.0;
    double cross = 0.0;
    double post = 0.0;
};

SplitInners split_inners_from_gram(const Eigen::MatrixXd& gram, int theta) {
    const int sample_length = static_cast<int>(gram.rows());
    if (theta < 2 || theta > sample_length - 2) {
        throw InvalidArgument("split candidate must lie in [2, T - 2]");
    }
    const MeasureWindow pre{1, theta};
    const MeasureWindow post{theta + 1, sample_length};
    SplitInners inners;
    inners.pre = discrepancy::nonuniformity_inner_from_gram(gram, pre, pre);
    inners.cross = discrepancy::nonuniformity_inner_from_gram(gram, pre, post);
    inners.post = discrepancy::nonuniformity_inner_from_gram(gram, post, post);
    return inners;
}

double ratio_from_inners(const SplitInners& inners, int theta, int sample_length) {
    const double pre_norm = clamped_norm(inners.pre);
    const double post_norm = clamped_norm(inners.post);
    if (!(pre_norm + post_norm > 0.0)) {
        throw NumericError("both split measures have zero nonuniformity norm");
    }
    return static_cast<double>(theta) / sample_length - post_norm / (pre_norm + post_norm);
}

RatioIteration iterate_ratio_from_gram(const Eigen::MatrixXd& gram, double tol,
                                       int max_iter) {
    if (max_iter < 1) throw InvalidArgument("ratio iteration needs max_iter >= 1");
    if (!(tol > 0.0)) throw InvalidArgument("ratio iteration tolerance must be positive");
    const int sample_length = static_cast<int>(gram.rows());
    RatioIteration result;
    result.ratio = 0.5;
    for (int m = 1; m <= max_iter; ++m) {
        const int theta = static_cast<int>(std::llround(result.ratio * sample_length));
        if (theta < 2 || theta > sample_length - 2) {
            result.degenerate = true;
            break;
        }
        const SplitInners inners = split_inners_from_gram(gram, theta);
        const double pre_norm = clamped_norm(inners.pre);
        const double post_norm = clamped_norm(inners.post);
        if (!(pre_norm + post_norm > 0.0)) {
            result.degenerate = true;
            break;
        }
        const double next = post_norm / (pre_norm + post_norm);
        const double step = std::abs(next - result.ratio);
        result.ratio = next;
        result.iterations = m;
        if (step < tol) break;
    }
    return result;
}

// Common first stage of every raw-observation detector: rank, window, test.
struct Pipeline {
    RankedSample ranked;
    Diphoragram diph;
    double delta_bar = 0.0;
    TestDecision decision;
};

Pipeline run_pipeline(const Eigen::MatrixXd& observations, const DetectionParams& params,
                      const Spectrum& spectrum, const KernelSpec& spec) {
    Pipeline pipe;
    pipe.ranked = transport::vector_ranks(observations);
    pipe.diph = discrepancy::sliding_diphoragram(spec, pipe.ranked.points, params.tau);
    pipe.delta_bar = discrepancy::mean_sliding_discrepancy(pipe.diph);
    const int window_count = static_cast<int>(observations.rows()) / params.tau;
    pipe.decision =
        nulldist::null_test(pipe.delta_bar, spectrum, window_count, params.null_params);
    return pipe;
}

ChangePointReport base_report(const Pipeline& pipe, const DetectionParams& params) {
    ChangePointReport report;
    report.detected = pipe.decision.reject;
    report.p_values = {pipe.decision.p_value};
    report.statistics = {pipe.decision.statistic};
    report.warning_short_sample = pipe.diph.sample_length < 4 * params.tau;
    return report;
}

// Segment uniformity check used by the SMA search. The segment is re-ranked
// as a fresh sample (the whole sample is already ranked and is tested as
// is); segments shorter than 2*tau are tested with two half-length windows
// at the segment ends, and segments too short for that (under 4 points)
// are accepted by default.
std::pair<double, bool> segment_test(const Eigen::MatrixXd& ranked_points,
                                     const Eigen::MatrixXd& whole_gram,
                                     const KernelSpec& spec, int lo, int hi,
                                     const Spectrum& spectrum,
                                     const DetectionParams& params) {
    const int sample_length = static_cast<int>(ranked_points.rows());
    const int segment_length = hi - lo + 1;
    if (segment_length < 4) return {0.0, false};

    Eigen::MatrixXd segment_gram;
    if (lo == 1 && hi == sample_length) {
        segment_gram = whole_gram;
    } else {
        const Eigen::MatrixXd segment = ranked_points.middleRows(lo - 1, segment_length);
        const RankedSample reranked = transport::vector_ranks(segment);
        segment_gram = discrepancy::gram_matrix(spec, reranked.points);
    }

    double delta_bar = 0.0;
    int window_count = 0;
    if (segment_length >= 2 * params.tau) {
        const Diphoragram diph =
            discrepancy::sliding_diphoragram_from_gram(segment_gram, params.tau, spec);
        delta_bar = discrepancy::mean_sliding_discrepancy(diph);
        window_count = segment_length / params.tau;
    } else {
        const int half = segment_length / 2;
        const Diphoragram diph =
            discrepancy::sliding_diphoragram_from_gram(segment_gram, half, spec);
        delta_bar = static_cast<double>(half) * half / segment_length *
                    (diph.values[0] + diph.values[segment_length - half]);
        window_count = 2;
    }
    const TestDecision decision =
        nulldist::null_test(delta_bar, spectrum, window_count, params.null_params);
    return {decision.p_value, decision.reject};
}

ChangePointReport multi_changepoints_from_gram(const Eigen::MatrixXd& gram,
                                               const KernelSpec& spec, int count,
                                               const DetectionParams& params) {
    const int sample_length = static_cast<int>(gram.rows());
    const Diphoragram diph =
        discrepancy::sliding_diphoragram_from_gram(gram, params.tau, spec);
    const int positions = static_cast<int>(diph.values.size());

    // Pick up to `count` series minima, blanking a radius-tau neighborhood
    // around each pick.
    std::vector<char> excluded(positions, 0);
    std::vector<int> t_stars;
    for (int k = 0; k < count; ++k) {
        int best = -1;
        double best_value = std::numeric_limits<double>::infinity();
        for (int i = 0; i < positions; ++i) {
            if (!excluded[i] && diph.values[i] < best_value) {
                best_value = diph.values[i];
                best = i;
            }
        }
        if (best < 0) break;
        t_stars.push_back(best + 1);
        const int from = std::max(0, best - params.tau);
        const int to = std::min(positions - 1, best + params.tau);
        for (int i = from; i <= to; ++i) excluded[i] = 1;
    }
    const bool insufficient = static_cast<int>(t_stars.size()) < count;
    std::sort(t_stars.begin(), t_stars.end());
    const int found = static_cast<int>(t_stars.size());

    // Blind initialization at the window midpoint; exclusion keeps the picks
    // at least tau+1 apart, so estimates stay strictly ascending throughout.
    std::vector<int> theta(found);
    for (int k = 0; k < found; ++k) {
        theta[k] = std::clamp(t_stars[k] + static_cast<int>(std::llround(params.tau / 2.0)),
                              2, sample_length - 1);
    }

    for (int round = 0; round < params.iteration_cap; ++round) {
        int max_move = 0;
        for (int k = 0; k < found; ++k) {
            const int lower = k == 0 ? 0 : theta[k - 1];
            const int upper = k == found - 1 ? sample_length : theta[k + 1];
            if (theta[k] <= lower || upper <= theta[k]) continue;
            const MeasureWindow earlier{lower + 1, theta[k]};
            const MeasureWindow later{theta[k] + 1, upper};
            const double a11 = discrepancy::nonuniformity_inner_from_gram(gram, earlier, earlier);
            const double a12 = discrepancy::nonuniformity_inner_from_gram(gram, earlier, later);
            const double a22 = discrepancy::nonuniformity_inner_from_gram(gram, later, later);
            const double denom = a11 - 2.0 * a12 + a22;
            // Projection weight of the earlier regime inside the t* window,
            // clamped into [0, 1].
            const double weight =
                denom > 0.0 ? std::clamp((a22 - a12) / denom, 0.0, 1.0) : 0.5;
            const int updated =
                std::clamp(t_stars[k] + static_cast<int>(std::llround(weight * params.tau)),
                           2, sample_length - 1);
            max_move = std::max(max_move, std::abs(updated - theta[k]));
            theta[k] = updated;
        }
        if (max_move < 1) break;
    }

    ChangePointReport report;
    report.method = "multi-sma";
    report.detected = found > 0;
    report.k_hat = found;
    report.warning_insufficient_minima = insufficient;
    report.change_points = theta;
    report.t_stars = t_stars;
    for (int k = 0; k < found; ++k) {
        report.ratios.push_back(static_cast<double>(theta[k]) / sample_length);
        report.statistics.push_back(diph.values[t_stars[k] - 1]);
    }
    return report;
}

}  // namespace

std::pair<int, int> single_changepoint_from_diphoragram(const Diphoragram& diph) {
    const int window_count = diph.sample_length / diph.tau;
    if (window_count < 2) {
        throw InvalidArgument("location estimate needs floor(T/tau) >= 2");
    }
    const auto minimum = std::min_element(diph.values.begin(), diph.values.end());
    const int t_star = static_cast<int>(minimum - diph.values.begin()) + 1;
    const double scale = 1.0 - 1.0 / static_cast<double>(window_count);
    int theta = static_cast<int>(std::llround(t_star / scale));
    theta = std::clamp(theta, diph.tau, diph.sample_length - diph.tau);
    return {t_star, theta};
}

ChangePointReport detect_single(const Eigen::MatrixXd& observations,
                                const DetectionParams& params) {
    return detect_single(observations, params,
                         default_spectrum(params, static_cast<int>(observations.cols())));
}

ChangePointReport detect_single(const Eigen::MatrixXd& observations,
                                const DetectionParams& params, const Spectrum& spectrum) {
    check_params(params, static_cast<int>(observations.rows()));
    const KernelSpec spec(params.family, params.beta,
                          static_cast<int>(observations.cols()));
    check_spectrum(spectrum, spec);
    const Pipeline pipe = run_pipeline(observations, params, spectrum, spec);
    ChangePointReport report = base_report(pipe, params);
    report.method = "diphoragram";
    if (report.detected) {
        const auto [t_star, theta] = single_changepoint_from_diphoragram(pipe.diph);
        report.t_stars = {t_star};
        report.change_points = {theta};
        report.ratios = {static_cast<double>(theta) / pipe.diph.sample_length};
    }
    return report;
}

double distance_statistic_from_gram(const Eigen::MatrixXd& gram, int theta) {
    const SplitInners inners = split_inners_from_gram(gram, theta);
    return inners.pre - 2.0 * inners.cross + inners.post;
}

double distance_statistic(const KernelSpec& spec, const Eigen::MatrixXd& ranked_points,
                          int theta) {
    const int sample_length = static_cast<int>(ranked_points.rows());
    if (theta < 2 || theta > sample_length - 2) {
        throw InvalidArgument("split candidate must lie in [2, T - 2]");
    }
    const MeasureWindow pre{1, theta};
    const MeasureWindow post{theta + 1, sample_length};
    return discrepancy::nonuniformity_inner(spec, pre, pre, ranked_points) -
           2.0 * discrepancy::nonuniformity_inner(spec, pre, post, ranked_points) +
           discrepancy::nonuniformity_inner(spec, post, post, ranked_points);
}

std::vector<double> distance_profile_from_gram(const Eigen::MatrixXd& gram) {
    const int sample_length = static_cast<int>(gram.rows());
    if (sample_length < 4) {
        throw InvalidArgument("distance profile needs at least four points");
    }
    const double total = gram.sum();
    std::vector<double> profile(sample_length - 3);
    // Running block sums: pre_sum over [0, theta)^2 and row_sum over
    // [0, theta) x [0, T).
    double pre_sum = gram.block(0, 0, 2, 2).sum();
    double row_sum = gram.row(0).sum() + gram.row(1).sum();
    for (int theta = 2; theta <= sample_length - 2; ++theta) {
        const double cross = row_sum - pre_sum;
        const double post = total - 2.0 * row_sum + pre_sum;
        const double pre_size = theta;
        const double post_size = sample_length - theta;
        profile[theta - 2] = pre_sum / (pre_size * pre_size) -
                             2.0 * cross / (pre_size * post_size) +
                             post / (post_size * post_size);
        if (theta < sample_length - 2) {
            pre_sum += 2.0 * gram.row(theta).segment(0, theta).sum() + gram(theta, theta);
            row_sum += gram.row(theta).sum();
        }
    }
    return profile;
}

double ratio_statistic_from_gram(const Eigen::MatrixXd& gram, int theta) {
    return ratio_from_inners(split_inners_from_gram(gram, theta), theta,
                             static_cast<int>(gram.rows()));
}

double ratio_statistic(const KernelSpec& spec, const Eigen::MatrixXd& ranked_points,
                       int theta) {
    const int sample_length = static_cast<int>(ranked_points.rows());
    if (theta < 2 || theta > sample_length - 2) {
        throw InvalidArgument("split candidate must lie in [2, T - 2]");
    }
    const MeasureWindow pre{1, theta};
    const MeasureWindow post{theta + 1, sample_length};
    SplitInners inners;
    inners.pre = discrepancy::nonuniformity_inner(spec, pre, pre, ranked_points);
    inners.post = discrepancy::nonuniformity_inner(spec, post, post, ranked_points);
    return ratio_from_inners(inners, theta, sample_length);
}

RatioIteration iterate_ratio(const KernelSpec& spec, const Eigen::MatrixXd& ranked_points,
                             double tol, int max_iter) {
    return iterate_ratio_from_gram(discrepancy::gram_matrix(spec, ranked_points), tol,
                                   max_iter);
}

ChangePointReport multi_changepoints(const KernelSpec& spec,
                                     const Eigen::MatrixXd& ranked_points, int count,
                                     const DetectionParams& params) {
    const int sample_length = static_cast<int>(ranked_points.rows());
    check_params(params, sample_length);
    if (count < 1) throw InvalidArgument("change-point count must be positive");
    if (count * params.tau >= sample_length) {
        throw InvalidArgument("count * tau must be below the sample length");
    }
    return multi_changepoints_from_gram(discrepancy::gram_matrix(spec, ranked_points),
                                        spec, count, params);
}

ChangePointReport sma_estimate(const RankedSample& ranked, const DetectionParams& params,
                               const Spectrum& spectrum) {
    const Eigen::MatrixXd& points = ranked.points;
    const int sample_length = static_cast<int>(points.rows());
    check_params(params, sample_length);
    const KernelSpec spec(params.family, params.beta, static_cast<int>(points.cols()));
    check_spectrum(spectrum, spec);
    if (params.max_changepoints < 0) {
        throw InvalidArgument("max_changepoints must be nonnegative");
    }
    if (params.max_changepoints * params.tau >= sample_length) {
        throw InvalidArgument("max_changepoints * tau must be below the sample length");
    }

    const Eigen::MatrixXd gram = discrepancy::gram_matrix(spec, points);
    ChangePointReport last;
    for (int model_size = 0; model_size <= params.max_changepoints; ++model_size) {
        ChangePointReport candidate;
        candidate.method = "multi-sma";
        if (model_size > 0) {
            candidate = multi_changepoints_from_gram(gram, spec, model_size, params);
            if (static_cast<int>(candidate.change_points.size()) < model_size) {
                // The series cannot supply more separated minima; larger
                // models are unreachable as well.
                last = candidate;
                break;
            }
        }

        std::vector<int> bounds = {0};
        bounds.insert(bounds.end(), candidate.change_points.begin(),
                      candidate.change_points.end());
        bounds.push_back(sample_length);
        bool all_accept = true;
        candidate.p_values.clear();
        for (std::size_t s = 0; s + 1 < bounds.size(); ++s) {
            const auto [p_value, reject] = segment_test(
                points, gram, spec, bounds[s] + 1, bounds[s + 1], spectrum, params);
            candidate.p_values.push_back(p_value);
            if (reject) {
                all_accept = false;
                break;
            }
        }
        candidate.k_hat = model_size;
        candidate.detected = model_size > 0;
        if (all_accept) return candidate;
        last = candidate;
    }
    last.unaccepted = true;
    last.method = "multi-sma";
    return last;
}

ChangePointReport run_detection(const Eigen::MatrixXd& observations,
                                const DetectionParams& params, DetectionMethod method) {
    return run_detection(observations, params, method,
                         default_spectrum(params, static_cast<int>(observations.cols())));
}

ChangePointReport run_detection(const Eigen::MatrixXd& observations,
                                const DetectionParams& params, DetectionMethod method,
                                const Spectrum& spectrum) {
    if (method == DetectionMethod::diphoragram) {
        return detect_single(observations, params, spectrum);
    }
    check_params(params, static_cast<int>(observations.rows()));
    const KernelSpec spec(params.family, params.beta,
                          static_cast<int>(observations.cols()));
    check_spectrum(spectrum, spec);

    if (method == DetectionMethod::sma) {
        const RankedSample ranked = transport::vector_ranks(observations);
        ChangePointReport report = sma_estimate(ranked, params, spectrum);
        report.warning_short_sample =
            static_cast<int>(observations.rows()) < 4 * params.tau;
        return report;
    }

    const Pipeline pipe = run_pipeline(observations, params, spectrum, spec);
    ChangePointReport report = base_report(pipe, params);
    const int sample_length = pipe.diph.sample_length;

    if (method == DetectionMethod::distance) {
        report.method = "distance";
        if (report.detected) {
            const Eigen::MatrixXd gram = discrepancy::gram_matrix(spec, pipe.ranked.points);
            const std::vector<double> profile = distance_profile_from_gram(gram);
            // Scan only candidates at least tau away from either end, matching
            // the clipping applied to every estimate: windows shorter than the
            // bandwidth carry so much variance that they spike spuriously.
            const int lo = std::max(params.tau, 2);
            const int hi = std::min(sample_length - params.tau, sample_length - 2);
            const auto first = profile.begin() + (lo - 2);
            const auto last = profile.begin() + (hi - 2) + 1;
            const auto maximum = std::max_element(first, last);
            const int theta = static_cast<int>(maximum - profile.begin()) + 2;
            report.change_points = {theta};
            report.ratios = {static_cast<double>(theta) / sample_length};
            report.statistics.push_back(*maximum);
        }
        return report;
    }

    report.method = "ratio-iter";
    if (report.detected) {
        const Eigen::MatrixXd gram = discrepancy::gram_matrix(spec, pipe.ranked.points);
        const RatioIteration iteration =
            iterate_ratio_from_gram(gram, 1e-3, params.iteration_cap);
        const int theta =
            std::clamp(static_cast<int>(std::llround(iteration.ratio * sample_length)), 2,
                       sample_length - 1);
        report.change_points = {theta};
        report.ratios = {iteration.ratio};
        report.warning_degenerate_split = iteration.degenerate;
    }
    return report;
}

}  // namespace detect
}  // namespace rankcpd
