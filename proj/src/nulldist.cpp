#include "rankcpd/nulldist.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include <Eigen/Eigenvalues>

#include "rankcpd/discrepancy.hpp"
#include "rankcpd/error.hpp"
#include "rankcpd/lds.hpp"

namespace rankcpd::nulldist {

std::vector<double> top_eigenvalues(const Eigen::MatrixXd& scaled_kernel, int count) {
    if (scaled_kernel.rows() != scaled_kernel.cols()) {
        throw InvalidArgument("kernel matrix must be square");
    }
    if (count < 1 || count > scaled_kernel.rows()) {
        throw InvalidArgument("eigenvalue count must be in [1, node count]");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(scaled_kernel,
                                                          Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw NumericError("eigendecomposition of the kernel matrix failed");
    }
    const Eigen::VectorXd& all = solver.eigenvalues();  // ascending
    std::vector<double> top(count);
    for (int i = 0; i < count; ++i) {
        double value = all(all.size() - 1 - i);
        top[i] = value < 1e-12 ? 0.0 : value;
    }
    return top;
}

Spectrum nystrom_spectrum(const KernelSpec& spec, int nodes, int count) {
    if (nodes < count) {
        throw InvalidArgument("Nystrom node count must be at least the eigenvalue count");
    }
    const Eigen::MatrixXd z = lds::sobol_prefix(nodes, spec.dimension());
    Eigen::MatrixXd scaled = discrepancy::gram_matrix(spec, z) / static_cast<double>(nodes);
    Spectrum spectrum;
    spectrum.eigenvalues = top_eigenvalues(scaled, count);
    spectrum.nodes = nodes;
    spectrum.dimension = spec.dimension();
    spectrum.family = spec.family();
    spectrum.beta = spec.beta();
    return spectrum;
}

double weighted_chisq_cdf(std::span<const double> lambdas, double x, int terms,
                          double step) {
    if (lambdas.empty()) throw InvalidArgument("weight list must be nonempty");
    for (double lambda : lambdas) {
        if (!(lambda > 0.0)) {
            throw InvalidArgument("weighted chi-square weights must be positive");
        }
    }
    if (x < 0.0) throw InvalidArgument("weighted chi-square CDF argument must be >= 0");
    if (terms < 1) throw InvalidArgument("series length must be positive");
    if (!(step > 0.0) || step > 1.0) {
        throw InvalidArgument("series step must lie in (0, 1]");
    }

    double series = 0.0;
    for (int k = 0; k <= terms; ++k) {
        const double h = (static_cast<double>(k) + 0.5) * step;
        double phase = 0.0;
        double log_amplitude = 0.0;
        for (double lambda : lambdas) {
            const double w = 2.0 * h * lambda;
            phase += std::atan(w);
            log_amplitude += std::log1p(w * w);
        }
        series += std::sin(0.5 * phase - h * x) /
                  ((static_cast<double>(k) + 0.5) * std::exp(0.25 * log_amplitude));
    }
    return std::clamp(0.5 - series / M_PI, 0.0, 1.0);
}

double weighted_chisq_quantile(std::span<const double> lambdas, double p, int terms,
                               double step) {
    if (!(p > 0.0 && p < 1.0)) {
        throw InvalidArgument("quantile probability must lie in (0, 1)");
    }
    const double mass = std::accumulate(lambdas.begin(), lambdas.end(), 0.0);
    double lo = 0.0;
    // The oscillatory series discretizes an inversion integral with node spacing
    // `step`; its values alias once x passes the sampling horizon 2*pi/step, so
    // cap the bracket just inside that horizon. Quantiles beyond it cannot be
    // represented at this step and surface as a bracket failure below.
    const double horizon = 0.98 * 2.0 * std::numbers::pi / step;
    double hi = std::min(20.0 * mass, horizon);
    if (weighted_chisq_cdf(lambdas, hi, terms, step) < p) {
        throw NumericError("quantile bracket does not cover the requested probability");
    }
    constexpr double kTolerance = 1e-4;
    for (int iteration = 0; iteration < 200; ++iteration) {
        const double mid = 0.5 * (lo + hi);
        const double value = weighted_chisq_cdf(lambdas, mid, terms, step);
        if (std::abs(value - p) < kTolerance) return mid;
        if (value < p) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    throw NumericError("weighted chi-square quantile bisection did not converge");
}

TestDecision null_test(double delta_bar, const Spectrum& spectrum, int window_count,
                       const NullTestParams& params) {
    if (delta_bar < 0.0) throw InvalidArgument("test statistic must be nonnegative");
    if (window_count < 2) throw InvalidArgument("test requires at least two windows");
    if (!(params.gamma > 0.0 && params.gamma < 1.0)) {
        throw InvalidArgument("test level gamma must lie in (0, 1)");
    }

    const double mass =
        std::accumulate(spectrum.eigenvalues.begin(), spectrum.eigenvalues.end(), 0.0);
    if (!(mass > 0.0)) throw NumericError("null spectrum has no positive eigenvalues");

    // Keep eigenvalues carrying at least 0.1% of the spectrum mass, then weight
    // the limit law for the a-window average: each lambda_i / a appears a times.
    std::vector<double> weights;
    for (double lambda : spectrum.eigenvalues) {
        if (lambda >= 1e-3 * mass) {
            for (int copy = 0; copy < window_count; ++copy) {
                weights.push_back(lambda / static_cast<double>(window_count));
            }
        }
    }

    TestDecision decision;
    decision.statistic = delta_bar;
    decision.p_value = weighted_chisq_cdf(weights, delta_bar, params.series_terms,
                                          params.series_step);
    decision.reject = decision.p_value >= 1.0 - params.gamma;
    return decision;
}

}  // namespace rankcpd::nulldist
