#pragma once

#include <span>
#include <vector>

#include <Eigen/Core>

#include "rankcpd/kernels.hpp"

namespace rankcpd {

// Approximate eigenvalues of the discrepancy integral operator, descending,
// with the parameters they were computed under.
struct Spectrum {
    std::vector<double> eigenvalues;
    int nodes = 0;  // quadrature node count m
    int dimension = 0;
    KernelFamily family = KernelFamily::star;
    double beta = 1.0;
};

// Tuning parameters of the null-distribution machinery.
struct NullTestParams {
    double gamma = 0.1;         // test level
    int series_terms = 100;     // truncation K of the CDF series
    double series_step = 0.5;   // series parameter alpha in (0, 1]
    int eigenvalue_count = 50;  // spectrum size N
    int nystrom_nodes = 512;    // quadrature node count m
};

// Outcome of the mean-sliding-discrepancy test.
struct TestDecision {
    double statistic = 0.0;
    double p_value = 0.0;
    bool reject = false;
};

namespace nulldist {

// Eigenvalues of the integral operator of the centered kernel, estimated by
// eigendecomposition of the scaled kernel matrix (1/m) K(z_i, z_j) on the
// first m Sobol points. Top `count` eigenvalues, descending; values below
// 1e-12 are clamped to zero.
Spectrum nystrom_spectrum(const KernelSpec& spec, int nodes, int count);

// Top eigenvalues (descending, clamped at zero) of a symmetric matrix that
// already includes the 1/m quadrature scaling. Exposed so synthetic kernels
// can reuse the same extraction.
std::vector<double> top_eigenvalues(const Eigen::MatrixXd& scaled_kernel, int count);

// CDF of the weighted chi-square mixture sum_i lambda_i Z_i^2 (Z_i standard
// normal), evaluated by the truncated oscillatory series with K+1 terms and
// step alpha. The truncated series can overshoot; the result is clamped to
// [0, 1].
double weighted_chisq_cdf(std::span<const double> lambdas, double x, int terms = 100,
                          double step = 0.5);

// Inverse of weighted_chisq_cdf by bisection on [0, 20 * sum(lambda)] to
// |CDF(x) - p| < 1e-4; fails after 200 iterations.
double weighted_chisq_quantile(std::span<const double> lambdas, double p,
                               int terms = 100, double step = 0.5);

// Level-gamma test of the mean sliding discrepancy against its null limit:
// the weight list is {lambda_i / a, repeated a times} over the spectrum
// (eigenvalues below 0.1% of the spectrum mass are dropped first), the
// p-value is CDF(delta_bar), and the change is declared (reject) when
// p >= 1 - gamma.
TestDecision null_test(double delta_bar, const Spectrum& spectrum, int window_count,
                       const NullTestParams& params);

}  // namespace nulldist
}  // namespace rankcpd
