#pragma once

#include <vector>

#include <Eigen/Core>

#include "rankcpd/kernels.hpp"

namespace rankcpd {

// Windowed squared discrepancies of a ranked sample: values[t-1] holds the
// squared discrepancy of the window {Y_t, ..., Y_{t+tau-1}} for t = 1..T-tau+1.
struct Diphoragram {
    std::vector<double> values;
    int tau = 0;
    int sample_length = 0;
    KernelFamily family = KernelFamily::star;
    double beta = 1.0;
};

// Closed index range [lo, hi] (1-based, inclusive) into a ranked sample,
// identifying the empirical measure with weight 1/(hi-lo+1) per point.
struct MeasureWindow {
    int lo = 1;
    int hi = 1;
    int size() const { return hi - lo + 1; }
};

namespace discrepancy {

// Squared quadratic discrepancy of a point set against the uniform measure,
// computed as the quadratic form (1/n^2) sum_ij K(y_i, y_j) of the centered
// kernel.
double squared_discrepancy(const KernelSpec& spec, const Eigen::MatrixXd& points);

// Same quantity via the three-term expansion
//   M^d - (2/n) sum_i g(y_i) + (1/n^2) sum_ij eta(y_i, y_j);
// equal to squared_discrepancy up to floating-point error. Kept as an
// independent route for cross-checking.
double squared_discrepancy_three_term(const KernelSpec& spec,
                                      const Eigen::MatrixXd& points);

// Symmetric matrix of centered-kernel values K(y_i, y_j).
Eigen::MatrixXd gram_matrix(const KernelSpec& spec, const Eigen::MatrixXd& points);

// Sliding windowed discrepancies, computed with the O(T tau) difference
// recurrence. The Gram matrix is materialized once when T <= 8000; larger
// samples are evaluated streamingly without it.
Diphoragram sliding_diphoragram(const KernelSpec& spec, const Eigen::MatrixXd& points,
                                int tau);

// Same series given a precomputed Gram matrix.
Diphoragram sliding_diphoragram_from_gram(const Eigen::MatrixXd& gram, int tau,
                                          const KernelSpec& spec);

// One window value recomputed directly from the Gram matrix (no recurrence);
// t is 1-based. Used to validate the incremental series.
double window_discrepancy_from_gram(const Eigen::MatrixXd& gram, int t, int tau);

// Mean sliding discrepancy over the floor(T/tau) disjoint windows:
//   (tau^2 / T) * sum_{j=0}^{a-1} values[j*tau].
// Requires at least two disjoint windows.
double mean_sliding_discrepancy(const Diphoragram& diph);

// Inner product of two windowed empirical measures in the nonuniformity
// space: (1/|a|)(1/|b|) sum_{i in a} sum_{j in b} K(Y_i, Y_j).
double nonuniformity_inner(const KernelSpec& spec, const MeasureWindow& a,
                           const MeasureWindow& b, const Eigen::MatrixXd& points);

// Same inner product from a precomputed Gram matrix.
double nonuniformity_inner_from_gram(const Eigen::MatrixXd& gram,
                                     const MeasureWindow& a, const MeasureWindow& b);

}  // namespace discrepancy
}  // namespace rankcpd
