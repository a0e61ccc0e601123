#pragma once

#include <vector>

#include <Eigen/Core>

namespace rankcpd {

// Result of an exact minimum-cost assignment: assignment[i] is the column
// matched to row i, and cost is the optimal total.
struct Assignment {
    std::vector<int> assignment;
    double cost = 0.0;
};

// Multivariate ranks of an observation matrix: row i of points is the Sobol
// prefix point matched to observation i, sigma[i] is its 0-based index in
// the prefix, and cost is the total squared-distance transport cost.
struct RankedSample {
    Eigen::MatrixXd points;
    std::vector<int> sigma;
    double cost = 0.0;
};

namespace transport {

// Exact solution of the linear assignment problem on a square cost matrix
// (shortest augmenting path with potentials, O(n^3)). Rows are augmented in
// index order, so ties break deterministically.
Assignment optimal_assignment(const Eigen::MatrixXd& cost);

// Optimal-assignment multivariate ranks: matches observations to the Sobol
// prefix of the same length under squared Euclidean cost. The returned
// points are a permutation of sobol_prefix(T, d).
RankedSample vector_ranks(const Eigen::MatrixXd& observations);

}  // namespace transport
}  // namespace rankcpd
