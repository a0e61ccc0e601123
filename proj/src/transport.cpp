#include "rankcpd/transport.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "rankcpd/error.hpp"
#include "rankcpd/lds.hpp"

namespace rankcpd::transport {

Assignment optimal_assignment(const Eigen::MatrixXd& cost) {
    if (cost.rows() != cost.cols() || cost.rows() < 1) {
        throw InvalidArgument("assignment cost matrix must be square and nonempty");
    }
    if (!cost.allFinite()) {
        throw DataError("assignment cost matrix contains non-finite entries");
    }
    const int n = static_cast<int>(cost.rows());
    const double inf = std::numeric_limits<double>::infinity();

    // Row/column potentials with 1-based bookkeeping; matched_row[j] is the
    // row currently assigned to column j, column 0 is the virtual source.
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
    std::vector<int> matched_row(n + 1, 0), way(n + 1, 0);
    std::vector<double> min_slack(n + 1);
    std::vector<char> used(n + 1);

    for (int i = 1; i <= n; ++i) {
        matched_row[0] = i;
        int j0 = 0;
        std::fill(min_slack.begin(), min_slack.end(), inf);
        std::fill(used.begin(), used.end(), char{0});
        do {
            used[j0] = 1;
            const int i0 = matched_row[j0];
            int j1 = -1;
            double delta = inf;
            for (int j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const double slack = cost(i0 - 1, j - 1) - u[i0] - v[j];
                if (slack < min_slack[j]) {
                    min_slack[j] = slack;
                    way[j] = j0;
                }
                if (min_slack[j] < delta) {
                    delta = min_slack[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[matched_row[j]] += delta;
                    v[j] -= delta;
                } else {
                    min_slack[j] -= delta;
                }
            }
            j0 = j1;
        } while (matched_row[j0] != 0);
        do {
            const int j1 = way[j0];
            matched_row[j0] = matched_row[j1];
            j0 = j1;
        } while (j0 != 0);
    }

    Assignment result;
    result.assignment.assign(n, -1);
    for (int j = 1; j <= n; ++j) result.assignment[matched_row[j] - 1] = j - 1;
    for (int i = 0; i < n; ++i) result.cost += cost(i, result.assignment[i]);
    return result;
}

RankedSample vector_ranks(const Eigen::MatrixXd& observations) {
    const int n = static_cast<int>(observations.rows());
    const int d = static_cast<int>(observations.cols());
    if (n < 2) throw InvalidArgument("vector ranks require at least two observations");
    if (d < 1) throw InvalidArgument("observations must have at least one column");
    if (!observations.allFinite()) {
        throw DataError("observations contain non-finite values");
    }

    const Eigen::MatrixXd prefix = lds::sobol_prefix(n, d);
    Eigen::MatrixXd cost(n, n);
    for (int i = 0; i < n; ++i) {
        cost.row(i) =
            (prefix.rowwise() - observations.row(i)).rowwise().squaredNorm().transpose();
    }
    Assignment solved = optimal_assignment(cost);

    RankedSample ranked;
    ranked.sigma = std::move(solved.assignment);
    ranked.cost = solved.cost;
    ranked.points.resize(n, d);
    for (int i = 0; i < n; ++i) ranked.points.row(i) = prefix.row(ranked.sigma[i]);
    return ranked;
}

}  // namespace rankcpd::transport
