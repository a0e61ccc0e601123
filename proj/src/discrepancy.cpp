#include "rankcpd/discrepancy.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "rankcpd/error.hpp"

namespace rankcpd::discrepancy {
namespace {

constexpr int kGramSampleLimit = 8000;

void check_tau(int tau, int sample_length) {
    if (tau <= 1 || tau > sample_length) {
        throw InvalidArgument("window bandwidth tau must satisfy 1 < tau <= T, got tau=" +
                              std::to_string(tau) + " with T=" +
                              std::to_string(sample_length));
    }
}

void check_window(const MeasureWindow& w, int sample_length) {
    if (w.lo < 1 || w.hi < w.lo || w.hi > sample_length) {
        throw InvalidArgument("measure window [" + std::to_string(w.lo) + ", " +
                              std::to_string(w.hi) + "] out of range for T=" +
                              std::to_string(sample_length));
    }
}

// Per-row uniform potentials g(y_i), shared by all centered-kernel sums.
Eigen::VectorXd row_potentials(const KernelSpec& spec, const Eigen::MatrixXd& points) {
    Eigen::VectorXd g(points.rows());
    for (Eigen::Index i = 0; i < points.rows(); ++i) {
        g(i) = kernels::uniform_potential(spec, points.row(i).transpose());
    }
    return g;
}

}  // namespace

double squared_discrepancy(const KernelSpec& spec, const Eigen::MatrixXd& points) {
    const Eigen::Index n = points.rows();
    if (n < 1) throw InvalidArgument("squared_discrepancy requires at least one point");
    const Eigen::VectorXd g = row_potentials(spec, points);
    const double md = std::pow(spec.m_constant(), spec.dimension());
    double total = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto xi = points.row(i).transpose();
        total += kernels::eta(spec, xi, xi) - 2.0 * g(i) + md;
        for (Eigen::Index j = i + 1; j < n; ++j) {
            total += 2.0 * (kernels::eta(spec, xi, points.row(j).transpose()) - g(i) -
                            g(j) + md);
        }
    }
    return total / (static_cast<double>(n) * static_cast<double>(n));
}

double squared_discrepancy_three_term(const KernelSpec& spec,
                                      const Eigen::MatrixXd& points) {
    const Eigen::Index n = points.rows();
    if (n < 1) throw InvalidArgument("squared_discrepancy requires at least one point");
    const double nd = static_cast<double>(n);
    double eta_sum = 0.0;
    double potential_sum = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto xi = points.row(i).transpose();
        potential_sum += kernels::uniform_potential(spec, xi);
        eta_sum += kernels::eta(spec, xi, xi);
        for (Eigen::Index j = i + 1; j < n; ++j) {
            eta_sum += 2.0 * kernels::eta(spec, xi, points.row(j).transpose());
        }
    }
    return std::pow(spec.m_constant(), spec.dimension()) - 2.0 * potential_sum / nd +
           eta_sum / (nd * nd);
}

Eigen::MatrixXd gram_matrix(const KernelSpec& spec, const Eigen::MatrixXd& points) {
    const Eigen::Index n = points.rows();
    if (n < 1) throw InvalidArgument("gram_matrix requires at least one point");
    const Eigen::VectorXd g = row_potentials(spec, points);
    const double md = std::pow(spec.m_constant(), spec.dimension());
    Eigen::MatrixXd gram(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto xi = points.row(i).transpose();
        for (Eigen::Index j = i; j < n; ++j) {
            const double value =
                kernels::eta(spec, xi, points.row(j).transpose()) - g(i) - g(j) + md;
            gram(i, j) = value;
            gram(j, i) = value;
        }
    }
    return gram;
}

Diphoragram sliding_diphoragram_from_gram(const Eigen::MatrixXd& gram, int tau,
                                          const KernelSpec& spec) {
    const int sample_length = static_cast<int>(gram.rows());
    check_tau(tau, sample_length);
    Diphoragram diph;
    diph.tau = tau;
    diph.sample_length = sample_length;
    diph.family = spec.family();
    diph.beta = spec.beta();
    diph.values.resize(sample_length - tau + 1);

    const double norm = static_cast<double>(tau) * static_cast<double>(tau);
    double window_sum = gram.block(0, 0, tau, tau).sum();
    diph.values[0] = window_sum / norm;
    for (int t = 1; t + tau <= sample_length; ++t) {
        const int old_row = t - 1;
        const int new_row = t + tau - 1;
        window_sum -= 2.0 * gram.row(old_row).segment(old_row, tau).sum() -
                      gram(old_row, old_row);
        window_sum += 2.0 * gram.row(new_row).segment(t, tau - 1).sum() +
                      gram(new_row, new_row);
        diph.values[t] = window_sum / norm;
    }
    return diph;
}

Diphoragram sliding_diphoragram(const KernelSpec& spec, const Eigen::MatrixXd& points,
                                int tau) {
    const int sample_length = static_cast<int>(points.rows());
    check_tau(tau, sample_length);
    if (sample_length <= kGramSampleLimit) {
        return sliding_diphoragram_from_gram(gram_matrix(spec, points), tau, spec);
    }

    // Streaming path: same recurrence, kernel values computed on demand.
    const Eigen::VectorXd g = row_potentials(spec, points);
    const double md = std::pow(spec.m_constant(), spec.dimension());
    auto centered = [&](Eigen::Index i, Eigen::Index j) {
        return kernels::eta(spec, points.row(i).transpose(), points.row(j).transpose()) -
               g(i) - g(j) + md;
    };

    Diphoragram diph;
    diph.tau = tau;
    diph.sample_length = sample_length;
    diph.family = spec.family();
    diph.beta = spec.beta();
    diph.values.resize(sample_length - tau + 1);

    const double norm = static_cast<double>(tau) * static_cast<double>(tau);
    double window_sum = 0.0;
    for (int i = 0; i < tau; ++i) {
        window_sum += centered(i, i);
        for (int j = i + 1; j < tau; ++j) window_sum += 2.0 * centered(i, j);
    }
    diph.values[0] = window_sum / norm;
    for (int t = 1; t + tau <= sample_length; ++t) {
        const int old_row = t - 1;
        const int new_row = t + tau - 1;
        double old_cross = 0.0;
        for (int i = old_row; i < old_row + tau; ++i) old_cross += centered(old_row, i);
        double new_cross = 0.0;
        for (int i = t; i < t + tau - 1; ++i) new_cross += centered(new_row, i);
        window_sum -= 2.0 * old_cross - centered(old_row, old_row);
        window_sum += 2.0 * new_cross + centered(new_row, new_row);
        diph.values[t] = window_sum / norm;
    }
    return diph;
}

double window_discrepancy_from_gram(const Eigen::MatrixXd& gram, int t, int tau) {
    const int sample_length = static_cast<int>(gram.rows());
    check_tau(tau, sample_length);
    if (t < 1 || t + tau - 1 > sample_length) {
        throw InvalidArgument("window start out of range");
    }
    return gram.block(t - 1, t - 1, tau, tau).sum() /
           (static_cast<double>(tau) * static_cast<double>(tau));
}

double mean_sliding_discrepancy(const Diphoragram& diph) {
    const int a = diph.sample_length / diph.tau;
    if (a < 2) {
        throw InvalidArgument("mean sliding discrepancy needs at least two disjoint "
                              "windows (T >= 2 tau)");
    }
    double sum = 0.0;
    for (int j = 0; j < a; ++j) sum += diph.values[static_cast<std::size_t>(j) * diph.tau];
    return sum * static_cast<double>(diph.tau) * static_cast<double>(diph.tau) /
           static_cast<double>(diph.sample_length);
}

double nonuniformity_inner(const KernelSpec& spec, const MeasureWindow& a,
                           const MeasureWindow& b, const Eigen::MatrixXd& points) {
    const int sample_length = static_cast<int>(points.rows());
    check_window(a, sample_length);
    check_window(b, sample_length);
    double total = 0.0;
    for (int i = a.lo - 1; i < a.hi; ++i) {
        const auto xi = points.row(i).transpose();
        for (int j = b.lo - 1; j < b.hi; ++j) {
            total += kernels::centered_kernel(spec, xi, points.row(j).transpose());
        }
    }
    return total / (static_cast<double>(a.size()) * static_cast<double>(b.size()));
}

double nonuniformity_inner_from_gram(const Eigen::MatrixXd& gram,
                                     const MeasureWindow& a, const MeasureWindow& b) {
    const int sample_length = static_cast<int>(gram.rows());
    check_window(a, sample_length);
    check_window(b, sample_length);
    return gram.block(a.lo - 1, b.lo - 1, a.size(), b.size()).sum() /
           (static_cast<double>(a.size()) * static_cast<double>(b.size()));
}

}  // namespace rankcpd::discrepancy
