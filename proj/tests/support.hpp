// Shared helpers for the test binaries: a deterministic random source that
// does not depend on implementation-defined standard-library distributions,
// rank-correlation, and simple quadrature.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include <Eigen/Core>

namespace testsupport {

class TestRng {
public:
    explicit TestRng(std::uint64_t seed) : generator_(seed) {}

    double uniform01() { return static_cast<double>(generator_() >> 11) * 0x1p-53; }

    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double u1 = static_cast<double>((generator_() >> 11) + 1) * 0x1p-53;
        const double u2 = uniform01();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * M_PI * u2;
        spare_ = radius * std::sin(angle);
        has_spare_ = true;
        return radius * std::cos(angle);
    }

    // Uniform integer in [0, bound) by rejection-free scaling (bound << 2^53).
    std::int64_t below(std::int64_t bound) {
        return static_cast<std::int64_t>(uniform01() * static_cast<double>(bound));
    }

    Eigen::MatrixXd uniform_matrix(int rows, int cols) {
        Eigen::MatrixXd out(rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) out(r, c) = uniform01();
        return out;
    }

    Eigen::MatrixXd normal_matrix(int rows, int cols) {
        Eigen::MatrixXd out(rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) out(r, c) = normal();
        return out;
    }

private:
    std::mt19937_64 generator_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

// Average ranks with ties.
inline std::vector<double> ranks_of(const std::vector<double>& values) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<double> ranks(n, 0.0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
        const double average = 0.5 * (static_cast<double>(i) + static_cast<double>(j)) + 1.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = average;
        i = j + 1;
    }
    return ranks;
}

inline double spearman(const std::vector<double>& a, const std::vector<double>& b) {
    const std::vector<double> ra = ranks_of(a);
    const std::vector<double> rb = ranks_of(b);
    const double n = static_cast<double>(a.size());
    double mean_a = 0.0, mean_b = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        mean_a += ra[i];
        mean_b += rb[i];
    }
    mean_a /= n;
    mean_b /= n;
    double cov = 0.0, var_a = 0.0, var_b = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        cov += (ra[i] - mean_a) * (rb[i] - mean_b);
        var_a += (ra[i] - mean_a) * (ra[i] - mean_a);
        var_b += (rb[i] - mean_b) * (rb[i] - mean_b);
    }
    if (var_a == 0.0 || var_b == 0.0) return 0.0;
    return cov / std::sqrt(var_a * var_b);
}

// Composite Simpson rule with n subintervals (n made even).
template <typename F>
double simpson(F&& f, double a, double b, int n = 4096) {
    if (n % 2 == 1) ++n;
    const double h = (b - a) / n;
    double sum = f(a) + f(b);
    for (int i = 1; i < n; ++i) sum += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
    return sum * h / 3.0;
}

// Composite midpoint rule with n nodes.
template <typename F>
double midpoint(F&& f, double a, double b, int n) {
    const double h = (b - a) / n;
    double sum = 0.0;
    for (int i = 0; i < n; ++i) sum += f(a + (i + 0.5) * h);
    return sum * h;
}

// Simpson over [0,1] split at interior kink locations.
template <typename F>
double integrate_unit(F&& f, std::vector<double> kinks, int n_per_piece = 2048) {
    kinks.push_back(0.0);
    kinks.push_back(1.0);
    std::sort(kinks.begin(), kinks.end());
    kinks.erase(std::unique(kinks.begin(), kinks.end()), kinks.end());
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < kinks.size(); ++i) {
        if (kinks[i + 1] - kinks[i] > 1e-14) {
            total += simpson(f, kinks[i], kinks[i + 1], n_per_piece);
        }
    }
    return total;
}

}  // namespace testsupport
