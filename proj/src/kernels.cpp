#include "rankcpd/kernels.hpp"

#include <cmath>
#include <string>

#include "rankcpd/error.hpp"

namespace rankcpd {

KernelFamily kernel_family_from_string(std::string_view name) {
    if (name == "star") return KernelFamily::star;
    if (name == "centered") return KernelFamily::centered;
    throw InvalidArgument("unknown kernel family '" + std::string(name) +
                          "' (expected 'star' or 'centered')");
}

std::string to_string(KernelFamily family) {
    return family == KernelFamily::star ? "star" : "centered";
}

KernelSpec::KernelSpec(KernelFamily family, double beta, int dimension)
    : family_(family), beta_(beta), dimension_(dimension) {
    if (!(beta > 0.0)) throw InvalidArgument("kernel scale beta must be positive");
    if (dimension < 1) throw InvalidArgument("kernel dimension must be positive");
    m_ = kernels::scale_constant(family, beta);
}

namespace kernels {
namespace {

// (t mod 1) in [0, 1); exact integers map to 0.
double wrap_unit(double t) {
    double f = t - std::floor(t);
    if (f >= 1.0) f = 0.0;
    return f;
}

double b1(double x) { return x - 0.5; }
double b2(double x) { return (x - 1.0) * x + 1.0 / 6.0; }

}  // namespace

double bernoulli_poly(int order, double x) {
    switch (order) {
        case 1: return b1(x);
        case 2: return b2(x);
        default:
            throw InvalidArgument("unsupported Bernoulli polynomial order " +
                                  std::to_string(order) + " (expected 1 or 2)");
    }
}

double kappa(KernelFamily family, double x) {
    if (family == KernelFamily::star) return 1.0 / 6.0 - 0.5 * x * x;
    return -0.5 * b2(wrap_unit(x - 0.5));
}

double scale_constant(KernelFamily family, double beta) {
    if (!(beta > 0.0)) throw InvalidArgument("kernel scale beta must be positive");
    const double derivative_energy = family == KernelFamily::star ? 1.0 / 3.0 : 1.0 / 12.0;
    return 1.0 - beta * beta * derivative_energy;
}

double eta(const KernelSpec& spec, const Eigen::Ref<const Eigen::VectorXd>& x,
           const Eigen::Ref<const Eigen::VectorXd>& y) {
    if (x.size() != spec.dimension() || y.size() != spec.dimension()) {
        throw DataError("kernel input dimension mismatch");
    }
    const double beta2 = spec.beta() * spec.beta();
    const double m = spec.m_constant();
    double product = 1.0;
    for (int i = 0; i < spec.dimension(); ++i) {
        product *= m + beta2 * (kappa(spec.family(), x(i)) + kappa(spec.family(), y(i)) +
                                0.5 * b2(wrap_unit(x(i) - y(i))) + b1(x(i)) * b1(y(i)));
    }
    return product;
}

double uniform_potential(const KernelSpec& spec,
                         const Eigen::Ref<const Eigen::VectorXd>& z) {
    if (z.size() != spec.dimension()) throw DataError("kernel input dimension mismatch");
    const double beta2 = spec.beta() * spec.beta();
    double product = 1.0;
    for (int i = 0; i < spec.dimension(); ++i) {
        product *= spec.m_constant() + beta2 * kappa(spec.family(), z(i));
    }
    return product;
}

double centered_kernel(const KernelSpec& spec,
                       const Eigen::Ref<const Eigen::VectorXd>& x,
                       const Eigen::Ref<const Eigen::VectorXd>& y) {
    return eta(spec, x, y) - uniform_potential(spec, x) - uniform_potential(spec, y) +
           std::pow(spec.m_constant(), spec.dimension());
}

double centered_trace(const KernelSpec& spec) {
    const double beta2 = spec.beta() * spec.beta();
    return std::pow(spec.m_constant() + beta2 / 6.0, spec.dimension()) -
           std::pow(spec.m_constant(), spec.dimension());
}

}  // namespace kernels
}  // namespace rankcpd
