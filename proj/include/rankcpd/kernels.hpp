#pragma once

#include <string>
#include <string_view>

#include <Eigen/Core>

namespace rankcpd {

// The two supported discrepancy kernel families: "star" anchors mass at the
// origin corner of the cube, "centered" is the wrap-around symmetric form.
enum class KernelFamily { star, centered };

KernelFamily kernel_family_from_string(std::string_view name);
std::string to_string(KernelFamily family);

// Immutable description of the product kernel: family, scale beta, dimension,
// and the derived product constant M = 1 - beta^2 * integral of (kappa')^2.
class KernelSpec {
public:
    KernelSpec(KernelFamily family, double beta, int dimension);

    KernelFamily family() const { return family_; }
    double beta() const { return beta_; }
    int dimension() const { return dimension_; }
    double m_constant() const { return m_; }

private:
    KernelFamily family_;
    double beta_;
    int dimension_;
    double m_;
};

namespace kernels {

// Bernoulli polynomials B1(x) = x - 1/2 and B2(x) = x^2 - x + 1/6.
// Orders other than 1 and 2 are rejected.
double bernoulli_poly(int order, double x);

// Functional parameter of the kernel family:
//   star:     kappa(x) = 1/6 - x^2 / 2
//   centered: kappa(x) = -B2((x - 1/2) mod 1) / 2
// Both integrate to zero over [0, 1].
double kappa(KernelFamily family, double x);

// Product constant M = 1 - beta^2 * integral of (kappa')^2 over [0, 1]:
// star gives 1 - beta^2/3, centered gives 1 - beta^2/12.
double scale_constant(KernelFamily family, double beta);

// Raw product kernel over the unit cube:
//   eta(x, y) = prod_i [ M + beta^2 ( kappa(x_i) + kappa(y_i)
//                      + B2((x_i - y_i) mod 1)/2 + B1(x_i) B1(y_i) ) ].
double eta(const KernelSpec& spec, const Eigen::Ref<const Eigen::VectorXd>& x,
           const Eigen::Ref<const Eigen::VectorXd>& y);

// Mean of eta(z, .) against the uniform measure:
//   g(z) = prod_i (M + beta^2 kappa(z_i)).
double uniform_potential(const KernelSpec& spec,
                         const Eigen::Ref<const Eigen::VectorXd>& z);

// Doubly centered kernel: K(x, y) = eta(x, y) - g(x) - g(y) + M^d.
// Integrates to zero in each argument against the uniform measure.
double centered_kernel(const KernelSpec& spec,
                       const Eigen::Ref<const Eigen::VectorXd>& x,
                       const Eigen::Ref<const Eigen::VectorXd>& y);

// Analytic trace of the centered kernel against the uniform measure:
//   integral of K(x, x) dx = (M + beta^2/6)^d - M^d.
double centered_trace(const KernelSpec& spec);

}  // namespace kernels
}  // namespace rankcpd
