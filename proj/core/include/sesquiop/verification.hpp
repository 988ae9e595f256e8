#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "sesquiop/coefficients.hpp"
#include "sesquiop/kernel.hpp"
#include "sesquiop/operators.hpp"

namespace sesquiop {

// Outcome of one verification check.  `scale_param` is the grid size or the
// Taylor order the check ran at; `residual` is always normalized so that 1.0
// means "as large as the biggest term involved".
struct ResidualReport {
  std::string name;
  int scale_param = 0;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  nlohmann::json details = nlohmann::json::object();
};

// Hermitian-symmetry-preserving additive perturbation amp * z^2 e^{iz},
// used as a negative control.
class PerturbedKernel final : public KernelView {
 public:
  PerturbedKernel(const KernelView& base, double amp) : base_(base), amp_(amp) {}
  cd eval(double z) const override;
  cd eval1(double z) const override;
  cd eval2(double z) const override;

 private:
  const KernelView& base_;
  double amp_;
};

// Sup-norm residual of the defining functional relation
//   b(y) conj(k''(z)) - b(y+z) k''(z) - b'(y) conj(k'(z)) - b'(y+z) k'(z)
//     + c(y) conj(k(z)) - c(y+z) k(z) = 0
// over {y in [-1,1], y+z in [-1,1]}, sampled on a samples x samples grid and
// normalized by the largest single term.  Both the relation as written and
// its z -> -z reflection are evaluated; the check passes if either variant
// meets the tolerance (details record both).
ResidualReport functional_relation_residual(const KernelView& kernel,
                                            const CoefficientPair& coeffs,
                                            int samples = 200,
                                            double tolerance = 1e-9);

// Order-by-order Taylor counterpart of the functional relation for
// n = 0..n_max (n_max <= 12), evaluated at y_samples points.  k3_offset adds
// a deliberate defect to the third Taylor coefficient (negative control).
ResidualReport taylor_relation_residual(const Kernel& kernel,
                                        const CoefficientPair& coeffs,
                                        int n_max = 8, int y_samples = 20,
                                        double k3_offset = 0.0,
                                        double tolerance = 1e-10);

// || conj(K) L - L K ||_F / (||K||_F ||L||_F) from freshly built operators at
// sizes n and 2n (the report's residual is the size-n value; details carry
// both and the decay ratio).  `kernel_override` substitutes a perturbed
// kernel while keeping the clean coefficients.
ResidualReport sesquicommutator_residual(const ValidatedSpec& vspec, int n,
                                         double tolerance = 1e-6,
                                         const KernelView* kernel_override = nullptr);

// The three algebraic consequences of sesquicommutation:
//   (1) L (K^H K) - conj(K^H K) L
//   (2) K (L^H L) - (L^H L) K
//   (3) conj(K) (L L^H) - (L L^H) conj(K)   [the conjugate of (2) when L is
//       complex-symmetric, which the divergence-form build makes exact]
// each normalized by the product of the factors' Frobenius norms.
std::vector<ResidualReport> derived_identity_residuals(const ValidatedSpec& vspec,
                                                       int n, double tolerance);

// Low-order coefficient-constraint diagnostic (details only, never a gate).
ResidualReport coefficient_constraint_diagnostic(const Kernel& kernel,
                                                 const CoefficientPair& coeffs,
                                                 int y_samples = 50);

// Shared helper: relative Frobenius commutation residual, optionally
// conjugating the first operator.
double relative_commutation_residual(const Eigen::MatrixXcd& K,
                                     const Eigen::MatrixXcd& L, bool conjugate_K);

}  // namespace sesquiop
