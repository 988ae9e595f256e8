#pragma once

#include <Eigen/Dense>
#include <string>

#include "sesquiop/coefficients.hpp"
#include "sesquiop/grid.hpp"
#include "sesquiop/kernel.hpp"

namespace sesquiop {

// Dense discrete operator in weight-symmetrized coordinates
// (conjugate-transpose-friendly: build_K output is Hermitian by construction
// up to rounding).
struct DiscreteOperator {
  Eigen::MatrixXcd matrix;
  std::string label;
  std::uint64_t spec_hash = 0;
  std::uint64_t grid_id = 0;
  int n = 0;
};

enum class Compose { Product, AdjointTimesSelf, Conjugate };

// Nystrom matrix sqrt(w_i) k(x_i - x_j) sqrt(w_j).
DiscreteOperator build_K(const Kernel& kernel, const Grid& grid);
// Same, for any kernel view (used by perturbation controls).
DiscreteOperator build_K(const KernelView& kernel, const Grid& grid,
                         std::uint64_t spec_hash, const std::string& label = "K");

// Discretization of (b u')' + c u in the symmetrized coordinates, using the
// quadrature-adjoint divergence form -diag(1/√w)·D1ᵀ·diag(w·b)·D1·diag(1/√w)
// + diag(c), which is exactly complex-symmetric.  No boundary rows are
// modified: b vanishing at the endpoints is what keeps the form consistent
// with the differential operator.
DiscreteOperator build_L(const CoefficientPair& coeffs, const Grid& grid);

DiscreteOperator compose(Compose kind, const DiscreteOperator& a);  // unary kinds
DiscreteOperator compose(Compose kind, const DiscreteOperator& a,
                         const DiscreteOperator& b);  // Product; GridMismatch checked

// Portable text dump: one JSON header line, then one CSV row per matrix row
// with interleaved re,im entries (17 significant digits).
void dump_operator(const DiscreteOperator& op, const std::string& path);
DiscreteOperator load_operator(const std::string& path);

}  // namespace sesquiop
