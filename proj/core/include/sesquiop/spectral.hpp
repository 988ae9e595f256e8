#pragma once

#include <string>
#include <vector>

#include "sesquiop/operators.hpp"

namespace sesquiop {

// Eigensystem of the Hermitian symmetrized kernel matrix.  `lambda` holds all
// n eigenvalues (ascending); `by_magnitude` indexes them by |lambda|
// descending.  Eigenvector phases are normalized so the largest-magnitude
// entry is real and positive.
struct Eigensystem {
  Eigen::VectorXd lambda;
  Eigen::MatrixXcd vectors;
  std::vector<int> by_magnitude;
};

Eigensystem eigendecompose_K(const DiscreteOperator& K);

// Relative distance from lambda[idx] to the nearest other eigenvalue.  The
// denominator is floored at 1e-8 times the spectral radius so noise-level
// eigenvalues report a small gap (and are treated as clustered).
double eigen_gap(const Eigen::VectorXd& lambda, int idx);

inline constexpr double kSimpleGapThreshold = 1e-6;

// Invariance residual ||M u - rho u|| / ||M u|| with rho the Rayleigh
// quotient of M = L^H L; for clustered eigenvalues the projection onto the
// cluster's eigenvector span replaces the single direction.
double llstar_invariance_residual(const Eigen::MatrixXcd& LhL,
                                  const Eigensystem& eig, int idx);

struct SigmaResult {
  cd sigma{};
  double residual = 0.0;   // ||L u - sigma conj(u)|| / ||L u||
  bool defined = false;    // false when the bilinear denominator is near zero
};

// Antilinear eigenvalue extraction: least-squares solution of
// L u = sigma conj(u), i.e. sigma = sum_i u_i (L u)_i / ||u||^2 (the bilinear
// numerator pairs the equation against conj(u)).  `defined` goes false when
// |sum_i u_i^2| is near zero — a phase structure with no conj(u) alignment,
// where the one-dimensional ansatz is degenerate.  Throws
// DegenerateEigenvalue when the pair is not simple.
SigmaResult extract_sigma(const Eigen::MatrixXcd& Ltilde,
                          const Eigen::VectorXcd& u, bool simple);

struct PairReport {
  double lambda = 0.0;
  double gap = 0.0;
  double llstar_residual = 0.0;
  cd sigma{};
  double sigma_residual = 0.0;  // NaN when sigma undefined
  bool simple = false;
  bool sigma_defined = false;
  std::string note;
};

struct SpectralReport {
  int grid_n = 0;
  std::uint64_t spec_hash = 0;
  double commutator_residual = 0.0;  // sesquicommutation residual on this grid
  double consistency_c = 0.0;        // sigma_residual * gap / commutator_residual, top pair
  std::vector<PairReport> pairs;
};

SpectralReport spectral_report(const ValidatedSpec& vspec, const Grid& grid, int count);

}  // namespace sesquiop
