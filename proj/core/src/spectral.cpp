#include "sesquiop/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "sesquiop/verification.hpp"

namespace sesquiop {

Eigensystem eigendecompose_K(const DiscreteOperator& K) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(K.matrix);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigendecomposition failed to converge");

  Eigensystem eig;
  eig.lambda = solver.eigenvalues();
  eig.vectors = solver.eigenvectors();

  // deterministic phases: rotate so the largest-magnitude entry is real > 0
  for (int c = 0; c < eig.vectors.cols(); ++c) {
    int imax = 0;
    double best = -1.0;
    for (int r = 0; r < eig.vectors.rows(); ++r) {
      const double a = std::abs(eig.vectors(r, c));
      if (a > best) {
        best = a;
        imax = r;
      }
    }
    const cd pivot = eig.vectors(imax, c);
    if (std::abs(pivot) > 0.0) eig.vectors.col(c) *= std::conj(pivot) / std::abs(pivot);
  }

  eig.by_magnitude.resize(eig.lambda.size());
  std::iota(eig.by_magnitude.begin(), eig.by_magnitude.end(), 0);
  std::stable_sort(eig.by_magnitude.begin(), eig.by_magnitude.end(),
                   [&](int a, int b) {
                     return std::abs(eig.lambda[a]) > std::abs(eig.lambda[b]);
                   });
  return eig;
}

double eigen_gap(const Eigen::VectorXd& lambda, int idx) {
  const int n = static_cast<int>(lambda.size());
  if (n < 2) return std::numeric_limits<double>::infinity();
  double dist = std::numeric_limits<double>::infinity();
  for (int j = 0; j < n; ++j)
    if (j != idx) dist = std::min(dist, std::abs(lambda[idx] - lambda[j]));
  const double radius = std::max(std::abs(lambda[0]), std::abs(lambda[n - 1]));
  const double denom = std::max(std::abs(lambda[idx]), 1e-8 * radius);
  return denom > 0.0 ? dist / denom : std::numeric_limits<double>::infinity();
}

double llstar_invariance_residual(const Eigen::MatrixXcd& LhL,
                                  const Eigensystem& eig, int idx) {
  const Eigen::VectorXcd u = eig.vectors.col(idx);
  const Eigen::VectorXcd mu_vec = LhL * u;
  const double norm_mu = mu_vec.norm();
  if (norm_mu == 0.0) return 0.0;

  if (eigen_gap(eig.lambda, idx) > kSimpleGapThreshold) {
    const cd rho = u.dot(mu_vec);  // Rayleigh quotient (u normalized)
    return (mu_vec - rho * u).norm() / norm_mu;
  }

  // clustered eigenvalue: project onto the span of the whole cluster
  const double radius =
      std::max(std::abs(eig.lambda[0]), std::abs(eig.lambda[eig.lambda.size() - 1]));
  const double width =
      kSimpleGapThreshold * std::max(std::abs(eig.lambda[idx]), 1e-8 * radius);
  Eigen::VectorXcd residual = mu_vec;
  for (int j = 0; j < eig.lambda.size(); ++j) {
    if (std::abs(eig.lambda[j] - eig.lambda[idx]) <= width) {
      const Eigen::VectorXcd v = eig.vectors.col(j);
      residual -= v * v.dot(residual);
    }
  }
  return residual.norm() / norm_mu;
}

SigmaResult extract_sigma(const Eigen::MatrixXcd& Ltilde,
                          const Eigen::VectorXcd& u, bool simple) {
  if (!simple)
    raise(Errc::DegenerateEigenvalue,
          "sigma extraction needs a simple eigenvalue");

  SigmaResult out;
  const Eigen::VectorXcd lu = Ltilde * u;
  // L u = sigma * conj(u); pairing both sides against conj(u) in the usual
  // inner product turns the right side into sigma*||u||^2, so the bilinear
  // sum u_i (Lu)_i over ||u||^2 is the least-squares sigma.  |sum u_i^2|
  // near zero flags a phase structure with no conj(u) alignment at all,
  // where the one-dimensional ansatz itself is degenerate.
  cd phase_overlap = 0.0, numer = 0.0;
  for (int i = 0; i < u.size(); ++i) {
    phase_overlap += u[i] * u[i];
    numer += u[i] * lu[i];
  }
  const double u2 = u.squaredNorm();
  if (std::abs(phase_overlap) < 1e-10 * u2) {
    out.defined = false;
    out.residual = std::numeric_limits<double>::quiet_NaN();
    return out;
  }
  out.sigma = numer / u2;
  const double lu_norm = lu.norm();
  out.residual =
      lu_norm > 0.0 ? (lu - out.sigma * u.conjugate()).norm() / lu_norm : 0.0;
  out.defined = true;
  return out;
}

SpectralReport spectral_report(const ValidatedSpec& vspec, const Grid& grid, int count) {
  const Kernel kernel = make_kernel(vspec);
  const CoefficientPair coeffs = make_coefficients(vspec);
  const DiscreteOperator K = build_K(kernel, grid);
  const DiscreteOperator L = build_L(coeffs, grid);
  const Eigen::MatrixXcd LhL = L.matrix.adjoint() * L.matrix;

  const Eigensystem eig = eigendecompose_K(K);

  SpectralReport rep;
  rep.grid_n = grid.n;
  rep.spec_hash = K.spec_hash;
  rep.commutator_residual =
      relative_commutation_residual(K.matrix, L.matrix, true);

  const int wanted = std::min<int>(count, static_cast<int>(eig.lambda.size()));
  for (int r = 0; r < wanted; ++r) {
    const int idx = eig.by_magnitude[r];
    PairReport pair;
    pair.lambda = eig.lambda[idx];
    pair.gap = eigen_gap(eig.lambda, idx);
    pair.simple = pair.gap > kSimpleGapThreshold;
    pair.llstar_residual = llstar_invariance_residual(LhL, eig, idx);
    if (pair.simple) {
      const SigmaResult s = extract_sigma(L.matrix, eig.vectors.col(idx), true);
      pair.sigma = s.sigma;
      pair.sigma_residual = s.residual;
      pair.sigma_defined = s.defined;
      if (!s.defined) pair.note = "NearZeroDenominator";
    } else {
      pair.sigma_residual = std::numeric_limits<double>::quiet_NaN();
      pair.note = "DegenerateEigenvalue";
    }
    rep.pairs.push_back(pair);
  }

  // perturbation-bound constant: sigma_residual <= C * r / gap with r the
  // commutator residual.  r sits at the rounding floor here, so the floor
  // (Frobenius-relative roundoff of an n x n product chain) enters the
  // denominator; C then compares the eigensolver's backward error to it.
  if (!rep.pairs.empty() && rep.pairs[0].sigma_defined) {
    const double floor = std::pow(static_cast<double>(grid.n), 1.5) *
                         std::numeric_limits<double>::epsilon();
    rep.consistency_c = rep.pairs[0].sigma_residual * rep.pairs[0].gap /
                        std::max(rep.commutator_residual, floor);
  }
  return rep;
}

}  // namespace sesquiop
