#pragma once

#include <Eigen/Dense>
#include <cstdint>

#include "sesquiop/errors.hpp"

namespace sesquiop {

// Gauss-Legendre collocation grid on [-1, 1] with spectral differentiation
// matrices (first derivative, and second derivative for diagnostics).
struct Grid {
  int n = 0;
  Eigen::VectorXd nodes;     // ascending
  Eigen::VectorXd weights;   // sum = 2
  Eigen::MatrixXd diff1;
  Eigen::MatrixXd diff2;
  std::uint64_t id = 0;      // fingerprint used by operator composition checks
};

Grid build_grid(int n);  // BadSize outside [4, 4096]

}  // namespace sesquiop
