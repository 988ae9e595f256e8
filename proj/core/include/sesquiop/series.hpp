#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace sesquiop {

using cd = std::complex<double>;

// Dense truncated Taylor series sum_j a[j] t^j.  Used for the removable-
// singularity windows of the kernel evaluator and for kernel Taylor tables.
// All operations truncate to the length of the operands.
class Series {
 public:
  Series() = default;
  explicit Series(std::size_t len) : a_(len, cd(0.0)) {}

  static Series constant(cd v, std::size_t len);
  // Expansions of elementary factors f(a*(z0 + t)) in powers of t.
  static Series exp(cd a, double z0, std::size_t len);
  static Series sinh(cd a, double z0, std::size_t len);
  static Series cosh(cd a, double z0, std::size_t len);
  static Series sin(cd a, double z0, std::size_t len);
  static Series cos(cd a, double z0, std::size_t len);
  static Series monomial(int p, double z0, std::size_t len);  // (z0 + t)^p

  std::size_t size() const { return a_.size(); }
  cd& operator[](std::size_t j) { return a_[j]; }
  cd operator[](std::size_t j) const { return a_[j]; }

  Series& operator+=(const Series& rhs);
  Series& operator*=(cd s);
  friend Series operator*(const Series& x, const Series& y);  // truncated Cauchy product
  friend Series operator+(Series x, const Series& y) { return x += y; }

  Series derivative() const;
  cd horner(double t) const;
  double max_abs() const;

  // Quotient of two series whose leading `zero_order` coefficients vanish
  // analytically (removable singularity).  Leading coefficients below the
  // floating-point noise floor are checked and dropped before the division.
  static Series divide_removable(const Series& num, const Series& den, int zero_order);

 private:
  std::vector<cd> a_;
};

}  // namespace sesquiop
