#pragma once

#include <memory>
#include <vector>

#include "sesquiop/kernel_spec.hpp"
#include "sesquiop/series.hpp"

namespace sesquiop {

// Evaluation surface shared by catalog kernels and the perturbed variants
// used as negative controls in verification.
class KernelView {
 public:
  virtual ~KernelView() = default;
  virtual cd eval(double z) const = 0;    // k(z)
  virtual cd eval1(double z) const = 0;   // k'(z)
  virtual cd eval2(double z) const = 0;   // k''(z)
};

// Closed-form catalog kernel on [-2, 2].  Every family is an entire numerator
// over an entire denominator whose real zeros are removable; outside small
// windows around those zeros the quotient is evaluated directly, inside them
// a precomputed degree-12 Taylor expansion takes over.
class Kernel final : public KernelView {
 public:
  struct Window {
    double center = 0.0;
    double halfwidth = 0.0;
  };

  cd eval(double z) const override;
  cd eval1(double z) const override;
  cd eval2(double z) const override;

  // Taylor coefficients k_n = k^{(n)}(0) for n = 0..order (order <= 30),
  // computed by composing the factor expansions, not by finite differences.
  std::vector<cd> taylor(int order) const;

  std::vector<Window> windows() const;
  const ValidatedSpec& vspec() const;

 private:
  friend Kernel make_kernel(const ValidatedSpec& vspec);
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

Kernel make_kernel(const KernelSpec& spec);  // validates first
Kernel make_kernel(const ValidatedSpec& vspec);

}  // namespace sesquiop
