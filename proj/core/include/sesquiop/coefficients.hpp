#pragma once

#include "sesquiop/kernel_spec.hpp"

namespace sesquiop {

// Sturm-Liouville coefficient pair (b, c) matched to a KernelSpec, with
// b(-1) = b(1) = 0.  All derivatives are closed-form; a nonzero gauge
// exponent tau wraps the base family in the multiplier e^{-2 tau y} via the
// Leibniz rule.
class CoefficientPair {
 public:
  cd b(double y) const { return db(0, y); }
  cd b1(double y) const { return db(1, y); }
  cd b2(double y) const { return db(2, y); }
  cd c(double y) const { return dc(0, y); }
  cd c1(double y) const { return dc(1, y); }

  cd db(int order, double y) const;  // d^order b / dy^order
  cd dc(int order, double y) const;  // d^order c / dy^order

  const ValidatedSpec& vspec() const { return v_; }

 private:
  friend CoefficientPair make_coefficients(const ValidatedSpec& vspec);
  cd db_base(int m, double y) const;  // tau = 0 family forms
  cd dc_base(int m, double y) const;

  ValidatedSpec v_;
};

CoefficientPair make_coefficients(const KernelSpec& spec);  // validates first
CoefficientPair make_coefficients(const ValidatedSpec& vspec);

}  // namespace sesquiop
