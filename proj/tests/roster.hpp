#pragma once

// Shared parameter roster: one spec per family branch (generic values,
// imaginary-axis values, every documented limit, the special case, a
// nonzero additive constant).  Used by the unit tests and the acceptance
// runner so both exercise the same coverage.

#include <string>
#include <utility>
#include <vector>

#include "sesquiop/kernel_spec.hpp"

namespace sesquiop_tests {

using sesquiop::cd;
using sesquiop::Family;
using sesquiop::KernelSpec;
using sesquiop::SpecialSign;

inline KernelSpec item1(double gamma, cd mu, cd c0 = 0.0) {
  KernelSpec s;
  s.family = Family::Item1;
  s.gamma = gamma;
  s.mu = mu;
  s.c0 = c0;
  return s;
}

inline KernelSpec item2(double alpha, cd mu) {
  KernelSpec s;
  s.family = Family::Item2;
  s.alpha = alpha;
  s.mu = mu;
  return s;
}

inline KernelSpec item3(cd mu1, cd mu2) {
  KernelSpec s;
  s.family = Family::Item3;
  s.mu1 = mu1;
  s.mu2 = mu2;
  return s;
}

inline KernelSpec item3_special(double mu, cd coeff, SpecialSign sign) {
  KernelSpec s;
  s.family = Family::Item3;
  s.mu1 = cd(0.0, mu);
  const double pi_half = 1.5707963267948966;
  s.mu2 = cd(0.0, mu + (sign == SpecialSign::Plus ? pi_half : -pi_half));
  s.special_coeff = coeff;
  s.special_sign = sign;
  return s;
}

inline KernelSpec remark_example() {
  KernelSpec s;
  s.family = Family::RemarkExample;
  return s;
}

inline std::vector<std::pair<std::string, KernelSpec>> roster() {
  const double quarter_pi = 0.7853981633974483;
  return {
      {"item1 generic", item1(1.0, 0.5)},
      {"item1 imaginary mu", item1(1.0, cd(0.0, 2.0))},
      {"item1 gamma limit", item1(0.0, 2.0)},
      {"item1 mu limit", item1(1.25, 0.0)},
      {"item1 constant kernel", item1(0.75, 0.75)},
      {"item1 complex c0", item1(1.0, 0.5, cd(0.25, -0.125))},
      {"item2 generic", item2(1.0, 1.0)},
      {"item2 negative alpha", item2(-0.5, 1.5)},
      {"item2 zero mu", item2(2.0, 0.0)},
      {"item3 generic", item3(0.75, 0.3125)},
      {"item3 imaginary mu1", item3(cd(0.0, 0.875), 0.375)},
      {"item3 mu2 limit", item3(cd(0.0, quarter_pi), 0.0)},
      {"item3 double limit", item3(0.0, 0.0)},
      {"item3 special case", item3_special(0.3, cd(0.2, 0.1), SpecialSign::Plus)},
      {"remark example", remark_example()},
  };
}

}  // namespace sesquiop_tests
