#include "sesquiop/coefficients.hpp"

#include <cmath>

namespace sesquiop {

namespace {

constexpr int kMaxDerivOrder = 64;

// m-th derivative of cos(w y) evaluated through the 4-cycle, as a multiple of
// w^m: {cos, -sin, -cos, sin}
double cos_cycle(int m, double u) {
  switch (m & 3) {
    case 0: return std::cos(u);
    case 1: return -std::sin(u);
    case 2: return -std::cos(u);
    default: return std::sin(u);
  }
}

void check_order(int m) {
  if (m < 0 || m > kMaxDerivOrder)
    raise(Errc::OrderTooLarge, "coefficient derivative order out of range");
}

}  // namespace

CoefficientPair make_coefficients(const KernelSpec& spec) {
  return make_coefficients(validate_spec(spec));
}

CoefficientPair make_coefficients(const ValidatedSpec& vspec) {
  CoefficientPair p;
  p.v_ = vspec;
  return p;
}

cd CoefficientPair::db_base(int m, double y) const {
  const KernelSpec& s = v_.spec;
  switch (s.family) {
    case Family::Item1: {
      if (v_.gamma_limit) {  // b = y^2 - 1
        if (m == 0) return y * y - 1.0;
        if (m == 1) return 2.0 * y;
        if (m == 2) return 2.0;
        return 0.0;
      }
      const double g = s.gamma;
      if (m == 0) {
        // (cosh(2 g y) - cosh(2 g)) / (2 g^2), written as a product so the
        // value stays accurate (and exactly zero at y = +-1) for small g
        return std::sinh(g * (y + 1.0)) * std::sinh(g * (y - 1.0)) / (g * g);
      }
      // d^m/dy^m of cosh(2 g y)/(2 g^2) = 2^{m-1} g^{m-2} {sinh,cosh}(2 g y)
      const double base = std::pow(2.0, m - 1) * std::pow(g, m - 2);
      return base * (m % 2 == 1 ? std::sinh(2.0 * g * y) : std::cosh(2.0 * g * y));
    }
    case Family::Item2: {
      if (m == 0) return y * y - 1.0;
      if (m == 1) return 2.0 * y;
      if (m == 2) return 2.0;
      return 0.0;
    }
    case Family::Item3:
    case Family::RemarkExample: {
      // b = -cos(pi y / 2)
      const double w = M_PI / 2.0;
      return -std::pow(w, m) * cos_cycle(m, w * y);
    }
  }
  return 0.0;
}

cd CoefficientPair::dc_base(int m, double y) const {
  const KernelSpec& s = v_.spec;
  switch (s.family) {
    case Family::Item1: {
      const cd g2 = cd(s.gamma * s.gamma, 0.0);
      cd out = (g2 - s.mu * s.mu) * db_base(m, y);
      if (m == 0) out += s.c0;
      return out;
    }
    case Family::Item2: {
      // c = mu^2 b + i mu b' + mu/alpha
      const cd mu = s.mu;
      cd out = mu * mu * db_base(m, y) + cd(0.0, 1.0) * mu * db_base(m + 1, y);
      if (m == 0) out += mu / s.alpha;
      return out;
    }
    case Family::Item3: {
      // c = i (mu2^2 - mu1^2)/pi b' - (pi^2/16 + (mu1^2 + mu2^2)/2) b  (+ special)
      const cd d = cd(0.0, 1.0) * (s.mu2 * s.mu2 - s.mu1 * s.mu1) / M_PI;
      const cd q = cd(M_PI * M_PI / 16.0, 0.0) + (s.mu1 * s.mu1 + s.mu2 * s.mu2) / 2.0;
      cd out = d * db_base(m + 1, y) - q * db_base(m, y);
      if (s.special_coeff != cd(0.0)) {
        const double sgn = s.special_sign == SpecialSign::Plus ? 1.0 : -1.0;
        const cd lambda = cd(0.0, -2.0) * (M_PI / 4.0 + sgn * s.mu1.imag());
        out += s.special_coeff * std::pow(lambda, m) * std::exp(lambda * y);
      }
      return out;
    }
    case Family::RemarkExample: {
      const cd lambda = cd(0.0, M_PI / 2.0);
      return M_PI * M_PI / 32.0 * std::pow(lambda, m) * std::exp(lambda * y);
    }
  }
  return 0.0;
}

cd CoefficientPair::db(int order, double y) const {
  check_order(order);
  const cd tau = v_.spec.tau;
  if (tau == cd(0.0)) return db_base(order, y);
  // Leibniz rule on e^{-2 tau y} b(y)
  const cd envelope = std::exp(-2.0 * tau * y);
  cd acc = 0.0;
  double binom = 1.0;
  for (int j = order; j >= 0; --j) {
    acc += binom * std::pow(-2.0 * tau, order - j) * db_base(j, y);
    binom *= static_cast<double>(j) / static_cast<double>(order - j + 1);
  }
  return envelope * acc;
}

cd CoefficientPair::dc(int order, double y) const {
  check_order(order);
  const cd tau = v_.spec.tau;
  if (tau == cd(0.0)) return dc_base(order, y);
  // transformed c is e^{-2 tau y} (c - tau b' + tau^2 b)
  auto g = [&](int j) {
    return dc_base(j, y) - tau * db_base(j + 1, y) + tau * tau * db_base(j, y);
  };
  const cd envelope = std::exp(-2.0 * tau * y);
  cd acc = 0.0;
  double binom = 1.0;
  for (int j = order; j >= 0; --j) {
    acc += binom * std::pow(-2.0 * tau, order - j) * g(j);
    binom *= static_cast<double>(j) / static_cast<double>(order - j + 1);
  }
  return envelope * acc;
}

}  // namespace sesquiop
