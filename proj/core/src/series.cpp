#include "sesquiop/series.hpp"

#include <algorithm>
#include <cmath>

#include "sesquiop/errors.hpp"

namespace sesquiop {

Series Series::constant(cd v, std::size_t len) {
  Series s(len);
  if (len > 0) s.a_[0] = v;
  return s;
}

// f(a*(z0+t)) has t^j coefficient a^j f^{(j)}(a z0) / j!.  The four
// trigonometric/hyperbolic cases just cycle through their derivatives.
Series Series::exp(cd a, double z0, std::size_t len) {
  Series s(len);
  cd term = std::exp(a * z0);
  for (std::size_t j = 0; j < len; ++j) {
    s.a_[j] = term;
    term *= a / static_cast<double>(j + 1);
  }
  return s;
}

Series Series::sinh(cd a, double z0, std::size_t len) {
  Series s(len);
  const cd sh = std::sinh(a * z0), ch = std::cosh(a * z0);
  cd pw = 1.0;
  for (std::size_t j = 0; j < len; ++j) {
    s.a_[j] = pw * (j % 2 == 0 ? sh : ch);
    pw *= a / static_cast<double>(j + 1);
  }
  return s;
}

Series Series::cosh(cd a, double z0, std::size_t len) {
  Series s(len);
  const cd sh = std::sinh(a * z0), ch = std::cosh(a * z0);
  cd pw = 1.0;
  for (std::size_t j = 0; j < len; ++j) {
    s.a_[j] = pw * (j % 2 == 0 ? ch : sh);
    pw *= a / static_cast<double>(j + 1);
  }
  return s;
}

Series Series::sin(cd a, double z0, std::size_t len) {
  Series s(len);
  const cd sn = std::sin(a * z0), cs = std::cos(a * z0);
  static const double sign[4] = {1.0, 1.0, -1.0, -1.0};
  cd pw = 1.0;
  for (std::size_t j = 0; j < len; ++j) {
    s.a_[j] = pw * sign[j % 4] * (j % 2 == 0 ? sn : cs);
    pw *= a / static_cast<double>(j + 1);
  }
  return s;
}

Series Series::cos(cd a, double z0, std::size_t len) {
  Series s(len);
  const cd sn = std::sin(a * z0), cs = std::cos(a * z0);
  static const double sign[4] = {1.0, -1.0, -1.0, 1.0};
  cd pw = 1.0;
  for (std::size_t j = 0; j < len; ++j) {
    s.a_[j] = pw * sign[j % 4] * (j % 2 == 0 ? cs : sn);
    pw *= a / static_cast<double>(j + 1);
  }
  return s;
}

Series Series::monomial(int p, double z0, std::size_t len) {
  Series s(len);
  // binomial expansion of (z0 + t)^p
  double binom = 1.0;
  for (int j = 0; j <= p && static_cast<std::size_t>(j) < len; ++j) {
    s.a_[j] = binom * std::pow(z0, p - j);
    binom *= static_cast<double>(p - j) / static_cast<double>(j + 1);
  }
  return s;
}

Series& Series::operator+=(const Series& rhs) {
  const std::size_t n = std::min(a_.size(), rhs.a_.size());
  for (std::size_t j = 0; j < n; ++j) a_[j] += rhs.a_[j];
  return *this;
}

Series& Series::operator*=(cd s) {
  for (auto& v : a_) v *= s;
  return *this;
}

Series operator*(const Series& x, const Series& y) {
  const std::size_t n = std::min(x.size(), y.size());
  Series out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x.a_[i] == cd(0.0)) continue;
    for (std::size_t j = 0; i + j < n; ++j) out.a_[i + j] += x.a_[i] * y.a_[j];
  }
  return out;
}

Series Series::derivative() const {
  if (a_.empty()) return Series(0);
  Series out(a_.size() - 1);
  for (std::size_t j = 1; j < a_.size(); ++j)
    out.a_[j - 1] = a_[j] * static_cast<double>(j);
  return out;
}

cd Series::horner(double t) const {
  cd acc = 0.0;
  for (std::size_t j = a_.size(); j-- > 0;) acc = acc * t + a_[j];
  return acc;
}

double Series::max_abs() const {
  double m = 0.0;
  for (const auto& v : a_) m = std::max(m, std::abs(v));
  return m;
}

Series Series::divide_removable(const Series& num, const Series& den, int zero_order) {
  const std::size_t m = static_cast<std::size_t>(zero_order);
  if (den.size() <= m || num.size() <= m)
    raise(Errc::OrderTooLarge, "series too short for removable division");
  // Leading coefficients must vanish analytically; anything left is rounding
  // noise from evaluating the factor expansions, which we verify and drop.
  const double noise = 1e-10 * std::max(num.max_abs(), den.max_abs());
  for (std::size_t j = 0; j < m; ++j) {
    if (std::abs(num.a_[j]) > noise || std::abs(den.a_[j]) > noise)
      raise(Errc::OrderTooLarge, "quotient is not removable at this center");
  }
  const std::size_t n = std::min(num.size(), den.size()) - m;
  Series q(n);
  const cd lead = den.a_[m];
  for (std::size_t j = 0; j < n; ++j) {
    cd acc = num.a_[j + m];
    for (std::size_t i = 0; i < j; ++i) acc -= q.a_[i] * den.a_[j - i + m];
    q.a_[j] = acc / lead;
  }
  return q;
}

}  // namespace sesquiop
