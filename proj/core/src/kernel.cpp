#include "sesquiop/kernel.hpp"

#include <cmath>

namespace sesquiop {

namespace {

// ---- entire-function term machinery ----
//
// Numerators and denominators of every catalog family are finite sums of
// terms  coeff * z^p * prod_i f_i(a_i z)  with f in {exp, sinh, cosh, sin,
// cos}.  That gives exact pointwise values and exact Taylor expansions at any
// center from one representation.

struct Factor {
  enum class Kind { Exp, Sinh, Cosh, Sin, Cos };
  Kind kind;
  cd a;

  cd value(double z) const {
    switch (kind) {
      case Kind::Exp: return std::exp(a * z);
      case Kind::Sinh: return std::sinh(a * z);
      case Kind::Cosh: return std::cosh(a * z);
      case Kind::Sin: return std::sin(a * z);
      case Kind::Cos: return std::cos(a * z);
    }
    return 0.0;
  }

  Series series(double z0, std::size_t len) const {
    switch (kind) {
      case Kind::Exp: return Series::exp(a, z0, len);
      case Kind::Sinh: return Series::sinh(a, z0, len);
      case Kind::Cosh: return Series::cosh(a, z0, len);
      case Kind::Sin: return Series::sin(a, z0, len);
      case Kind::Cos: return Series::cos(a, z0, len);
    }
    return Series(len);
  }
};

struct Term {
  cd coeff;
  int zpow = 0;
  std::vector<Factor> factors;
};

struct EntireSum {
  std::vector<Term> terms;

  cd value(double z) const {
    cd acc = 0.0;
    for (const Term& t : terms) {
      cd v = t.coeff;
      for (int p = 0; p < t.zpow; ++p) v *= z;
      for (const Factor& f : t.factors) v *= f.value(z);
      acc += v;
    }
    return acc;
  }

  Series series_at(double z0, std::size_t len) const {
    Series acc(len);
    for (const Term& t : terms) {
      Series s = Series::constant(t.coeff, len);
      if (t.zpow > 0) s = s * Series::monomial(t.zpow, z0, len);
      for (const Factor& f : t.factors) s = s * f.series(z0, len);
      acc += s;
    }
    return acc;
  }
};

Factor fexp(cd a) { return {Factor::Kind::Exp, a}; }
Factor fsinh(cd a) { return {Factor::Kind::Sinh, a}; }
Factor fsin(cd a) { return {Factor::Kind::Sin, a}; }

constexpr int kWindowDegree = 12;
constexpr int kMaxTaylorOrder = 30;
constexpr double kWindowEps = 1e-3;

}  // namespace

struct Kernel::Impl {
  ValidatedSpec vspec;
  EntireSum num, den;
  int zero_order_at_origin = 0;  // multiplicity of the denominator zero at 0

  struct Win {
    double center = 0.0;
    double halfwidth = 0.0;
    Series k0, k1, k2;  // kernel expansion and its first two derivatives
  };
  std::vector<Win> wins;

  const Win* find_window(double z) const {
    for (const Win& w : wins)
      if (std::abs(z - w.center) < w.halfwidth) return &w;
    return nullptr;
  }

  void check_domain(double z) const {
    if (!(std::abs(z) <= 2.0 * (1.0 + 1e-12)))
      raise(Errc::EvalOutOfDomain, "kernel argument outside [-2, 2]");
  }
};

namespace {

// Assemble numerator/denominator, denominator zero locations and the local
// frequency scale used to size the evaluation windows.
void build_family(const ValidatedSpec& v, EntireSum& num, EntireSum& den,
                  std::vector<double>& centers, double& freq) {
  const KernelSpec& s = v.spec;
  const cd i_unit(0.0, 1.0);
  const cd quarter_pi_i = i_unit * (M_PI / 4.0);
  const double half_pi = M_PI / 2.0;

  switch (s.family) {
    case Family::Item1: {
      const double g = s.gamma;
      const cd mu = s.mu;
      if (v.gamma_limit && v.mu_limit) {
        // k = 1: both frequencies collapse
        num.terms.push_back({1.0, 0, {}});
        den.terms.push_back({1.0, 0, {}});
        freq = 1.0;
      } else if (v.gamma_limit) {
        // k = sinh(mu z) / (mu z)
        num.terms.push_back({1.0, 0, {fsinh(mu)}});
        den.terms.push_back({mu, 1, {}});
        centers = {0.0};
        freq = 1.0;
      } else if (v.mu_limit) {
        // k = gamma z / sinh(gamma z)
        num.terms.push_back({g, 1, {}});
        den.terms.push_back({1.0, 0, {fsinh(g)}});
        centers = {0.0};
        freq = std::abs(g);
      } else {
        // k = gamma sinh(mu z) / (mu sinh(gamma z))
        num.terms.push_back({g, 0, {fsinh(mu)}});
        den.terms.push_back({mu, 0, {fsinh(g)}});
        centers = {0.0};
        freq = std::abs(g);
      }
      break;
    }
    case Family::Item2: {
      // k = alpha e^{-i mu z} + sin(mu z)/z  ==  (alpha z e^{-i mu z} + sin(mu z)) / z
      const cd mu = s.mu;
      num.terms.push_back({s.alpha, 1, {fexp(-i_unit * mu)}});
      if (!v.mu_limit) num.terms.push_back({1.0, 0, {fsin(mu)}});
      den.terms.push_back({1.0, 1, {}});
      centers = {0.0};
      freq = 1.0;
      break;
    }
    case Family::Item3: {
      const cd m1 = s.mu1, m2 = s.mu2;
      if (v.mu1_limit && v.mu2_limit) {
        // limit of both frequencies: k = 2 z (e^{-i pi z/4} + e^{i pi z/4}) / sin(pi z/2)
        num.terms.push_back({2.0, 1, {fexp(-quarter_pi_i)}});
        num.terms.push_back({2.0, 1, {fexp(quarter_pi_i)}});
        den.terms.push_back({1.0, 0, {fsin(half_pi)}});
      } else if (v.mu2_limit) {
        num.terms.push_back({2.0, 0, {fsinh(m1), fexp(-quarter_pi_i)}});
        num.terms.push_back({std::sinh(2.0 * m1), 1, {fexp(quarter_pi_i)}});
        den.terms.push_back({m1, 0, {fsin(half_pi)}});
      } else if (v.mu1_limit) {
        num.terms.push_back({std::sinh(2.0 * m2), 1, {fexp(-quarter_pi_i)}});
        num.terms.push_back({2.0, 0, {fsinh(m2), fexp(quarter_pi_i)}});
        den.terms.push_back({m2, 0, {fsin(half_pi)}});
      } else {
        num.terms.push_back({std::sinh(2.0 * m2), 0, {fsinh(m1), fexp(-quarter_pi_i)}});
        num.terms.push_back({std::sinh(2.0 * m1), 0, {fsinh(m2), fexp(quarter_pi_i)}});
        den.terms.push_back({m1 * m2, 0, {fsin(half_pi)}});
      }
      centers = {0.0, -2.0, 2.0};
      freq = half_pi;
      break;
    }
    case Family::RemarkExample: {
      // k = e^{-i pi z/4}/cos(pi z/4) + z e^{i pi z/4}/sin(pi z/2), brought over
      // the common denominator sin(pi z/2) = 2 sin(pi z/4) cos(pi z/4)
      num.terms.push_back({2.0, 0, {fsin(M_PI / 4.0), fexp(-quarter_pi_i)}});
      num.terms.push_back({1.0, 1, {fexp(quarter_pi_i)}});
      den.terms.push_back({1.0, 0, {fsin(half_pi)}});
      centers = {0.0, -2.0, 2.0};
      freq = half_pi;
      break;
    }
  }

  // overall real scale and gauge multiplier e^{tau z} act on the numerator
  for (Term& t : num.terms) {
    t.coeff *= s.scale;
    if (s.tau != cd(0.0)) t.factors.push_back(fexp(s.tau));
  }
}

}  // namespace

Kernel make_kernel(const KernelSpec& spec) { return make_kernel(validate_spec(spec)); }

Kernel make_kernel(const ValidatedSpec& vspec) {
  auto impl = std::make_shared<Kernel::Impl>();
  impl->vspec = vspec;

  std::vector<double> centers;
  double freq = 1.0;
  build_family(vspec, impl->num, impl->den, centers, freq);

  const double halfwidth = kWindowEps / std::max(1.0, freq);
  const std::size_t len = kWindowDegree + 2;  // one extra for the simple zero
  for (double c : centers) {
    Kernel::Impl::Win w;
    w.center = c;
    w.halfwidth = halfwidth;
    const Series n = impl->num.series_at(c, len);
    const Series d = impl->den.series_at(c, len);
    w.k0 = Series::divide_removable(n, d, 1);
    w.k1 = w.k0.derivative();
    w.k2 = w.k1.derivative();
    impl->wins.push_back(std::move(w));
    if (c == 0.0) impl->zero_order_at_origin = 1;
  }

  Kernel k;
  k.impl_ = std::move(impl);
  return k;
}

cd Kernel::eval(double z) const {
  impl_->check_domain(z);
  if (const auto* w = impl_->find_window(z)) return w->k0.horner(z - w->center);
  return impl_->num.value(z) / impl_->den.value(z);
}

cd Kernel::eval1(double z) const {
  impl_->check_domain(z);
  if (const auto* w = impl_->find_window(z)) return w->k1.horner(z - w->center);
  const Series n = impl_->num.series_at(z, 3), d = impl_->den.series_at(z, 3);
  const cd k = n[0] / d[0];
  return (n[1] - k * d[1]) / d[0];
}

cd Kernel::eval2(double z) const {
  impl_->check_domain(z);
  if (const auto* w = impl_->find_window(z)) return w->k2.horner(z - w->center);
  const Series n = impl_->num.series_at(z, 3), d = impl_->den.series_at(z, 3);
  const cd k = n[0] / d[0];
  const cd k1 = (n[1] - k * d[1]) / d[0];
  // series coefficients are f^{(j)}/j!, so f'' = 2 a_2
  return (2.0 * n[2] - 2.0 * k1 * d[1] - 2.0 * k * d[2]) / d[0];
}

std::vector<cd> Kernel::taylor(int order) const {
  if (order < 0 || order > kMaxTaylorOrder)
    raise(Errc::OrderTooLarge, "Taylor order must be in [0, 30]");
  const int m = impl_->zero_order_at_origin;
  const std::size_t len = static_cast<std::size_t>(order) + 1 + m;
  const Series n = impl_->num.series_at(0.0, len);
  const Series d = impl_->den.series_at(0.0, len);
  const Series q = Series::divide_removable(n, d, m);
  std::vector<cd> out(static_cast<std::size_t>(order) + 1);
  double fact = 1.0;
  for (int j = 0; j <= order; ++j) {
    out[j] = q[j] * fact;  // derivative convention: k_n = n! * series coefficient
    fact *= j + 1.0;
  }
  return out;
}

std::vector<Kernel::Window> Kernel::windows() const {
  std::vector<Window> out;
  for (const auto& w : impl_->wins) out.push_back({w.center, w.halfwidth});
  return out;
}

const ValidatedSpec& Kernel::vspec() const { return impl_->vspec; }

}  // namespace sesquiop
