#include "sesquiop/grid.hpp"

#include <bit>
#include <cmath>

namespace sesquiop {

namespace {

// Legendre P_n and its derivative by the three-term recurrence.
void legendre(int n, double x, double& p, double& dp) {
  double p0 = 1.0, p1 = x;
  for (int j = 1; j < n; ++j)
    std::tie(p0, p1) = std::pair{p1, ((2.0 * j + 1.0) * x * p1 - j * p0) / (j + 1.0)};
  p = p1;
  dp = n * (x * p1 - p0) / (x * x - 1.0);
}

std::uint64_t fingerprint(const Eigen::VectorXd& v, int n) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::uint64_t bits) {
    for (int s = 0; s < 64; s += 8) {
      h ^= (bits >> s) & 0xff;
      h *= 1099511628211ull;
    }
  };
  mix(static_cast<std::uint64_t>(n));
  for (int i = 0; i < v.size(); ++i) mix(std::bit_cast<std::uint64_t>(v[i]));
  return h;
}

}  // namespace

Grid build_grid(int n) {
  if (n < 4 || n > 4096) raise(Errc::BadSize, "grid size must be in [4, 4096]");

  Grid g;
  g.n = n;
  g.nodes.resize(n);
  g.weights.resize(n);

  // Newton iteration from the Chebyshev-like initial guess; roots come out in
  // descending order and are stored ascending.
  for (int i = 0; i < n; ++i) {
    double x = std::cos(M_PI * (4.0 * i + 3.0) / (4.0 * n + 2.0));
    double p = 0.0, dp = 1.0;
    for (int it = 0; it < 100; ++it) {
      legendre(n, x, p, dp);
      const double step = p / dp;
      x -= step;
      if (std::abs(step) < 1e-15) break;
    }
    legendre(n, x, p, dp);
    g.nodes[n - 1 - i] = x;
    g.weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }

  // enforce exact symmetry about the origin
  for (int i = 0; i < n / 2; ++i) {
    const int j = n - 1 - i;
    const double x = 0.5 * (g.nodes[j] - g.nodes[i]);
    g.nodes[i] = -x;
    g.nodes[j] = x;
    const double w = 0.5 * (g.weights[i] + g.weights[j]);
    g.weights[i] = g.weights[j] = w;
  }
  if (n % 2 == 1) g.nodes[n / 2] = 0.0;

  // barycentric differentiation; for Gauss-Legendre nodes the barycentric
  // weights are proportional to (-1)^i sqrt((1 - x_i^2) w_i)
  Eigen::VectorXd delta(n);
  for (int i = 0; i < n; ++i) {
    const double x = g.nodes[i];
    delta[i] = (i % 2 == 0 ? 1.0 : -1.0) * std::sqrt((1.0 - x * x) * g.weights[i]);
  }

  g.diff1.resize(n, n);
  for (int i = 0; i < n; ++i) {
    double rowsum = 0.0;
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const double v = (delta[j] / delta[i]) / (g.nodes[i] - g.nodes[j]);
      g.diff1(i, j) = v;
      rowsum += v;
    }
    g.diff1(i, i) = -rowsum;
  }

  // second derivative via the barycentric recursion
  g.diff2.resize(n, n);
  for (int i = 0; i < n; ++i) {
    double rowsum = 0.0;
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const double v =
          2.0 * g.diff1(i, j) * (g.diff1(i, i) - 1.0 / (g.nodes[i] - g.nodes[j]));
      g.diff2(i, j) = v;
      rowsum += v;
    }
    g.diff2(i, i) = -rowsum;
  }

  g.id = fingerprint(g.nodes, n);
  return g;
}

}  // namespace sesquiop
