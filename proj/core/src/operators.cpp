#include "sesquiop/operators.hpp"

#include <cmath>
#include <sstream>

#include "json.hpp"
#include "sesquiop/io_util.hpp"

namespace sesquiop {

DiscreteOperator build_K(const Kernel& kernel, const Grid& grid) {
  return build_K(kernel, grid, spec_hash(kernel.vspec().spec), "K");
}

DiscreteOperator build_K(const KernelView& kernel, const Grid& grid,
                         std::uint64_t spec_hash, const std::string& label) {
  const int n = grid.n;
  Eigen::VectorXd sq = grid.weights.array().sqrt();
  DiscreteOperator op;
  op.matrix.resize(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      op.matrix(i, j) = sq[i] * kernel.eval(grid.nodes[i] - grid.nodes[j]) * sq[j];
  op.label = label;
  op.spec_hash = spec_hash;
  op.grid_id = grid.id;
  op.n = n;
  return op;
}

DiscreteOperator build_L(const CoefficientPair& coeffs, const Grid& grid) {
  const int n = grid.n;
  Eigen::VectorXcd cv(n);
  Eigen::VectorXcd wb(n);
  for (int i = 0; i < n; ++i) {
    wb[i] = grid.weights[i] * coeffs.b(grid.nodes[i]);
    cv[i] = coeffs.c(grid.nodes[i]);
  }

  // (b u')' in its quadrature-adjoint divergence form.  Plain collocation
  // D1·diag(b)·D1 leaves a rank-2 boundary defect (the discrete
  // integration-by-parts identity W·D1 + D1ᵀ·W = r₊r₊ᵀ − r₋r₋ᵀ acts on
  // b·(rough vector), which does not vanish even though b(±1) = 0); the
  // adjoint form removes it, is exactly complex-symmetric after the
  // diag(√w) similarity, and agrees with the collocation form spectrally
  // on smooth data.  In symmetrized coordinates:
  //   L̃ = −diag(1/√w)·D1ᵀ·diag(w·b)·D1·diag(1/√w) + diag(c)
  const Eigen::VectorXd sq = grid.weights.array().sqrt();
  Eigen::MatrixXd scaled = grid.diff1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) scaled(i, j) /= sq[j];
  Eigen::MatrixXcd L = -scaled.transpose().cast<cd>() * wb.asDiagonal() *
                       scaled.cast<cd>();
  L += Eigen::MatrixXcd(cv.asDiagonal());

  DiscreteOperator op;
  op.matrix = std::move(L);
  op.label = "L";
  op.spec_hash = spec_hash(coeffs.vspec().spec);
  op.grid_id = grid.id;
  op.n = n;
  return op;
}

DiscreteOperator compose(Compose kind, const DiscreteOperator& a) {
  DiscreteOperator op;
  op.spec_hash = a.spec_hash;
  op.grid_id = a.grid_id;
  op.n = a.n;
  switch (kind) {
    case Compose::AdjointTimesSelf:
      op.matrix = a.matrix.adjoint() * a.matrix;
      op.label = a.label + "*" + a.label;
      break;
    case Compose::Conjugate:
      op.matrix = a.matrix.conjugate();
      op.label = "conj(" + a.label + ")";
      break;
    case Compose::Product:
      throw std::invalid_argument("Product composition needs two operands");
  }
  return op;
}

DiscreteOperator compose(Compose kind, const DiscreteOperator& a,
                         const DiscreteOperator& b) {
  if (kind != Compose::Product)
    throw std::invalid_argument("unary composition takes one operand");
  if (a.grid_id != b.grid_id || a.n != b.n)
    raise(Errc::GridMismatch, "composing operators from different grids");
  DiscreteOperator op;
  op.matrix = a.matrix * b.matrix;
  op.label = a.label + "·" + b.label;
  op.spec_hash = a.spec_hash == b.spec_hash ? a.spec_hash : (a.spec_hash ^ b.spec_hash);
  op.grid_id = a.grid_id;
  op.n = a.n;
  return op;
}

void dump_operator(const DiscreteOperator& op, const std::string& path) {
  std::ostringstream out;
  std::ostringstream hash;
  hash << std::hex << op.spec_hash;
  out << "{\"label\":\"" << op.label << "\",\"n\":" << op.n
      << ",\"spec_hash\":\"" << hash.str() << "\"}\n";
  for (int i = 0; i < op.n; ++i) {
    for (int j = 0; j < op.n; ++j) {
      if (j) out << ",";
      out << format_g17(op.matrix(i, j).real()) << "," << format_g17(op.matrix(i, j).imag());
    }
    out << "\n";
  }
  write_file_atomic(path, out.str());
}

DiscreteOperator load_operator(const std::string& path) {
  const std::string text = read_file(path);
  std::istringstream in(text);
  std::string header;
  if (!std::getline(in, header)) raise(Errc::ParseError, "empty operator dump");

  DiscreteOperator op;
  try {
    const auto j = nlohmann::json::parse(header);
    op.label = j.at("label").get<std::string>();
    op.n = j.at("n").get<int>();
    op.spec_hash = std::stoull(j.at("spec_hash").get<std::string>(), nullptr, 16);
  } catch (const std::exception& e) {
    raise(Errc::ParseError, std::string("bad operator header: ") + e.what());
  }

  op.matrix.resize(op.n, op.n);
  std::string line;
  for (int i = 0; i < op.n; ++i) {
    if (!std::getline(in, line)) raise(Errc::ParseError, "truncated operator dump");
    std::istringstream row(line);
    std::string cell;
    for (int j = 0; j < op.n; ++j) {
      double re = 0.0, im = 0.0;
      if (!std::getline(row, cell, ',')) raise(Errc::ParseError, "short row in dump");
      re = std::stod(cell);
      if (!std::getline(row, cell, ',')) raise(Errc::ParseError, "short row in dump");
      im = std::stod(cell);
      op.matrix(i, j) = cd(re, im);
    }
  }
  return op;
}

}  // namespace sesquiop
