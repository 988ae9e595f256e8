#include "sesquiop/reporting.hpp"

#include <cmath>
#include <sstream>

namespace sesquiop {

using nlohmann::json;

json to_json(const ResidualReport& rep) {
  json j;
  j["name"] = rep.name;
  j["n"] = rep.scale_param;
  j["residual"] = rep.residual;
  j["tolerance"] = rep.tolerance;
  j["pass"] = rep.pass;
  j["details"] = rep.details;
  return j;
}

json to_json(const SpectralReport& rep) {
  json j;
  j["grid_n"] = rep.grid_n;
  std::ostringstream hash;
  hash << std::hex << rep.spec_hash;
  j["spec_hash"] = hash.str();
  j["commutator_residual"] = rep.commutator_residual;
  j["consistency_c"] = rep.consistency_c;
  j["pairs"] = json::array();
  for (const PairReport& p : rep.pairs) {
    json q;
    q["lambda"] = p.lambda;
    q["gap"] = p.gap;
    q["llstar_residual"] = p.llstar_residual;
    if (p.sigma_defined)
      q["sigma"] = json::array({p.sigma.real(), p.sigma.imag()});
    else
      q["sigma"] = nullptr;
    if (std::isnan(p.sigma_residual))
      q["sigma_residual"] = nullptr;
    else
      q["sigma_residual"] = p.sigma_residual;
    q["simple"] = p.simple;
    q["note"] = p.note;
    j["pairs"].push_back(q);
  }
  return j;
}

std::string residual_csv(const std::vector<ResidualReport>& reps) {
  std::ostringstream out;
  out << "name,n,residual,tolerance,pass\n";
  for (const ResidualReport& r : reps)
    out << r.name << "," << r.scale_param << "," << format_g17(r.residual) << ","
        << format_g17(r.tolerance) << "," << (r.pass ? "1" : "0") << "\n";
  return out.str();
}

std::string spectral_csv(const SpectralReport& rep) {
  std::ostringstream out;
  out << "index,lambda,gap,llstar_residual,sigma_re,sigma_im,sigma_residual,simple\n";
  for (std::size_t i = 0; i < rep.pairs.size(); ++i) {
    const PairReport& p = rep.pairs[i];
    out << i << "," << format_g17(p.lambda) << "," << format_g17(p.gap) << ","
        << format_g17(p.llstar_residual) << ",";
    if (p.sigma_defined)
      out << format_g17(p.sigma.real()) << "," << format_g17(p.sigma.imag());
    else
      out << "nan,nan";
    out << "," << format_g17(p.sigma_residual) << "," << (p.simple ? "1" : "0")
        << "\n";
  }
  return out.str();
}

std::string residual_markdown(const std::vector<ResidualReport>& reps) {
  std::ostringstream out;
  out << "| check | n | residual | tolerance | pass |\n";
  out << "|---|---:|---:|---:|:--|\n";
  for (const ResidualReport& r : reps)
    out << "| " << r.name << " | " << r.scale_param << " | " << format_sig3(r.residual)
        << " | " << format_sig3(r.tolerance) << " | " << (r.pass ? "yes" : "no")
        << " |\n";
  return out.str();
}

std::string spectral_markdown(const SpectralReport& rep) {
  std::ostringstream out;
  out << "grid n = " << rep.grid_n
      << ", commutator residual = " << format_sig3(rep.commutator_residual)
      << ", consistency C = " << format_sig3(rep.consistency_c) << "\n\n";
  out << "| # | lambda | gap | LL* residual | sigma | sigma residual | simple |\n";
  out << "|--:|---:|---:|---:|:--|---:|:--|\n";
  for (std::size_t i = 0; i < rep.pairs.size(); ++i) {
    const PairReport& p = rep.pairs[i];
    out << "| " << i << " | " << format_sig3(p.lambda) << " | " << format_sig3(p.gap)
        << " | " << format_sig3(p.llstar_residual) << " | ";
    if (p.sigma_defined)
      out << format_sig3(p.sigma.real()) << (p.sigma.imag() < 0 ? "" : "+")
          << format_sig3(p.sigma.imag()) << "i";
    else
      out << "-";
    out << " | " << format_sig3(p.sigma_residual) << " | " << (p.simple ? "yes" : "no")
        << " |\n";
  }
  return out.str();
}

}  // namespace sesquiop
