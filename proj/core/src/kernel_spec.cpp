#include "sesquiop/kernel_spec.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace sesquiop {

using nlohmann::json;

const char* to_string(Family f) {
  switch (f) {
    case Family::Item1: return "item1";
    case Family::Item2: return "item2";
    case Family::Item3: return "item3";
    case Family::RemarkExample: return "remark_example";
  }
  return "?";
}

Family family_from_string(const std::string& s) {
  if (s == "item1") return Family::Item1;
  if (s == "item2") return Family::Item2;
  if (s == "item3") return Family::Item3;
  if (s == "remark_example") return Family::RemarkExample;
  raise(Errc::BadFamily, "unknown family '" + s + "'");
}

namespace {

bool on_axes(cd v) { return v.real() * v.imag() == 0.0; }

void check_axis(cd v, const char* name) {
  if (!on_axes(v))
    raise(Errc::AxisViolation,
          std::string(name) + " must be purely real or purely imaginary");
}

}  // namespace

ValidatedSpec validate_spec(const KernelSpec& spec) {
  ValidatedSpec v{spec};
  if (spec.tau.real() != 0.0)
    raise(Errc::NonImaginaryTau, "gauge exponent tau must be purely imaginary");
  if (!std::isfinite(spec.scale) || spec.scale == 0.0)
    raise(Errc::ParseError, "scale must be finite and nonzero");

  switch (spec.family) {
    case Family::Item1:
      check_axis(spec.mu, "mu");
      v.gamma_limit = spec.gamma == 0.0;
      v.mu_limit = spec.mu == cd(0.0);
      break;
    case Family::Item2:
      if (spec.mu.imag() != 0.0)
        raise(Errc::AxisViolation, "item2 requires real mu");
      if (spec.alpha == 0.0) raise(Errc::ZeroAlpha, "item2 requires alpha != 0");
      v.mu_limit = spec.mu == cd(0.0);
      break;
    case Family::Item3: {
      check_axis(spec.mu1, "mu1");
      check_axis(spec.mu2, "mu2");
      v.mu1_limit = spec.mu1 == cd(0.0);
      v.mu2_limit = spec.mu2 == cd(0.0);
      if (spec.special_coeff != cd(0.0)) {
        // the additive exponential in c is admissible only for
        // mu1 = i*mu, mu2 = i*(mu +/- pi/2) with real mu
        const double sgn = spec.special_sign == SpecialSign::Plus ? 1.0 : -1.0;
        const bool axes_ok = spec.mu1.real() == 0.0 && spec.mu2.real() == 0.0;
        const double offset = spec.mu2.imag() - spec.mu1.imag() - sgn * M_PI / 2.0;
        if (!axes_ok || std::abs(offset) > 1e-12)
          raise(Errc::BadSpecialCase,
                "special term needs mu1 = i*mu and mu2 = i*(mu +/- pi/2)");
      }
      break;
    }
    case Family::RemarkExample:
      break;  // fixed instance; only tau/scale apply
  }
  return v;
}

KernelSpec gauge_transform(const KernelSpec& spec, cd tau) {
  if (tau.real() != 0.0)
    raise(Errc::NonImaginaryTau, "gauge exponent tau must be purely imaginary");
  KernelSpec out = spec;
  out.tau = tau;
  return out;
}

namespace {

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

json complex_to_json(cd v) { return json::array({v.real(), v.imag()}); }

cd complex_from_json(const json& j, const char* name) {
  if (j.is_number()) return cd(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return cd(j[0].get<double>(), j[1].get<double>());
  raise(Errc::ParseError, std::string(name) + " must be a number or [re, im]");
}

}  // namespace

KernelSpec spec_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    raise(Errc::ParseError, e.what());
  }
  if (!j.is_object()) raise(Errc::ParseError, "spec must be a JSON object");
  if (!j.contains("family") || !j["family"].is_string())
    raise(Errc::ParseError, "spec needs a string 'family' field");

  KernelSpec spec;
  spec.family = family_from_string(j["family"].get<std::string>());
  try {
    if (j.contains("gamma")) spec.gamma = j["gamma"].get<double>();
    if (j.contains("mu")) spec.mu = complex_from_json(j["mu"], "mu");
    if (j.contains("alpha")) spec.alpha = j["alpha"].get<double>();
    if (j.contains("mu1")) spec.mu1 = complex_from_json(j["mu1"], "mu1");
    if (j.contains("mu2")) spec.mu2 = complex_from_json(j["mu2"], "mu2");
    if (j.contains("c0")) spec.c0 = complex_from_json(j["c0"], "c0");
    if (j.contains("special_coeff"))
      spec.special_coeff = complex_from_json(j["special_coeff"], "special_coeff");
    if (j.contains("special_sign")) {
      const std::string s = j["special_sign"].get<std::string>();
      if (s == "+") spec.special_sign = SpecialSign::Plus;
      else if (s == "-") spec.special_sign = SpecialSign::Minus;
      else raise(Errc::ParseError, "special_sign must be '+' or '-'");
    }
    if (j.contains("tau_im")) spec.tau = cd(0.0, j["tau_im"].get<double>());
    if (j.contains("scale")) spec.scale = j["scale"].get<double>();
  } catch (const json::exception& e) {
    raise(Errc::ParseError, e.what());
  }
  return spec;
}

KernelSpec spec_from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(Errc::IoError, "cannot open spec file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return spec_from_json_text(buf.str());
}

std::string spec_to_json_text(const KernelSpec& spec) {
  // hand-rolled to keep a canonical key order and 17-significant-digit floats
  std::ostringstream out;
  auto put_complex = [&](const char* key, cd v) {
    out << ",\"" << key << "\":[" << fmt17(v.real()) << "," << fmt17(v.imag()) << "]";
  };
  out << "{\"family\":\"" << to_string(spec.family) << "\"";
  out << ",\"gamma\":" << fmt17(spec.gamma);
  put_complex("mu", spec.mu);
  out << ",\"alpha\":" << fmt17(spec.alpha);
  put_complex("mu1", spec.mu1);
  put_complex("mu2", spec.mu2);
  put_complex("c0", spec.c0);
  put_complex("special_coeff", spec.special_coeff);
  out << ",\"special_sign\":\"" << (spec.special_sign == SpecialSign::Plus ? "+" : "-") << "\"";
  out << ",\"tau_im\":" << fmt17(spec.tau.imag());
  out << ",\"scale\":" << fmt17(spec.scale);
  out << "}";
  return out.str();
}

std::uint64_t spec_hash(const KernelSpec& spec) {
  const std::string text = spec_to_json_text(spec);
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

std::string describe(const KernelSpec& spec) {
  std::ostringstream out;
  auto cshort = [&](cd v) {
    char buf[64];
    if (v.imag() == 0.0) std::snprintf(buf, sizeof buf, "%g", v.real());
    else if (v.real() == 0.0) std::snprintf(buf, sizeof buf, "%gi", v.imag());
    else std::snprintf(buf, sizeof buf, "%g%+gi", v.real(), v.imag());
    return std::string(buf);
  };
  out << to_string(spec.family);
  switch (spec.family) {
    case Family::Item1:
      out << "(gamma=" << cshort(spec.gamma) << ",mu=" << cshort(spec.mu);
      if (spec.c0 != cd(0.0)) out << ",c0=" << cshort(spec.c0);
      out << ")";
      break;
    case Family::Item2:
      out << "(alpha=" << cshort(spec.alpha) << ",mu=" << cshort(spec.mu) << ")";
      break;
    case Family::Item3:
      out << "(mu1=" << cshort(spec.mu1) << ",mu2=" << cshort(spec.mu2);
      if (spec.special_coeff != cd(0.0))
        out << ",special=" << cshort(spec.special_coeff)
            << (spec.special_sign == SpecialSign::Plus ? "+" : "-");
      out << ")";
      break;
    case Family::RemarkExample:
      break;
  }
  if (spec.tau != cd(0.0)) out << "@tau=" << cshort(spec.tau);
  if (spec.scale != 1.0) out << "@scale=" << cshort(spec.scale);
  return out.str();
}

}  // namespace sesquiop
