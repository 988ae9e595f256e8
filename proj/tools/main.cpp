// Command-line front end: evaluate catalog kernels, verify the commutation
// relations at the functional / Taylor / discrete level, inspect spectra,
// sweep parameters and aggregate reports.
//
// Exit codes: 0 all checks passed, 2 spec parse failure, 3 validation
// failure, 4 check failure (reports still written), 5 I/O failure.

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sesquiop/io_util.hpp"
#include "sesquiop/reporting.hpp"
#include "sesquiop/spectral.hpp"
#include "sesquiop/verification.hpp"

namespace {

using namespace sesquiop;
using nlohmann::json;

enum class Command { EvalKernel, VerifyRelation, VerifyDiscrete, Spectrum, Sweep, Report };

struct RunConfig {
  Command command = Command::Report;
  std::string spec_path;
  int n = 128;
  int samples = 200;
  int count = 10;
  std::string out_dir = ".";
  std::string format = "csv";
  int jobs = 1;
  bool dump = false;
  double tolerance_scale = 1.0;
  // sweep only
  std::string sweep_command;
  std::string sweep_param;
  std::vector<double> sweep_values;
};

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitCheckFailed = 4;
constexpr int kExitIo = 5;

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::ParseError:
    case Errc::BadFamily:
      return kExitParse;
    case Errc::IoError:
      return kExitIo;
    default:
      return kExitValidation;
  }
}

std::string join_path(const std::string& dir, const std::string& name) {
  return (std::filesystem::path(dir) / name).string();
}

// canonical machine-readable JSON always goes out next to the presentation
// format so `report` can aggregate any previous run
void write_reports(const RunConfig& cfg, const std::string& stem,
                   const std::vector<ResidualReport>& reps) {
  json j;
  j["reports"] = json::array();
  for (const auto& r : reps) j["reports"].push_back(to_json(r));
  write_file_atomic(join_path(cfg.out_dir, stem + ".json"), j.dump(2) + "\n");
  if (cfg.format == "csv")
    write_file_atomic(join_path(cfg.out_dir, stem + ".csv"), residual_csv(reps));
  else if (cfg.format == "md")
    write_file_atomic(join_path(cfg.out_dir, stem + ".md"), residual_markdown(reps));
}

void print_reports(const std::vector<ResidualReport>& reps) {
  for (const auto& r : reps)
    std::cout << (r.pass ? "[pass] " : "[FAIL] ") << r.name << " (n=" << r.scale_param
              << "): residual " << format_sig3(r.residual) << " vs tolerance "
              << format_sig3(r.tolerance) << "\n";
}

int run_eval_kernel(const RunConfig& cfg) {
  const ValidatedSpec v = validate_spec(spec_from_json_file(cfg.spec_path));
  const Kernel kernel = make_kernel(v);

  std::ostringstream csv;
  csv << "z,k_re,k_im,k1_re,k1_im,k2_re,k2_im\n";
  json samples = json::array();
  const int m = std::max(cfg.samples, 2);
  for (int i = 0; i < m; ++i) {
    const double z = -2.0 + 4.0 * static_cast<double>(i) / (m - 1);
    const cd k0 = kernel.eval(z), k1 = kernel.eval1(z), k2 = kernel.eval2(z);
    csv << format_g17(z) << "," << format_g17(k0.real()) << "," << format_g17(k0.imag())
        << "," << format_g17(k1.real()) << "," << format_g17(k1.imag()) << ","
        << format_g17(k2.real()) << "," << format_g17(k2.imag()) << "\n";
    samples.push_back({z, k0.real(), k0.imag()});
  }

  std::ostringstream taylor_csv;
  taylor_csv << "order,re,im\n";
  json taylor = json::array();
  const auto kn = kernel.taylor(12);
  for (std::size_t i = 0; i < kn.size(); ++i) {
    taylor_csv << i << "," << format_g17(kn[i].real()) << "," << format_g17(kn[i].imag())
               << "\n";
    taylor.push_back({kn[i].real(), kn[i].imag()});
  }

  json j;
  j["spec"] = json::parse(spec_to_json_text(v.spec));
  j["taylor"] = taylor;
  j["samples"] = samples;
  write_file_atomic(join_path(cfg.out_dir, "kernel.json"), j.dump(2) + "\n");
  if (cfg.format == "csv" || cfg.format == "md") {
    write_file_atomic(join_path(cfg.out_dir, "kernel_samples.csv"), csv.str());
    write_file_atomic(join_path(cfg.out_dir, "kernel_taylor.csv"), taylor_csv.str());
  }
  std::cout << "evaluated " << describe(v.spec) << " at " << m << " points ("
            << join_path(cfg.out_dir, "kernel.json") << ")\n";
  return kExitOk;
}

int run_verify_relation(const RunConfig& cfg) {
  const ValidatedSpec v = validate_spec(spec_from_json_file(cfg.spec_path));
  const Kernel kernel = make_kernel(v);
  const CoefficientPair coeffs = make_coefficients(v);

  std::vector<ResidualReport> reps;
  reps.push_back(functional_relation_residual(kernel, coeffs, cfg.samples,
                                              1e-9 * cfg.tolerance_scale));
  reps.push_back(taylor_relation_residual(kernel, coeffs, 8, 20, 0.0,
                                          1e-10 * cfg.tolerance_scale));
  reps.push_back(coefficient_constraint_diagnostic(kernel, coeffs));

  write_reports(cfg, "verify_relation", reps);
  print_reports(reps);
  for (const auto& r : reps)
    if (!r.pass) return kExitCheckFailed;
  return kExitOk;
}

int run_verify_discrete(const RunConfig& cfg) {
  const ValidatedSpec v = validate_spec(spec_from_json_file(cfg.spec_path));

  std::vector<ResidualReport> reps;
  reps.push_back(
      sesquicommutator_residual(v, cfg.n, 1e-6 * cfg.tolerance_scale));
  const double derived_tol =
      10.0 * std::max(reps[0].residual, 1e-14 * cfg.tolerance_scale);
  for (auto& r : derived_identity_residuals(v, cfg.n, derived_tol))
    reps.push_back(std::move(r));

  if (cfg.dump) {
    const Grid grid = build_grid(cfg.n);
    dump_operator(build_K(make_kernel(v), grid), join_path(cfg.out_dir, "K.op"));
    dump_operator(build_L(make_coefficients(v), grid), join_path(cfg.out_dir, "L.op"));
  }

  write_reports(cfg, "verify_discrete", reps);
  print_reports(reps);
  for (const auto& r : reps)
    if (!r.pass) return kExitCheckFailed;
  return kExitOk;
}

int run_spectrum(const RunConfig& cfg) {
  const ValidatedSpec v = validate_spec(spec_from_json_file(cfg.spec_path));
  const Grid grid = build_grid(cfg.n);
  const SpectralReport rep = spectral_report(v, grid, cfg.count);

  write_file_atomic(join_path(cfg.out_dir, "spectrum.json"), to_json(rep).dump(2) + "\n");
  if (cfg.format == "csv")
    write_file_atomic(join_path(cfg.out_dir, "spectrum.csv"), spectral_csv(rep));
  else if (cfg.format == "md")
    write_file_atomic(join_path(cfg.out_dir, "spectrum.md"), spectral_markdown(rep));

  if (cfg.dump) {
    dump_operator(build_K(make_kernel(v), grid), join_path(cfg.out_dir, "K.op"));
    dump_operator(build_L(make_coefficients(v), grid), join_path(cfg.out_dir, "L.op"));
  }

  const double pair_tol = 1e-4 * cfg.tolerance_scale;
  double radius = 0.0;
  for (const auto& p : rep.pairs) radius = std::max(radius, std::abs(p.lambda));
  bool ok = rep.consistency_c < 1e3;
  for (const auto& p : rep.pairs) {
    if (!p.simple) continue;
    // eigenpairs this deep in the spectrum sit at the eigensolver's noise
    // floor; they are reported but carry no pass/fail weight
    if (std::abs(p.lambda) < 1e-6 * radius) continue;
    if (p.llstar_residual > pair_tol) ok = false;
    if (p.sigma_defined && p.sigma_residual > pair_tol) ok = false;
  }
  std::cout << "spectrum of " << describe(v.spec) << " at n=" << cfg.n << ": "
            << rep.pairs.size() << " pairs, commutator residual "
            << format_sig3(rep.commutator_residual) << (ok ? " [pass]" : " [FAIL]")
            << "\n";
  return ok ? kExitOk : kExitCheckFailed;
}

int run_command(const RunConfig& cfg);  // forward (sweep recurses)

int run_sweep(const RunConfig& cfg) {
  if (cfg.sweep_values.empty()) {
    std::cerr << "sweep needs --values\n";
    return kExitParse;
  }

  const KernelSpec base = spec_from_json_file(cfg.spec_path);
  std::atomic<int> worst{kExitOk};
  std::vector<std::future<void>> active;
  json index = json::array();

  for (std::size_t i = 0; i < cfg.sweep_values.size(); ++i) {
    const double value = cfg.sweep_values[i];

    KernelSpec spec = base;
    RunConfig point = cfg;
    point.command = Command::VerifyDiscrete;
    if (cfg.sweep_command == "verify-relation") point.command = Command::VerifyRelation;
    else if (cfg.sweep_command == "verify-discrete") point.command = Command::VerifyDiscrete;
    else if (cfg.sweep_command == "spectrum") point.command = Command::Spectrum;
    else if (cfg.sweep_command == "eval-kernel") point.command = Command::EvalKernel;
    else {
      std::cerr << "unknown sweep command '" << cfg.sweep_command << "'\n";
      return kExitParse;
    }

    if (cfg.sweep_param == "n") point.n = static_cast<int>(value);
    else if (cfg.sweep_param == "samples") point.samples = static_cast<int>(value);
    else if (cfg.sweep_param == "count") point.count = static_cast<int>(value);
    else if (cfg.sweep_param == "gamma") spec.gamma = value;
    else if (cfg.sweep_param == "alpha") spec.alpha = value;
    else if (cfg.sweep_param == "scale") spec.scale = value;
    else if (cfg.sweep_param == "tau_im") spec.tau = cd(0.0, value);
    else if (cfg.sweep_param == "mu_re") spec.mu = cd(value, 0.0);
    else if (cfg.sweep_param == "mu_im") spec.mu = cd(0.0, value);
    else if (cfg.sweep_param == "mu1_re") spec.mu1 = cd(value, 0.0);
    else if (cfg.sweep_param == "mu1_im") spec.mu1 = cd(0.0, value);
    else if (cfg.sweep_param == "mu2_re") spec.mu2 = cd(value, 0.0);
    else if (cfg.sweep_param == "mu2_im") spec.mu2 = cd(0.0, value);
    else {
      std::cerr << "unknown sweep parameter '" << cfg.sweep_param << "'\n";
      return kExitParse;
    }

    char dirname[64];
    std::snprintf(dirname, sizeof dirname, "point_%03zu", i);
    point.out_dir = join_path(cfg.out_dir, dirname);
    ensure_directory(point.out_dir);
    const std::string point_spec = join_path(point.out_dir, "spec.json");
    write_file_atomic(point_spec, spec_to_json_text(spec) + "\n");
    point.spec_path = point_spec;

    index.push_back({{"dir", dirname}, {"param", cfg.sweep_param}, {"value", value}});

    auto task = [point, &worst]() {
      int rc;
      try {
        rc = run_command(point);
      } catch (const Error& e) {
        std::cerr << point.out_dir << ": " << e.what() << "\n";
        rc = exit_code_for(e);
      }
      int cur = worst.load();
      while (rc > cur && !worst.compare_exchange_weak(cur, rc)) {
      }
    };

    if (cfg.jobs > 1) {
      active.push_back(std::async(std::launch::async, task));
      if (active.size() >= static_cast<std::size_t>(cfg.jobs)) {
        active.front().get();
        active.erase(active.begin());
      }
    } else {
      task();
    }
  }
  for (auto& f : active) f.get();

  write_file_atomic(join_path(cfg.out_dir, "sweep_index.json"), index.dump(2) + "\n");
  return worst.load();
}

int run_report(const RunConfig& cfg) {
  namespace fs = std::filesystem;
  std::vector<ResidualReport> rows;
  std::vector<std::pair<std::string, SpectralReport>> spectra;

  std::vector<fs::path> files;
  std::error_code ec;
  for (auto it = fs::recursive_directory_iterator(cfg.out_dir, ec);
       !ec && it != fs::recursive_directory_iterator(); ++it) {
    if (it->is_regular_file() && it->path().extension() == ".json")
      files.push_back(it->path());
  }
  if (ec) {
    std::cerr << "cannot scan '" << cfg.out_dir << "': " << ec.message() << "\n";
    return kExitIo;
  }
  std::sort(files.begin(), files.end());

  for (const auto& path : files) {
    json j;
    try {
      j = json::parse(read_file(path.string()));
    } catch (...) {
      continue;  // unrelated JSON is skipped
    }
    if (j.contains("reports") && j["reports"].is_array()) {
      for (const auto& r : j["reports"]) {
        if (!r.contains("name") || !r.contains("residual")) continue;
        ResidualReport rep;
        rep.name = path.parent_path().filename().string() + "/" +
                   r["name"].get<std::string>();
        rep.scale_param = r.value("n", 0);
        rep.residual = r.value("residual", 0.0);
        rep.tolerance = r.value("tolerance", 0.0);
        rep.pass = r.value("pass", false);
        rows.push_back(std::move(rep));
      }
    } else if (j.contains("pairs") && j.contains("grid_n")) {
      SpectralReport rep;
      rep.grid_n = j.value("grid_n", 0);
      rep.commutator_residual = j.value("commutator_residual", 0.0);
      rep.consistency_c = j.value("consistency_c", 0.0);
      for (const auto& q : j["pairs"]) {
        PairReport p;
        p.lambda = q.value("lambda", 0.0);
        p.gap = q.value("gap", 0.0);
        p.llstar_residual = q.value("llstar_residual", 0.0);
        p.simple = q.value("simple", false);
        if (q.contains("sigma") && q["sigma"].is_array()) {
          p.sigma = cd(q["sigma"][0].get<double>(), q["sigma"][1].get<double>());
          p.sigma_defined = true;
        }
        if (q.contains("sigma_residual") && q["sigma_residual"].is_number())
          p.sigma_residual = q["sigma_residual"].get<double>();
        rep.pairs.push_back(p);
      }
      spectra.emplace_back(path.parent_path().filename().string(), rep);
    }
  }

  std::ostringstream md;
  md << "# verification summary\n\n";
  if (!rows.empty()) md << residual_markdown(rows) << "\n";
  for (const auto& [label, rep] : spectra)
    md << "## spectrum: " << label << "\n\n" << spectral_markdown(rep) << "\n";
  write_file_atomic(join_path(cfg.out_dir, "summary.md"), md.str());
  write_file_atomic(join_path(cfg.out_dir, "summary.csv"), residual_csv(rows));

  std::cout << "aggregated " << rows.size() << " checks and " << spectra.size()
            << " spectra into " << join_path(cfg.out_dir, "summary.md") << "\n";
  for (const auto& r : rows)
    if (!r.pass) return kExitCheckFailed;
  return kExitOk;
}

int run_command(const RunConfig& cfg) {
  ensure_directory(cfg.out_dir);
  switch (cfg.command) {
    case Command::EvalKernel: return run_eval_kernel(cfg);
    case Command::VerifyRelation: return run_verify_relation(cfg);
    case Command::VerifyDiscrete: return run_verify_discrete(cfg);
    case Command::Spectrum: return run_spectrum(cfg);
    case Command::Sweep: return run_sweep(cfg);
    case Command::Report: return run_report(cfg);
  }
  return kExitParse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-convolution commutation toolkit"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string values_csv;

  auto add_common = [&](CLI::App* sub, bool needs_spec) {
    if (needs_spec)
      sub->add_option("--spec", cfg.spec_path, "kernel spec JSON file")->required();
    sub->add_option("--n", cfg.n, "grid size");
    sub->add_option("--samples", cfg.samples, "sample count per axis");
    sub->add_option("--count", cfg.count, "number of eigenpairs");
    sub->add_option("--out", cfg.out_dir, "output directory");
    sub->add_option("--format", cfg.format, "csv | json | md")
        ->check(CLI::IsMember({"csv", "json", "md"}));
    sub->add_option("--jobs", cfg.jobs, "parallel sweep points");
    sub->add_flag("--dump", cfg.dump, "write operator matrices");
    sub->add_option("--tolerance-scale", cfg.tolerance_scale,
                    "multiply all gate tolerances");
  };

  auto* eval = app.add_subcommand("eval-kernel", "sample a kernel and its Taylor table");
  add_common(eval, true);
  auto* rel = app.add_subcommand("verify-relation",
                                 "check the functional and Taylor relations");
  add_common(rel, true);
  auto* disc = app.add_subcommand("verify-discrete",
                                  "check discrete commutation and derived identities");
  add_common(disc, true);
  auto* spect = app.add_subcommand("spectrum", "eigenpair diagnostics");
  add_common(spect, true);
  auto* sweep = app.add_subcommand("sweep", "repeat a command over a parameter list");
  add_common(sweep, true);
  sweep->add_option("--command", cfg.sweep_command, "command to repeat")->required();
  sweep->add_option("--param", cfg.sweep_param, "parameter to vary")->required();
  sweep->add_option("--values", values_csv, "comma-separated values")->required();
  auto* rep = app.add_subcommand("report", "aggregate prior JSON reports");
  add_common(rep, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitParse;
  }

  if (eval->parsed()) cfg.command = Command::EvalKernel;
  else if (rel->parsed()) cfg.command = Command::VerifyRelation;
  else if (disc->parsed()) cfg.command = Command::VerifyDiscrete;
  else if (spect->parsed()) cfg.command = Command::Spectrum;
  else if (sweep->parsed()) cfg.command = Command::Sweep;
  else cfg.command = Command::Report;

  if (const char* env_out = std::getenv("SESQUIOP_OUT"); env_out && *env_out)
    cfg.out_dir = env_out;

  if (!values_csv.empty()) {
    std::istringstream in(values_csv);
    std::string cell;
    while (std::getline(in, cell, ',')) {
      try {
        cfg.sweep_values.push_back(std::stod(cell));
      } catch (...) {
        std::cerr << "bad sweep value '" << cell << "'\n";
        return kExitParse;
      }
    }
  }

  try {
    return run_command(cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}
