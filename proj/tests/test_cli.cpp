#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "roster.hpp"
#include "sesquiop/io_util.hpp"

using namespace sesquiop;
using namespace sesquiop_tests;
namespace fs = std::filesystem;

namespace {

std::string cli_path() {
  const char* env = std::getenv("SESQUIOP_CLI");
  REQUIRE_MESSAGE(env != nullptr, "SESQUIOP_CLI must point at the CLI binary");
  return env;
}

int run(const std::string& args) {
  const std::string cmd = cli_path() + " " + args + " >cli_test.log 2>&1";
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  REQUIRE(WIFEXITED(status));
  return WEXITSTATUS(status);
}

struct Scratch {
  fs::path dir;
  explicit Scratch(const std::string& name) : dir(name) {
    fs::remove_all(dir);
    fs::create_directories(dir);
  }
  ~Scratch() { fs::remove_all(dir); }
  std::string path(const std::string& name) const { return (dir / name).string(); }
};

std::string write_spec(const Scratch& s, const std::string& name,
                       const KernelSpec& spec) {
  const std::string path = s.path(name);
  write_file_atomic(path, spec_to_json_text(spec) + "\n");
  return path;
}

}  // namespace

TEST_CASE("help and argument errors use the documented exit codes") {
  CHECK(run("--help") == 0);
  CHECK(run("eval-kernel --help") == 0);
  CHECK(run("") == 2);                      // a subcommand is required
  CHECK(run("no-such-command") == 2);
  CHECK(run("eval-kernel") == 2);           // --spec is required
  CHECK(run("spectrum --spec a.json --format yaml") == 2);
}

TEST_CASE("eval-kernel writes the sample and Taylor tables deterministically") {
  Scratch s("scratch_cli_eval");
  const std::string spec = write_spec(s, "spec.json", item2(1.0, 1.0));

  CHECK(run("eval-kernel --spec " + spec + " --samples 64 --out " + s.path("a")) == 0);
  CHECK(fs::exists(s.path("a") + "/kernel.json"));
  CHECK(fs::exists(s.path("a") + "/kernel_samples.csv"));
  CHECK(fs::exists(s.path("a") + "/kernel_taylor.csv"));

  const std::string csv = read_file(s.path("a") + "/kernel_samples.csv");
  CHECK(csv.rfind("z,k_re,k_im,k1_re,k1_im,k2_re,k2_im\n", 0) == 0);

  CHECK(run("eval-kernel --spec " + spec + " --samples 64 --out " + s.path("b")) == 0);
  CHECK(read_file(s.path("b") + "/kernel_samples.csv") == csv);
  CHECK(read_file(s.path("b") + "/kernel_taylor.csv") ==
        read_file(s.path("a") + "/kernel_taylor.csv"));
}

TEST_CASE("spec failures map onto parse, validation and IO exit codes") {
  Scratch s("scratch_cli_errors");

  write_file_atomic(s.path("family.json"), "{\"family\":\"nope\"}\n");
  CHECK(run("eval-kernel --spec " + s.path("family.json")) == 2);

  write_file_atomic(s.path("broken.json"), "{family\n");
  CHECK(run("eval-kernel --spec " + s.path("broken.json")) == 2);

  KernelSpec zero_alpha = item2(1.0, 1.0);
  zero_alpha.alpha = 0.0;
  const std::string invalid = write_spec(s, "invalid.json", zero_alpha);
  CHECK(run("eval-kernel --spec " + invalid) == 3);

  CHECK(run("eval-kernel --spec " + s.path("absent.json")) == 5);
}

TEST_CASE("output directory falls back to the environment override") {
  Scratch s("scratch_cli_env");
  const std::string spec = write_spec(s, "spec.json", item1(1.0, 0.5));
  const std::string cmd = "SESQUIOP_OUT=" + s.path("env_out") + " " + cli_path() +
                          " eval-kernel --spec " + spec +
                          " --samples 16 --out " + s.path("ignored") +
                          " >cli_test.log 2>&1";
  const int status = std::system(cmd.c_str());
  REQUIRE(WIFEXITED(status));
  CHECK(WEXITSTATUS(status) == 0);
  CHECK(fs::exists(s.path("env_out") + "/kernel.json"));
  CHECK_FALSE(fs::exists(s.path("ignored") + "/kernel.json"));
}

TEST_CASE("verify-relation emits machine and presentation reports") {
  Scratch s("scratch_cli_verify");
  const std::string spec = write_spec(s, "spec.json", remark_example());
  CHECK(run("verify-relation --spec " + spec + " --samples 80 --out " +
            s.path("out")) == 0);
  const std::string j = read_file(s.path("out") + "/verify_relation.json");
  CHECK(j.find("\"functional_relation\"") != std::string::npos);
  CHECK(j.find("\"taylor_relation\"") != std::string::npos);
  const std::string csv = read_file(s.path("out") + "/verify_relation.csv");
  CHECK(csv.rfind("name,n,residual,tolerance,pass\n", 0) == 0);

  // markdown format replaces the CSV
  CHECK(run("verify-relation --spec " + spec + " --samples 80 --format md --out " +
            s.path("md")) == 0);
  CHECK(fs::exists(s.path("md") + "/verify_relation.md"));
  CHECK_FALSE(fs::exists(s.path("md") + "/verify_relation.csv"));
}

TEST_CASE("report aggregates prior runs and fails on failing rows") {
  Scratch s("scratch_cli_report");
  fs::create_directories(s.path("runA"));
  write_file_atomic(s.path("runA") + "/verify_relation.json",
                    "{\"reports\":[{\"name\":\"functional_relation\",\"n\":200,"
                    "\"residual\":1e-13,\"tolerance\":1e-9,\"pass\":true}]}\n");
  CHECK(run("report --out " + s.dir.string()) == 0);
  const std::string csv = read_file(s.path("summary.csv"));
  CHECK(csv.find("runA/functional_relation,200,") != std::string::npos);
  CHECK(fs::exists(s.path("summary.md")));

  fs::create_directories(s.path("runB"));
  write_file_atomic(s.path("runB") + "/verify_discrete.json",
                    "{\"reports\":[{\"name\":\"sesquicommutator\",\"n\":64,"
                    "\"residual\":0.5,\"tolerance\":1e-6,\"pass\":false}]}\n");
  CHECK(run("report --out " + s.dir.string()) == 4);
  CHECK(read_file(s.path("summary.csv")).find("runB/sesquicommutator,64,") !=
        std::string::npos);
}
