// classgen: generator pairs for the classical groups over finite fields.
//
//   classgen gens    --family sp --degree 4 --q 3 [--format json|text|gap] [--emit-form]
//   classgen certify --family sp --degree 4 --q 3 [--cap N]
//   classgen order   --family su --degree 4 --q 2
//
// Exit codes: 0 success / PASS, 1 FAIL, 2 unsupported parameters,
// 3 usage error, 4 INDETERMINATE (closure cap reached).

#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "classgen/enumerate.hpp"
#include "classgen/serialize.hpp"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUnsupported = 2;
constexpr int kExitUsage = 3;
constexpr int kExitIndeterminate = 4;

constexpr std::uint64_t kDefaultCap = 2'000'000;

struct CliConfig {
  std::string family;
  int degree = 0;
  std::uint64_t q = 0;
  std::string format = "json";
  std::uint64_t cap = kDefaultCap;
  bool emit_form = false;
  unsigned threads = 0;
};

std::uint64_t default_cap() {
  if (const char* env = std::getenv("CLASSGEN_CAP")) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used == std::string(env).size() && v > 0) return v;
    } catch (const std::exception&) {
    }
    std::cerr << "classgen: ignoring invalid CLASSGEN_CAP=" << env << '\n';
  }
  return kDefaultCap;
}

void add_spec_options(CLI::App* cmd, CliConfig& cfg) {
  cmd->add_option("--family", cfg.family, "gl, sl, sp, gu, su or the long names")->required();
  cmd->add_option("--degree", cfg.degree, "matrix degree")->required()->check(CLI::PositiveNumber);
  cmd->add_option("--q", cfg.q, "defining field size")->required()->check(CLI::PositiveNumber);
}

classgen::GroupSpec to_spec(const CliConfig& cfg) {
  const auto family = classgen::parse_family(cfg.family);
  if (!family) throw CLI::ValidationError("--family", "unknown family '" + cfg.family + "'");
  return {*family, cfg.degree, cfg.q};
}

int cmd_gens(const CliConfig& cfg) {
  const auto format = classgen::parse_format(cfg.format);
  if (!format) throw CLI::ValidationError("--format", "expected json, text or gap");
  const auto pair = classgen::generator_pair(to_spec(cfg));
  std::cout << classgen::render(pair, *format, cfg.emit_form) << std::flush;
  return 0;
}

int cmd_certify(const CliConfig& cfg) {
  const auto cert = classgen::certify(to_spec(cfg), {cfg.cap, cfg.threads});
  std::cout << "spec: " << classgen::to_string(cert.spec) << '\n'
            << "case: " << cert.case_label << '\n'
            << "membership_ok: " << (cert.membership_ok ? "true" : "false") << '\n'
            << "expected_order: " << cert.expected_order << '\n'
            << "closure_size: " << cert.closure.size << '\n'
            << "truncated: " << (cert.closure.truncated ? "true" : "false") << '\n'
            << "frontier_rounds: " << cert.closure.frontier_rounds << '\n'
            << "cap: " << cfg.cap << '\n'
            << "verdict: " << classgen::to_string(cert.verdict) << std::endl;
  switch (cert.verdict) {
    case classgen::Verdict::Pass: return 0;
    case classgen::Verdict::Fail: return kExitFail;
    case classgen::Verdict::Indeterminate: return kExitIndeterminate;
  }
  return kExitFail;
}

int cmd_order(const CliConfig& cfg) {
  std::cout << classgen::theoretical_order(to_spec(cfg)) << std::endl;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CliConfig cfg;
  cfg.cap = default_cap();

  CLI::App app{"Generator pairs for GL, SL, Sp, GU and SU over finite fields"};
  app.require_subcommand(1);

  auto* gens = app.add_subcommand("gens", "print the generator pair");
  add_spec_options(gens, cfg);
  gens->add_option("--format", cfg.format, "json, text or gap")->capture_default_str();
  gens->add_flag("--emit-form", cfg.emit_form, "also print the Gram matrix of the invariant form");

  auto* certify = app.add_subcommand("certify", "check membership and enumerate the generated group");
  add_spec_options(certify, cfg);
  certify->add_option("--cap", cfg.cap, "element cap for the closure (env CLASSGEN_CAP)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  certify->add_option("--threads", cfg.threads, "closure worker threads, 0 = all cores");

  auto* order = app.add_subcommand("order", "print the group order");
  add_spec_options(order, cfg);

  try {
    app.parse(argc, argv);
    if (gens->parsed()) return cmd_gens(cfg);
    if (certify->parsed()) return cmd_certify(cfg);
    return cmd_order(cfg);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const classgen::Error& e) {
    std::cerr << "classgen: " << e.what() << '\n';
    const auto code = e.code();
    if (code == classgen::Errc::UnsupportedParameters || code == classgen::Errc::CapExceeded) return kExitUnsupported;
    return kExitUsage;
  }
}
