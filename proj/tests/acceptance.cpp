// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Set CLASSGEN_STRETCH=1 to add the larger closure cases.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "classgen/enumerate.hpp"
#include "classgen/forms.hpp"
#include "golden.hpp"

#ifndef CLASSGEN_BIN
#error "CLASSGEN_BIN must point at the classgen executable"
#endif

using namespace classgen;
using namespace classgen::testing;

namespace {

constexpr std::uint64_t kGridQ[] = {2, 3, 4, 5, 7, 8, 9};

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (ok) detail << why;
    else if (detail.tellp() < 400) detail << "; " << why;
    ok = false;
  }
};

std::vector<GroupSpec> covered_grid() {
  std::vector<GroupSpec> specs;
  for (std::uint64_t q : kGridQ)
    for (Family family : {Family::GL, Family::SL, Family::SP, Family::GU, Family::SU})
      for (int deg = 2; deg <= 8; ++deg) {
        try {
          check_covered({family, deg, q});
          specs.push_back({family, deg, q});
        } catch (const Error&) {
        }
      }
  return specs;
}

void golden(Outcome& out) {
  for (const auto& c : golden_cases())
    if (!(c.actual() == c.expected)) out.fail(c.name);
}

void membership(Outcome& out) {
  for (const auto& spec : covered_grid()) {
    const auto pair = generator_pair(spec);
    const Field& f = *pair.field;
    for (const Mat* m : {&pair.a, &pair.b}) {
      const FieldElem d = det(*m);
      if (d == f.zero()) out.fail(to_string(spec) + " singular");
      if (spec.family != Family::GL && spec.family != Family::GU && d != f.one())
        out.fail(to_string(spec) + " det != 1");
      if (spec.family == Family::SP && !preserves(*m, gram(pair.field, FormKind::Symplectic, spec.degree)))
        out.fail(to_string(spec) + " form");
      if ((spec.family == Family::GU || spec.family == Family::SU) &&
          !preserves(*m, gram(pair.field, FormKind::Unitary, spec.degree)))
        out.fail(to_string(spec) + " form");
    }
  }
}

void closure_grid(Outcome& out, bool stretch) {
  struct Row {
    GroupSpec spec;
    std::uint64_t order;
  };
  std::vector<Row> rows = {
      {{Family::GL, 2, 3}, 48},     {{Family::GL, 2, 4}, 180},     {{Family::GL, 2, 5}, 480},
      {{Family::GL, 3, 2}, 168},    {{Family::GL, 3, 3}, 11232},   {{Family::SL, 2, 4}, 60},
      {{Family::SL, 2, 5}, 120},    {{Family::SL, 2, 9}, 720},     {{Family::SL, 3, 2}, 168},
      {{Family::SL, 3, 3}, 5616},   {{Family::SP, 2, 5}, 120},     {{Family::SP, 4, 2}, 720},
      {{Family::SP, 4, 3}, 51840},  {{Family::GU, 3, 2}, 648},     {{Family::GU, 3, 3}, 24192},
      {{Family::GU, 4, 2}, 77760},  {{Family::SU, 3, 2}, 216},     {{Family::SU, 3, 3}, 6048},
      {{Family::SU, 4, 2}, 25920},
  };
  if (stretch) {
    rows.push_back({{Family::SP, 4, 4}, 979200});
    rows.push_back({{Family::SP, 6, 2}, 1451520});
  }
  for (const auto& row : rows) {
    const auto cert = certify(row.spec, {2'000'000, 0});
    const std::string name = to_string(row.spec);
    if (cert.expected_order != row.order) out.fail(name + " formula " + cert.expected_order.str());
    if (cert.closure.truncated || cert.closure.size != row.order)
      out.fail(name + " closure " + std::to_string(cert.closure.size));
    if (cert.verdict != Verdict::Pass) out.fail(name + " verdict " + std::string(to_string(cert.verdict)));
  }
}

void scalars(Outcome& out) {
  for (std::uint64_t q : kGridQ) {
    const auto pk = as_prime_power(q);
    auto field = Field::create(pk.p, 2 * pk.k);
    const Field& f = *field;
    const auto q32 = static_cast<std::uint32_t>(q);
    const FieldElem eta = special_scalar_eta(f, q32);
    const FieldElem beta = special_scalar_beta(f, q32);
    if (eta == f.zero() || f.add(eta, f.frobenius(eta, q32)) != f.zero())
      out.fail("eta q=" + std::to_string(q));
    if (f.add(beta, f.frobenius(beta, q32)) != f.neg(f.one())) out.fail("beta q=" + std::to_string(q));
  }
}

void locks(Outcome& out) {
  for (const auto& lock : convention_locks())
    if (!(lock.solved == lock.direct)) out.fail(lock.name);
}

std::string capture(const std::string& cmd, int& status) {
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string text;
  if (!pipe) {
    status = -1;
    return text;
  }
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) text.append(buf.data(), n);
  const int raw = pclose(pipe);
  status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return text;
}

void determinism(Outcome& out) {
  for (const auto& spec : covered_grid()) {
    const std::string cmd = std::string(CLASSGEN_BIN) + " gens --format json --family " +
                            std::string(short_name(spec.family)) + " --degree " + std::to_string(spec.degree) +
                            " --q " + std::to_string(spec.q);
    int s1 = 0, s2 = 0;
    const std::string first = capture(cmd, s1);
    const std::string second = capture(cmd, s2);
    if (s1 != 0 || s2 != 0 || first.empty() || first != second) out.fail(to_string(spec));
  }
}

}  // namespace

int main() {
  const char* env = std::getenv("CLASSGEN_STRETCH");
  const bool stretch = env && std::string(env) != "0";

  struct Criterion {
    const char* name;
    std::function<void(Outcome&)> run;
  };
  const Criterion criteria[] = {
      {"1 golden fixtures", golden},
      {"2 membership grid", membership},
      {stretch ? "3 closure grid (with stretch)" : "3 closure grid", [&](Outcome& o) { closure_grid(o, stretch); }},
      {"4 scalar identities", scalars},
      {"5 convention locks", locks},
      {"6 deterministic output", determinism},
  };

  bool all = true;
  for (const auto& c : criteria) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(out);
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s  %-32s %8.2fs", out.ok ? "PASS" : "FAIL", c.name, secs);
    if (!out.ok) std::printf("  [%s]", out.detail.str().c_str());
    std::printf("\n");
    all = all && out.ok;
  }
  return all ? 0 : 1;
}
