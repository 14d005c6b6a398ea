#include "classgen/enumerate.hpp"

#include <algorithm>
#include <string>
#include <thread>
#include <unordered_set>
#include <utility>
#include <vector>

namespace classgen {

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Indeterminate: return "INDETERMINATE";
  }
  return "?";
}

BigInt theoretical_order(const GroupSpec& spec) {
  check_covered(spec);
  const BigInt q = spec.q;
  const int n = spec.degree;
  auto power = [](const BigInt& base, int e) {
    BigInt r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
  };
  switch (spec.family) {
    case Family::GL:
    case Family::SL: {
      BigInt order = 1;
      const BigInt qn = power(q, n);
      for (int i = 0; i < n; ++i) order *= qn - power(q, i);
      return spec.family == Family::GL ? order : order / (q - 1);
    }
    case Family::SP: {
      const int m = n / 2;
      BigInt order = power(q, m * m);
      for (int i = 1; i <= m; ++i) order *= power(q, 2 * i) - 1;
      return order;
    }
    case Family::GU:
    case Family::SU: {
      BigInt order = power(q, n * (n - 1) / 2);
      for (int i = 1; i <= n; ++i) order *= power(q, i) - (i % 2 == 0 ? 1 : -1);
      return spec.family == Family::GU ? order : order / (q + 1);
    }
  }
  return 0;
}

namespace {

struct Candidate {
  std::string key;
  CodeMatrix element;
};

// Products of frontier[begin, end) with every generator, in a fixed order.
void expand(const Field& field, const std::vector<CodeMatrix>& frontier, std::size_t begin, std::size_t end,
            std::span<const Mat> gens, std::vector<Candidate>& out) {
  const Eigen::Index n = gens.front().n();
  out.clear();
  out.reserve((end - begin) * gens.size());
  for (std::size_t i = begin; i < end; ++i) {
    for (const Mat& g : gens) {
      Candidate c;
      c.element.resize(n, n);
      multiply_into(field, frontier[i], g.codes(), c.element);
      encode_canonical_into(field, c.element, c.key);
      out.push_back(std::move(c));
    }
  }
}

}  // namespace

ClosureResult closure(std::span<const Mat> gens, const ClosureOptions& options) {
  if (options.cap < 1) throw Error(Errc::CapMisuse, "cap must be at least 1");
  if (gens.empty()) throw Error(Errc::MixedInputs, "no generators");
  const FieldPtr& field = gens.front().field();
  const Eigen::Index n = gens.front().n();
  for (const Mat& g : gens) {
    if (!same_field(g.field(), field) || g.n() != n)
      throw Error(Errc::MixedInputs, "generators differ in field or degree");
    if (det(g) == field->zero()) throw Error(Errc::MixedInputs, "generator is singular");
  }

  unsigned threads = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.threads;

  std::unordered_set<std::string> visited;
  std::vector<CodeMatrix> frontier{CodeMatrix::Identity(n, n)};
  visited.insert(encode_canonical(Mat::identity(field, n)));

  ClosureResult result;
  std::vector<std::vector<Candidate>> buckets;
  while (!frontier.empty()) {
    const std::size_t workers =
        std::min<std::size_t>(threads, std::max<std::size_t>(1, frontier.size() / 256));
    buckets.resize(workers);
    const std::size_t chunk = (frontier.size() + workers - 1) / workers;
    if (workers == 1) {
      expand(*field, frontier, 0, frontier.size(), gens, buckets[0]);
    } else {
      std::vector<std::jthread> pool;
      for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = std::min(frontier.size(), w * chunk);
        const std::size_t end = std::min(frontier.size(), begin + chunk);
        pool.emplace_back([&, w, begin, end] { expand(*field, frontier, begin, end, gens, buckets[w]); });
      }
    }

    std::vector<CodeMatrix> next;
    for (std::size_t w = 0; w < workers; ++w) {
      for (Candidate& c : buckets[w]) {
        if (!visited.insert(std::move(c.key)).second) continue;
        if (visited.size() > options.cap) {
          result.size = visited.size();
          result.truncated = true;
          return result;
        }
        next.push_back(std::move(c.element));
      }
    }
    frontier = std::move(next);
    ++result.frontier_rounds;
  }
  result.size = visited.size();
  return result;
}

Certificate certify(const GroupSpec& spec, const ClosureOptions& options) {
  const GeneratorPair pair = generator_pair(spec);
  Certificate cert;
  cert.spec = spec;
  cert.case_label = pair.case_label;
  cert.membership_ok = is_member(pair.a, spec.family) && is_member(pair.b, spec.family);
  cert.expected_order = theoretical_order(spec);
  const Mat gens[] = {pair.a, pair.b};
  cert.closure = closure(gens, options);
  if (!cert.membership_ok)
    cert.verdict = Verdict::Fail;
  else if (cert.closure.truncated)
    cert.verdict = Verdict::Indeterminate;
  else
    cert.verdict = BigInt(cert.closure.size) == cert.expected_order ? Verdict::Pass : Verdict::Fail;
  return cert;
}

}  // namespace classgen
