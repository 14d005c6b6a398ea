#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <span>
#include <string_view>

#include "classgen/families.hpp"

namespace classgen {

using BigInt = boost::multiprecision::cpp_int;

/// Classical order formulas:
///   |GL(n,q)| = prod_{i<n} (q^n - q^i),          |SL| = |GL| / (q-1)
///   |Sp(2m,q)| = q^{m^2} prod_{i=1..m} (q^{2i} - 1)
///   |GU(n,q)| = q^{n(n-1)/2} prod_{i=1..n} (q^i - (-1)^i),  |SU| = |GU| / (q+1)
BigInt theoretical_order(const GroupSpec& spec);

struct ClosureResult {
  std::uint64_t size = 0;
  bool truncated = false;
  int frontier_rounds = 0;
};

struct ClosureOptions {
  std::uint64_t cap = 2'000'000;
  /// Worker threads for frontier expansion; 0 picks hardware concurrency.
  unsigned threads = 0;
};

/// Breadth-first closure from the identity under right multiplication by the
/// generators. Stops (truncated) as soon as more than `cap` elements are seen.
ClosureResult closure(std::span<const Mat> gens, const ClosureOptions& options = {});

enum class Verdict { Pass, Fail, Indeterminate };

std::string_view to_string(Verdict v) noexcept;

struct Certificate {
  GroupSpec spec;
  std::string case_label;
  bool membership_ok = false;
  BigInt expected_order;
  ClosureResult closure;
  Verdict verdict = Verdict::Fail;
};

Certificate certify(const GroupSpec& spec, const ClosureOptions& options = {});

}  // namespace classgen
