#pragma once

// Test-only helpers. Nothing here calls into the atoms or families modules:
// displayed matrices are spelled out entry by entry from symbolic tokens and
// the scalars are computed with plain field powers.

#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "classgen/matrix.hpp"

namespace classgen::testing {

/// Scalars that appear in the tabulated matrices for one field.
struct Symbols {
  FieldPtr field;
  std::uint32_t q0 = 0;  // defining q of a unitary field, 0 otherwise
  FieldElem beta{};
  FieldElem eta{};

  FieldElem xi() const { return field->xi(); }
  FieldElem bar(FieldElem a) const { return field->pow(a, q0); }
};

inline Symbols linear_symbols(std::uint32_t p, std::uint32_t k) { return {Field::create(p, k), 0, {}, {}}; }

/// GF(q^2) with eta = xi^((q+1)/2) (q odd) or 1 (q even), and
/// beta = -(1 + xi^q / xi)^{-1}.
inline Symbols unitary_symbols(std::uint32_t p, std::uint32_t k) {
  Symbols s{Field::create(p, 2 * k), 1, {}, {}};
  for (std::uint32_t i = 0; i < k; ++i) s.q0 *= p;
  const Field& f = *s.field;
  s.eta = s.q0 % 2 == 1 ? f.pow(f.xi(), (s.q0 + 1) / 2) : f.one();
  const FieldElem ratio = f.div(s.bar(f.xi()), f.xi());
  s.beta = f.neg(f.inv(f.add(f.one(), ratio)));
  return s;
}

/// Tokens: 0 1 -1 x x^-1 x^2 xb xb^-1 xb/x e e^-1 -e^-1 b, where x is xi,
/// xb is bar(xi), e is eta and b is beta.
inline FieldElem token(const Symbols& s, const std::string& t) {
  const Field& f = *s.field;
  const FieldElem x = f.xi();
  if (t == "0") return f.zero();
  if (t == "1") return f.one();
  if (t == "-1") return f.neg(f.one());
  if (t == "x") return x;
  if (t == "x^-1") return f.inv(x);
  if (t == "x^2") return f.mul(x, x);
  if (t == "xb") return s.bar(x);
  if (t == "xb^-1") return f.inv(s.bar(x));
  if (t == "xb/x") return f.div(s.bar(x), x);
  if (t == "e") return s.eta;
  if (t == "e^-1") return f.inv(s.eta);
  if (t == "-e^-1") return f.neg(f.inv(s.eta));
  if (t == "b") return s.beta;
  throw std::invalid_argument("unknown token " + t);
}

inline Mat display(const Symbols& s, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<FieldElem>> out;
  for (const auto& row : rows) {
    auto& r = out.emplace_back();
    for (const auto& t : row) r.push_back(token(s, t));
  }
  return Mat::from_rows(s.field, out);
}

/// Diagonal matrix from tokens.
inline Mat diag(const Symbols& s, const std::vector<std::string>& entries) {
  std::vector<std::vector<std::string>> rows(entries.size(), std::vector<std::string>(entries.size(), "0"));
  for (std::size_t i = 0; i < entries.size(); ++i) rows[i][i] = entries[i];
  return display(s, rows);
}

/// Matrix with the given 1-based entries on a zero (or identity) background.
inline Mat sparse(const Symbols& s, int deg, const std::map<std::pair<int, int>, std::string>& entries,
                  bool identity_background = false) {
  std::vector<std::vector<std::string>> rows(deg, std::vector<std::string>(deg, "0"));
  if (identity_background)
    for (int i = 0; i < deg; ++i) rows[i][i] = "1";
  for (const auto& [pos, t] : entries) rows[pos.first - 1][pos.second - 1] = t;
  return display(s, rows);
}

inline Mat random_matrix(const FieldPtr& f, int n, std::mt19937& rng) {
  std::uniform_int_distribution<std::uint32_t> pick(0, f->q() - 1);
  Mat m(f, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.set(i, j, {pick(rng)});
  return m;
}

/// Laplace expansion along the first row.
inline FieldElem cofactor_det(const Mat& a) {
  const Field& f = *a.field();
  const auto n = a.n();
  if (n == 1) return a(0, 0);
  FieldElem acc = f.zero();
  for (Eigen::Index c = 0; c < n; ++c) {
    if (a(0, c) == f.zero()) continue;
    Mat minor(a.field(), n - 1);
    for (Eigen::Index r = 1; r < n; ++r)
      for (Eigen::Index cc = 0, dst = 0; cc < n; ++cc)
        if (cc != c) minor.set(r - 1, dst++, a(r, cc));
    FieldElem term = f.mul(a(0, c), cofactor_det(minor));
    acc = c % 2 == 0 ? f.add(acc, term) : f.sub(acc, term);
  }
  return acc;
}

/// All n x n matrices over f (only for tiny n, q).
inline std::vector<Mat> all_matrices(const FieldPtr& f, int n) {
  std::vector<Mat> out;
  std::uint64_t total = 1;
  for (int i = 0; i < n * n; ++i) total *= f->q();
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    Mat m(f, n);
    std::uint64_t rest = idx;
    for (int i = 0; i < n * n; ++i) {
      m.set(i / n, i % n, {static_cast<std::uint32_t>(rest % f->q())});
      rest /= f->q();
    }
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace classgen::testing
