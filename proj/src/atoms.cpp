#include "classgen/atoms.hpp"

#include <string>
#include <vector>

namespace classgen {

namespace {

void check_index(int i, int deg) {
  if (i < 1 || i > deg)
    throw Error(Errc::IndexOutOfRange, "index " + std::to_string(i) + " outside 1.." + std::to_string(deg));
}

void check_nonzero(FieldElem alpha) {
  if (alpha.code == 0) throw Error(Errc::ZeroScalar, "scalar must be nonzero");
}

std::uint32_t subfield_order(const FieldPtr& field) { return field->quadratic_subfield_order(); }

FieldElem bar(const FieldPtr& field, FieldElem a) { return field->frobenius(a, subfield_order(field)); }

// Half-parameter n of a unitary degree for the given dual convention.
int unitary_half(int deg, DualKind kind) {
  if (kind == DualKind::UEven) {
    if (deg < 2 || deg % 2 != 0) throw Error(Errc::DegreeOutOfRange, "U_EVEN needs an even degree, got " + std::to_string(deg));
    return deg / 2;
  }
  if (kind == DualKind::UOdd) {
    if (deg < 3 || deg % 2 == 0) throw Error(Errc::DegreeOutOfRange, "U_ODD needs an odd degree >= 3, got " + std::to_string(deg));
    return (deg - 1) / 2;
  }
  throw Error(Errc::DegreeOutOfRange, "unitary atoms take U_EVEN or U_ODD");
}

}  // namespace

int dual_degree(DualKind kind, int n) noexcept { return kind == DualKind::UOdd ? 2 * n + 1 : 2 * n; }

int dual_index(int i, DualKind kind, int n) {
  if (n < 1) throw Error(Errc::DegreeOutOfRange, "half-degree " + std::to_string(n));
  check_index(i, dual_degree(kind, n));
  return kind == DualKind::UOdd ? 2 * n + 2 - i : 2 * n + 1 - i;
}

Mat elem_x(const FieldPtr& field, int i, int j, FieldElem alpha, int deg) {
  check_index(i, deg);
  check_index(j, deg);
  if (i == j) throw Error(Errc::EqualIndices, "x_ij needs i != j");
  Mat m = Mat::identity(field, deg);
  m.set(i - 1, j - 1, alpha);
  return m;
}

Mat elem_h(const FieldPtr& field, int i, FieldElem alpha, int deg) {
  check_index(i, deg);
  check_nonzero(alpha);
  Mat m = Mat::identity(field, deg);
  m.set(i - 1, i - 1, alpha);
  return m;
}

Mat transposition_w(const FieldPtr& field, int i, int deg) {
  if (deg < 2) throw Error(Errc::DegreeOutOfRange, "w_i needs degree >= 2");
  check_index(i, deg - 1);
  Mat m = Mat::identity(field, deg);
  m.set(i - 1, i - 1, field->zero());
  m.set(i, i, field->zero());
  m.set(i - 1, i, field->one());
  m.set(i, i - 1, field->neg(field->one()));
  return m;
}

Mat cycle_w(const FieldPtr& field, int deg) {
  if (deg < 2) throw Error(Errc::DegreeOutOfRange, "w needs degree >= 2, got " + std::to_string(deg));
  Mat m(field, deg);
  m.set(0, deg - 1, field->one());
  for (int i = 1; i < deg; ++i) m.set(i, i - 1, field->neg(field->one()));
  return m;
}

Mat monomial(const FieldPtr& field, std::span<const int> sigma, std::span<const FieldElem> entries) {
  const int deg = static_cast<int>(sigma.size());
  if (entries.size() != sigma.size()) throw Error(Errc::DegreeMismatch, "one entry per column required");
  Mat m(field, deg);
  std::vector<bool> hit(sigma.size(), false);
  for (int j = 1; j <= deg; ++j) {
    const int row = sigma[j - 1];
    check_index(row, deg);
    if (hit[row - 1]) throw Error(Errc::MalformedInput, "sigma is not a permutation");
    hit[row - 1] = true;
    check_nonzero(entries[j - 1]);
    m.set(row - 1, j - 1, entries[j - 1]);
  }
  return m;
}

Mat hat_h(const FieldPtr& field, int i, FieldElem alpha, int n) {
  check_index(i, n);
  check_nonzero(alpha);
  const int deg = 2 * n;
  return elem_h(field, i, alpha, deg) * elem_h(field, dual_index(i, DualKind::Sp, n), field->inv(alpha), deg);
}

Mat hat_x(const FieldPtr& field, int i, int j, FieldElem alpha, int n) {
  check_index(i, n);
  check_index(j, n);
  const int deg = 2 * n;
  return elem_x(field, i, j, alpha, deg) *
         elem_x(field, dual_index(j, DualKind::Sp, n), dual_index(i, DualKind::Sp, n), field->neg(alpha), deg);
}

Mat hat_z(const FieldPtr& field, int i, FieldElem alpha, int n) {
  check_index(i, n);
  return elem_x(field, i, dual_index(i, DualKind::Sp, n), alpha, 2 * n);
}

namespace {

// sigma for (1, 2, ..., n, 1', ..., n') with i' = 2n + 1 - i.
std::vector<int> long_cycle(int n) {
  std::vector<int> sigma(2 * n);
  for (int i = 1; i < n; ++i) sigma[i - 1] = i + 1;
  sigma[n - 1] = 2 * n;  // n -> 1'
  for (int j = 1; j < n; ++j) sigma[(2 * n + 1 - j) - 1] = 2 * n - j;  // j' -> (j+1)'
  sigma[(n + 1) - 1] = 1;  // n' -> 1
  return sigma;
}

}  // namespace

Mat hat_w(const FieldPtr& field, int n) {
  if (n < 2) throw Error(Errc::DegreeOutOfRange, "hat_w needs n >= 2, got " + std::to_string(n));
  const auto sigma = long_cycle(n);
  std::vector<FieldElem> entries(sigma.size(), field->one());
  entries[n - 1] = field->neg(field->one());  // column n lands in row 2n
  return monomial(field, sigma, entries);
}

Mat tilde_h(const FieldPtr& field, int i, FieldElem alpha, int deg, DualKind kind) {
  const int n = unitary_half(deg, kind);
  check_index(i, deg);
  check_nonzero(alpha);
  return elem_h(field, i, alpha, deg) * elem_h(field, dual_index(i, kind, n), field->inv(bar(field, alpha)), deg);
}

Mat tilde_x(const FieldPtr& field, int i, int j, FieldElem alpha, int deg, DualKind kind) {
  const int n = unitary_half(deg, kind);
  check_index(i, n);
  check_index(j, n);
  return elem_x(field, i, j, alpha, deg) *
         elem_x(field, dual_index(j, kind, n), dual_index(i, kind, n), field->neg(bar(field, alpha)), deg);
}

Mat tilde_w(const FieldPtr& field, int n, FieldElem eta) {
  if (n < 1) throw Error(Errc::DegreeOutOfRange, "tilde_w needs n >= 1");
  check_nonzero(eta);
  if (field->add(eta, bar(field, eta)) != field->zero())
    throw Error(Errc::NotTraceZero, "eta + bar(eta) != 0");
  const auto sigma = long_cycle(n);
  std::vector<FieldElem> entries(sigma.size(), field->one());
  entries[n - 1] = field->neg(field->inv(eta));  // (2n, n)
  entries[n] = eta;                              // column n+1 lands in row 1
  return monomial(field, sigma, entries);
}

Mat q_block(const FieldPtr& field, FieldElem alpha, FieldElem beta, int deg) {
  const int n = unitary_half(deg, DualKind::UOdd);
  const FieldElem abar = bar(field, alpha);
  const FieldElem cond = field->add(field->add(field->mul(alpha, abar), beta), bar(field, beta));
  if (cond != field->zero()) throw Error(Errc::ConditionViolated, "alpha bar(alpha) + beta + bar(beta) != 0");
  Mat m = Mat::identity(field, deg);
  // 0-based rows n-1 .. n+1 hold the block.
  m.set(n - 1, n, alpha);
  m.set(n - 1, n + 1, beta);
  m.set(n, n + 1, field->neg(abar));
  return m;
}

Mat w_prime(const FieldPtr& field, int n) {
  if (n < 1) throw Error(Errc::DegreeOutOfRange, "w' needs n >= 1");
  const int deg = 2 * n + 1;
  auto dual = [n](int i) { return 2 * n + 2 - i; };
  std::vector<int> sigma(deg);
  for (int j = 2; j <= n; ++j) sigma[dual(j) - 1] = dual(j - 1);  // j' -> (j-1)'
  sigma[dual(1) - 1] = n;                                          // 1' -> n
  for (int j = 2; j <= n; ++j) sigma[j - 1] = j - 1;               // j -> j-1
  sigma[0] = dual(n);                                              // 1 -> n'
  sigma[n] = n + 1;
  std::vector<FieldElem> entries(deg, field->one());
  entries[n] = field->neg(field->one());
  return monomial(field, sigma, entries);
}

}  // namespace classgen
