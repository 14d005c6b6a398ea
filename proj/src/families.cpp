#include "classgen/families.hpp"

#include <algorithm>
#include <cctype>

#include "classgen/atoms.hpp"
#include "classgen/forms.hpp"

namespace classgen {

std::string_view short_name(Family family) noexcept {
  switch (family) {
    case Family::GL: return "gl";
    case Family::SL: return "sl";
    case Family::SP: return "sp";
    case Family::GU: return "gu";
    case Family::SU: return "su";
  }
  return "?";
}

std::string_view long_name(Family family) noexcept {
  switch (family) {
    case Family::GL: return "general linear";
    case Family::SL: return "special linear";
    case Family::SP: return "symplectic";
    case Family::GU: return "general unitary";
    case Family::SU: return "special unitary";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view text) {
  std::string norm;
  for (char c : text) norm.push_back(c == '_' ? ' ' : static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  for (Family f : {Family::GL, Family::SL, Family::SP, Family::GU, Family::SU})
    if (norm == short_name(f) || norm == long_name(f)) return f;
  return std::nullopt;
}

std::string to_string(const GroupSpec& spec) {
  static constexpr std::string_view names[] = {"GL", "SL", "Sp", "GU", "SU"};
  return std::string(names[static_cast<int>(spec.family)]) + "(" + std::to_string(spec.degree) + "," +
         std::to_string(spec.q) + ")";
}

namespace {

bool is_unitary(Family f) { return f == Family::GU || f == Family::SU; }

[[noreturn]] void unsupported(const GroupSpec& spec, const std::string& why) {
  throw Error(Errc::UnsupportedParameters, to_string(spec) + ": " + why);
}

// Generators of SL(n, q) for q > 3 and for q in {2, 3}.
GeneratorPair special_linear(const GroupSpec& spec, const FieldPtr& f, const std::string& label_prefix) {
  const int n = spec.degree;
  const FieldElem one = f->one();
  if (spec.q > 3) {
    const FieldElem xi = f->xi();
    return {elem_h(f, 1, xi, n) * elem_h(f, 2, f->inv(xi), n), elem_x(f, 1, 2, one, n) * cycle_w(f, n), spec, f,
            label_prefix + "SL, q>3"};
  }
  return {elem_x(f, 1, 2, one, n), cycle_w(f, n), spec, f, label_prefix + "SL, q in {2,3}"};
}

Mat from_ints(const FieldPtr& f, std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<std::vector<FieldElem>> out;
  for (const auto& row : rows) {
    auto& r = out.emplace_back();
    for (int v : row) r.push_back(f->from_int(v));
  }
  return Mat::from_rows(f, out);
}

GeneratorPair symplectic(const GroupSpec& spec, const FieldPtr& f) {
  if (spec.degree == 2) return special_linear(spec, f, "Sp(2,q) = SL(2,q): ");
  const int n = spec.degree / 2;
  const FieldElem xi = f->xi();
  const FieldElem one = f->one();
  if (spec.q % 2 == 1)
    return {hat_h(f, 1, xi, n), hat_x(f, 1, 2, one, n) * hat_w(f, n), spec, f, "Sp, q odd, n>1"};
  if (spec.q != 2)
    return {hat_h(f, 1, xi, n) * hat_h(f, n, xi, n), hat_x(f, 1, n, one, n) * hat_z(f, 1, one, n) * hat_w(f, n),
            spec, f, "Sp, q even, q!=2, n>1"};
  if (n > 2) return {hat_x(f, 1, n, one, n) * hat_z(f, 1, one, n), hat_w(f, n), spec, f, "Sp, q=2, n>2"};
  return {from_ints(f, {{1, 0, 1, 1}, {1, 0, 0, 1}, {0, 1, 0, 1}, {1, 1, 1, 1}}),
          from_ints(f, {{0, 0, 1, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 1, 0, 0}}), spec, f, "Sp(4,2)"};
}

GeneratorPair unitary(const GroupSpec& spec, const FieldPtr& f) {
  const int deg = spec.degree;
  const auto q = static_cast<std::uint32_t>(spec.q);
  const FieldElem xi = f->xi();
  const FieldElem one = f->one();
  const bool special = spec.family == Family::SU;
  if (deg % 2 == 0) {
    const int n = deg / 2;
    const DualKind kind = DualKind::UEven;
    Mat second = tilde_x(f, 1, 2, one, deg, kind) * tilde_w(f, n, special_scalar_eta(*f, q));
    if (!special) return {tilde_h(f, 1, xi, deg, kind), std::move(second), spec, f, "U(2n,q), n>1"};
    return {tilde_h(f, 1, xi, deg, kind) * tilde_h(f, 2, f->inv(xi), deg, kind), std::move(second), spec, f,
            "SU(2n,q), n>1"};
  }
  const int n = (deg - 1) / 2;
  const DualKind kind = DualKind::UOdd;
  if (special && n == 1 && q == 2) {
    // GF(4): bar(xi) = xi^2.
    const FieldElem xi2 = f->mul(xi, xi);
    return {Mat::from_rows(f, {{one, xi, xi}, {f->zero(), one, xi2}, {f->zero(), f->zero(), one}}),
            Mat::from_rows(f, {{xi, one, one}, {one, one, f->zero()}, {one, f->zero(), f->zero()}}), spec, f,
            "SU(3,2)"};
  }
  Mat second = q_block(f, one, special_scalar_beta(*f, q), deg) * w_prime(f, n);
  if (!special) return {tilde_h(f, n, xi, deg, kind), std::move(second), spec, f, "U(2n+1,q)"};
  return {tilde_h(f, n, xi, deg, kind) * tilde_h(f, n + 1, f->inv(xi), deg, kind), std::move(second), spec, f,
          "SU(2n+1,q), n!=1 or q!=2"};
}

}  // namespace

void check_covered(const GroupSpec& spec) {
  const PrimePower pk = as_prime_power(spec.q);
  if (pk.p == 0) unsupported(spec, "q = " + std::to_string(spec.q) + " is not a prime power");
  if (spec.degree < 1) unsupported(spec, "degree must be positive");
  if (spec.degree > 255) unsupported(spec, "degree above 255 is outside the matrix encoding");
  switch (spec.family) {
    case Family::GL:
    case Family::SL:
      if (spec.degree == 1) unsupported(spec, "degree 1 is not tabulated; nearest covered case is degree 2");
      break;
    case Family::SP:
      if (spec.degree % 2 != 0)
        unsupported(spec, "symplectic groups need even degree; nearest covered cases are degree " +
                              std::to_string(spec.degree - 1 < 2 ? 2 : spec.degree - 1) + " and " +
                              std::to_string(spec.degree + 1));
      break;
    case Family::GU:
    case Family::SU:
      if (spec.degree <= 2)
        unsupported(spec, "unitary groups of degree " + std::to_string(spec.degree) +
                              " are not tabulated; nearest covered cases are degree 3 (U(2n+1,q)) and 4 (U(2n,q), n>1)");
      break;
  }
}

FieldPtr field_for(const GroupSpec& spec, std::uint64_t cap) {
  const PrimePower pk = as_prime_power(spec.q);
  if (pk.p == 0) unsupported(spec, "q = " + std::to_string(spec.q) + " is not a prime power");
  return Field::create(pk.p, is_unitary(spec.family) ? 2 * pk.k : pk.k, cap);
}

GeneratorPair generator_pair(const GroupSpec& spec, std::uint64_t cap) {
  check_covered(spec);
  const FieldPtr f = field_for(spec, cap);
  switch (spec.family) {
    case Family::GL:
      if (spec.q == 2) return special_linear(spec, f, "GL(n,2) = SL(n,2): ");
      return {elem_h(f, 1, f->xi(), spec.degree), elem_x(f, 1, 2, f->one(), spec.degree) * cycle_w(f, spec.degree),
              spec, f, "GL, q>2"};
    case Family::SL: return special_linear(spec, f, "");
    case Family::SP: return symplectic(spec, f);
    case Family::GU:
    case Family::SU: return unitary(spec, f);
  }
  unsupported(spec, "unknown family");
}

bool is_member(const Mat& x, Family family) {
  const FieldElem d = det(x);
  if (d == x.field()->zero()) return false;
  const bool needs_det_one = family == Family::SL || family == Family::SP || family == Family::SU;
  if (needs_det_one && d != x.field()->one()) return false;
  const int n = static_cast<int>(x.n());
  if (family == Family::SP) return n % 2 == 0 && preserves(x, gram(x.field(), FormKind::Symplectic, n));
  if (is_unitary(family)) return preserves(x, gram(x.field(), FormKind::Unitary, n));
  return true;
}

}  // namespace classgen
