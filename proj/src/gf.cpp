#include "classgen/gf.hpp"

#include <algorithm>
#include <string>

namespace classgen {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::DegreeOutOfRange: return "DegreeOutOfRange";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::MixedFields: return "MixedFields";
    case Errc::NotAQuadraticExtension: return "NotAQuadraticExtension";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::Singular: return "Singular";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::EqualIndices: return "EqualIndices";
    case Errc::ZeroScalar: return "ZeroScalar";
    case Errc::NotTraceZero: return "NotTraceZero";
    case Errc::ConditionViolated: return "ConditionViolated";
    case Errc::OddSymplecticDimension: return "OddSymplecticDimension";
    case Errc::UnsupportedParameters: return "UnsupportedParameters";
    case Errc::CapMisuse: return "CapMisuse";
    case Errc::MixedInputs: return "MixedInputs";
    case Errc::MalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

PrimePower as_prime_power(std::uint64_t q) noexcept {
  if (q < 2) return {};
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) p = q;
  std::uint32_t k = 0;
  while (q % p == 0) {
    q /= p;
    ++k;
  }
  if (q != 1) return {};
  return {static_cast<std::uint32_t>(p), k};
}

namespace {

// Polynomials over GF(p) as coefficient vectors, constant term first.
using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // p is prime: a^(p-2).
  std::uint64_t result = 1, base = a % p;
  for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

// Remainder of a modulo a nonzero b.
Poly poly_rem(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint64_t lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint64_t factor = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      const std::uint64_t sub = factor * b[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

// Product of two residues (length k each) reduced by the monic modulus.
Poly mul_mod(const Poly& a, const Poly& b, const Poly& modulus, std::uint32_t p) {
  const std::size_t k = modulus.size() - 1;
  std::vector<std::uint64_t> prod(2 * k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p;
  }
  for (std::size_t d = 2 * k - 1; d >= k; --d) {
    const std::uint64_t c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (std::size_t i = 0; i < k; ++i)
      prod[d - k + i] = (prod[d - k + i] + (p - c) * modulus[i]) % p;
  }
  return Poly(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(k));
}

Poly pow_mod(Poly base, std::uint64_t e, const Poly& modulus, std::uint32_t p) {
  const std::size_t k = modulus.size() - 1;
  Poly result(k, 0);
  result[0] = 1;
  while (e > 0) {
    if (e & 1) result = mul_mod(result, base, modulus, p);
    base = mul_mod(base, base, modulus, p);
    e >>= 1;
  }
  return result;
}

// Coefficients (c_0..c_{len-1}) of the index-th tuple in lexicographic order
// with c_0 the most significant position.
Poly lex_tuple(std::uint64_t index, std::size_t len, std::uint32_t p) {
  Poly c(len, 0);
  for (std::size_t i = len; i-- > 0;) {
    c[i] = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
  return c;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::size_t k = f.size() - 1;
  for (std::size_t d = 1; d <= k / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly g = lex_tuple(idx, d, p);
      g.push_back(1);
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::uint32_t encode(const Poly& c, std::uint32_t p) {
  std::uint64_t code = 0;
  for (std::size_t i = c.size(); i-- > 0;) code = code * p + c[i];
  return static_cast<std::uint32_t>(code);
}

}  // namespace

FieldPtr Field::create(std::uint32_t p, std::uint32_t k, std::uint64_t cap) {
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (k < 1 || k > 31) throw Error(Errc::DegreeOutOfRange, "extension degree " + std::to_string(k));
  if (cap > (std::uint64_t{1} << 31)) cap = std::uint64_t{1} << 31;
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > cap)
      throw Error(Errc::CapExceeded, "GF(" + std::to_string(p) + "^" + std::to_string(k) +
                                         ") exceeds the cardinality cap " + std::to_string(cap));
  }

  auto field = std::shared_ptr<Field>(new Field());
  field->p_ = p;
  field->k_ = k;
  field->q_ = static_cast<std::uint32_t>(q);

  // Least monic irreducible, candidates ordered constant-term-first.
  for (std::uint64_t idx = 0; idx < q; ++idx) {
    Poly f = lex_tuple(idx, k, p);
    f.push_back(1);
    if (is_irreducible(f, p)) {
      field->modulus_ = std::move(f);
      break;
    }
  }
  const Poly& modulus = field->modulus_;

  // Least primitive element in the same ordering.
  Poly xi(k, 0);
  xi[0] = 1;
  if (q > 2) {
    const auto factors = prime_factors(q - 1);
    for (std::uint64_t idx = 1; idx < q; ++idx) {
      Poly cand = lex_tuple(idx, k, p);
      const bool primitive = std::all_of(factors.begin(), factors.end(), [&](std::uint64_t r) {
        const Poly t = pow_mod(cand, (q - 1) / r, modulus, p);
        return !(t[0] == 1 && std::all_of(t.begin() + 1, t.end(), [](auto c) { return c == 0; }));
      });
      if (primitive) {
        xi = std::move(cand);
        break;
      }
    }
  }
  field->xi_ = FieldElem{encode(xi, p)};

  const std::uint32_t order = field->q_ - 1;
  field->exp_table_.assign(2 * static_cast<std::size_t>(order), 0);
  field->log_table_.assign(q, 0);
  Poly cur(k, 0);
  cur[0] = 1;
  for (std::uint32_t e = 0; e < order; ++e) {
    const std::uint32_t code = encode(cur, p);
    field->exp_table_[e] = code;
    field->exp_table_[e + order] = code;
    field->log_table_[code] = e;
    cur = mul_mod(cur, xi, modulus, p);
  }

  field->neg_table_.resize(q);
  for (std::uint32_t a = 0; a < q; ++a) {
    std::uint64_t out = 0, scale = 1, rest = a;
    for (std::uint32_t i = 0; i < k; ++i) {
      const std::uint64_t d = rest % p;
      rest /= p;
      out += ((p - d) % p) * scale;
      scale *= p;
    }
    field->neg_table_[a] = static_cast<std::uint32_t>(out);
  }

  if (p != 2 && q <= 256) {
    field->add_table_.resize(q * q);
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b) field->add_table_[a * q + b] = field->digit_add(a, b);
  }
  return field;
}

std::uint32_t Field::digit_add(std::uint32_t a, std::uint32_t b) const noexcept {
  std::uint64_t out = 0, scale = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    const std::uint32_t da = a % p_, db = b % p_;
    a /= p_;
    b /= p_;
    out += ((da + db) % p_) * scale;
    scale *= p_;
  }
  return static_cast<std::uint32_t>(out);
}

void Field::check(FieldElem a) const {
  if (!contains(a))
    throw Error(Errc::MixedFields, "element code " + std::to_string(a.code) + " is not in GF(" +
                                       std::to_string(q_) + ")");
}

FieldElem Field::from_int(std::int64_t v) const noexcept {
  const std::int64_t r = ((v % static_cast<std::int64_t>(p_)) + p_) % p_;
  return {static_cast<std::uint32_t>(r)};
}

FieldElem Field::from_coeffs(std::span<const std::uint32_t> c) const {
  if (c.size() != k_)
    throw Error(Errc::MalformedInput, "expected " + std::to_string(k_) + " coefficients, got " +
                                          std::to_string(c.size()));
  for (auto v : c)
    if (v >= p_) throw Error(Errc::MalformedInput, "coefficient " + std::to_string(v) + " out of range");
  return {encode(Poly(c.begin(), c.end()), p_)};
}

std::vector<std::uint32_t> Field::coeffs(FieldElem a) const {
  check(a);
  std::vector<std::uint32_t> c(k_);
  std::uint32_t rest = a.code;
  for (auto& v : c) {
    v = rest % p_;
    rest /= p_;
  }
  return c;
}

FieldElem Field::add(FieldElem a, FieldElem b) const {
  check(a);
  check(b);
  return {raw_add(a.code, b.code)};
}

FieldElem Field::neg(FieldElem a) const {
  check(a);
  return {raw_neg(a.code)};
}

FieldElem Field::sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }

FieldElem Field::mul(FieldElem a, FieldElem b) const {
  check(a);
  check(b);
  return {raw_mul(a.code, b.code)};
}

FieldElem Field::inv(FieldElem a) const {
  check(a);
  if (a.code == 0) throw Error(Errc::DivisionByZero, "inverse of zero");
  return {raw_inv(a.code)};
}

FieldElem Field::pow(FieldElem a, std::int64_t e) const {
  check(a);
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  if (e == 0) return one();
  if (a.code == 0) return zero();
  const std::uint64_t n = q_ - 1;
  const std::uint64_t l = (std::uint64_t{log_table_[a.code]} * (static_cast<std::uint64_t>(e) % n)) % n;
  return {exp_table_[l]};
}

std::uint32_t Field::quadratic_subfield_order() const {
  if (k_ % 2 != 0)
    throw Error(Errc::NotAQuadraticExtension,
                "GF(" + std::to_string(q_) + ") has odd degree " + std::to_string(k_));
  std::uint32_t q0 = 1;
  for (std::uint32_t i = 0; i < k_ / 2; ++i) q0 *= p_;
  return q0;
}

FieldElem Field::frobenius(FieldElem a, std::uint32_t q0) const {
  if (std::uint64_t{q0} * q0 != q_ || q0 != quadratic_subfield_order())
    throw Error(Errc::NotAQuadraticExtension,
                "GF(" + std::to_string(q_) + ") is not a quadratic extension of GF(" + std::to_string(q0) + ")");
  return pow(a, q0);
}

std::uint64_t Field::order(FieldElem a) const {
  check(a);
  if (a.code == 0) throw Error(Errc::DivisionByZero, "zero has no multiplicative order");
  std::uint64_t n = q_ - 1;
  for (auto r : prime_factors(q_ - 1))
    while (n % r == 0 && pow(a, static_cast<std::int64_t>(n / r)) == one()) n /= r;
  return n;
}

std::uint32_t Field::log(FieldElem a) const {
  check(a);
  if (a.code == 0) throw Error(Errc::DivisionByZero, "logarithm of zero");
  return log_table_[a.code];
}

}  // namespace classgen
