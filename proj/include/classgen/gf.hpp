#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "classgen/error.hpp"

namespace classgen {

/// Default upper bound on the field cardinality accepted by `Field::create`.
inline constexpr std::uint64_t kDefaultFieldCap = std::uint64_t{1} << 20;

/// One element of GF(p^k), stored as the integer sum(c_i * p^i) of its
/// polynomial-basis coefficients (constant term first). Zero is code 0 and
/// one is code 1 in every field.
struct FieldElem {
  std::uint32_t code = 0;

  friend constexpr auto operator<=>(FieldElem, FieldElem) = default;
};

/// GF(p^k) built on the lexicographically least monic irreducible modulus,
/// with a fixed primitive element and log/antilog tables for multiplication.
///
/// Instances are immutable and shared through `FieldPtr`.
class Field {
 public:
  static std::shared_ptr<const Field> create(std::uint32_t p, std::uint32_t k,
                                             std::uint64_t cap = kDefaultFieldCap);

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t k() const noexcept { return k_; }
  std::uint32_t q() const noexcept { return q_; }
  /// Monic modulus, constant term first; size k+1.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
  FieldElem xi() const noexcept { return xi_; }

  FieldElem zero() const noexcept { return {0}; }
  FieldElem one() const noexcept { return {1}; }
  /// Image of an integer under Z -> GF(p).
  FieldElem from_int(std::int64_t v) const noexcept;
  FieldElem from_coeffs(std::span<const std::uint32_t> coeffs) const;
  std::vector<std::uint32_t> coeffs(FieldElem a) const;

  bool contains(FieldElem a) const noexcept { return a.code < q_; }

  // Checked scalar arithmetic. Elements whose code is outside [0, q) raise
  // MixedFields.
  FieldElem add(FieldElem a, FieldElem b) const;
  FieldElem sub(FieldElem a, FieldElem b) const;
  FieldElem neg(FieldElem a) const;
  FieldElem mul(FieldElem a, FieldElem b) const;
  FieldElem inv(FieldElem a) const;
  FieldElem div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }
  /// Negative exponents invert first.
  FieldElem pow(FieldElem a, std::int64_t e) const;
  /// a^q0 where this field has cardinality q0^2.
  FieldElem frobenius(FieldElem a, std::uint32_t q0) const;
  /// Cardinality of the subfield fixed by the involutory automorphism, or
  /// NotAQuadraticExtension when k is odd.
  std::uint32_t quadratic_subfield_order() const;

  /// Multiplicative order of a nonzero element.
  std::uint64_t order(FieldElem a) const;
  /// e with xi^e = a, 0 <= e < q-1.
  std::uint32_t log(FieldElem a) const;

  // Unchecked fast paths used by the matrix kernels.
  std::uint32_t raw_add(std::uint32_t a, std::uint32_t b) const noexcept {
    if (p_ == 2) return a ^ b;
    if (!add_table_.empty()) return add_table_[a * q_ + b];
    return digit_add(a, b);
  }
  std::uint32_t raw_neg(std::uint32_t a) const noexcept { return neg_table_[a]; }
  std::uint32_t raw_mul(std::uint32_t a, std::uint32_t b) const noexcept {
    if (a == 0 || b == 0) return 0;
    return exp_table_[log_table_[a] + log_table_[b]];
  }
  std::uint32_t raw_inv(std::uint32_t a) const noexcept {
    return exp_table_[(q_ - 1 - log_table_[a]) % (q_ - 1)];
  }

  friend bool operator==(const Field& a, const Field& b) noexcept {
    return a.p_ == b.p_ && a.k_ == b.k_ && a.modulus_ == b.modulus_ && a.xi_ == b.xi_;
  }

 private:
  Field() = default;

  std::uint32_t digit_add(std::uint32_t a, std::uint32_t b) const noexcept;
  void check(FieldElem a) const;

  std::uint32_t p_ = 0;
  std::uint32_t k_ = 0;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  FieldElem xi_;
  // exp_table_ has length 2(q-1) so products of two logs need no reduction.
  std::vector<std::uint32_t> exp_table_;
  std::vector<std::uint32_t> log_table_;
  std::vector<std::uint32_t> neg_table_;
  std::vector<std::uint32_t> add_table_;
};

using FieldPtr = std::shared_ptr<const Field>;

/// Same field, by value (two independent `create` calls compare equal).
inline bool same_field(const FieldPtr& a, const FieldPtr& b) noexcept {
  return a == b || (a && b && *a == *b);
}

bool is_prime(std::uint64_t n) noexcept;

/// Distinct prime factors in increasing order.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// (p, k) with q = p^k, or nullopt-like {0, 0} when q is not a prime power.
struct PrimePower {
  std::uint32_t p = 0;
  std::uint32_t k = 0;
};
PrimePower as_prime_power(std::uint64_t q) noexcept;

}  // namespace classgen
