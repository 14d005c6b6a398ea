#include <gtest/gtest.h>

#include <vector>

#include "classgen/gf.hpp"

using namespace classgen;

namespace {

using Coeffs = std::vector<std::uint32_t>;

// Schoolbook product in GF(p)[t] / (modulus), independent of the field tables.
Coeffs naive_mul(const Coeffs& a, const Coeffs& b, const Coeffs& modulus, std::uint32_t p) {
  const std::size_t k = modulus.size() - 1;
  std::vector<std::uint64_t> prod(2 * k + 1, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  for (std::size_t d = 2 * k; d >= k && d > 0; --d) {
    const std::uint64_t c = prod[d];
    for (std::size_t i = 0; i <= k; ++i) prod[d - k + i] = (prod[d - k + i] + (p - c) * modulus[i] % p) % p;
  }
  return Coeffs(prod.begin(), prod.begin() + static_cast<long>(k));
}

std::uint64_t naive_order(const Coeffs& a, const Coeffs& modulus, std::uint32_t p) {
  Coeffs one(modulus.size() - 1, 0);
  one[0] = 1;
  Coeffs cur = a;
  for (std::uint64_t n = 1;; ++n) {
    if (cur == one) return n;
    cur = naive_mul(cur, a, modulus, p);
  }
}

// A monic polynomial of degree <= 3 is irreducible iff it has no root.
bool has_root(const Coeffs& f, std::uint32_t p) {
  for (std::uint32_t x = 0; x < p; ++x) {
    std::uint64_t v = 0;
    for (std::size_t i = f.size(); i-- > 0;) v = (v * x + f[i]) % p;
    if (v == 0) return true;
  }
  return false;
}

}  // namespace

TEST(Field, Gf2Convention) {
  auto f = Field::create(2, 1);
  EXPECT_EQ(f->q(), 2u);
  EXPECT_EQ(f->modulus(), (Coeffs{0, 1}));
  EXPECT_EQ(f->xi(), f->one());
  EXPECT_EQ(f->add(f->one(), f->one()), f->zero());
}

TEST(Field, Gf9ModulusAndPrimitive) {
  auto f = Field::create(3, 2);
  EXPECT_EQ(f->modulus(), (Coeffs{1, 0, 1}));
  EXPECT_EQ(f->coeffs(f->xi()), (Coeffs{1, 1}));
  // Oracle: brute-force orders of every nonzero element in constant-term-first
  // lexicographic order; the first one of order 8 must be xi.
  std::vector<Coeffs> in_order;
  for (std::uint32_t c0 = 0; c0 < 3; ++c0)
    for (std::uint32_t c1 = 0; c1 < 3; ++c1)
      if (c0 || c1) in_order.push_back({c0, c1});
  Coeffs first_primitive;
  for (const auto& c : in_order)
    if (naive_order(c, f->modulus(), 3) == 8) {
      first_primitive = c;
      break;
    }
  EXPECT_EQ(first_primitive, (Coeffs{1, 1}));
  // t * t = -1.
  const FieldElem t = f->from_coeffs(Coeffs{0, 1});
  EXPECT_EQ(f->coeffs(f->mul(t, t)), (Coeffs{2, 0}));
}

TEST(Field, Gf4) {
  auto f = Field::create(2, 2);
  EXPECT_EQ(f->modulus(), (Coeffs{1, 1, 1}));
  EXPECT_EQ(f->coeffs(f->xi()), (Coeffs{0, 1}));
  EXPECT_EQ(naive_order(f->coeffs(f->xi()), f->modulus(), 2), 3u);
  EXPECT_EQ(f->pow(f->xi(), 3), f->one());
}

TEST(Field, ModulusIsLeastIrreducible) {
  for (auto [p, k] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 2}, {2, 3}, {3, 2}, {3, 3}, {5, 2}, {7, 2}}) {
    auto f = Field::create(p, k);
    EXPECT_FALSE(has_root(f->modulus(), p)) << p << "^" << k;
    // Every smaller candidate (constant-term-first order) is reducible.
    std::uint64_t total = 1;
    for (std::uint32_t i = 0; i < k; ++i) total *= p;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      Coeffs c(k);
      std::uint64_t rest = idx;
      for (std::size_t i = k; i-- > 0;) {
        c[i] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      c.push_back(1);
      if (c == f->modulus()) break;
      EXPECT_TRUE(has_root(c, p));
    }
  }
}

TEST(Field, PrimitiveElementOrder) {
  for (auto [p, k] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
           {2, 2}, {2, 3}, {2, 4}, {3, 1}, {3, 2}, {3, 4}, {5, 1}, {5, 2}, {7, 1}, {7, 2}, {2, 6}}) {
    auto f = Field::create(p, k);
    const std::uint64_t n = f->q() - 1;
    EXPECT_EQ(f->pow(f->xi(), static_cast<std::int64_t>(n)), f->one());
    for (std::uint64_t d = 1; d < n; ++d)
      if (n % d == 0) EXPECT_NE(f->pow(f->xi(), static_cast<std::int64_t>(d)), f->one()) << f->q() << " d=" << d;
    EXPECT_EQ(naive_order(f->coeffs(f->xi()), f->modulus(), p), n);
  }
}

TEST(Field, ArithmeticAgreesWithSchoolbook) {
  for (auto [p, k] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 2}, {2, 4}, {5, 2}, {3, 3}}) {
    auto f = Field::create(p, k);
    for (std::uint32_t a = 0; a < f->q(); ++a)
      for (std::uint32_t b = 0; b < f->q(); ++b) {
        const Coeffs ca = f->coeffs({a}), cb = f->coeffs({b});
        EXPECT_EQ(f->coeffs(f->mul({a}, {b})), naive_mul(ca, cb, f->modulus(), p));
        Coeffs sum(k);
        for (std::uint32_t i = 0; i < k; ++i) sum[i] = (ca[i] + cb[i]) % p;
        EXPECT_EQ(f->coeffs(f->add({a}, {b})), sum);
      }
  }
}

TEST(Field, InverseExhaustive) {
  for (auto [p, k] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 1}, {3, 4}, {2, 6}, {7, 2}, {3, 2}, {5, 1}}) {
    auto f = Field::create(p, k);
    for (std::uint32_t a = 1; a < f->q(); ++a) {
      EXPECT_EQ(f->mul({a}, f->inv({a})), f->one());
      EXPECT_EQ(f->sub(f->add({a}, {a}), {a}), FieldElem{a});
    }
  }
}

TEST(Field, PowNegativeAndZero) {
  auto f = Field::create(5, 1);
  const FieldElem x = f->xi();
  EXPECT_EQ(f->pow(x, -1), f->inv(x));
  EXPECT_EQ(f->pow(x, 0), f->one());
  EXPECT_EQ(f->pow(f->zero(), 3), f->zero());
  EXPECT_EQ(f->pow(x, -5), f->inv(f->pow(x, 5)));
}

TEST(Field, FrobeniusGf9) {
  auto f = Field::create(3, 2);
  const FieldElem a = f->from_coeffs(Coeffs{1, 1});
  // (t+1)^3 = t^3 + 1 = -t + 1 with t^2 = -1.
  EXPECT_EQ(f->coeffs(f->frobenius(a, 3)), (Coeffs{1, 2}));
  const Coeffs ca = f->coeffs(a);
  EXPECT_EQ(naive_mul(naive_mul(ca, ca, f->modulus(), 3), ca, f->modulus(), 3), (Coeffs{1, 2}));
}

TEST(Field, FrobeniusGf4) {
  auto f = Field::create(2, 2);
  EXPECT_EQ(f->frobenius(f->xi(), 2), f->mul(f->xi(), f->xi()));
  EXPECT_EQ(f->frobenius(f->frobenius(f->xi(), 2), 2), f->xi());
}

TEST(Field, FrobeniusIsAutomorphism) {
  for (auto [p, k] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 2}, {3, 2}, {2, 4}, {5, 2}, {7, 2}, {3, 4}}) {
    auto f = Field::create(p, k);
    const std::uint32_t q0 = f->quadratic_subfield_order();
    for (std::uint32_t a = 0; a < f->q(); ++a) {
      EXPECT_EQ(f->frobenius(f->frobenius({a}, q0), q0), FieldElem{a});
      for (std::uint32_t b = 0; b < f->q(); ++b) {
        EXPECT_EQ(f->frobenius(f->mul({a}, {b}), q0), f->mul(f->frobenius({a}, q0), f->frobenius({b}, q0)));
        EXPECT_EQ(f->frobenius(f->add({a}, {b}), q0), f->add(f->frobenius({a}, q0), f->frobenius({b}, q0)));
      }
    }
  }
}

TEST(Field, Deterministic) {
  auto a = Field::create(5, 2);
  auto b = Field::create(5, 2);
  EXPECT_EQ(*a, *b);
  EXPECT_EQ(a->modulus(), b->modulus());
  EXPECT_EQ(a->xi(), b->xi());
}

TEST(Field, Errors) {
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::MalformedInput;
  };
  EXPECT_EQ(code_of([] { Field::create(4, 1); }), Errc::NotPrime);
  EXPECT_EQ(code_of([] { Field::create(1, 1); }), Errc::NotPrime);
  EXPECT_EQ(code_of([] { Field::create(3, 0); }), Errc::DegreeOutOfRange);
  EXPECT_EQ(code_of([] { Field::create(2, 21); }), Errc::CapExceeded);
  EXPECT_EQ(code_of([] { Field::create(3, 5, 100); }), Errc::CapExceeded);
  auto f = Field::create(3, 2);
  EXPECT_EQ(code_of([&] { f->inv(f->zero()); }), Errc::DivisionByZero);
  EXPECT_EQ(code_of([&] { f->add({9}, f->one()); }), Errc::MixedFields);
  EXPECT_EQ(code_of([&] { f->frobenius(f->one(), 2); }), Errc::NotAQuadraticExtension);
  auto g = Field::create(2, 3);
  EXPECT_EQ(code_of([&] { g->frobenius(g->one(), 2); }), Errc::NotAQuadraticExtension);
}

TEST(Field, PrimePowers) {
  EXPECT_EQ(as_prime_power(9).p, 3u);
  EXPECT_EQ(as_prime_power(9).k, 2u);
  EXPECT_EQ(as_prime_power(8).k, 3u);
  EXPECT_EQ(as_prime_power(6).p, 0u);
  EXPECT_EQ(as_prime_power(1).p, 0u);
  EXPECT_EQ(as_prime_power(7).k, 1u);
}
