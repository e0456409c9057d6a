#include <complex>
#include <numbers>

#include "support.hpp"

namespace hecke {
namespace {

template <class B>
class Scalars : public ::testing::Test {};
TYPED_TEST_SUITE(Scalars, testing::Backends);

template <class S>
S random_scalar(const FieldOf<S>& f, std::mt19937& rng) {
  std::uniform_int_distribution<int> c(-4, 4);
  S x = f.zero();
  S qk = f.one();
  for (int k = 0; k < 5; ++k) {
    x += f.from_int(c(rng)) * qk;
    qk *= f.q();
  }
  return x;
}

TYPED_TEST(Scalars, FieldAxioms) {
  using S = typename TypeParam::S;
  std::mt19937 rng(7);
  for (int l : {2, 3, 4, 5, 6}) {
    const auto F = TypeParam::field(l);
    const auto& f = *F;
    for (int trial = 0; trial < 60; ++trial) {
      const S a = random_scalar<S>(f, rng), b = random_scalar<S>(f, rng), c = random_scalar<S>(f, rng);
      EXPECT_EQ(a + b, b + a);
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a + f.zero(), a);
      EXPECT_EQ(a * f.one(), a);
      EXPECT_TRUE((a - a).is_zero());
      EXPECT_EQ(a + (-a), f.zero());
      EXPECT_EQ(a.times_q(), a * f.q());
      if (!a.is_zero()) { EXPECT_EQ(a * a.inverse(), f.one()); }
    }
    EXPECT_THROW(f.zero().inverse(), std::domain_error);
  }
}

TYPED_TEST(Scalars, QHasExactOrderL) {
  for (int l = 2; l <= 8; ++l) {
    const auto F = TypeParam::field(l);
    for (int m = 1; m < l; ++m) EXPECT_NE(power(F->q(), m), F->one()) << l << " " << m;
    EXPECT_EQ(power(F->q(), l), F->one());
    EXPECT_EQ(power(F->q(), -1) * F->q(), F->one());
    EXPECT_EQ(F->order(), l);
  }
}

TYPED_TEST(Scalars, ParseRenderRoundTrip) {
  using S = typename TypeParam::S;
  std::mt19937 rng(11);
  for (int l : {3, 4, 5}) {
    const auto F = TypeParam::field(l);
    for (int trial = 0; trial < 50; ++trial) {
      const S a = random_scalar<S>(*F, rng);
      EXPECT_EQ(F->parse(a.str()), a) << a.str();
    }
    if constexpr (std::is_same_v<S, Cyclotomic>) {
      EXPECT_EQ(F->parse("z"), F->q());
      EXPECT_EQ(F->parse("1 + z"), F->one() + F->q());
    }
    EXPECT_EQ(F->parse(F->q().str()), F->q());
    EXPECT_EQ(F->parse("0"), F->zero());
    EXPECT_EQ(F->zero().str(), "0");
    EXPECT_THROW(F->parse(""), std::invalid_argument);
    EXPECT_THROW(F->parse("z^"), std::invalid_argument);
    EXPECT_THROW(F->parse("1/0"), std::invalid_argument);
    EXPECT_THROW(F->parse("3*"), std::invalid_argument);
    EXPECT_THROW(F->parse("z2"), std::invalid_argument);
  }
}

TYPED_TEST(Scalars, QuantumIntegers) {
  using S = typename TypeParam::S;
  for (int l : {3, 4, 5}) {
    const auto F = TypeParam::field(l);
    const S q = F->q();
    EXPECT_TRUE(quantum_integer(0, q).is_zero());
    EXPECT_EQ(quantum_integer(1, q), F->one());
    for (int m = 1; m <= 2 * l; ++m) {
      // (q - 1)[m]_q = q^m - 1, and [m]_q = 0 exactly when l | m
      EXPECT_EQ((q - F->one()) * quantum_integer(m, q), power(q, m) - F->one());
      EXPECT_EQ(quantum_integer(m, q).is_zero(), m % l == 0) << l << " " << m;
    }
    EXPECT_EQ(quantum_factorial(0, q), F->one());
    EXPECT_EQ(quantum_factorial(3, q), quantum_integer(2, q) * quantum_integer(3, q));
    EXPECT_FALSE(quantum_factorial(l - 1, q).is_zero());
    EXPECT_TRUE(quantum_factorial(l, q).is_zero());
  }
}

TEST(Cyclotomic, AgreesWithComplexEvaluation) {
  std::mt19937 rng(3);
  for (int l : {3, 4, 5, 6, 7, 8}) {
    const auto F = CyclotomicField::create(l);
    const std::complex<double> zeta = std::polar(1.0, 2 * std::numbers::pi / l);
    auto eval = [&](const Cyclotomic& x) {
      std::complex<double> v = 0, zk = 1;
      for (const auto& c : x.coefficients()) {
        v += c.get_d() * zk;
        zk *= zeta;
      }
      return v;
    };
    for (int trial = 0; trial < 40; ++trial) {
      const auto a = random_scalar<Cyclotomic>(*F, rng), b = random_scalar<Cyclotomic>(*F, rng);
      EXPECT_LT(std::abs(eval(a * b) - eval(a) * eval(b)), 1e-8);
      EXPECT_LT(std::abs(eval(a + b) - (eval(a) + eval(b))), 1e-8);
      if (!a.is_zero()) { EXPECT_LT(std::abs(eval(a.inverse()) - 1.0 / eval(a)), 1e-6); }
      EXPECT_LE(a.coefficients().size(), static_cast<std::size_t>(F->degree()));
    }
  }
  const auto F = CyclotomicField::create(3);
  EXPECT_EQ(F->degree(), 2);
  EXPECT_EQ(F->q() * F->q(), -F->one() - F->q());
  EXPECT_EQ(F->from_rational(mpq_class(1, 2)).str(), "1/2");
  EXPECT_EQ(F->parse("1/2*z - 3/4").str(), "1/2*z - 3/4");
}

TEST(Cyclotomic, CanonicalFormMakesEqualityStructural) {
  const auto F = CyclotomicField::create(5);
  const auto half = F->from_rational(mpq_class(1, 2));
  const auto x = half * F->q() + half * F->q();
  EXPECT_EQ(x, F->q());
  EXPECT_EQ(x.str(), "z");
  auto y = F->parse("2/6*z^4");
  EXPECT_EQ(y * F->from_int(3), power(F->q(), 4));
  EXPECT_EQ(quantum_integer(5, F->q()), F->zero());
}

TEST(GaloisField, PrimeFieldsMatchModularArithmetic) {
  for (auto [p, l] : std::vector<std::pair<int, int>>{{3, 2}, {5, 4}, {7, 3}, {7, 6}, {13, 4}}) {
    const auto F = GaloisField::create(p, 1, l);
    for (int a = 0; a < p; ++a)
      for (int b = 0; b < p; ++b) {
        EXPECT_EQ(F->from_int(a) + F->from_int(b), F->from_int((a + b) % p));
        EXPECT_EQ(F->from_int(a) * F->from_int(b), F->from_int((a * b) % p));
        EXPECT_EQ(F->from_int(a) - F->from_int(b), F->from_int(((a - b) % p + p) % p));
      }
    EXPECT_EQ(F->from_int(-1) + F->one(), F->zero());
  }
}

TEST(GaloisField, ExtensionFieldsAreFields) {
  for (auto [p, k, l] : std::vector<std::tuple<int, int, int>>{{2, 2, 3}, {2, 4, 5}, {2, 3, 7}, {3, 2, 8}, {2, 4, 15}}) {
    const auto F = GaloisField::create(p, k, l);
    ASSERT_EQ(F->characteristic(), p);
    std::vector<GaloisElement> all;
    for (std::uint32_t v = 0; v < F->size(); ++v) all.emplace_back(F.get(), v);
    for (const auto& x : all) {
      EXPECT_EQ(power(x, F->size()), x);  // Frobenius fixes every element
      if (!x.is_zero()) { EXPECT_EQ(x * x.inverse(), F->one()); }
      EXPECT_TRUE((F->from_int(p) * x).is_zero());
      EXPECT_EQ(F->parse(x.str()), x);
    }
    if (F->size() <= 16)
      for (const auto& x : all)
        for (const auto& y : all) {
          EXPECT_EQ(power(x + y, p), power(x, p) + power(y, p));
          for (const auto& z : all) EXPECT_EQ(x * (y + z), x * y + x * z);
        }
  }
}

TEST(GaloisField, RejectsImpossibleFields) {
  EXPECT_THROW(GaloisField::create(2, 1, 3), std::invalid_argument);
  EXPECT_THROW(GaloisField::create(4, 1, 3), std::invalid_argument);
  EXPECT_THROW(GaloisField::create(3, 2, 3), std::invalid_argument);
  EXPECT_THROW(GaloisField::create(2, 17, 3), std::invalid_argument);
  EXPECT_THROW(GaloisField::create(5, 1, 1), std::invalid_argument);
  EXPECT_THROW(CyclotomicField::create(1), std::invalid_argument);
}

TEST(FieldSpec, DescribesTheField) {
  const auto g = GaloisField::create(2, 2, 3)->spec();
  EXPECT_EQ(g.kind, FieldKind::finite);
  EXPECT_EQ(g.label(), "GF(2^2)");
  EXPECT_EQ(g.l, 3);
  const auto c = CyclotomicField::create(5)->spec();
  EXPECT_EQ(c.kind, FieldKind::cyclotomic);
  EXPECT_EQ(c.label(), "Q(zeta_5)");
  EXPECT_EQ(c.k, 4);
  EXPECT_EQ(c.modulus, "z^4 + z^3 + z^2 + z + 1");
  EXPECT_EQ(c.q, "z");
}

}  // namespace
}  // namespace hecke
