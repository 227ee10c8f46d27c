#include <gtest/gtest.h>

#include <random>

#include "gmloci/error.hpp"
#include "gmloci/polynomial.hpp"
#include "test_util.hpp"

namespace gmloci {
namespace {

using testing::poly;
using testing::ring;

Monomial mono(std::vector<std::uint32_t> e) { return Monomial(std::move(e)); }

TEST(MonomialOrder, GrevlexTieBreakOnLastVariable) {
  // x^2 y vs x y^2: same degree, y exponent 1 < 2 so x^2 y is larger.
  EXPECT_EQ(monomial_cmp(MonomialOrder::grevlex(), mono({2, 1}), mono({1, 2})),
            std::strong_ordering::greater);
}

TEST(MonomialOrder, Reflexive) {
  for (const auto& order : {MonomialOrder::lex(), MonomialOrder::grevlex(),
                            MonomialOrder::elimination(3, {1})}) {
    EXPECT_EQ(monomial_cmp(order, mono({1, 4, 2}), mono({1, 4, 2})), std::strong_ordering::equal);
  }
}

TEST(MonomialOrder, LexComparesFirstExponent) {
  EXPECT_EQ(monomial_cmp(MonomialOrder::lex(), mono({1, 0}), mono({0, 3})),
            std::strong_ordering::greater);
  EXPECT_EQ(monomial_cmp(MonomialOrder::grevlex(), mono({1, 0}), mono({0, 3})),
            std::strong_ordering::less);
}

TEST(MonomialOrder, LengthMismatchIsStructural) {
  EXPECT_THROW(monomial_cmp(MonomialOrder::lex(), mono({1}), mono({1, 0})), StructuralError);
}

TEST(MonomialOrder, BlockMustPartition) {
  auto bad = MonomialOrder::block({{{0}, MonomialOrder::Kind::Grevlex}});
  EXPECT_THROW(monomial_cmp(bad, mono({1, 0}), mono({0, 1})), StructuralError);
}

TEST(MonomialOrder, EliminationPutsDroppedBlockFirst) {
  auto order = MonomialOrder::elimination(3, {2});
  // z beats any power of x, y.
  EXPECT_EQ(order.compare(mono({0, 0, 1}), mono({5, 5, 0})), std::strong_ordering::greater);
}

TEST(MonomialOrder, TotalAndMultiplicativeOnRandomMonomials) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::uint32_t> e(0, 3);
  auto random_mono = [&] { return mono({e(rng), e(rng), e(rng), e(rng)}); };
  std::vector<MonomialOrder> orders = {
      MonomialOrder::lex(), MonomialOrder::grevlex(), MonomialOrder::elimination(4, {0, 3}),
      MonomialOrder::block({{{2, 0}, MonomialOrder::Kind::Lex}, {{1, 3}, MonomialOrder::Kind::Grevlex}})};
  for (const auto& order : orders) {
    for (int k = 0; k < 300; ++k) {
      Monomial a = random_mono();
      Monomial b = random_mono();
      Monomial c = random_mono();
      auto ab = order.compare(a, b);
      EXPECT_EQ(ab == 0, a == b);
      EXPECT_EQ(order.compare(b, a), 0 <=> ab);
      EXPECT_EQ(order.compare(a * c, b * c), ab) << order.key();
      // 1 is the smallest monomial.
      EXPECT_NE(order.compare(Monomial(4), a), std::strong_ordering::greater);
    }
  }
}

TEST(WeightedDegree, Examples) {
  auto r = ring("x:1, y:-1, z:0");
  EXPECT_EQ(poly(r, "x*y - z^2").weighted_degree(), 0);
  auto r2 = ring("x:1, y:1");
  EXPECT_EQ(poly(r2, "x + y^2").weighted_degree(), std::nullopt);
  auto r3 = ring("x:-2");
  EXPECT_EQ(poly(r3, "x^3").weighted_degree(), -6);
  EXPECT_THROW(Polynomial(r3).weighted_degree(), DegreeUndefinedError);
}

TEST(WeightedDegree, AdditiveOnProductsOfHomogeneous) {
  auto r = ring("a:2, b:-1, c:0, d:3");
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::uint32_t> e(0, 3);
  auto w = r->weights();
  for (int k = 0; k < 100; ++k) {
    // Homogeneous polynomials: sums of monomials of a common degree are rare at
    // random, so build them as a monomial times a weight-0 sum.
    Monomial m1({e(rng), e(rng), e(rng), e(rng)});
    Monomial m2({e(rng), e(rng), e(rng), e(rng)});
    Polynomial p = Polynomial::monomial(r, m1, Scalar::from_int(Field{}, 3)) *
                   (poly(r, "1 + a*b^2") + poly(r, "c^2"));
    Polynomial q = Polynomial::monomial(r, m2, Scalar::from_int(Field{}, -2)) * poly(r, "c - a*b^2");
    ASSERT_TRUE(p.weighted_degree() && q.weighted_degree());
    EXPECT_EQ((p * q).weighted_degree(), *p.weighted_degree() + *q.weighted_degree());
    EXPECT_EQ(*p.weighted_degree(), m1.weighted_degree(w));
  }
}

TEST(Substitute, Examples) {
  auto r = ring("x:0, y:0");
  auto zero_y = substitute(poly(r, "x*y"), {{"x", poly(r, "x")}, {"y", Polynomial(r)}}, r);
  EXPECT_TRUE(zero_y.is_zero());

  auto src = ring("x:2");
  auto tgt = make_ring({{"t", 0}, {"x#1", 2}, {"x#2", 2}});
  auto t2x = Polynomial::variable(tgt, "t").pow(2) * Polynomial::variable(tgt, "x#1");
  auto img = substitute(poly(src, "x"), {{"x", t2x}}, tgt);
  EXPECT_EQ(img.to_string(), "t^2*x'");

  auto uv = ring("u:0, v:0");
  auto expanded = substitute(poly(r, "x^2 + y"), {{"x", poly(uv, "u + v")}, {"y", poly(uv, "u*v")}}, uv);
  // (u+v)^2 + uv expanded by hand.
  EXPECT_EQ(expanded, poly(uv, "u^2 + 2*u*v + v^2 + u*v"));
  EXPECT_EQ(expanded.to_string(), "u^2 + 3*u*v + v^2");
}

TEST(Substitute, MissingImageIsStructural) {
  auto r = ring("x:0, y:0");
  EXPECT_THROW(substitute(poly(r, "x"), {{"x", poly(r, "x")}}, r), StructuralError);
}

TEST(Substitute, IdentityAndComposition) {
  auto r = ring("x:0, y:0, z:0");
  std::mt19937 rng(3);
  std::vector<Polynomial> id = {poly(r, "x"), poly(r, "y"), poly(r, "z")};
  for (int k = 0; k < 40; ++k) {
    Polynomial p = testing::random_poly(rng, r, 5, 3);
    EXPECT_EQ(substitute(p, id, r), p);
    std::vector<Polynomial> f = {testing::random_poly(rng, r, 2, 2), testing::random_poly(rng, r, 2, 2),
                                 testing::random_poly(rng, r, 2, 1)};
    std::vector<Polynomial> g = {testing::random_poly(rng, r, 2, 1), testing::random_poly(rng, r, 2, 2),
                                 testing::random_poly(rng, r, 2, 1)};
    // (g o f)_i = f_i(g).
    std::vector<Polynomial> gf;
    for (const auto& fi : f) gf.push_back(substitute(fi, g, r));
    EXPECT_EQ(substitute(substitute(p, f, r), g, r), substitute(p, gf, r));
  }
}

TEST(Scalar, FieldAxiomsOnRandomInputs) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> small(-50, 50);
  for (Field f : {Field::rationals(), Field::prime(7), Field::prime(2147483647)}) {
    auto draw = [&] {
      Scalar n = Scalar::from_int(f, small(rng));
      long d = small(rng);
      if (d == 0) d = 1;
      if (!f.is_rational() && d % static_cast<long>(f.modulus) == 0) d = 1;
      return n / Scalar::from_int(f, d);
    };
    for (int k = 0; k < 200; ++k) {
      Scalar a = draw();
      Scalar b = draw();
      Scalar c = draw();
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a + b, b + a);
      EXPECT_TRUE((a - a).is_zero());
      if (!a.is_zero()) EXPECT_TRUE((a * a.inverse()).is_one());
    }
  }
}

TEST(Scalar, CanonicalRationals) {
  Scalar half(mpq_class(2, 4));
  EXPECT_EQ(half.to_string(), "1/2");
  EXPECT_EQ(Scalar(mpq_class(0, 5)).rational().get_den(), 1);
  EXPECT_EQ(Scalar(mpq_class(3, -6)).to_string(), "-1/2");
}

TEST(Scalar, NeverMixesFields) {
  Scalar q = Scalar::from_int(Field::rationals(), 1);
  Scalar p = Scalar::from_int(Field::prime(5), 1);
  Scalar p7 = Scalar::from_int(Field::prime(7), 1);
  EXPECT_THROW(q + p, StructuralError);
  EXPECT_THROW(p * p7, StructuralError);
  EXPECT_EQ(Scalar::from_int(Field::prime(5), -1).to_string(), "4");
  EXPECT_EQ(Scalar::from_rational(Field::prime(5), mpq_class(1, 2)).to_string(), "3");
  EXPECT_THROW(Scalar::from_rational(Field::prime(5), mpq_class(1, 5)), StructuralError);
}

TEST(Primes, MillerRabinMatchesTrialDivision) {
  auto trial = [](std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) return false;
    }
    return true;
  };
  for (std::uint64_t n = 0; n < 20000; ++n) ASSERT_EQ(is_prime(n), trial(n)) << n;
  for (std::uint64_t n = 2147483000; n < 2147483648ULL; ++n) ASSERT_EQ(is_prime(n), trial(n)) << n;
  EXPECT_THROW(Field::prime(2147483659ULL), ValidationError);
  EXPECT_THROW(Field::prime(9), ValidationError);
}

TEST(Polynomial, CanonicalTermList) {
  auto r = ring("x:1, y:-1, z:0");
  auto p = poly(r, "z^2 - x*y + x*y + 2*x*y - 0*z");
  EXPECT_EQ(p.to_string(), "2*x*y + z^2");
  EXPECT_EQ(poly(r, "-(x - 1/2)").to_string(), "-x + 1/2");
  EXPECT_TRUE(poly(r, "x - x").is_zero());
  EXPECT_EQ(poly(r, "x - x").to_string(), "0");
}

TEST(Polynomial, ParsePrintParseIsIdentity) {
  std::mt19937 rng(17);
  for (Field f : {Field::rationals(), Field::prime(5)}) {
    auto r = ring("x:1, y:-1, z:0, w:2", f);
    for (int k = 0; k < 200; ++k) {
      Polynomial p = testing::random_poly(rng, r, 6, 4);
      if (f.is_rational() && k % 3 == 0) p = p.scaled(Scalar(mpq_class(-3, 7)));
      EXPECT_EQ(parse_polynomial(p.to_string(false), r), p) << p.to_string(false);
    }
  }
}

TEST(Polynomial, RingMismatchIsStructural) {
  auto r1 = ring("x:1");
  auto r2 = ring("y:1");
  EXPECT_THROW(poly(r1, "x") + poly(r2, "y"), StructuralError);
  EXPECT_THROW(transfer(poly(r1, "x"), r2), StructuralError);
}

}  // namespace
}  // namespace gmloci
