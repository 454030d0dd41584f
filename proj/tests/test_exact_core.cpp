#include <gtest/gtest.h>

#include "sharp/polynomial.hpp"
#include "support.hpp"

using namespace sharp;
using sharp::testing::Gen;

namespace {

// Unreduced big-integer fractions: the oracle for GaussRational arithmetic.
struct NaiveQ {
  mpz_class n, d;
};
NaiveQ add(const NaiveQ& a, const NaiveQ& b) { return {a.n * b.d + b.n * a.d, a.d * b.d}; }
NaiveQ sub(const NaiveQ& a, const NaiveQ& b) { return {a.n * b.d - b.n * a.d, a.d * b.d}; }
NaiveQ mul(const NaiveQ& a, const NaiveQ& b) { return {a.n * b.n, a.d * b.d}; }
bool same(const NaiveQ& a, const Rational& r) { return a.n * r.get_den() == r.get_num() * a.d; }

struct NaiveG {
  NaiveQ re, im;
};
NaiveG from(int rn, int rd, int in, int id) { return {{rn, rd}, {in, id}}; }
NaiveG gmul(const NaiveG& a, const NaiveG& b) {
  return {sub(mul(a.re, b.re), mul(a.im, b.im)), add(mul(a.re, b.im), mul(a.im, b.re))};
}
NaiveG gdiv(const NaiveG& a, const NaiveG& b) {
  const NaiveQ norm = add(mul(b.re, b.re), mul(b.im, b.im));
  const NaiveG num = gmul(a, {b.re, {-b.im.n, b.im.d}});
  return {{num.re.n * norm.d, num.re.d * norm.n}, {num.im.n * norm.d, num.im.d * norm.n}};
}
bool same(const NaiveG& a, const GaussRational& z) { return same(a.re, z.real()) && same(a.im, z.imag()); }

HomPoly z(std::size_t n, std::size_t i) { return HomPoly::variable(n, i); }
HomPoly c(std::size_t n, const MuScalar& v) { return HomPoly::constant(n, v); }

}  // namespace

TEST(GaussRational, AgreesWithNaiveOracle) {
  Gen gen(11);
  for (int trial = 0; trial < 1000; ++trial) {
    int v[8];
    for (int k = 0; k < 8; ++k) v[k] = k % 2 ? gen.integer(1, 30) : gen.integer(-40, 40);
    const NaiveG a = from(v[0], v[1], v[2], v[3]);
    const NaiveG b = from(v[4], v[5], v[6], v[7]);
    const GaussRational ga(ratio(v[0], v[1]), ratio(v[2], v[3]));
    const GaussRational gb(ratio(v[4], v[5]), ratio(v[6], v[7]));
    ASSERT_TRUE(same(NaiveG{add(a.re, b.re), add(a.im, b.im)}, ga + gb));
    ASSERT_TRUE(same(NaiveG{sub(a.re, b.re), sub(a.im, b.im)}, ga - gb));
    ASSERT_TRUE(same(gmul(a, b), ga * gb));
    if (!gb.is_zero()) ASSERT_TRUE(same(gdiv(a, b), ga / gb));
  }
}

TEST(GaussRational, CanonicalForm) {
  const GaussRational z(ratio(4, 8), ratio(-6, 4));
  EXPECT_EQ(z.real().get_den(), 2);
  EXPECT_EQ(z.imag().get_num(), -3);
  EXPECT_TRUE(GaussRational().is_zero());
  EXPECT_EQ(GaussRational(1) - GaussRational(1), GaussRational());
}

TEST(GaussRational, TextRoundTrip) {
  for (const char* s : {"0", "3/4", "-3/4", "i", "-i", "2i", "1/3i", "1/2+1/3i", "1-i", "-5/7-2/3i"})
    EXPECT_EQ(to_string(parse_gauss_rational(s)), s);
  EXPECT_THROW(parse_gauss_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_gauss_rational("abc"), std::invalid_argument);
  EXPECT_THROW(parse_gauss_rational(""), std::invalid_argument);
}

TEST(GaussRational, IntegerPowers) {
  const GaussRational i = GaussRational::i();
  EXPECT_EQ(pow(i, 2), GaussRational(-1));
  EXPECT_EQ(pow(i, -1), -i);
  EXPECT_EQ(pow(GaussRational(ratio(2, 3)), -2), GaussRational(ratio(9, 4)));
  EXPECT_THROW(pow(GaussRational(), -1), PreconditionError);
}

TEST(MuScalar, LaurentArithmetic) {
  const MuScalar a = MuScalar::mu(-1) + MuScalar(2);
  const MuScalar b = MuScalar::mu(1) - MuScalar(2);
  const MuScalar prod = a * b;  // 1 - 2/mu + 2 mu - 4
  EXPECT_EQ(prod.coefficient(-1), GaussRational(-2));
  EXPECT_EQ(prod.coefficient(0), GaussRational(-3));
  EXPECT_EQ(prod.coefficient(1), GaussRational(2));
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ((a - a).terms().size(), 0u);
  EXPECT_EQ(MuScalar::mu(2).evaluate(GaussRational(3)), GaussRational(9));
  EXPECT_THROW(MuScalar::mu(-1).evaluate(GaussRational()), PreconditionError);
}

TEST(Polynomial, AddExamples) {
  const std::size_t n = 2;
  const HomPoly p = z(n, 0) * z(n, 1) + c(n, MuScalar(3));
  EXPECT_EQ(add(p, HomPoly(n)), p);
  EXPECT_EQ(add(z(n, 0), z(n, 0)), z(n, 0).scaled(GaussRational(2)));
  const HomPoly mz1 = z(n, 1).scaled(MuScalar::mu(1));
  EXPECT_EQ(add(z(n, 0) + mz1, -mz1), z(n, 0));
  EXPECT_EQ((z(n, 0) + mz1 - mz1).size(), 1u);
  EXPECT_THROW(add(z(2, 0), z(3, 0)), DimensionError);
}

TEST(Polynomial, MulExamples) {
  const std::size_t n = 2;
  EXPECT_EQ(render(mul(z(n, 0), z(n, 1))), "z0*z1");
  const HomPoly p = z(n, 0) + z(n, 1).scaled(MuScalar::mu(1));
  EXPECT_EQ(mul(p, c(n, MuScalar(1))), p);
  EXPECT_EQ(render(mul(z(n, 0) + z(n, 1), z(n, 0) - z(n, 1))), "z0^2 - z1^2");
  EXPECT_THROW(mul(z(2, 0), z(3, 0)), DimensionError);
}

TEST(Polynomial, PartialExamples) {
  const std::size_t n = 2;
  EXPECT_EQ(partial(z(n, 0) * z(n, 0) * z(n, 1), 0), (z(n, 0) * z(n, 1)).scaled(GaussRational(2)));
  EXPECT_TRUE(partial(z(n, 0) * z(n, 0), 1).is_zero());
  EXPECT_EQ(partial(z(n, 0).scaled(MuScalar::mu(-1)), 0), c(n, MuScalar::mu(-1)));
  EXPECT_THROW(partial(z(n, 0), 2), DimensionError);
}

TEST(Polynomial, HomogeneousComponents) {
  const std::size_t n = 2;
  const auto parts = homogeneous_components(z(n, 0) * z(n, 0) + z(n, 1));
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts.at(2), z(n, 0) * z(n, 0));
  EXPECT_EQ(parts.at(1), z(n, 1));
  EXPECT_TRUE(homogeneous_components(HomPoly(n)).empty());
  const auto mixed = homogeneous_components(z(n, 0).scaled(MuScalar::mu(1)) + z(n, 0));
  ASSERT_EQ(mixed.size(), 1u);
  EXPECT_EQ(mixed.at(1), z(n, 0).scaled(MuScalar::mu(1) + MuScalar(1)));
}

TEST(Polynomial, Rendering) {
  const std::size_t n = 3;
  HomPoly p = (z(n, 0) * z(n, 0) * z(n, 1)).scaled(MuScalar::term(GaussRational(ratio(1, 2)), -1));
  EXPECT_EQ(render(p), "(1/2)*mu^-1*z0^2*z1");
  EXPECT_EQ(render(z(2, 0) * z(2, 1) + c(2, MuScalar::term(GaussRational(ratio(1, 2)), 1))), "z0*z1 + (1/2)*mu");
  EXPECT_EQ(render(c(1, MuScalar(GaussRational(ratio(1, 2), ratio(1, 3))))), "(1/2+1/3i)");
  EXPECT_EQ(render(z(1, 0).scaled(-GaussRational::i())), "-i*z0");
  EXPECT_EQ(render(HomPoly(2)), "0");
  // within one monomial: descending mu power
  EXPECT_EQ(render(z(1, 0).scaled(MuScalar::mu(-1) + MuScalar::mu(1))), "mu*z0 + mu^-1*z0");
}

TEST(Polynomial, RingAxioms) {
  Gen gen(3);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 3));
    const HomPoly p = gen.poly(n, 3), q = gen.poly(n, 3), r = gen.poly(n, 3);
    EXPECT_EQ((p * q) * r, p * (q * r));
    EXPECT_EQ(p * (q + r), p * q + p * r);
    EXPECT_EQ(p * q, q * p);
    EXPECT_EQ(p + q, q + p);
    EXPECT_TRUE((p - p).is_zero());
  }
}

TEST(Polynomial, DegreeAdditivity) {
  Gen gen(4);
  for (int trial = 0; trial < 30; ++trial) {
    const int d = gen.integer(0, 3), e = gen.integer(0, 3);
    const HomPoly p = gen.homogeneous(3, d), q = gen.homogeneous(3, e);
    const HomPoly prod = p * q;
    if (prod.is_zero()) continue;
    EXPECT_TRUE(prod.is_homogeneous());
    EXPECT_EQ(prod.degree(), d + e);
  }
}

TEST(Polynomial, LeibnizAndCommutingPartials) {
  Gen gen(5);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 4));
    const HomPoly p = gen.poly(n, 4), q = gen.poly(n, 4);
    const auto a = static_cast<std::size_t>(gen.integer(0, static_cast<int>(n) - 1));
    const auto b = static_cast<std::size_t>(gen.integer(0, static_cast<int>(n) - 1));
    EXPECT_EQ(partial(p * q, a), partial(p, a) * q + p * partial(q, a));
    EXPECT_EQ(partial(partial(p, a), b), partial(partial(p, b), a));
  }
}

TEST(Polynomial, MixedDerivativeMatchesIteratedPartials) {
  Gen gen(6);
  for (int trial = 0; trial < 30; ++trial) {
    const HomPoly p = gen.poly(3, 5);
    std::vector<int> orders{gen.integer(0, 2), gen.integer(0, 2), gen.integer(0, 2)};
    HomPoly expected = p;
    for (std::size_t v = 0; v < 3; ++v)
      for (int k = 0; k < orders[v]; ++k) expected = partial(expected, v);
    EXPECT_EQ(derivative(p, orders), expected);
  }
}

TEST(Polynomial, MonomialsOfDegreeAreLexDescending) {
  const auto ms = monomials_of_degree(3, 2);
  ASSERT_EQ(ms.size(), 6u);
  for (std::size_t k = 0; k + 1 < ms.size(); ++k) EXPECT_TRUE(LexGreater()(ms[k], ms[k + 1]));
  EXPECT_EQ(ms.front().exponents(), (std::vector<int>{2, 0, 0}));
}
