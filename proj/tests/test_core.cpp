#include <gtest/gtest.h>

#include "qfano/matrix.hpp"
#include "qfano/parse.hpp"
#include "qfano/poly.hpp"
#include "qfano/sampling.hpp"
#include "qfano/sparse_solve.hpp"
#include "support.hpp"

using namespace qfano;

namespace {

RingPtr xyz() {
  static RingPtr r = make_ring({"x", "y", "z"}, {1, 1, 2});
  return r;
}

Integer binomial(unsigned n, unsigned k) {
  Integer out = 1;
  for (unsigned i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

}  // namespace

TEST(Rational, ParsesAndCanonicalizes) {
  EXPECT_EQ(parse_rational(" -3/6 "), rat(-1, 2));
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_THROW(parse_rational("1/0"), std::exception);
  EXPECT_THROW(parse_rational("abc"), std::exception);
}

TEST(Poly, BinomialExpansionMatchesPascal) {
  auto r = xyz();
  Poly x = Poly::variable(r, "x"), y = Poly::variable(r, "y");
  Poly p = (x + y).pow(7);
  ASSERT_EQ(p.size(), 8u);
  for (unsigned k = 0; k <= 7; ++k) {
    auto m = make_monomial(*r, {static_cast<std::uint16_t>(7 - k), static_cast<std::uint16_t>(k), 0});
    EXPECT_EQ(p.coefficient(m), Rational(binomial(7, k))) << k;
  }
}

TEST(Poly, WeightedDegreeAndHomogeneity) {
  auto r = xyz();
  EXPECT_EQ(parse_poly("x^2*z + y^4", r).weighted_degree(), 4);
  EXPECT_FALSE(parse_poly("x + z", r).weighted_degree().has_value());
  EXPECT_FALSE(Poly(r).weighted_degree().has_value());
  EXPECT_EQ(parse_poly("x + z^3", r).max_degree(), 6);
}

TEST(Poly, ParserAgreesWithConstruction) {
  auto r = xyz();
  Poly x = Poly::variable(r, "x"), y = Poly::variable(r, "y"), z = Poly::variable(r, "z");
  EXPECT_EQ(parse_poly("3*x^2*y - z/2 + (x - y)*(x + y)", r),
            Rational(3) * x * x * y - rat(1, 2) * z + x * x - y * y);
  EXPECT_THROW(parse_poly("x/y", r), std::invalid_argument);
  EXPECT_THROW(parse_poly("w", r), std::invalid_argument);
}

TEST(Poly, DerivativeAndEvaluation) {
  auto r = xyz();
  Poly p = parse_poly("x^3*y + 2*z*y^2", r);
  EXPECT_EQ(p.derivative(0), parse_poly("3*x^2*y", r));
  EXPECT_EQ(p.derivative(2), parse_poly("2*y^2", r));
  // 8*3 + 2*5*9
  EXPECT_EQ(p.evaluate({2, 3, 5}), Rational(114));
}

TEST(Poly, SubstituteComposes) {
  auto r = xyz();
  PolyMap a(r, r, {parse_poly("x + y", r), parse_poly("y", r), parse_poly("z - x*y", r)});
  PolyMap b(r, r, {parse_poly("2*x", r), parse_poly("x - y", r), parse_poly("z", r)});
  Poly p = parse_poly("x*z + y^3", r);
  EXPECT_EQ(substitute(substitute(p, a), b), substitute(p, a.followed_by(b)));
  EXPECT_EQ(substitute(p, PolyMap::identity(r)), p);
}

TEST(Poly, CoreChecksPass) {
  for (const char* id : {"core.poly.ring_axioms", "core.poly.substitute"}) {
    auto res = testing_support::run_check(id);
    EXPECT_EQ(res.status, Status::pass) << testing_support::describe(res);
  }
}

TEST(Matrix, VandermondeDeterminant) {
  std::vector<Rational> t{rat(1, 2), 3, -2, rat(5, 3), 7};
  RatMatrix v(5, 5);
  for (std::size_t i = 0; i < 5; ++i) {
    Rational p = 1;
    for (std::size_t j = 0; j < 5; ++j, p *= t[i]) v(i, j) = p;
  }
  Rational expected = 1;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j) expected *= t[j] - t[i];
  EXPECT_EQ(rat_det(v), expected);
  EXPECT_EQ(rat_rank(v), 5u);
}

TEST(Matrix, HilbertDeterminant) {
  RatMatrix h(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) h(i, j) = rat(1, static_cast<long>(i + j + 1));
  EXPECT_EQ(rat_det(h), rat(1, 6048000));
}

TEST(Matrix, SolveAndNullspace) {
  RatMatrix a{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  EXPECT_EQ(rat_rank(a), 2u);
  auto ns = rat_nullspace(a);
  ASSERT_EQ(ns.size(), 1u);
  for (const auto& x : a * ns[0]) EXPECT_EQ(x, 0);
  auto sol = rat_solve(a, {6, 12, 2});
  ASSERT_TRUE(sol);
  EXPECT_EQ(a * *sol, (std::vector<Rational>{6, 12, 2}));
  EXPECT_FALSE(rat_solve(a, {1, 1, 1}));
}

TEST(Matrix, LinearAlgebraCheckPasses) {
  auto res = testing_support::run_check("core.linalg.rank");
  EXPECT_EQ(res.status, Status::pass) << testing_support::describe(res);
}

TEST(Matrix, PolyDeterminantAndJacobian) {
  auto r = xyz();
  auto jac = jacobian(r, {parse_poly("x^2", r), parse_poly("x*y", r)});
  ASSERT_EQ(jac.rows(), 2u);
  ASSERT_EQ(jac.cols(), 3u);
  auto sq = jac.submatrix({0, 1}, {0, 1});
  EXPECT_EQ(sq.det(), parse_poly("2*x^2", r));
  EXPECT_EQ(subsets(5, 2).size(), 10u);
}

TEST(SparseSystem, MatchesDenseSolver) {
  SparseSystem s(3);
  s.add_equation({{0, 1}, {1, 2}}, 5);
  s.add_equation({{1, 1}, {2, -1}, {1, 1}}, 2);
  auto x = s.solve();
  ASSERT_TRUE(x);
  EXPECT_EQ((*x)[0] + 2 * (*x)[1], 5);
  EXPECT_EQ(2 * (*x)[1] - (*x)[2], 2);
  s.add_equation({{0, 2}, {1, 4}}, 11);
  EXPECT_FALSE(s.consistent());
}

TEST(Sampler, SeedDeterminism) {
  Sampler a(derive_seed(1, "typeR.mq.rank1")), b(derive_seed(1, "typeR.mq.rank1"));
  for (int i = 0; i < 50; ++i) EXPECT_EQ(a.rational(), b.rational());
  EXPECT_NE(derive_seed(1, "a"), derive_seed(1, "b"));
  EXPECT_NE(derive_seed(1, "a"), derive_seed(2, "a"));
  Sampler c(7);
  for (int i = 0; i < 200; ++i) {
    auto v = c.integer(-3, 4);
    EXPECT_GE(v, -3);
    EXPECT_LE(v, 4);
    EXPECT_NE(c.nonzero_rational(), 0);
  }
}
