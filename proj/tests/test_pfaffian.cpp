#include <gtest/gtest.h>

#include "qfano/pfaffian.hpp"
#include "qfano/sampling.hpp"
#include "support.hpp"

using namespace qfano;

namespace {

// Pfaffian of a 2n x 2n skew matrix by summing over perfect matchings.
Rational matching_pfaffian(const std::vector<std::vector<Rational>>& a, std::vector<int> idx) {
  if (idx.empty()) return 1;
  Rational s = 0;
  int first = idx[0];
  for (std::size_t k = 1; k < idx.size(); ++k) {
    std::vector<int> rest;
    for (std::size_t t = 1; t < idx.size(); ++t)
      if (t != k) rest.push_back(idx[t]);
    Rational sign = (k % 2 == 1) ? 1 : -1;
    s += sign * a[first][idx[k]] * matching_pfaffian(a, rest);
  }
  return s;
}

SkewRat5 random_skew(Sampler& rng) {
  std::array<Rational, 10> e;
  for (auto& x : e) x = rng.rational();
  return SkewRat5(e);
}

RingPtr p4() {
  static RingPtr r = make_ring({"p1", "p2", "p3", "p4", "p5"}, {1, 1, 1, 1, 1});
  return r;
}

std::array<Rational, 5> e(int i) {
  std::array<Rational, 5> v{};
  v[i - 1] = 1;
  return v;
}

}  // namespace

TEST(Skew5, SlotsAndAntisymmetry) {
  EXPECT_EQ(SkewRat5::slot(1, 2), 0u);
  EXPECT_EQ(SkewRat5::slot(2, 3), 4u);
  EXPECT_EQ(SkewRat5::slot(4, 5), 9u);
  EXPECT_THROW(SkewRat5::slot(3, 3), std::out_of_range);
  Sampler rng(3);
  auto s = random_skew(rng);
  EXPECT_EQ(s.at(4, 2), -s.at(2, 4));
  EXPECT_THROW(s.at(2, 2), std::out_of_range);
  EXPECT_THROW(pfaffian4(s, {1, 3, 2, 4}), std::invalid_argument);
}

TEST(Pfaffian, MatchesPerfectMatchingSum) {
  Sampler rng(11);
  for (int t = 0; t < 20; ++t) {
    auto s = random_skew(rng);
    std::vector<std::vector<Rational>> a(5, std::vector<Rational>(5));
    for (int i = 1; i <= 5; ++i)
      for (int j = 1; j <= 5; ++j)
        if (i != j) a[i - 1][j - 1] = s.at(i, j);
    auto pf = plucker(s);
    for (std::size_t k = 0; k < 5; ++k) {
      const auto& q = kPluckerIndex[k];
      EXPECT_EQ(pf[k], matching_pfaffian(a, {q[0] - 1, q[1] - 1, q[2] - 1, q[3] - 1}));
    }
  }
}

TEST(Pfaffian, DecomposableVectorsSatisfyPlucker) {
  Sampler rng(5);
  for (int t = 0; t < 20; ++t) {
    std::array<Rational, 5> u, v;
    for (std::size_t k = 0; k < 5; ++k) {
      u[k] = rng.rational();
      v[k] = rng.rational();
    }
    for (const auto& p : plucker(wedge2(u, v))) EXPECT_EQ(p, 0);
  }
}

TEST(Pfaffian, SkewVariablesGiveTheQuadrics) {
  std::vector<std::string> names;
  for (const char* n : {"r12", "r13", "r14", "r15", "r23", "r24", "r25", "r34", "r35", "r45"}) names.push_back(n);
  auto ring = make_ring(names, std::vector<int>(10, 1));
  auto m = skew_variables(ring, "r");
  auto v = [&](const char* n) { return Poly::variable(ring, n); };
  EXPECT_EQ(pfaffian4(m, {1, 2, 3, 4}), v("r12") * v("r34") - v("r13") * v("r24") + v("r14") * v("r23"));
}

TEST(MuMap, AnnihilatesTheFourVectors) {
  // r = e1^e2 + e3^e4 has kernel direction e5, so mu is a multiple of e5*.
  SkewRat5 r = wedge2(e(1), e(2)) + wedge2(e(3), e(4));
  auto mu = mu_map(r);
  EXPECT_EQ(mu[0], 0);
  EXPECT_EQ(mu[1], 0);
  EXPECT_EQ(mu[2], 0);
  EXPECT_EQ(mu[3], 0);
  EXPECT_NE(mu[4], 0);
  EXPECT_THROW(mu_map(wedge2(e(1), e(2))), UndefinedMap);
}

TEST(MuMap, CoreCheckPasses) {
  auto res = testing_support::run_check("core.pfaffian");
  EXPECT_EQ(res.status, Status::pass) << testing_support::describe(res);
}

TEST(LineBasis, SpansTheLine) {
  std::array<Rational, 5> u{1, 2, 0, -1, 3}, v{0, 1, 1, 2, -1};
  auto r = wedge2(u, v);
  auto [a, b] = line_basis(r);
  auto back = wedge2(a, b);
  // Same point of G(2,5): proportional Plucker vectors.
  std::optional<Rational> ratio;
  for (std::size_t s = 0; s < 10; ++s) {
    if (r.entries()[s] == 0) {
      EXPECT_EQ(back.entries()[s], 0);
      continue;
    }
    Rational q = back.entries()[s] / r.entries()[s];
    if (!ratio) ratio = q;
    EXPECT_EQ(q, *ratio);
  }
  EXPECT_THROW(line_basis(wedge2(e(1), e(2)) + wedge2(e(3), e(4))), std::invalid_argument);
}

TEST(LineProfile, ClassifiesAgainstACone) {
  auto r = p4();
  Poly q = Poly::variable(r, "p1") * Poly::variable(r, "p2") - Poly::variable(r, "p3").pow(2);
  // Restrictions: s*t, -t^2, 0 and -s^2 respectively.
  EXPECT_EQ(line_quadric_profile(wedge2(e(1), e(2)), q), LineProfile::two_points);
  EXPECT_EQ(line_quadric_profile(wedge2(e(1), e(3)), q), LineProfile::tangent);
  EXPECT_EQ(line_quadric_profile(wedge2(e(4), e(5)), q), LineProfile::contained);
  EXPECT_EQ(line_quadric_profile(wedge2(e(3), e(4)), q), LineProfile::tangent);
  // Inside {p5 = 0}: a line leaving the hyperplane meets it once.
  EXPECT_EQ(line_quadric_profile(wedge2(e(1), e(5)), q, 4), LineProfile::one_point);
  EXPECT_EQ(line_quadric_profile(wedge2(e(3), e(5)), q, 4), LineProfile::disjoint);
}
