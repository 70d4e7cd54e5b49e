#include <gtest/gtest.h>

#include "qfano/parse.hpp"
#include "qfano/type_r.hpp"
#include "support.hpp"

using namespace qfano;

namespace {

const type_r::Data& D() { return type_r::data(); }

Poly P(const std::string& s) { return parse_poly(s, D().ring); }

Rational det4(const std::array<std::array<Rational, 4>, 4>& m) {
  // Leibniz over the 24 permutations.
  std::array<int, 4> p{0, 1, 2, 3};
  Rational s = 0;
  do {
    int inv = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) inv += p[i] > p[j];
    Rational t = inv % 2 ? -1 : 1;
    for (int i = 0; i < 4; ++i) t *= m[i][p[i]];
    s += t;
  } while (std::next_permutation(p.begin(), p.end()));
  return s;
}

void expect_pass(const std::string& id) {
  auto r = testing_support::run_check(id);
  EXPECT_EQ(r.status, Status::pass) << testing_support::describe(r);
}

}  // namespace

TEST(TypeR, QuadricsAreTwoByTwoMinors) {
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j) {
      auto n = [](const char* s, int k) { return std::string(s) + std::to_string(k); };
      EXPECT_EQ(D().qij(i, j), P(n("x", i) + "*" + n("y", j) + " - " + n("x", j) + "*" + n("y", i)));
    }
}

TEST(TypeR, PrintedFAgreeWithData) {
  const char* printed[5] = {"-r24*(r34 + r35)", "-(r15 - r35)*(r34 + r35)", "r15*r24", "r15*r34",
                            "-(r24 + r34)*r35"};
  for (int i = 0; i < 5; ++i) EXPECT_EQ(D().f[i], P(printed[i])) << "f" << i + 1;
}

TEST(TypeR, PrintedRFAgreeWithData) {
  const char* printed[5] = {
      "-q13*r24 + (q12 - q14 - q24)*r34 - (q14 + q24)*r35 - r24*(r34 + r35)",
      "q23*r15 - (q15 + q25)*r34 + (q12 + q13 - q15 - q25)*r35 - (r15 - r35)*(r34 + r35)",
      "q24*r15 + q15*r24 + q14*r35 + r15*r24",
      "q34*r15 + (q15 + q45)*r34 - (q14 - q45)*r35 + r15*r34",
      "-q35*r24 + (q25 - q45)*r34 - (q24 + q34 + q45)*r35 - (r24 + r34)*r35",
  };
  PolyResolver q = [](std::string_view name) -> std::optional<Poly> {
    if (name.size() == 3 && name[0] == 'q') return D().qij(name[1] - '0', name[2] - '0');
    return std::nullopt;
  };
  for (int i = 0; i < 5; ++i) EXPECT_EQ(D().RF[i], parse_poly(printed[i], D().ring, q)) << "RF" << i + 1;
}

TEST(TypeR, FivePointsAreOnTheGrassmannianSlice) {
  // (r15, r24, r34, r35) of the five printed points.
  std::array<std::array<Rational, 4>, 5> pts = {
      {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, -1, 1}}};
  for (const auto& p : pts) {
    Rational r15 = p[0], r24 = p[1], r34 = p[2], r35 = p[3];
    EXPECT_EQ(r24 * (r34 + r35), 0);
    EXPECT_EQ((r15 - r35) * (r34 + r35), 0);
    EXPECT_EQ(r15 * r24, 0);
    EXPECT_EQ(r15 * r34, 0);
    EXPECT_EQ((r24 + r34) * r35, 0);
  }
  for (int skip = 0; skip < 5; ++skip) {
    std::array<std::array<Rational, 4>, 4> m;
    for (int i = 0, k = 0; i < 5; ++i)
      if (i != skip) m[k++] = pts[i];
    EXPECT_NE(det4(m), 0) << "four of the points are coplanar";
  }
  for (std::size_t k = 0; k < 5; ++k)
    for (std::size_t c = 0; c < 4; ++c) EXPECT_EQ(D().segre_points[k][c], pts[k][c]);
}

TEST(TypeR, SingularPointsSatisfyTheNineEquations) {
  // p0..p5 lie over x = y = 0, where RF reduces to f and the r0 terms.
  for (const auto& p : D().p_points) {
    std::vector<Rational> pt(D().ring->arity(), 0);
    const char* names[5] = {"r0", "r15", "r24", "r34", "r35"};
    for (std::size_t k = 0; k < 5; ++k) pt[D().ring->index(names[k])] = p[k];
    for (const auto& rf : D().RF) EXPECT_EQ(rf.evaluate(pt), 0);
  }
}

TEST(TypeR, PluckerAndFDerivation) {
  expect_pass("typeR.plucker_q");
  expect_pass("typeR.rf_plucker");
  expect_pass("typeR.homogeneity");
}

TEST(TypeR, SegreAndComplexes) {
  expect_pass("typeR.segre");
  expect_pass("typeR.complexes");
}

TEST(TypeR, SymmetricGroup) {
  for (const char* id : {"typeR.s6.coxeter", "typeR.s6.span", "typeR.s6.dr", "typeR.s6.loci"}) expect_pass(id);
  auto span = testing_support::run_check("typeR.s6.span");
  EXPECT_NE(span.notes.find("sigma1 trace 3"), std::string::npos) << span.notes;
}

TEST(TypeR, MqMinorsAndRanks) {
  for (const char* id : {"typeR.mq.minors4", "typeR.mq.minors3", "typeR.mq.rank0", "typeR.mq.rank1", "typeR.mq.rank3"})
    expect_pass(id);
  // Independently of the minor checks, the rank at random points never exceeds 3.
  Sampler rng(99);
  for (int t = 0; t < 5; ++t) {
    auto pt = rng.rationals(D().ring->arity());
    EXPECT_LE(rat_rank(D().Mq.evaluate(pt)), 3u);
  }
}

TEST(TypeR, SingularLoci) {
  for (const char* id : {"typeR.singular.points", "typeR.singular.gamma", "typeR.singular.chart"}) expect_pass(id);
}

TEST(TypeR, MapsAndMemberships) {
  for (const char* id : {"typeR.two_relations", "typeR.maps.gR", "typeR.maps.hR", "typeR.maps.weights",
                         "typeR.maps.s_to_one", "typeR.maps.pihat", "typeR.qfacr", "typeR.scroll"})
    expect_pass(id);
  auto two = testing_support::run_check("typeR.two_relations");
  EXPECT_GE(two.certificates.size(), 4u);
}

TEST(TypeR, SeedDoesNotChangeTheVerdict) {
  CheckContext ctx;
  ctx.seed = 12345;
  ctx.trials = 5;
  auto r = testing_support::run_check("typeR.mq.rank1", ctx);
  EXPECT_EQ(r.status, Status::pass) << testing_support::describe(r);
}
