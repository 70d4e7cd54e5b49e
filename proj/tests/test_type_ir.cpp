#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

#include "qfano/parse.hpp"
#include "qfano/type_ir.hpp"
#include "support.hpp"

using namespace qfano;
using type_ir::Tag;

namespace {

const std::array<const char*, 10> kPrintedGeneral = {
    "-xb1*xb4 - xb2*xb3", "-xb3^2", "xb4^2", "xb3*xb4", "xb1^2", "-xb2^2", "xb1*xb2", "xb1*xb4 - xb2*xb3",
    "xb1*xb3", "-xb2*xb4"};

void expect_pass(const std::string& id, const CheckContext& ctx = {}) {
  auto r = testing_support::run_check(id, ctx);
  EXPECT_EQ(r.status, Status::pass) << testing_support::describe(r);
}

std::string example_lforms() { return std::string(QFANO_SOURCE_DIR) + "/docs/lforms.example.json"; }

}  // namespace

TEST(TypeIR, PrintedMatricesAgreeWithData) {
  const auto& g = type_ir::data(Tag::general);
  const auto& s = type_ir::data(Tag::special);
  for (std::size_t k = 0; k < 10; ++k) {
    Poly printed = parse_poly(kPrintedGeneral[k], g.bar);
    EXPECT_EQ(g.q[k], printed) << k;
    // The special matrix drops the fifth column.
    bool col5 = k == 3 || k == 6 || k == 8 || k == 9;
    EXPECT_EQ(s.q[k], col5 ? Poly(s.bar) : parse_poly(kPrintedGeneral[k], s.bar)) << k;
  }
}

TEST(TypeIR, PluckerVanishesOnBothMatrices) {
  for (Tag t : {Tag::general, Tag::special}) {
    const auto& c = type_ir::data(t);
    std::array<Poly, 10> q = c.q;
    for (const auto& p : plucker(SkewPolyMatrix5(q))) EXPECT_TRUE(p.is_zero()) << p.to_string();
  }
}

TEST(TypeIR, SpecialQuadricIdentity) {
  const auto& c = type_ir::data(Tag::special);
  Poly lhs = (c.qij(1, 2) + c.qij(3, 4)).pow(2);
  Poly rhs = Rational(4) * c.qij(1, 3) * c.qij(2, 4);
  EXPECT_EQ(lhs, rhs);
  // Independent: with x = (a, b, c, d), (-ad - bc + ad - bc)^2 = 4 b^2 c^2 = 4 (-c^2)(-b^2).
  Sampler rng(4);
  for (int t = 0; t < 10; ++t) {
    auto x = rng.rationals(4);
    Rational q12 = -x[0] * x[3] - x[1] * x[2], q34 = x[0] * x[3] - x[1] * x[2];
    Rational q13 = -x[2] * x[2], q24 = -x[1] * x[1];
    EXPECT_EQ((q12 + q34) * (q12 + q34), 4 * q13 * q24);
  }
}

TEST(TypeIR, SampledConePointsSatisfyThePfaffians) {
  for (Tag t : {Tag::general, Tag::special}) {
    const auto& c = type_ir::data(t);
    Sampler rng(17);
    for (int k = 0; k < 10; ++k) {
      auto pt = type_ir::sample_bar_point(c, rng);
      for (const auto& g : c.gbar_gens) EXPECT_EQ(g.evaluate(pt), 0);
    }
  }
}

TEST(TypeIR, BuildAndVeronese) {
  for (const char* t : {"general", "special"}) {
    expect_pass(std::string("typeIR.") + t + ".build");
    expect_pass(std::string("typeIR.") + t + ".veronese");
  }
}

TEST(TypeIR, DoubleCoverIdentity) {
  for (Tag t : {Tag::general, Tag::special}) {
    auto r = testing_support::run_check("typeIR." + type_ir::to_string(t) + ".double_cover");
    EXPECT_EQ(r.status, Status::pass) << testing_support::describe(r);
    // Pointwise: 4 * cover - k * B_G = s^2 with k = 1 (general) or 4 (special).
    const auto& c = type_ir::data(t);
    Rational k = t == Tag::general ? 1 : 4;
    std::size_t s_index = c.cover->index("s");
    Sampler rng(8);
    for (int n = 0; n < 10; ++n) {
      auto pt = rng.rationals(c.cover->arity());
      EXPECT_EQ(4 * c.cover_eq.evaluate(pt) - k * c.branch.evaluate(pt), pt[s_index] * pt[s_index]);
    }
  }
  expect_pass("typeIR.general.branch");
  expect_pass("typeIR.special.branch");
}

TEST(TypeIR, UniversalEquationsAndPsi) {
  for (const char* t : {"general", "special"})
    for (const char* leaf : {"univ", "univ_consistency", "gtilde_weights", "psi", "section"}) {
      auto id = std::string("typeIR.") + t + "." + leaf;
      auto r = testing_support::run_check(id);
      EXPECT_EQ(r.status, Status::pass) << testing_support::describe(r);
      if (std::string(leaf) == "univ") EXPECT_EQ(r.certificates.size(), 5u) << id;
    }
}

TEST(TypeIR, FibersAndOrbits) {
  for (const char* t : {"general", "special"}) {
    expect_pass(std::string("typeIR.") + t + ".fibers");
    expect_pass(std::string("typeIR.") + t + ".orbits");
  }
}

TEST(TypeIR, OrbitProfilesRecomputed) {
  for (Tag t : {Tag::general, Tag::special}) {
    const auto& c = type_ir::data(t);
    for (const auto& o : c.orbits)
      EXPECT_EQ(line_quadric_profile(o.r, c.quadric, c.hyperplane), o.expected) << o.name;
  }
}

TEST(TypeIR, LFormsHook) {
  expect_pass("typeIR.general.lforms");
  CheckContext ctx;
  ctx.lforms_path = example_lforms();
  auto forms = type_ir::read_lforms(*ctx.lforms_path);
  EXPECT_EQ(forms.coeffs.size(), 6u);
  expect_pass("typeIR.general.lforms", ctx);
  expect_pass("typeIR.special.lforms", ctx);
}

TEST(TypeIR, LFormsRejectsBadInput) {
  EXPECT_THROW(type_ir::read_lforms("/nonexistent/forms.json"), std::exception);
  auto path = std::filesystem::temp_directory_path() / "qfano_bad_lforms.json";
  {
    std::ofstream out(path);
    out << R"({"forms": [{"r12": "1"}]})";
  }
  EXPECT_THROW(type_ir::read_lforms(path.string()), std::exception);
  CheckContext ctx;
  ctx.lforms_path = path.string();
  auto r = testing_support::run_check("typeIR.general.lforms", ctx);
  EXPECT_EQ(r.status, Status::fail);
  // Dependent forms: the same form six times.
  {
    std::ofstream out(path);
    out << R"({"forms": [)";
    for (int i = 0; i < 6; ++i) out << (i ? "," : "") << R"({"r12": "1", "r34": "1"})";
    out << "]}";
  }
  r = testing_support::run_check("typeIR.general.lforms", ctx);
  EXPECT_EQ(r.status, Status::fail) << testing_support::describe(r);
  std::filesystem::remove(path);
}
