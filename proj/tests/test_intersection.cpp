#include <set>

#include <gtest/gtest.h>

#include "qfano/intersection.hpp"
#include "support.hpp"

using namespace qfano;
using namespace qfano::intersection;

namespace {

// Oracle: cubes by the binomial formula, mixed products by polarization.
struct Oracle {
  Rational aaa, aae, aee, eee;
  Rational cube(const Rational& a, const Rational& e) const {
    return a * a * a * aaa + 3 * a * a * e * aae + 3 * a * e * e * aee + e * e * e * eee;
  }
  Rational triple(const Divisor& x, const Divisor& y, const Divisor& z) const {
    auto c = [&](const Divisor& d) { return cube(d.a, d.e); };
    return (c(x + y + z) - c(x + y) - c(x + z) - c(y + z) + c(x) + c(y) + c(z)) / 6;
  }
};

// E^3 from L~^3 = (2A - E)^3 = 8 A^3 - 12 A^2E + 6 AE^2 - E^3.
Rational e_cube(const Rational& l3) { return 8 * rat(5, 2) - 12 * 1 + 6 * (-2) - l3; }

const Rational& value(const std::vector<Row>& rows, const std::string& claim) {
  for (const auto& r : rows)
    if (r.claim == claim) return r.derived;
  throw std::invalid_argument(claim);
}

const Divisor L{2, -1};

}  // namespace

TEST(Form, TripleAgreesWithPolarization) {
  CubicForm f{rat(5, 2), 1, -2, -5};
  Oracle o{f.aaa, f.aae, f.aee, f.eee};
  Sampler rng(2);
  for (int t = 0; t < 30; ++t) {
    Divisor x{rng.rational(), rng.rational()}, y{rng.rational(), rng.rational()}, z{rng.rational(), rng.rational()};
    EXPECT_EQ(triple(f, x, y, z), o.triple(x, y, z));
  }
  EXPECT_THROW(solve_unknown_product(f, Product::eee, kA, kA, kA, 1), std::domain_error);
}

TEST(Form, UnknownProductIsRecovered) {
  for (Rational l3 : {Rational(1), Rational(2)}) {
    CubicForm f{rat(5, 2), 1, -2, 0};
    EXPECT_EQ(solve_unknown_product(f, Product::eee, L, L, L, l3), e_cube(l3));
  }
}

TEST(Numerics, TypeRMatchesPrintedValues) {
  const auto& inst = type_r_instance();
  auto rows = numerics(inst);
  Oracle o{rat(5, 2), 1, -2, e_cube(1)};
  const Divisor& et = inst.e_tilde;
  Divisor ke = kA - et;
  EXPECT_EQ(value(rows, "E^3"), -5);
  EXPECT_EQ(value(rows, "deg C"), -o.triple(et, et, L));
  EXPECT_EQ(value(rows, "deg C"), 12);
  EXPECT_EQ(value(rows, "(-K_E~)^2"), o.triple(ke, ke, et));
  EXPECT_EQ(value(rows, "(-K_E~)^2"), -138);
  EXPECT_EQ(value(rows, "(-K)^2E~"), o.triple(kA, kA, et));
  EXPECT_EQ(value(rows, "(-K)^2E~"), rat(27, 2));
  EXPECT_EQ(value(rows, "p_g(C)"), 7);
  EXPECT_EQ(value(rows, "(-K)^2L~"), o.triple(kA, kA, L));
  for (const auto& r : rows) EXPECT_TRUE(r.agrees()) << r.claim;
}

TEST(Numerics, TypeIRMatchesPrintedValuesExceptOneLine) {
  const auto& inst = type_ir_instance();
  auto rows = numerics(inst);
  Oracle o{rat(5, 2), 1, -2, e_cube(2)};
  const Divisor& et = inst.e_tilde;
  EXPECT_EQ(value(rows, "E^3"), -6);
  EXPECT_EQ(value(rows, "deg C"), 4);
  EXPECT_EQ(value(rows, "(-K_E~)^2"), -10);
  EXPECT_EQ(value(rows, "(-K)^2E~"), rat(11, 2));
  EXPECT_EQ(value(rows, "(-K)^2E~"), o.triple(kA, kA, et));
  EXPECT_EQ(value(rows, "p_g(C)"), 1);
  // The printed "= 8" disagrees with the lattice value A^2 (2A - E) = 5 - 1 = 4.
  EXPECT_EQ(o.triple(kA, kA, L), 4);
  EXPECT_EQ(value(rows, "(-K)^2L~"), 4);
  std::set<std::string> disagree;
  for (const auto& r : rows)
    if (!r.agrees()) disagree.insert(r.claim);
  EXPECT_EQ(disagree, (std::set<std::string>{"(-K)^2L~", "G = p(-K - c L~): c", "pushdown m/p"}));
}

TEST(Numerics, ClosureRecoversTheAnticanonicalCube) {
  for (const Instance* inst : {&type_r_instance(), &type_ir_instance()})
    EXPECT_EQ(value(numerics(*inst), "(-K)^3 closure"), rat(5, 2)) << inst->name;
}

TEST(Contradiction, PrintedAndDerivedChains) {
  auto r = contradiction(type_r_instance(), rat(5, 2), 4);
  EXPECT_EQ(r.c, rat(5, 8));
  EXPECT_EQ(r.a, 5);
  EXPECT_EQ(r.b, 54);
  auto printed = contradiction(type_ir_instance(), rat(5, 2), 8);
  EXPECT_EQ(printed.a, 5);
  EXPECT_EQ(printed.b, 54);
  auto derived = contradiction(type_ir_instance(), rat(5, 2), 4);
  EXPECT_EQ(derived.a, 5);
  EXPECT_EQ(derived.b, 22);
}

TEST(Diophantine, AgreesWithSearch) {
  for (std::int64_t a = 1; a <= 7; ++a)
    for (std::int64_t b = -5; b <= 80; ++b) {
      bool found = false;
      for (std::int64_t m = 1; m <= 80; ++m)
        for (std::int64_t k = 1; k <= 80; ++k) found = found || a * m * k == b;
      EXPECT_EQ(diophantine_no_solution(a, b), !found) << a << "mk = " << b;
    }
  EXPECT_TRUE(diophantine_no_solution(5, 54));
  EXPECT_TRUE(diophantine_no_solution(5, 4));
  EXPECT_THROW(diophantine_no_solution(0, 3), std::invalid_argument);
}

TEST(Checks, StatusesAndWhitelist) {
  for (const char* id : {"intersection.form", "intersection.typeR", "intersection.typeIR", "intersection.system.typeR",
                         "intersection.diophantine", "intersection.closure"}) {
    auto r = testing_support::run_check(id);
    EXPECT_EQ(r.status, Status::pass) << testing_support::describe(r);
  }
  auto ir = testing_support::run_check("intersection.system.typeIR");
  EXPECT_EQ(ir.status, Status::discrepancy);
  EXPECT_NE(ir.witness.find("(-K)^2L~ = 4 (printed 8)"), std::string::npos) << ir.witness;
  EXPECT_NE(ir.notes.find("5mk = 22"), std::string::npos);
  EXPECT_TRUE(whitelisted("intersection.system.typeIR"));
  EXPECT_FALSE(whitelisted("intersection.system.typeR"));
}
