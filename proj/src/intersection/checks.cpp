#include <algorithm>
#include <set>
#include <stdexcept>

#include "qfano/intersection.hpp"

namespace qfano::intersection {

namespace {

const std::set<std::string> kBasic = {"E^3", "deg C", "(-K_E~)^2", "p_g(C)"};
const std::set<std::string> kSystem = {"(-K)^2E~", "(-K)^2L~", "G = p(-K - c L~): c", "pushdown m/p"};

std::string row_text(const Row& r) {
  std::string s = r.claim + " = " + r.derived.get_str();
  if (r.printed) s += " (printed " + r.printed->get_str() + ")";
  return s;
}

Rational printed_value(const Instance& inst, const std::string& claim) {
  for (const auto& [k, v] : inst.printed)
    if (k == claim) return v;
  throw std::logic_error("no printed value for " + claim);
}

CubicForm solved_form(const Instance& inst) {
  CubicForm f = inst.form;
  const Divisor l = Rational(2) * kA - kE;
  f.eee = solve_unknown_product(f, Product::eee, l, l, l, inst.l_cube);
  return f;
}

CheckResult check_form(const CheckContext& ctx) {
  Recorder rec("intersection.form");
  CubicForm f{rat(5, 2), 1, -2, -5};
  const Divisor l = Rational(2) * kA - kE;
  rec.expect(cube(f, kA) == rat(5, 2), "A^3 = 5/2", cube(f, kA).get_str());
  rec.expect(cube(f, l) == 1, "(2A-E)^3 = 1", cube(f, l).get_str());
  rec.expect(triple(f, kA, kA, kE) == 1 && triple(f, kE, kA, kE) == -2 && cube(f, kE) == -5,
             "basis products are read back");
  auto rng = ctx.sampler(rec.id());
  for (int t = 0; t < ctx.trials; ++t) {
    Divisor x{rng.rational(), rng.rational()}, y{rng.rational(), rng.rational()}, z{rng.rational(), rng.rational()};
    Rational c = rng.rational();
    Rational v = triple(f, x, y, z);
    bool sym = v == triple(f, y, x, z) && v == triple(f, z, y, x) && v == triple(f, x, z, y) &&
               v == triple(f, y, z, x) && v == triple(f, z, x, y);
    if (!rec.expect(sym, "triple is symmetric")) break;
    bool lin = triple(f, x + c * y, y, z) == v + c * triple(f, y, y, z);
    if (!rec.expect(lin, "triple is linear in each argument")) break;
  }
  bool threw = false;
  try {
    solve_unknown_product(f, Product::eee, kA, kA, kA, 1);
  } catch (const std::domain_error&) {
    threw = true;
  }
  rec.expect(threw, "a constraint without the unknown is rejected");
  return rec.result();
}

CheckResult check_basic(const Instance& inst, const std::string& id) {
  Recorder rec(id);
  const Divisor l = Rational(2) * kA - kE;
  Divisor expected_e = inst.lambda * l - kA;
  rec.expect(expected_e.a == inst.e_tilde.a && expected_e.e == inst.e_tilde.e, "E~ = lambda L~ + K");
  for (const auto& r : numerics(inst)) {
    if (!kBasic.count(r.claim)) continue;
    rec.expect(r.agrees(), r.claim + " matches the printed value", row_text(r));
    rec.note(row_text(r));
  }
  return rec.result();
}

CheckResult check_system(const Instance& inst, const std::string& id) {
  Recorder rec(id);
  CubicForm f = solved_form(inst);
  const Divisor l = Rational(2) * kA - kE;
  Rational el2 = triple(f, inst.e_tilde, l, l), e2l = triple(f, inst.e_tilde, inst.e_tilde, l);
  Divisor ke = kA - inst.e_tilde;
  auto sol = derive_from_LE_system(inst.lambda, f.aaa, el2, e2l, triple(f, ke, ke, inst.e_tilde));
  for (std::size_t k = 0; k < 3; ++k)
    rec.expect(sol.rhs[k] == inst.printed_rhs[k], "right-hand side " + std::to_string(k + 1) + " of the system",
               sol.rhs[k].get_str() + " vs printed " + inst.printed_rhs[k].get_str());
  // Second derivation straight from the lattice.
  Rational k2e = triple(f, kA, kA, inst.e_tilde), k2l = triple(f, kA, kA, l);
  rec.expect(k2e == sol.k2e, "(-K)^2E~ from the system equals A^2 E~", k2e.get_str() + " vs " + sol.k2e.get_str());
  rec.expect(k2l == sol.k2l, "(-K)^2L~ from the system equals A^2 L~", k2l.get_str() + " vs " + sol.k2l.get_str());
  rec.expect(triple(f, kA, inst.e_tilde, inst.e_tilde) == sol.ke2 && cube(f, inst.e_tilde) == sol.e3,
             "(-K)E~^2 and E~^3 from the system match the lattice");
  for (const auto& r : numerics(inst)) {
    if (!kSystem.count(r.claim)) continue;
    if (r.agrees())
      rec.note(row_text(r));
    else
      rec.discrepancy(row_text(r) + "; the lattice gives A^2 L~ = " + k2l.get_str());
  }
  // The contradiction must survive under both the printed and the derived value.
  for (const auto& [label, value] : {std::pair<std::string, Rational>{"derived", sol.k2l},
                                     {"printed", printed_value(inst, "(-K)^2L~")}}) {
    auto con = contradiction(inst, f.aaa, value);
    std::string eq = std::to_string(con.a) + "mk = " + std::to_string(con.b);
    rec.note("with the " + label + " (-K)^2L~ = " + value.get_str() + ": " + eq);
    rec.expect(diophantine_no_solution(con.a, con.b), eq + " has no positive solutions (" + label + ")");
    if (label == "printed")
      rec.expect(con.a == inst.printed_a && con.b == inst.printed_b, "printed chain gives the printed equation", eq);
  }
  return rec.result();
}

CheckResult check_diophantine(const CheckContext&) {
  Recorder rec("intersection.diophantine");
  rec.expect(diophantine_no_solution(5, 54), "5mk = 54 has no positive solutions");
  rec.expect(diophantine_no_solution(5, 4), "5pk = 4 has no positive solutions");
  rec.expect(!diophantine_no_solution(3, 6), "3mk = 6 has a solution");
  rec.expect(diophantine_no_solution(5, 22), "5mk = 22 has no positive solutions");
  // Brute force over the small range as an independent decision.
  for (std::int64_t a = 1; a <= 6; ++a)
    for (std::int64_t b = -3; b <= 60; ++b) {
      bool found = false;
      for (std::int64_t m = 1; m <= 60 && !found; ++m)
        for (std::int64_t k = 1; k <= 60 && !found; ++k) found = a * m * k == b;
      if (!rec.expect(diophantine_no_solution(a, b) == !found, "divisibility agrees with search",
                      std::to_string(a) + "mk = " + std::to_string(b)))
        return rec.result();
    }
  return rec.result();
}

CheckResult check_closure(const CheckContext&) {
  Recorder rec("intersection.closure");
  for (const Instance* inst : {&type_r_instance(), &type_ir_instance()}) {
    for (const auto& r : numerics(*inst))
      if (r.claim == "(-K)^3 closure") {
        rec.expect(r.derived == rat(5, 2), inst->name + ": (-K)^3 recomputed from derived products", row_text(r));
        rec.note(inst->name + ": " + row_text(r));
      }
  }
  return rec.result();
}

}  // namespace

std::vector<Check> checks() {
  return {
      {"intersection.form", "trilinear form on <-K, E>", check_form},
      {"intersection.typeR", "Type R intersection numbers",
       [](const CheckContext&) { return check_basic(type_r_instance(), "intersection.typeR"); }},
      {"intersection.typeIR", "Type IR intersection numbers",
       [](const CheckContext&) { return check_basic(type_ir_instance(), "intersection.typeIR"); }},
      {"intersection.system.typeR", "Type R linear system and contradiction",
       [](const CheckContext&) { return check_system(type_r_instance(), "intersection.system.typeR"); }},
      {"intersection.system.typeIR", "Type IR linear system and contradiction",
       [](const CheckContext&) { return check_system(type_ir_instance(), "intersection.system.typeIR"); }},
      {"intersection.diophantine", "no positive solutions of the contradictions", check_diophantine},
      {"intersection.closure", "(-K)^3 recomputed from derived products", check_closure},
  };
}

}  // namespace qfano::intersection
