#include <stdexcept>

#include "qfano/intersection.hpp"
#include "qfano/matrix.hpp"

namespace qfano::intersection {

namespace {

Rational& slot(CubicForm& f, Product p) {
  switch (p) {
    case Product::aaa: return f.aaa;
    case Product::aae: return f.aae;
    case Product::aee: return f.aee;
    case Product::eee: return f.eee;
  }
  throw std::logic_error("bad product");
}

}  // namespace

Rational triple(const CubicForm& f, const Divisor& x, const Divisor& y, const Divisor& z) {
  // Expand each factor in (A, E) and count the E's of each term.
  const Rational* prod[4] = {&f.aaa, &f.aae, &f.aee, &f.eee};
  const Rational xs[2] = {x.a, x.e}, ys[2] = {y.a, y.e}, zs[2] = {z.a, z.e};
  Rational out = 0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) out += xs[i] * ys[j] * zs[k] * *prod[i + j + k];
  return out;
}

Rational solve_unknown_product(CubicForm f, Product unknown, const Divisor& d1, const Divisor& d2, const Divisor& d3,
                               const Rational& value) {
  slot(f, unknown) = 0;
  Rational base = triple(f, d1, d2, d3);
  slot(f, unknown) = 1;
  Rational coeff = triple(f, d1, d2, d3) - base;
  if (coeff == 0) throw std::domain_error("constraint does not involve the unknown product");
  return (value - base) / coeff;
}

LESolution derive_from_LE_system(const Rational& lambda, const Rational& k3, const Rational& el2, const Rational& e2l,
                                 const Rational& ke2) {
  if (lambda == 0) throw std::domain_error("lambda must be nonzero");
  // With L~ = (-K + E~)/lambda in the unknowns ((-K)^2E~, (-K)E~^2, E~^3):
  RatMatrix m{{1, 2, 1}, {0, 1, 1}, {1, -2, 1}};
  std::vector<Rational> rhs{lambda * lambda * el2, lambda * e2l, ke2};
  auto sol = rat_solve(m, rhs);
  if (!sol) throw std::domain_error("singular system");
  LESolution s;
  s.k2e = (*sol)[0];
  s.ke2 = (*sol)[1];
  s.e3 = (*sol)[2];
  s.k2l = (k3 + s.k2e) / lambda;
  s.rhs = {rhs[0], rhs[1], rhs[2]};
  return s;
}

bool diophantine_no_solution(std::int64_t a, std::int64_t b) {
  if (a <= 0) throw std::invalid_argument("diophantine_no_solution: a must be positive");
  if (b <= 0) return true;
  return b % a != 0;
}

Rational genus_from(const Rational& ke_sq, const Rational& m, const Rational& m_prime) {
  return 1 - (ke_sq + 2 * m + 18 * m_prime) / 8;
}

Contradiction contradiction(const Instance& inst, const Rational& k3, const Rational& k2l) {
  Contradiction c;
  c.c = k3 / k2l;
  c.push = inst.lambda - c.c;
  Rational ratio = 2 * c.push / c.c;  // m * k
  ratio.canonicalize();
  c.a = ratio.get_den().get_si();
  c.b = ratio.get_num().get_si();
  return c;
}

const Instance& type_r_instance() {
  static const Instance inst = [] {
    Instance i;
    i.name = "Type R";
    i.form = {rat(5, 2), 1, -2, 0};
    i.l_cube = 1;
    i.e_tilde = {7, -4};
    i.lambda = 4;
    i.m = 0;
    i.m_prime = 5;
    i.printed_a = 5;
    i.printed_b = 54;
    i.printed_rhs = {0, -48, -138};
    i.printed = {{"E^3", -5},          {"deg C", 12},      {"(-K_E~)^2", -138},  {"p_g(C)", 7},
                 {"(-K)^2E~", rat(27, 2)}, {"(-K)^2L~", 4}, {"G = p(-K - c L~): c", rat(5, 8)},
                 {"pushdown m/p", rat(27, 8)}, {"(-K)^3 closure", rat(5, 2)}};
    return i;
  }();
  return inst;
}

const Instance& type_ir_instance() {
  static const Instance inst = [] {
    Instance i;
    i.name = "Type IR";
    i.form = {rat(5, 2), 1, -2, 0};
    i.l_cube = 2;
    i.e_tilde = {3, -2};
    i.lambda = 2;
    i.m = 5;
    i.m_prime = 0;
    i.printed_a = 5;
    i.printed_b = 54;
    i.printed_rhs = {0, -8, -10};
    i.printed = {{"E^3", -6},          {"deg C", 4},       {"(-K_E~)^2", -10},   {"p_g(C)", 1},
                 {"(-K)^2E~", rat(11, 2)}, {"(-K)^2L~", 8}, {"G = p(-K - c L~): c", rat(5, 16)},
                 {"pushdown m/p", rat(27, 16)}, {"(-K)^3 closure", rat(5, 2)}};
    return i;
  }();
  return inst;
}

std::vector<Row> numerics(const Instance& inst) {
  auto printed = [&](const std::string& claim) -> std::optional<Rational> {
    for (const auto& [k, v] : inst.printed)
      if (k == claim) return v;
    return std::nullopt;
  };
  std::vector<Row> rows;
  auto add = [&](const std::string& claim, const std::string& premises, const Rational& v) {
    rows.push_back({claim, premises, v, printed(claim)});
  };

  const Divisor l = Rational(2) * kA - kE;
  CubicForm f = inst.form;
  f.eee = solve_unknown_product(f, Product::eee, l, l, l, inst.l_cube);
  add("E^3", "(-K)^3, (-K)^2E, (-K)E^2 and L~^3 = " + inst.l_cube.get_str(), f.eee);

  const Divisor& et = inst.e_tilde;
  Rational deg_c = -triple(f, et, et, l);
  add("deg C", "-E~^2 L~", deg_c);
  Divisor ke = kA - et;  // -K_X - E~, so (-K_E~)^2 = (-K - E~)^2 E~
  Rational ke_sq = triple(f, ke, ke, et);
  add("(-K_E~)^2", "(-K - E~)^2 E~", ke_sq);
  add("p_g(C)", "8(1-p_g) - 2m - 18m' with m = " + inst.m.get_str() + ", m' = " + inst.m_prime.get_str(),
      genus_from(ke_sq, inst.m, inst.m_prime));

  Rational el2 = triple(f, et, l, l);
  auto sol = derive_from_LE_system(inst.lambda, f.aaa, el2, -deg_c, ke_sq);
  add("(-K)^2E~", "linear system in (-K)^2E~, (-K)E~^2, E~^3", sol.k2e);
  add("(-K)^2L~", "((-K)^3 + (-K)^2E~) / " + inst.lambda.get_str(), sol.k2l);
  auto con = contradiction(inst, f.aaa, sol.k2l);
  add("G = p(-K - c L~): c", "(-K)^2 G = 0", con.c);
  add("pushdown m/p", "lambda - c", con.push);

  // Closure: (-K)^3 again from the (L~, E~) products.
  Rational e3 = sol.e3;
  Rational lam = inst.lambda;
  Rational closure = lam * lam * lam * inst.l_cube - 3 * lam * lam * el2 + 3 * lam * (-deg_c) - e3;
  add("(-K)^3 closure", "(lambda L~ - E~)^3 from derived products", closure);
  return rows;
}

bool whitelisted(const std::string& check_id) { return check_id == "intersection.system.typeIR"; }

}  // namespace qfano::intersection
