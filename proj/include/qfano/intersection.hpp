#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qfano/check.hpp"
#include "qfano/rational.hpp"

namespace qfano::intersection {

// Symmetric trilinear form on the lattice spanned by A = -K and E.
struct CubicForm {
  Rational aaa, aae, aee, eee;  // A^3, A^2E, AE^2, E^3
};

enum class Product { aaa, aae, aee, eee };

// a*A + e*E
struct Divisor {
  Rational a, e;
};

inline Divisor operator-(const Divisor& d, const Divisor& o) { return {d.a - o.a, d.e - o.e}; }
inline Divisor operator+(const Divisor& d, const Divisor& o) { return {d.a + o.a, d.e + o.e}; }
inline Divisor operator*(const Rational& c, const Divisor& d) { return {c * d.a, c * d.e}; }

inline const Divisor kA{1, 0};
inline const Divisor kE{0, 1};

Rational triple(const CubicForm& f, const Divisor& d1, const Divisor& d2, const Divisor& d3);
inline Rational cube(const CubicForm& f, const Divisor& d) { return triple(f, d, d, d); }

// Value of one stored product making triple(d1, d2, d3) equal `value`; the
// other products are read from f. Throws std::domain_error when the constraint
// does not involve the unknown.
Rational solve_unknown_product(CubicForm f, Product unknown, const Divisor& d1, const Divisor& d2, const Divisor& d3,
                               const Rational& value);

// The (-K, E~, L~) system with -K = lambda L~ - E~:
//   E~L~^2 = el2, E~^2 L~ = e2l, (-K - E~)^2 E~ = ke2,
// solved for (-K)^2E~, (-K)E~^2, E~^3, then (-K)^2 L~ from (-K)^3.
struct LESolution {
  Rational k2e, ke2, e3, k2l;
  std::array<Rational, 3> rhs;  // right-hand sides of the three linear equations
};
LESolution derive_from_LE_system(const Rational& lambda, const Rational& k3, const Rational& el2, const Rational& e2l,
                                 const Rational& ke2);

// True iff a*m*k = b has no solution in positive integers m, k. Requires a > 0.
bool diophantine_no_solution(std::int64_t a, std::int64_t b);

// p_g from (-K_E)^2 = 8(1 - p_g) - 2m - 18m'.
Rational genus_from(const Rational& ke_sq, const Rational& m, const Rational& m_prime);

struct Row {
  std::string claim;
  std::string premises;
  Rational derived;
  std::optional<Rational> printed;
  bool agrees() const { return !printed || *printed == derived; }
};

struct Instance {
  std::string name;
  CubicForm form;         // E^3 filled in from l_cube
  Rational l_cube;        // L~^3 with L~ = 2A - E
  Divisor e_tilde;        // exceptional divisor E~
  Rational lambda;        // -K = lambda L~ - E~
  Rational m, m_prime;    // genus formula inputs
  // Coefficients of the contradiction a*m*k = b as printed.
  std::int64_t printed_a, printed_b;
  std::array<Rational, 3> printed_rhs;  // right-hand sides of the printed linear system
  // Printed values, keyed by claim name.
  std::vector<std::pair<std::string, Rational>> printed;
};

const Instance& type_r_instance();
const Instance& type_ir_instance();

// Every derived row of one instance, compared with its printed value.
std::vector<Row> numerics(const Instance& inst);

// The contradiction a*m*k = b under given (-K)^2 L~: G = p(-K - c L~) with
// c = (5/2)/((-K)^2 L~) and m = p * (lambda - c) after pushing down; G.gamma = -2.
struct Contradiction {
  Rational c, push;  // c and lambda - c
  std::int64_t a, b;
};
Contradiction contradiction(const Instance& inst, const Rational& k3, const Rational& k2l);

// Rows whose disagreement is a known misprint reported as a discrepancy.
bool whitelisted(const std::string& check_id);

std::vector<Check> checks();

}  // namespace qfano::intersection
