#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qfano/check.hpp"
#include "qfano/pfaffian.hpp"
#include "qfano/poly.hpp"

namespace qfano::type_ir {

enum class Tag { general, special };
std::string to_string(Tag t);

struct OrbitRep {
  std::string name;
  SkewRat5 r;
  LineProfile expected;
};

// One irreducible piece of a fiber. The parametrization sends the tilde ring
// into a parameter ring and already fixes r~ and s~ to the fiber's base point.
struct FiberComponent {
  std::string name;
  std::vector<Poly> equations;  // in Case::tilde
  PolyMap parametrization;
};

struct Fiber {
  std::string name;
  SkewRat5 base;                // r~ of the base point, s~ = 0
  std::vector<Poly> printed;    // generators as printed, in Case::tilde (may be empty)
  std::vector<FiberComponent> components;
};

struct Case {
  Tag tag;
  RingPtr bar;    // xb1..xb4 of weight 1, rb12..rb45 of weight 2
  RingPtr cover;  // r12..r45 of weight 1, s of weight 2
  RingPtr tilde;  // rt12..rt45, st, xt1..xt4, w with the two scroll weight rows
  RingPtr univ;   // X1..X4, M12, M13, M14, M23, M24, M34
  RingPtr pring;  // p1..p5
  RingPtr param;  // a1..a4, w; parameters of fiber components

  std::array<Poly, 10> q;  // q_ij(xb) in bar
  Poly s_bar;              // s(xb, rb)
  std::array<Poly, 5> gbar_gens;  // Pfaffians of A(rb + q(xb))
  std::array<Poly, 5> univ3;      // in bar, with m_ij(rb, s(xb, rb))
  std::array<Poly, 5> univ_eqs;   // in univ
  std::optional<PolyMap> univ_to_bar;

  std::array<Poly, 6> m;  // m12, m13, m14, m23, m24, m34 in cover
  Poly cover_eq;          // m12 m34 - m13 m24 + m14 m23
  Poly branch;            // B_G in cover
  Poly quadric;           // Q (general) or Q' (special) in pring
  std::optional<std::size_t> hyperplane;  // p5 for the special case

  std::vector<Poly> univ1;  // 5 generators in tilde
  std::vector<Poly> rq;     // 5 generators in tilde
  std::optional<PolyMap> psi;  // bar -> tilde

  std::vector<OrbitRep> orbits;
  std::vector<Fiber> fibers;

  const Poly& qij(int i, int j) const;
};

const Case& data(Tag tag);

// Point of Case::bar on the cone: random xb, random rank-2 matrix, rb = M - q(xb).
std::vector<Rational> sample_bar_point(const Case& c, Sampler& rng);

// Six linear forms in the r_ij, read from a JSON file of the form
// {"forms": [{"r12": "1", "r35": "-2/3"}, ...]}.
struct LForms {
  std::array<std::array<Rational, 10>, 6> coeffs;  // slot order 12, 13, ..., 45
};
LForms read_lforms(const std::string& path);

// Runs the conditions on the 3-space cut by the forms for one case.
CheckResult check_lforms(const Case& c, const LForms& forms, const std::string& id);

std::vector<Check> checks();

}  // namespace qfano::type_ir
