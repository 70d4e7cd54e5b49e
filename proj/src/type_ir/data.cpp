#include <map>
#include <stdexcept>

#include "qfano/parse.hpp"
#include "qfano/type_ir.hpp"

namespace qfano::type_ir {

namespace {

using Names = std::map<std::string, Poly>;

struct QText {
  const char* name;
  const char* general;
};

// q_ij(x); the special case keeps the first four columns and zeroes q_i5.
const QText kQ[10] = {
    {"q12", "-x1*x4 - x2*x3"}, {"q13", "-x3^2"},   {"q14", "x4^2"},  {"q15", "x3*x4"},
    {"q23", "x1^2"},           {"q24", "-x2^2"},   {"q25", "x1*x2"}, {"q34", "x1*x4 - x2*x3"},
    {"q35", "x1*x3"},          {"q45", "-x2*x4"},
};

const char* const kSGeneral =
    "(x1*x4 + x2*x3)*r12 - x2^2*r13 + x1^2*r14 + 2*x1*x2*r15 + x4^2*r23 - x3^2*r24 + 2*x3*x4*r25"
    " + (x2*x3 - x1*x4)*r34 - 2*x2*x4*r35 + 2*x1*x3*r45";
const char* const kSSpecial = "2*(x1*x2*r15 + x3*x4*r25 - x2*x4*r35 + x1*x3*r45)";

Poly parse_in(const RingPtr& ring, const Names& names, const std::string& text) {
  return parse_poly(text, ring, [&names](std::string_view n) -> std::optional<Poly> {
    auto it = names.find(std::string(n));
    if (it == names.end()) return std::nullopt;
    return it->second;
  });
}

// Aliases x1..x4 and r12..r45 for the coordinates of a ring.
Names aliases(const RingPtr& ring, const std::string& xs, const std::string& rs) {
  Names n;
  if (!xs.empty())
    for (int i = 1; i <= 4; ++i) n.emplace("x" + std::to_string(i), Poly::variable(ring, xs + std::to_string(i)));
  if (!rs.empty())
    for (int i = 1; i <= 5; ++i)
      for (int j = i + 1; j <= 5; ++j) {
        std::string ij = std::to_string(i) + std::to_string(j);
        n.emplace("r" + ij, Poly::variable(ring, rs + ij));
      }
  return n;
}

std::array<Poly, 10> q_in(Tag tag, const RingPtr& ring, const std::string& xs) {
  Names n = aliases(ring, xs, "");
  std::array<Poly, 10> q;
  for (std::size_t k = 0; k < 10; ++k) {
    bool col5 = std::string(kQ[k].name).back() == '5';
    q[k] = (tag == Tag::special && col5) ? Poly(ring) : parse_in(ring, n, kQ[k].general);
  }
  return q;
}

// m12, m13, m14, m23, m24, m34 from a skew matrix and s. In the special case
// m14 is identified with m23 = s/2.
std::array<Poly, 6> m_of(Tag tag, const SkewPolyMatrix5& r, const Poly& s) {
  auto pf = plucker(r);  // 1234, 1235, 1245, 1345, 2345
  const Rational half(1, 2);
  std::array<Poly, 6> m;
  m[0] = pf[4];
  m[1] = -pf[1];
  m[4] = pf[2];
  m[5] = pf[3];
  if (tag == Tag::general) {
    m[2] = -half * (pf[0] - s);
    m[3] = half * (pf[0] + s);
  } else {
    m[3] = half * s;
    m[2] = m[3];
  }
  return m;
}

// The four incidence equations of a point x on the line m, then the Plucker quadric of m.
std::array<Poly, 5> incidence(const std::array<Poly, 4>& x, const std::array<Poly, 6>& m) {
  const auto &m12 = m[0], &m13 = m[1], &m14 = m[2], &m23 = m[3], &m24 = m[4], &m34 = m[5];
  return {
      x[0] * m23 - x[1] * m13 + x[2] * m12,
      x[0] * m24 - x[1] * m14 + x[3] * m12,
      x[0] * m34 - x[2] * m14 + x[3] * m13,
      x[1] * m34 - x[2] * m24 + x[3] * m23,
      m12 * m34 - m13 * m24 + m14 * m23,
  };
}

std::array<Poly, 4> vars4(const RingPtr& ring, const std::string& stem) {
  std::array<Poly, 4> x;
  for (int i = 0; i < 4; ++i) x[static_cast<std::size_t>(i)] = Poly::variable(ring, stem + std::to_string(i + 1));
  return x;
}

// The bilinear part of the Pfaffians: Pf(r + q) - Pf(r) - Pf(q).
std::array<Poly, 5> polarized(const SkewPolyMatrix5& r, const SkewPolyMatrix5& q) {
  auto a = plucker(r + q), b = plucker(r), c = plucker(q);
  std::array<Poly, 5> out;
  for (std::size_t k = 0; k < 5; ++k) out[k] = a[k] - b[k] - c[k];
  return out;
}

SkewRat5 skew_point(std::initializer_list<std::tuple<int, int, int>> entries) {
  SkewRat5 r;
  for (auto [i, j, v] : entries) r.upper(i, j) = v;
  return r;
}

struct CompText {
  const char* name;
  std::vector<const char*> equations;       // in x1..x4, w
  std::array<const char*, 4> x;              // images of x1..x4 in a1..a4
  const char* w;
};

struct FiberText {
  const char* name;
  SkewRat5 base;
  std::vector<const char*> printed;
  std::vector<CompText> comps;
};

std::vector<FiberText> fiber_texts(Tag tag) {
  if (tag == Tag::general)
    return {
        {"r12-point", skew_point({{1, 2, 1}}), {"q34", "q35", "q45"},
         {{"x1=x2=0", {"x1", "x2"}, {"0", "0", "a3", "a4"}, "w"},
          {"x3=x4=0", {"x3", "x4"}, {"a1", "a2", "0", "0"}, "w"}}},
        {"r45-point", skew_point({{4, 5, 1}}), {"q12", "q13", "q23"},
         {{"x1=x3=0", {"x1", "x3"}, {"0", "a2", "0", "a4"}, "w"}}},
        {"r23-point", skew_point({{2, 3, 1}}), {"q14", "q15", "q45"},
         {{"x4=0", {"x4"}, {"a1", "a2", "a3", "0"}, "w"}}},
    };
  return {
      {"(a) r15=-r25=1", skew_point({{1, 5, 1}, {2, 5, -1}}), {},
       {{"x1=x3,x2=x4", {"x1 - x3", "x2 - x4"}, {"a1", "a2", "a1", "a2"}, "w"},
        {"x1=-x3,x2=-x4", {"x1 + x3", "x2 + x4"}, {"a1", "a2", "-a1", "-a2"}, "w"}}},
      {"(b) r15-point", skew_point({{1, 5, 1}}), {}, {{"x1=x2=0", {"x1", "x2"}, {"0", "0", "a3", "a4"}, "w"}}},
      // The cone x2^2 + x4^2 = x1^2 + x3^2 through its two rulings.
      {"(c) r13=-r14=r23=-r24=1", skew_point({{1, 3, 1}, {1, 4, -1}, {2, 3, 1}, {2, 4, -1}}), {},
       {{"quadric cone",
         {"x2^2 + x4^2 - x1^2 - x3^2"},
         {"(a2*a4 - a1*a3)/2", "(a1*a3 + a2*a4)/2", "(a1*a4 + a2*a3)/2", "(a2*a3 - a1*a4)/2"},
         "w"}}},
      {"(d) r13=-r23=1", skew_point({{1, 3, 1}, {2, 3, -1}}), {},
       {{"x2=x4", {"x2 - x4"}, {"a1", "a2", "a3", "a2"}, "w"},
        {"x2=-x4", {"x2 + x4"}, {"a1", "a2", "a3", "-a2"}, "w"}}},
      {"(e) r13-point", skew_point({{1, 3, 1}}), {}, {{"x2=0", {"x2"}, {"a1", "0", "a3", "a4"}, "w"}}},
      {"(f) r12+r34 (outside G(2,V))", skew_point({{1, 2, 1}, {3, 4, 1}}), {},
       {{"w=2x2x3", {"w - 2*x2*x3"}, {"a1", "a2", "a3", "a4"}, "2*a2*a3"}}},
  };
}

std::vector<OrbitRep> orbit_reps(Tag tag) {
  if (tag == Tag::general)
    return {
        {"(a) r12-point", skew_point({{1, 2, 1}}), LineProfile::two_points},
        {"(b) r45-point", skew_point({{4, 5, 1}}), LineProfile::tangent},
        {"(c) r23-point", skew_point({{2, 3, 1}}), LineProfile::contained},
    };
  return {
      {"(a) r15=-r25=1", skew_point({{1, 5, 1}, {2, 5, -1}}), LineProfile::disjoint},
      {"(b) r15-point", skew_point({{1, 5, 1}}), LineProfile::one_point},
      {"(c) r13=-r14=r23=-r24=1", skew_point({{1, 3, 1}, {1, 4, -1}, {2, 3, 1}, {2, 4, -1}}),
       LineProfile::two_points},
      {"(d) r13=-r23=1", skew_point({{1, 3, 1}, {2, 3, -1}}), LineProfile::tangent},
      {"(e) r13-point", skew_point({{1, 3, 1}}), LineProfile::contained},
  };
}

std::vector<std::string> skew_names(const std::string& stem) {
  std::vector<std::string> out;
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j) out.push_back(stem + std::to_string(i) + std::to_string(j));
  return out;
}

template <class... V>
std::vector<std::string> concat(const V&... parts) {
  std::vector<std::string> out;
  (out.insert(out.end(), parts.begin(), parts.end()), ...);
  return out;
}

Case build(Tag tag) {
  Case c;
  c.tag = tag;

  c.bar = make_ring(concat(numbered("xb", 1, 4), skew_names("rb")), {1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2});
  c.cover = make_ring(concat(skew_names("r"), std::vector<std::string>{"s"}),
                      {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2});
  {
    std::vector<int> w1(10, 1), w2(10, 0);
    w1.insert(w1.end(), {2, 0, 0, 0, 0, -1});
    w2.insert(w2.end(), {0, 1, 1, 1, 1, 2});
    std::vector<int> primary(16);
    for (std::size_t i = 0; i < 16; ++i) primary[i] = w1[i] + w2[i];
    c.tilde = make_ring(concat(skew_names("rt"), std::vector<std::string>{"st"}, numbered("xt", 1, 4),
                               std::vector<std::string>{"w"}),
                        primary, {{"FIR-1", w1}, {"FIR-2", w2}});
  }
  c.univ = make_ring(concat(numbered("X", 1, 4), std::vector<std::string>{"M12", "M13", "M14", "M23", "M24", "M34"}),
                     {1, 1, 1, 1, 1, 1, 1, 1, 1, 1});
  c.pring = make_ring(numbered("p", 1, 5), {1, 1, 1, 1, 1});
  c.param = make_ring(concat(numbered("a", 1, 4), std::vector<std::string>{"w"}), {1, 1, 1, 1, 1});

  // Bar cone.
  c.q = q_in(tag, c.bar, "xb");
  Names bn = aliases(c.bar, "xb", "rb");
  c.s_bar = parse_in(c.bar, bn, tag == Tag::general ? kSGeneral : kSSpecial);
  auto rb = skew_variables(c.bar, "rb");
  auto gb = plucker(rb + SkewPolyMatrix5(c.q));
  std::copy(gb.begin(), gb.end(), c.gbar_gens.begin());
  auto xb = vars4(c.bar, "xb");
  c.univ3 = incidence(xb, m_of(tag, rb, c.s_bar));

  // Universal equations and their specialization.
  std::array<Poly, 6> M;
  const char* mnames[6] = {"M12", "M13", "M14", "M23", "M24", "M34"};
  for (std::size_t k = 0; k < 6; ++k) M[k] = Poly::variable(c.univ, mnames[k]);
  c.univ_eqs = incidence(vars4(c.univ, "X"), M);
  {
    auto mb = m_of(tag, rb, c.s_bar);
    std::vector<Poly> img(xb.begin(), xb.end());
    img.insert(img.end(), mb.begin(), mb.end());
    c.univ_to_bar.emplace(c.univ, c.bar, img);
  }

  // Double cover.
  auto rc = skew_variables(c.cover, "r");
  Poly s = Poly::variable(c.cover, "s");
  c.m = m_of(tag, rc, s);
  c.cover_eq = c.m[0] * c.m[5] - c.m[1] * c.m[4] + c.m[2] * c.m[3];
  {
    Names cn;
    auto pf = plucker(rc);
    const char* pn[5] = {"Pf1234", "Pf1235", "Pf1245", "Pf1345", "Pf2345"};
    for (std::size_t k = 0; k < 5; ++k) cn.emplace(pn[k], pf[k]);
    c.branch = parse_in(c.cover, cn,
                        tag == Tag::general ? "4*(Pf2345*Pf1345 + Pf1235*Pf1245) - Pf1234^2"
                                            : "Pf2345*Pf1345 + Pf1235*Pf1245");
  }
  c.quadric = parse_in(c.pring, {}, tag == Tag::general ? "p1*p2 + p3*p4 + p5^2" : "p1*p2 + p3*p4");
  if (tag == Tag::special) c.hyperplane = 4;

  // Scroll model and psi.
  auto rt = skew_variables(c.tilde, "rt");
  auto xt = vars4(c.tilde, "xt");
  Poly st = Poly::variable(c.tilde, "st"), w = Poly::variable(c.tilde, "w");
  auto u1 = incidence(xt, m_of(tag, rt, st));
  c.univ1.assign(u1.begin(), u1.end());
  auto qt = q_in(tag, c.tilde, "xt");
  auto bil = polarized(rt, SkewPolyMatrix5(qt));
  auto pft = plucker(rt);
  for (std::size_t k = 0; k < 5; ++k) c.rq.push_back(bil[k] + w * pft[k]);
  {
    std::vector<Poly> img;
    for (const auto& x : xt) img.push_back(x);
    for (const auto& r : rt.entries()) img.push_back(w * r);
    c.psi.emplace(c.bar, c.tilde, img, 1);
  }

  c.orbits = orbit_reps(tag);

  Names tn = aliases(c.tilde, "xt", "");
  tn.emplace("w", w);
  for (std::size_t k = 0; k < 10; ++k) tn.emplace(kQ[k].name, qt[k]);
  Names pn;
  for (int i = 1; i <= 4; ++i) pn.emplace("a" + std::to_string(i), Poly::variable(c.param, "a" + std::to_string(i)));
  pn.emplace("w", Poly::variable(c.param, "w"));
  for (const auto& ft : fiber_texts(tag)) {
    Fiber f;
    f.name = ft.name;
    f.base = ft.base;
    for (const char* p : ft.printed) f.printed.push_back(parse_in(c.tilde, tn, p));
    for (const auto& ct : ft.comps) {
      std::vector<Poly> img;
      for (const auto& v : ft.base.entries()) img.push_back(Poly::constant(c.param, v));
      img.push_back(Poly(c.param));  // st = 0
      for (const char* x : ct.x) img.push_back(parse_in(c.param, pn, x));
      img.push_back(parse_in(c.param, pn, ct.w));
      FiberComponent comp{ct.name, {}, PolyMap(c.tilde, c.param, img)};
      for (const char* e : ct.equations) comp.equations.push_back(parse_in(c.tilde, tn, e));
      f.components.push_back(std::move(comp));
    }
    c.fibers.push_back(std::move(f));
  }
  return c;
}

}  // namespace

std::string to_string(Tag t) { return t == Tag::general ? "general" : "special"; }

const Poly& Case::qij(int i, int j) const { return q[SkewRat5::slot(i, j)]; }

const Case& data(Tag tag) {
  static const Case general = build(Tag::general);
  static const Case special = build(Tag::special);
  return tag == Tag::general ? general : special;
}

std::vector<Rational> sample_bar_point(const Case& c, Sampler& rng) {
  for (;;) {
    std::vector<Rational> x = rng.rationals(4);
    std::array<Rational, 5> u, v;
    for (auto& e : u) e = rng.rational();
    for (auto& e : v) e = rng.rational();
    auto m = wedge2(u, v);
    std::vector<Rational> p(x);
    p.resize(c.bar->arity());
    bool off_excluded = false;
    for (std::size_t k = 0; k < 10; ++k) {
      p[4 + k] = m.entries()[k] - c.q[k].evaluate(p);
      if (SkewRat5::slot(1, 5) == k || SkewRat5::slot(2, 5) == k || SkewRat5::slot(3, 5) == k ||
          SkewRat5::slot(4, 5) == k)
        off_excluded = off_excluded || p[4 + k] != 0;
    }
    // The special case avoids the locus r15 = r25 = r35 = r45 = 0.
    if (c.tag == Tag::special && !off_excluded) continue;
    return p;
  }
}

}  // namespace qfano::type_ir
