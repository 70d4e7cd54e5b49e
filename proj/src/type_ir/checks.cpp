#include <sstream>

#include "qfano/matrix.hpp"
#include "qfano/type_ir.hpp"

namespace qfano::type_ir {

namespace {

std::string cid(Tag t, const std::string& leaf) { return "typeIR." + to_string(t) + "." + leaf; }

bool all_zero(const std::vector<Poly>& ps, const std::vector<Rational>& pt) {
  for (const auto& p : ps)
    if (p.evaluate(pt) != 0) return false;
  return true;
}

std::string bidegree(const Poly& p) {
  auto a = p.grading_degree(0), b = p.grading_degree(1);
  if (!a || !b) return "inhomogeneous";
  return "(" + std::to_string(*a) + "," + std::to_string(*b) + ")";
}

// Point of Case::tilde from its blocks.
std::vector<Rational> tilde_point(const SkewRat5& r, const Rational& s, const std::vector<Rational>& x,
                                  const Rational& w) {
  std::vector<Rational> p(r.entries().begin(), r.entries().end());
  p.push_back(s);
  p.insert(p.end(), x.begin(), x.end());
  p.push_back(w);
  return p;
}

CheckResult check_build(Tag tag, const CheckContext&) {
  const Case& c = data(tag);
  Recorder rec(cid(tag, "build"));
  const auto& bar = c.bar;
  if (tag == Tag::general) {
    Poly pf = pfaffian4(SkewPolyMatrix5(c.q), {1, 2, 3, 4});
    rec.expect(pf.is_zero(), "Pf1234 of q(x) vanishes", pf.to_string());
    Poly coeff = c.s_bar.derivative(bar->index("rb12"));
    Poly want = Poly::variable(bar, "xb1") * Poly::variable(bar, "xb4") +
                Poly::variable(bar, "xb2") * Poly::variable(bar, "xb3");
    rec.expect(coeff == want, "coefficient of r12 in s(x,r) is x1x4+x2x3", coeff.to_string());
  } else {
    for (int i = 1; i <= 4; ++i)
      rec.expect(c.qij(i, 5).is_zero(), "q" + std::to_string(i) + "5 vanishes", c.qij(i, 5).to_string());
    rec.expect(c.m[2] == c.m[3], "m14 is identified with m23");
    rec.expect(c.s_bar.derivative(bar->index("rb12")).is_zero(), "s(x,r) does not involve r12");
  }
  // The neweq form: bilinear part plus Pf(r), since Pf(q) = 0.
  auto pq = plucker(SkewPolyMatrix5(c.q));
  for (std::size_t k = 0; k < 5; ++k) rec.expect(pq[k].is_zero(), "Plucker relation " + std::to_string(k + 1) + " of q");

  auto degree_is = [&](const Poly& p, int d, const std::string& what) {
    auto got = p.weighted_degree();
    rec.expect(got && *got == d, what + " has weighted degree " + std::to_string(d),
               got ? std::to_string(*got) : "inhomogeneous");
  };
  degree_is(c.s_bar, 4, "s(x,r)");
  for (std::size_t k = 0; k < 5; ++k) degree_is(c.gbar_gens[k], 4, "Pfaffian " + std::to_string(k + 1) + " of A(r+q)");
  for (std::size_t k = 0; k < 5; ++k) degree_is(c.univ3[k], k < 4 ? 5 : 8, "relation " + std::to_string(k + 1));
  for (std::size_t k = 0; k < 6; ++k) degree_is(c.m[k], 2, "m[" + std::to_string(k) + "]");
  degree_is(c.cover_eq, 4, "cover equation");
  degree_is(c.branch, 4, "B_G");
  degree_is(c.quadric, 2, "quadric");
  return rec.result();
}

CheckResult check_veronese(Tag tag, const CheckContext& ctx) {
  const Case& c = data(tag);
  Recorder rec(cid(tag, "veronese"));
  auto pq = plucker(SkewPolyMatrix5(c.q));
  for (std::size_t k = 0; k < 5; ++k)
    rec.expect(pq[k].is_zero(), "Plucker " + std::to_string(k + 1) + " of q(x) vanishes", pq[k].to_string());
  if (tag == Tag::special) {
    Poly v = (c.qij(1, 2) + c.qij(3, 4)).pow(2) - Rational(4) * c.qij(1, 3) * c.qij(2, 4);
    rec.expect(v.is_zero(), "(q12+q34)^2 = 4 q13 q24", v.to_string());
  }
  auto rng = ctx.sampler(rec.id());
  std::vector<Rational> pt(c.bar->arity());
  for (int t = 0; t < ctx.trials; ++t) {
    auto x = rng.rationals(4);
    if (x == std::vector<Rational>(4)) continue;
    std::copy(x.begin(), x.end(), pt.begin());
    std::array<Rational, 10> qv;
    for (std::size_t k = 0; k < 10; ++k) qv[k] = c.q[k].evaluate(pt);
    auto prof = line_quadric_profile(SkewRat5(qv), c.quadric, c.hyperplane);
    bool good = tag == Tag::general ? prof == LineProfile::contained
                                    : (prof == LineProfile::tangent || prof == LineProfile::contained);
    if (!rec.expect(good, "line of q(x) against the quadric", format_point(x) + " gives " + to_string(prof))) break;
  }
  return rec.result();
}

CheckResult check_double_cover(Tag tag, const CheckContext&) {
  const Case& c = data(tag);
  Recorder rec(cid(tag, "double_cover"));
  Poly s = Poly::variable(c.cover, "s");
  const Rational k = tag == Tag::general ? 1 : 4;
  std::vector<int> signs;
  for (int e : {1, -1})
    if (Rational(4) * c.cover_eq + Rational(e) * k * c.branch == s * s) signs.push_back(e);
  if (!rec.expect(signs.size() == 1, "exactly one sign relates the cover equation to B_G")) return rec.result();
  const int e = signs[0];
  std::string lhs = "4*(cover) " + std::string(e > 0 ? "+ " : "- ") + (k == 1 ? "" : "4*") + "B_G = s^2";
  rec.note("computed identity: " + lhs);
  // At s = 0 the cover equation is a multiple of B_G.
  PolyMap s0 = PolyMap::assign(c.cover, c.cover, {{"s", Poly(c.cover)}});
  Poly at0 = substitute(c.cover_eq, s0);
  Rational factor = -Rational(e) * k / 4;
  rec.expect(at0 == factor * c.branch, "cover equation at s = 0 equals " + factor.get_str() + " * B_G",
             (at0 - factor * c.branch).to_string());
  rec.note("at s = 0 the cover equation is " + factor.get_str() + " * B_G");
  return rec.result();
}

// Local shape of B_G: a rank-1 quadratic term at the r23-point (general), and
// singular along {r15 = r25 = r35 = r45 = 0} (special).
CheckResult check_branch(Tag tag, const CheckContext&) {
  const Case& c = data(tag);
  Recorder rec(cid(tag, "branch"));
  const auto& ring = c.cover;
  if (tag == Tag::general) {
    std::vector<Rational> pt(ring->arity());
    pt[ring->index("r23")] = 1;
    rec.expect(c.branch.evaluate(pt) == 0, "B_G vanishes at the r23-point");
    RatMatrix h(10, 10);
    for (std::size_t i = 0; i < 10; ++i) {
      Poly di = c.branch.derivative(i);
      rec.expect(di.evaluate(pt) == 0, "B_G is singular at the r23-point");
      for (std::size_t j = 0; j < 10; ++j) h(i, j) = di.derivative(j).evaluate(pt);
    }
    rec.expect(rat_rank(h) == 1, "quadratic term at the r23-point has rank 1", std::to_string(rat_rank(h)));
  } else {
    std::vector<std::pair<std::string, Poly>> zero;
    for (const char* v : {"r15", "r25", "r35", "r45"}) zero.emplace_back(v, Poly(ring));
    PolyMap restrict = PolyMap::assign(ring, ring, zero);
    for (std::size_t i = 0; i < 10; ++i) {
      Poly d = substitute(c.branch.derivative(i), restrict);
      rec.expect(d.is_zero(), "dB_G/d" + ring->name(i) + " vanishes on r15=r25=r35=r45=0", d.to_string());
    }
  }
  return rec.result();
}

CheckResult check_univ(Tag tag, const CheckContext& ctx) {
  const Case& c = data(tag);
  Recorder rec(cid(tag, "univ"));
  GeneratorSet gens(std::vector<Poly>(c.gbar_gens.begin(), c.gbar_gens.end()));
  for (std::size_t k = 0; k < 5; ++k) certify(rec, "relation " + std::to_string(k + 1), c.univ3[k], gens, ctx);
  return rec.result();
}

CheckResult check_univ_consistency(Tag tag, const CheckContext&) {
  const Case& c = data(tag);
  Recorder rec(cid(tag, "univ_consistency"));
  for (std::size_t k = 0; k < 5; ++k) {
    Poly img = substitute(c.univ_eqs[k], *c.univ_to_bar);
    rec.expect(img == c.univ3[k], "universal equation " + std::to_string(k + 1) + " specializes exactly",
               (img - c.univ3[k]).to_string());
  }
  return rec.result();
}

CheckResult check_gtilde_weights(Tag tag, const CheckContext&) {
  const Case& c = data(tag);
  Recorder rec(cid(tag, "gtilde_weights"));
  std::string seen;
  auto expect_bi = [&](const Poly& p, const std::string& want, const std::string& what) {
    std::string got = bidegree(p);
    rec.expect(got == want, what + " has bidegree " + want, got);
    seen += (seen.empty() ? "" : " ") + got;
  };
  for (std::size_t k = 0; k < 5; ++k) expect_bi(c.univ1[k], k < 4 ? "(2,1)" : "(4,0)", "Univ-1 generator " + std::to_string(k + 1));
  for (std::size_t k = 0; k < 5; ++k) expect_bi(c.rq[k], "(1,2)", "Rq generator " + std::to_string(k + 1));
  rec.note("bidegrees " + seen);
  return rec.result();
}

CheckResult check_psi(Tag tag, const CheckContext& ctx) {
  const Case& c = data(tag);
  Recorder rec(cid(tag, "psi"));
  Poly w = Poly::variable(c.tilde, "w");
  for (std::size_t k = 0; k < 5; ++k) {
    Poly img = substitute(c.gbar_gens[k], *c.psi);
    rec.expect(img == w * c.rq[k], "pullback of Pfaffian " + std::to_string(k + 1) + " is w * Rq", (img - w * c.rq[k]).to_string());
  }
  std::vector<Poly> target(c.univ1);
  target.insert(target.end(), c.rq.begin(), c.rq.end());
  GeneratorSet tgt(target);
  for (std::size_t k = 0; k < 5; ++k)
    certify(rec, "pullback of Pfaffian " + std::to_string(k + 1), substitute(c.gbar_gens[k], *c.psi), tgt, ctx);
  return rec.result();
}

CheckResult check_section(Tag tag, const CheckContext& ctx) {
  const Case& c = data(tag);
  Recorder rec(cid(tag, "section"));
  auto rng = ctx.sampler(rec.id());
  std::vector<Poly> gb(c.gbar_gens.begin(), c.gbar_gens.end());
  for (int t = 0; t < ctx.trials; ++t) {
    auto p = sample_bar_point(c, rng);
    if (!rec.expect(all_zero(gb, p), "sample lies on the cone", format_point(p))) break;
    std::array<Rational, 10> r;
    std::copy(p.begin() + 4, p.end(), r.begin());
    auto tp = tilde_point(SkewRat5(r), c.s_bar.evaluate(p), std::vector<Rational>(p.begin(), p.begin() + 4), 1);
    if (!rec.expect(all_zero(c.univ1, tp), "section point satisfies Univ-1", format_point(p))) break;
    if (!rec.expect(all_zero(c.rq, tp), "section point satisfies Rq", format_point(p))) break;
    auto back = c.psi->images();
    std::vector<Rational> img;
    for (const auto& b : back) img.push_back(b.evaluate(tp));
    if (!rec.expect(img == p, "psi maps the section point back", format_point(p))) break;
  }
  return rec.result();
}

// The fiber's generator system: Univ-1 and Rq with r~ fixed and s~ = 0.
std::vector<Poly> fiber_generators(const Case& c, const Fiber& f) {
  std::vector<std::pair<std::string, Poly>> fix;
  for (std::size_t k = 0; k < 10; ++k) fix.emplace_back(c.tilde->name(k), Poly::constant(c.tilde, f.base.entries()[k]));
  fix.emplace_back("st", Poly(c.tilde));
  PolyMap at = PolyMap::assign(c.tilde, c.tilde, fix);
  std::vector<Poly> out;
  for (const auto* fam : {&c.univ1, &c.rq})
    for (const auto& g : *fam) {
      Poly h = substitute(g, at);
      if (!h.is_zero()) out.push_back(h);
    }
  return out;
}

bool same_span(const std::vector<Poly>& a, const std::vector<Poly>& b) {
  auto rank_of = [](const std::vector<Poly>& ps) {
    std::map<Monomial, std::size_t, MonomialOrder> cols;
    for (const auto& p : ps)
      for (const auto& [m, v] : p.terms()) cols.emplace(m, cols.size());
    RatMatrix mat(ps.size(), std::max<std::size_t>(cols.size(), 1));
    for (std::size_t i = 0; i < ps.size(); ++i)
      for (const auto& [m, v] : ps[i].terms()) mat(i, cols.at(m)) = v;
    return rat_rank(mat);
  };
  std::vector<Poly> both(a);
  both.insert(both.end(), b.begin(), b.end());
  auto r = rank_of(both);
  return r == rank_of(a) && r == rank_of(b);
}

CheckResult check_fibers(Tag tag, const CheckContext& ctx) {
  const Case& c = data(tag);
  Recorder rec(cid(tag, "fibers"));
  auto rng = ctx.sampler(rec.id());
  const std::size_t xs = c.tilde->index("xt1"), wi = c.tilde->index("w");
  for (const auto& f : c.fibers) {
    auto gens = fiber_generators(c, f);
    std::ostringstream list;
    for (std::size_t i = 0; i < gens.size(); ++i) list << (i ? ", " : "") << gens[i].to_string();
    rec.note(f.name + ": " + list.str());
    if (!f.printed.empty())
      rec.expect(same_span(gens, f.printed), f.name + ": generators span the printed list", list.str());
    for (const auto& comp : f.components) {
      for (const auto& g : gens) {
        Poly v = substitute(g, comp.parametrization);
        rec.expect(v.is_zero(), f.name + ": generator vanishes on " + comp.name, g.to_string());
      }
      for (const auto& g : f.printed)
        rec.expect(substitute(g, comp.parametrization).is_zero(), f.name + ": printed generator vanishes on " + comp.name,
                   g.to_string());
      for (const auto& e : comp.equations)
        rec.expect(substitute(e, comp.parametrization).is_zero(), f.name + ": parametrization lies in " + comp.name,
                   e.to_string());
    }
    // Sampled converse over small integer points with x~ nonzero.
    const int want = ctx.trials;
    int hits = 0;
    std::vector<Rational> pt = tilde_point(f.base, 0, std::vector<Rational>(4), 0);
    for (int draw = 0; draw < 200000 && hits < want; ++draw) {
      bool nonzero = false;
      for (std::size_t i = 0; i < 4; ++i) {
        pt[xs + i] = rng.integer(-4, 4);
        nonzero = nonzero || pt[xs + i] != 0;
      }
      pt[wi] = rng.integer(-4, 4);
      if (!nonzero || !all_zero(gens, pt)) continue;
      ++hits;
      bool covered = false;
      for (const auto& comp : f.components) covered = covered || all_zero(comp.equations, pt);
      if (!rec.expect(covered, f.name + ": fiber point lies on a listed component", format_point(pt))) break;
    }
    if (hits < want)
      rec.inconclusive(f.name + ": only " + std::to_string(hits) + " fiber points found in the search range");
  }
  return rec.result();
}

CheckResult check_orbits(Tag tag, const CheckContext&) {
  const Case& c = data(tag);
  Recorder rec(cid(tag, "orbits"));
  for (const auto& o : c.orbits) {
    auto pf = plucker(o.r);
    bool decomposable = std::all_of(pf.begin(), pf.end(), [](const Rational& v) { return v == 0; });
    if (!rec.expect(decomposable, o.name + " is decomposable")) continue;
    auto prof = line_quadric_profile(o.r, c.quadric, c.hyperplane);
    rec.expect(prof == o.expected, o.name + " has profile " + to_string(o.expected), to_string(prof));
  }
  return rec.result();
}

CheckResult check_lforms_hook(Tag tag, const CheckContext& ctx) {
  const std::string id = cid(tag, "lforms");
  if (!ctx.lforms_path) {
    Recorder rec(id);
    rec.note("no instance supplied");
    return rec.result();
  }
  try {
    return check_lforms(data(tag), read_lforms(*ctx.lforms_path), id);
  } catch (const std::exception& e) {
    Recorder rec(id);
    rec.expect(false, "read linear forms", e.what());
    return rec.result();
  }
}

}  // namespace

std::vector<Check> checks() {
  using Fn = CheckResult (*)(Tag, const CheckContext&);
  struct Leaf {
    const char* name;
    const char* description;
    Fn fn;
  };
  const Leaf leaves[] = {
      {"build", "case data and its invariants", check_build},
      {"veronese", "q(P(W)) lies in G(2,V) and on the quadric", check_veronese},
      {"double_cover", "cover equation against the branch quartic", check_double_cover},
      {"branch", "singularities of the branch quartic", check_branch},
      {"univ", "relations of the cone as memberships", check_univ},
      {"univ_consistency", "universal equations specialize to the cone relations", check_univ_consistency},
      {"gtilde_weights", "bidegrees of the scroll equations", check_gtilde_weights},
      {"psi", "psi pulls the cone equations into the scroll ideal", check_psi},
      {"section", "the w = 1 section of psi", check_section},
      {"fibers", "fibers over orbit representatives", check_fibers},
      {"orbits", "orbit representatives against the quadric", check_orbits},
      {"lforms", "user-supplied linear forms cutting the 3-space", check_lforms_hook},
  };
  std::vector<Check> out;
  for (Tag tag : {Tag::general, Tag::special})
    for (const auto& l : leaves) {
      Fn fn = l.fn;
      out.push_back({cid(tag, l.name), l.description, [fn, tag](const CheckContext& ctx) { return fn(tag, ctx); }});
    }
  return out;
}

}  // namespace qfano::type_ir
