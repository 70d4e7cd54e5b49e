#include "qfano/matrix.hpp"
#include "qfano/membership.hpp"
#include "qfano/parse.hpp"
#include "qfano/pfaffian.hpp"
#include "qfano/verify.hpp"

namespace qfano::verify {

namespace {

RingPtr six_vars() {
  static const RingPtr r = make_ring(numbered("c", 1, 6), std::vector<int>(6, 1));
  return r;
}

Poly random_poly(const RingPtr& ring, Sampler& rng, int max_deg, int terms) {
  Poly p(ring);
  for (int t = 0; t < terms; ++t) {
    std::vector<std::uint16_t> e(ring->arity(), 0);
    int d = static_cast<int>(rng.integer(0, max_deg));
    for (int k = 0; k < d; ++k) ++e[static_cast<std::size_t>(rng.integer(0, static_cast<std::int64_t>(ring->arity()) - 1))];
    p.add_term(make_monomial(*ring, e), rng.rational());
  }
  return p;
}

RatMatrix random_matrix(Sampler& rng, std::size_t r, std::size_t c, int forced_rank) {
  // Product of random r x k and k x c blocks has rank at most k.
  RatMatrix a(r, static_cast<std::size_t>(forced_rank)), b(static_cast<std::size_t>(forced_rank), c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = Rational(rng.integer(-3, 3));
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < c; ++j) b(i, j) = Rational(rng.integer(-3, 3));
  return a * b;
}

// Rank as the largest size of a nonzero minor, by cofactor determinants.
std::size_t minor_rank(const RatMatrix& m) {
  auto det = [](auto&& self, const RatMatrix& a) -> Rational {
    std::size_t n = a.rows();
    if (n == 1) return a(0, 0);
    Rational s = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (a(0, j) == 0) continue;
      RatMatrix sub(n - 1, n - 1);
      for (std::size_t i = 1; i < n; ++i)
        for (std::size_t k = 0, c = 0; k < n; ++k)
          if (k != j) sub(i - 1, c++) = a(i, k);
      s += (j % 2 ? -1 : 1) * a(0, j) * self(self, sub);
    }
    return s;
  };
  for (std::size_t k = std::min(m.rows(), m.cols()); k > 0; --k)
    for (const auto& rs : subsets(m.rows(), k))
      for (const auto& cs : subsets(m.cols(), k)) {
        RatMatrix sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rs[i], cs[j]);
        if (det(det, sub) != 0) return k;
      }
  return 0;
}

CheckResult check_ring_axioms(const CheckContext& ctx) {
  Recorder rec("core.poly.ring_axioms");
  auto ring = six_vars();
  auto rng = ctx.sampler(rec.id());
  for (int t = 0; t < ctx.trials; ++t) {
    Poly a = random_poly(ring, rng, 4, 5), b = random_poly(ring, rng, 4, 5), c = random_poly(ring, rng, 4, 5);
    if (!rec.expect(a * (b + c) == a * b + a * c, "distributivity", a.to_string())) break;
    if (!rec.expect((a * b) * c == a * (b * c), "associativity", a.to_string())) break;
    if (!rec.expect(a * b == b * a && a + b == b + a, "commutativity", a.to_string())) break;
    if (!rec.expect((a - a).is_zero(), "a - a = 0", a.to_string())) break;
  }
  return rec.result();
}

CheckResult check_substitute(const CheckContext& ctx) {
  Recorder rec("core.poly.substitute");
  auto ring = six_vars();
  auto rng = ctx.sampler(rec.id());
  for (int t = 0; t < ctx.trials; ++t) {
    std::vector<Poly> images;
    for (std::size_t i = 0; i < ring->arity(); ++i) images.push_back(random_poly(ring, rng, 2, 3));
    PolyMap m(ring, ring, images);
    Poly a = random_poly(ring, rng, 3, 4), b = random_poly(ring, rng, 3, 4);
    bool hom = substitute(a * b, m) == substitute(a, m) * substitute(b, m) &&
               substitute(a + b, m) == substitute(a, m) + substitute(b, m);
    if (!rec.expect(hom, "substitution is a ring homomorphism", a.to_string())) break;
    auto pt = rng.rationals(ring->arity());
    std::vector<Rational> image_pt;
    for (const auto& im : images) image_pt.push_back(im.evaluate(pt));
    if (!rec.expect(substitute(a, m).evaluate(pt) == a.evaluate(image_pt), "substitution commutes with evaluation"))
      break;
    if (!rec.expect((a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt), "evaluation is multiplicative")) break;
  }
  return rec.result();
}

CheckResult check_linear_algebra(const CheckContext& ctx) {
  Recorder rec("core.linalg.rank");
  auto rng = ctx.sampler(rec.id());
  for (int t = 0; t < ctx.trials; ++t) {
    std::size_t r = static_cast<std::size_t>(rng.integer(1, 5)), c = static_cast<std::size_t>(rng.integer(1, 5));
    RatMatrix m = random_matrix(rng, r, c, static_cast<int>(rng.integer(1, 4)));
    std::size_t rk = rat_rank(m);
    if (!rec.expect(rk == rat_rank(m.transpose()), "rank equals rank of the transpose")) break;
    if (!rec.expect(rk == minor_rank(m), "rank equals the largest nonzero minor",
                    std::to_string(rk) + " vs " + std::to_string(minor_rank(m))))
      break;
    auto ns = rat_nullspace(m);
    bool kernel = true;
    for (const auto& v : ns)
      for (const auto& x : m * v) kernel = kernel && x == 0;
    if (!rec.expect(kernel && rk + ns.size() == c, "rank plus nullity equals the column count")) break;
    if (r == c && !rec.expect((rat_det(m) != 0) == (rk == r), "determinant vanishes exactly at rank drop")) break;
  }
  return rec.result();
}

CheckResult check_pfaffian(const CheckContext& ctx) {
  Recorder rec("core.pfaffian");
  auto rng = ctx.sampler(rec.id());
  for (int t = 0; t < ctx.trials; ++t) {
    std::array<Rational, 10> e;
    for (auto& x : e) x = rng.rational();
    SkewRat5 s(e);
    for (const auto& q : kPluckerIndex) {
      RatMatrix m(4, 4);
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) m(i, j) = i == j ? Rational(0) : s.at(q[i], q[j]);
      Rational pf = pfaffian4(s, q);
      if (!rec.expect(pf * pf == rat_det(m), "Pf^2 = det on a 4x4 block")) return rec.result();
    }
    Rational lam = rng.nonzero_rational();
    std::array<Rational, 10> scaled = e;
    for (auto& x : scaled) x *= lam;
    auto p1 = plucker(s), p2 = plucker(SkewRat5(scaled));
    bool quad = true;
    for (std::size_t k = 0; k < 5; ++k) quad = quad && p2[k] == lam * lam * p1[k];
    if (!rec.expect(quad, "Pfaffians scale by lambda^2")) break;

    std::array<Rational, 5> u, v, w, z;
    for (std::size_t k = 0; k < 5; ++k) {
      u[k] = rng.rational();
      v[k] = rng.rational();
      w[k] = rng.rational();
      z[k] = rng.rational();
    }
    SkewRat5 r = wedge2(u, v) + wedge2(w, z);
    try {
      auto mu = mu_map(r);
      Rational du = 0, dv = 0, dw = 0, dz = 0;
      for (std::size_t k = 0; k < 5; ++k) {
        du += mu[k] * u[k];
        dv += mu[k] * v[k];
        dw += mu[k] * w[k];
        dz += mu[k] * z[k];
      }
      if (!rec.expect(du == 0 && dv == 0 && dw == 0 && dz == 0, "mu annihilates u, v, w and z")) break;
    } catch (const UndefinedMap&) {
      // Only when u, v, w, z are dependent, which a random draw almost never hits.
    }
  }
  // Symbolic: u ^ v is decomposable.
  auto ring = make_ring({"u1", "u2", "u3", "u4", "u5", "v1", "v2", "v3", "v4", "v5"}, std::vector<int>(10, 1));
  std::array<Poly, 5> u, v;
  for (std::size_t k = 0; k < 5; ++k) {
    u[k] = Poly::variable(ring, k);
    v[k] = Poly::variable(ring, k + 5);
  }
  bool zero = true;
  for (const auto& p : plucker(wedge2(u, v))) zero = zero && p.is_zero();
  rec.expect(zero, "Pluecker relations vanish identically on u ^ v");
  return rec.result();
}

CheckResult check_membership(const CheckContext& ctx) {
  Recorder rec("core.membership");
  auto ring = make_ring({"x1", "x2"}, {1, 1});
  auto x1 = Poly::variable(ring, "x1"), x2 = Poly::variable(ring, "x2");
  certify(rec, "x1^2 + x1*x2 in (x1)", x1 * x1 + x1 * x2, GeneratorSet({x1}), ctx);
  rec.expect(!find_certificate(x1, GeneratorSet({x1 * x1})).has_value(), "x1 has no certificate over (x1^2)");
  auto swap = PolyMap(ring, ring, {x2, x1});
  auto span = linear_span_matrix({x1, x2}, swap);
  rec.expect(span.has_value() && span->trace() == 0 && rat_det(*span) == -1, "swap acts on <x1, x2> with trace 0");
  auto parsed = parse_poly("(x1 + x2)^2 - 2*x1*x2", ring);
  rec.expect(parsed == x1 * x1 + x2 * x2, "parser expands (x1 + x2)^2 - 2 x1 x2", parsed.to_string());
  return rec.result();
}

}  // namespace

std::vector<Check> core_checks() {
  return {
      {"core.poly.ring_axioms", "polynomial arithmetic obeys the ring axioms", check_ring_axioms},
      {"core.poly.substitute", "substitution and evaluation are homomorphisms", check_substitute},
      {"core.linalg.rank", "exact rank, nullspace and determinant", check_linear_algebra},
      {"core.pfaffian", "Pfaffian identities and the map mu", check_pfaffian},
      {"core.membership", "ideal membership certificates on small examples", check_membership},
  };
}

}  // namespace qfano::verify
