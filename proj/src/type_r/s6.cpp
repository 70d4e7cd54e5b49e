#include <map>

#include "internal.hpp"

namespace qfano::type_r {

namespace {

using detail::rf_list;

std::string sig(std::size_t i) { return "sigma" + std::to_string(i + 1); }

// Compares two maps on every variable, falling back to equality modulo
// (RF1..RF9) with bound 2 for variables whose images differ.
void expect_same_map(Recorder& rec, const PolyMap& a, const PolyMap& b, const std::string& what,
                     std::map<std::string, int>& levels) {
  const Data& d = data();
  bool exact = true;
  for (std::size_t v = 0; v < d.ring->arity(); ++v) {
    if (a.image(v) == b.image(v)) continue;
    exact = false;
    GeneratorSet rf(rf_list());
    auto cert = equal_mod_ideal(a.image(v), b.image(v), rf, 2);
    if (!rec.expect(cert.has_value(), what + " on " + d.ring->name(v), (a.image(v) - b.image(v)).to_string())) return;
    rec.add_certificate(what + " on " + d.ring->name(v), *cert);
  }
  ++levels[exact ? "exact" : "modulo the ideal"];
  if (!exact) rec.note(what + " holds modulo the ideal");
}

CheckResult check_coxeter(const CheckContext&) {
  const Data& d = data();
  Recorder rec("typeR.s6.coxeter");
  const auto& s = d.sigma;
  PolyMap id = PolyMap::identity(d.ring);
  std::map<std::string, int> levels;
  for (std::size_t i = 0; i < 5; ++i) expect_same_map(rec, s[i].followed_by(s[i]), id, sig(i) + "^2 = id", levels);
  for (std::size_t i = 0; i + 1 < 5; ++i)
    expect_same_map(rec, s[i].followed_by(s[i + 1]).followed_by(s[i]),
                    s[i + 1].followed_by(s[i]).followed_by(s[i + 1]),
                    "braid " + sig(i) + "," + sig(i + 1), levels);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 2; j < 5; ++j)
      expect_same_map(rec, s[i].followed_by(s[j]), s[j].followed_by(s[i]), "commute " + sig(i) + "," + sig(j),
                      levels);
  for (const auto& [level, n] : levels) rec.note(std::to_string(n) + " relations hold " + level);
  // The r-block matrices square to the identity as well.
  for (std::size_t i = 0; i < 4; ++i)
    rec.expect(d.rep_r[i] * d.rep_r[i] == RatMatrix::identity(4), sig(i) + " 4-dim matrix is an involution");
  for (std::size_t i = 0; i < 5; ++i)
    rec.expect(d.rep_x[i] * d.rep_x[i] == RatMatrix::identity(5), sig(i) + " 5-dim matrix is an involution");
  return rec.result();
}

CheckResult check_span(const CheckContext&) {
  const Data& d = data();
  Recorder rec("typeR.s6.span");
  auto rf = rf_list();
  std::vector<RatMatrix> mats;
  for (std::size_t i = 0; i < 5; ++i) {
    auto m = linear_span_matrix(rf, d.sigma[i]);
    if (!rec.expect(m.has_value(), sig(i) + " preserves the span of RF1..RF9")) return rec.result();
    rec.expect(rat_det(*m) != 0, sig(i) + " span matrix is invertible");
    rec.note(sig(i) + " trace " + m->trace().get_str());
    // Transport: RF_k o sigma equals the span combination, expanded directly.
    for (std::size_t k = 0; k < 9; ++k) {
      Poly lhs = substitute(rf[k], d.sigma[i]);
      Poly rhs(d.ring);
      for (std::size_t l = 0; l < 9; ++l) rhs += (*m)(k, l) * rf[l];
      rec.expect(lhs == rhs, sig(i) + " transports RF" + std::to_string(k + 1), (lhs - rhs).to_string());
    }
    mats.push_back(*m);
  }
  if (mats.size() == 5) {
    rec.expect(mats[0].trace() == 3, "trace of the sigma1 matrix is 3", mats[0].trace().get_str());
    for (std::size_t i = 0; i + 1 < 5; ++i) {
      auto m = linear_span_matrix(rf, d.sigma[i].followed_by(d.sigma[i + 1]));
      rec.expect(m && *m == mats[i] * mats[i + 1], "span matrices compose for " + sig(i) + "," + sig(i + 1));
    }
  }
  return rec.result();
}

CheckResult check_dr(const CheckContext&) {
  const Data& d = data();
  Recorder rec("typeR.s6.dr");
  for (std::size_t i = 0; i < 5; ++i) {
    Poly diff = substitute(d.DR, d.sigma[i]) - d.DR;
    rec.expect(diff.is_zero(), "D_R is invariant under " + sig(i), diff.to_string());
  }
  return rec.result();
}

CheckResult check_loci(const CheckContext& ctx) {
  const Data& d = data();
  Recorder rec("typeR.s6.loci");
  auto rng = ctx.sampler(rec.id());
  std::vector<const Locus*> loci;
  for (const auto& l : d.gammas) loci.push_back(&l);
  for (const auto& l : d.deltas) loci.push_back(&l);
  const int samples = std::max(1, std::min(ctx.trials, 5));
  for (std::size_t g = 0; g < 5; ++g) {
    std::vector<int> perm(loci.size(), -1);
    std::string text;
    for (std::size_t a = 0; a < loci.size(); ++a) {
      for (int t = 0; t < samples; ++t) {
        auto p = sample_locus_point(*loci[a], rng);
        if (!rec.expect(p.has_value(), loci[a]->name + ": sample")) break;
        auto img = apply_to_point(d.sigma[g], *p);
        std::vector<int> hits;
        for (std::size_t b = 0; b < loci.size(); ++b)
          if (on_locus(*loci[b], img)) hits.push_back(static_cast<int>(b));
        if (!rec.expect(hits.size() == 1, sig(g) + " maps " + loci[a]->name + " into exactly one locus",
                        format_point(*p)))
          break;
        if (perm[a] == -1) perm[a] = hits[0];
        if (!rec.expect(perm[a] == hits[0], sig(g) + " image of " + loci[a]->name + " is stable across samples",
                        format_point(*p)))
          break;
      }
      if (perm[a] >= 0 && perm[a] != static_cast<int>(a))
        text += (text.empty() ? "" : " ") + loci[a]->name + "->" + loci[perm[a]]->name;
    }
    std::vector<int> sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    bool bijective = true;
    for (std::size_t i = 0; i < sorted.size(); ++i) bijective = bijective && sorted[i] == static_cast<int>(i);
    rec.expect(bijective, sig(g) + " permutes the fifteen loci");
    rec.note(sig(g) + ": " + (text.empty() ? "identity" : text));
  }
  return rec.result();
}

}  // namespace

namespace detail {

std::vector<Check> s6_checks() {
  return {
      {"typeR.s6.coxeter", "Coxeter relations of the five generators", check_coxeter},
      {"typeR.s6.span", "generators act linearly on RF1..RF9", check_span},
      {"typeR.s6.dr", "D_R is invariant", check_dr},
      {"typeR.s6.loci", "generators permute the fifteen singular loci", check_loci},
  };
}

}  // namespace detail

}  // namespace qfano::type_r
