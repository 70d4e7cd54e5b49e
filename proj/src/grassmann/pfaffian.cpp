#include "qfano/pfaffian.hpp"

namespace qfano {

SkewPolyMatrix5 skew_variables(const RingPtr& ring, const std::string& stem) {
  std::array<Poly, 10> t;
  std::size_t s = 0;
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j)
      t[s++] = Poly::variable(ring, stem + std::to_string(i) + std::to_string(j));
  return SkewPolyMatrix5(std::move(t));
}

std::array<Rational, 5> mu_map(const SkewRat5& r) {
  auto pf = plucker(r);
  std::array<Rational, 5> z = {pf[4], -pf[3], pf[2], -pf[1], pf[0]};
  for (const auto& c : z)
    if (c != 0) return z;
  throw UndefinedMap("mu map undefined: all Pfaffians vanish (rank <= 2)");
}

std::string to_string(LineProfile p) {
  switch (p) {
    case LineProfile::disjoint: return "disjoint";
    case LineProfile::one_point: return "one-point";
    case LineProfile::tangent: return "tangent";
    case LineProfile::two_points: return "two-points";
    case LineProfile::contained: return "contained";
  }
  return "?";
}

std::pair<std::array<Rational, 5>, std::array<Rational, 5>> line_basis(const SkewRat5& r) {
  for (const auto& p : plucker(r))
    if (p != 0) throw std::invalid_argument("line_basis: skew vector is not decomposable");
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j) {
      if (r.upper(i, j) == 0) continue;
      std::array<Rational, 5> u, v;
      for (int k = 1; k <= 5; ++k) {
        u[k - 1] = k == i ? Rational(0) : r.at(i, k);
        v[k - 1] = k == j ? Rational(0) : r.at(j, k);
      }
      return {u, v};
    }
  throw std::invalid_argument("line_basis: zero skew vector");
}

namespace {

Rational eval5(const Poly& q, const std::array<Rational, 5>& p) {
  return q.evaluate(std::vector<Rational>(p.begin(), p.end()));
}

}  // namespace

LineProfile line_quadric_profile(const SkewRat5& r, const Poly& q, std::optional<std::size_t> hyperplane) {
  if (q.ring()->arity() != 5) throw std::invalid_argument("line_quadric_profile: form must live in 5 variables");
  auto d = q.weighted_degree();
  if (!q.is_zero() && d != 2 * q.ring()->weight(0)) throw std::invalid_argument("line_quadric_profile: not a quadratic form");
  auto [u, v] = line_basis(r);
  if (hyperplane) {
    std::size_t h = *hyperplane;
    if (u[h] != 0 || v[h] != 0) {
      std::array<Rational, 5> p;
      for (std::size_t k = 0; k < 5; ++k) p[k] = v[h] * u[k] - u[h] * v[k];
      return eval5(q, p) == 0 ? LineProfile::one_point : LineProfile::disjoint;
    }
  }
  std::array<Rational, 5> w;
  for (std::size_t k = 0; k < 5; ++k) w[k] = u[k] + v[k];
  Rational a = eval5(q, u), c = eval5(q, v);
  Rational b = eval5(q, w) - a - c;
  if (a == 0 && b == 0 && c == 0) return LineProfile::contained;
  return b * b - 4 * a * c == 0 ? LineProfile::tangent : LineProfile::two_points;
}

}  // namespace qfano
