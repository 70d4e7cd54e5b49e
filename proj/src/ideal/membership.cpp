#include "qfano/membership.hpp"

#include <map>
#include <stdexcept>

#include "qfano/sparse_solve.hpp"

namespace qfano {

GeneratorSet::GeneratorSet(std::vector<Poly> gens) : gens_(std::move(gens)) {
  if (gens_.empty()) throw std::invalid_argument("generator set must be nonempty");
  ring_ = gens_.front().ring();
  for (const auto& g : gens_) {
    if (g.ring() != ring_) throw std::invalid_argument("generator set: mixed rings");
    if (g.is_zero()) throw std::invalid_argument("generator set: zero generator");
  }
}

MembershipCertificate::MembershipCertificate(Poly target, std::vector<Poly> coefficients,
                                             const GeneratorSet& gens, std::optional<int> bound)
    : target_(std::move(target)), coefficients_(std::move(coefficients)), bound_(bound) {
  if (coefficients_.size() != gens.size()) throw std::logic_error("certificate: wrong number of coefficients");
  Poly sum(gens.ring());
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (!coefficients_[i].is_zero()) sum += coefficients_[i] * gens[i];
  if (sum != target_) throw std::logic_error("certificate does not re-expand to its target");
}

std::vector<std::string> MembershipCertificate::serialize() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < coefficients_.size(); ++i)
    if (!coefficients_[i].is_zero()) out.push_back("g" + std::to_string(i + 1) + ": " + coefficients_[i].to_string());
  return out;
}

std::size_t MembershipCertificate::support() const {
  std::size_t n = 0;
  for (const auto& c : coefficients_) n += c.size();
  return n;
}

namespace {

bool matches_gradings(const Ring& ring, const Monomial& m, const std::vector<std::optional<int>>& want) {
  for (std::size_t row = 0; row < want.size(); ++row) {
    if (!want[row]) continue;
    const auto& w = ring.gradings()[row].weights;
    int s = 0;
    for (std::size_t i = 0; i < m.exp.size(); ++i) s += w[i] * m.exp[i];
    if (s != *want[row]) return false;
  }
  return true;
}

// Monomials allowed in the coefficient of generator g.
std::vector<Monomial> ansatz_for(const Poly& target, const Poly& g, std::optional<int> bound, Ansatz mode) {
  const Ring& ring = *target.ring();
  std::vector<Monomial> out;
  auto td = target.weighted_degree();
  auto gd = g.weighted_degree();
  if (mode == Ansatz::graded && td && gd) {
    int d = *td - *gd;
    if (d < 0 || (bound && d > *bound)) return out;
    std::vector<std::optional<int>> want(ring.gradings().size());
    for (std::size_t row = 0; row < want.size(); ++row) {
      auto a = target.grading_degree(row), b = g.grading_degree(row);
      if (a && b) want[row] = *a - *b;
    }
    for (auto& m : monomials_of_degree(ring, d))
      if (matches_gradings(ring, m, want)) out.push_back(std::move(m));
    return out;
  }
  int cap = bound.value_or(kDefaultDegreeCap);
  for (int d = 0; d <= cap; ++d)
    for (auto& m : monomials_of_degree(ring, d)) out.push_back(std::move(m));
  return out;
}

}  // namespace

std::optional<MembershipCertificate> find_certificate(const Poly& target, const GeneratorSet& gens,
                                                      std::optional<int> bound, Ansatz mode) {
  if (target.ring() != gens.ring()) throw std::invalid_argument("find_certificate: ring mismatch");
  const RingPtr& ring = gens.ring();
  if (target.is_zero())
    return MembershipCertificate(target, std::vector<Poly>(gens.size(), Poly(ring)), gens, bound);

  struct Column {
    std::size_t gen;
    Monomial mono;
  };
  std::vector<Column> columns;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (auto& m : ansatz_for(target, gens[i], bound, mode)) columns.push_back({i, std::move(m)});

  std::map<Monomial, std::size_t, MonomialOrder> row_of;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> rows;
  auto row_index = [&](const Monomial& m) {
    auto [it, inserted] = row_of.try_emplace(m, rows.size());
    if (inserted) rows.emplace_back();
    return it->second;
  };
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (const auto& [m, v] : gens[columns[c].gen].terms())
      rows[row_index(monomial_product(columns[c].mono, m))].emplace_back(c, v);
  std::vector<Rational> rhs(rows.size());
  for (const auto& [m, v] : target.terms()) {
    auto it = row_of.find(m);
    if (it == row_of.end()) return std::nullopt;
    rhs[it->second] = v;
  }

  SparseSystem system(columns.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    system.add_equation(rows[r], rhs[r]);
    if (!system.consistent()) return std::nullopt;
  }
  auto x = system.solve();
  if (!x) return std::nullopt;

  std::vector<Poly> coeffs(gens.size(), Poly(ring));
  for (std::size_t c = 0; c < columns.size(); ++c)
    if ((*x)[c] != 0) coeffs[columns[c].gen].add_term(columns[c].mono, (*x)[c]);
  return MembershipCertificate(target, std::move(coeffs), gens, bound);
}

std::optional<std::vector<MembershipCertificate>> map_preserves(const PolyMap& map, const GeneratorSet& source_gens,
                                                                const GeneratorSet& image_gens,
                                                                std::optional<int> bound) {
  if (source_gens.ring() != map.source() || image_gens.ring() != map.target())
    throw std::invalid_argument("map_preserves: ring mismatch");
  std::vector<MembershipCertificate> out;
  for (const auto& g : source_gens.gens()) {
    auto cert = find_certificate(substitute(g, map), image_gens, bound);
    if (!cert) return std::nullopt;
    out.push_back(std::move(*cert));
  }
  return out;
}

namespace {

struct CoefficientBasis {
  std::map<Monomial, std::size_t, MonomialOrder> index;
  RatMatrix columns;  // one column per poly
};

CoefficientBasis coefficient_basis(const std::vector<Poly>& polys) {
  CoefficientBasis b;
  for (const auto& p : polys)
    for (const auto& [m, v] : p.terms()) b.index.try_emplace(m, b.index.size());
  b.columns = RatMatrix(b.index.size(), polys.size());
  for (std::size_t k = 0; k < polys.size(); ++k)
    for (const auto& [m, v] : polys[k].terms()) b.columns(b.index.at(m), k) = v;
  return b;
}

std::optional<std::vector<Rational>> coordinates(const CoefficientBasis& b, const Poly& p) {
  std::vector<Rational> rhs(b.index.size());
  for (const auto& [m, v] : p.terms()) {
    auto it = b.index.find(m);
    if (it == b.index.end()) return std::nullopt;
    rhs[it->second] = v;
  }
  return rat_solve(b.columns, rhs);
}

}  // namespace

std::optional<std::vector<Rational>> span_coordinates(const Poly& p, const std::vector<Poly>& polys) {
  auto b = coefficient_basis(polys);
  if (rat_rank(b.columns) != polys.size()) throw std::invalid_argument("span_coordinates: dependent polynomials");
  return coordinates(b, p);
}

std::optional<RatMatrix> linear_span_matrix(const std::vector<Poly>& polys, const PolyMap& map) {
  if (polys.empty()) throw std::invalid_argument("linear_span_matrix: empty basis");
  auto b = coefficient_basis(polys);
  if (rat_rank(b.columns) != polys.size()) throw std::invalid_argument("linear_span_matrix: dependent polynomials");
  RatMatrix m(polys.size(), polys.size());
  for (std::size_t k = 0; k < polys.size(); ++k) {
    auto c = coordinates(b, substitute(polys[k], map));
    if (!c) return std::nullopt;
    for (std::size_t l = 0; l < polys.size(); ++l) m(k, l) = (*c)[l];
  }
  return m;
}

std::optional<MembershipCertificate> equal_mod_ideal(const Poly& p, const Poly& q, const GeneratorSet& gens,
                                                     std::optional<int> bound) {
  return find_certificate(p - q, gens, bound);
}

}  // namespace qfano
