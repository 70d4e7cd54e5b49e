#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "qfano/matrix.hpp"
#include "qfano/membership.hpp"
#include "qfano/type_ir.hpp"

namespace qfano::type_ir {

namespace {

// Rows are the products m * g for g in gens and m of degree d - deg g.
std::size_t macaulay_rank(const std::vector<Poly>& gens, const RingPtr& ring, int d) {
  auto cols = monomials_of_degree(*ring, d);
  std::map<Monomial, std::size_t, MonomialOrder> index;
  for (std::size_t i = 0; i < cols.size(); ++i) index.emplace(cols[i], i);
  std::vector<Poly> rows;
  for (const auto& g : gens) {
    int e = d - *g.weighted_degree();
    if (e < 0) continue;
    for (const auto& m : monomials_of_degree(*ring, e)) rows.push_back(Poly::term(ring, m, 1) * g);
  }
  RatMatrix mat(std::max<std::size_t>(rows.size(), 1), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& [m, v] : rows[i].terms()) mat(i, index.at(m)) = v;
  return rat_rank(mat);
}

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

LForms read_lforms(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("forms") || !j["forms"].is_array() || j["forms"].size() != 6)
    throw std::invalid_argument(path + ": expected {\"forms\": [six objects]}");
  LForms out;
  for (std::size_t k = 0; k < 6; ++k) {
    const auto& f = j["forms"][k];
    if (!f.is_object()) throw std::invalid_argument(path + ": form " + std::to_string(k + 1) + " is not an object");
    for (auto& row : out.coeffs[k]) row = 0;
    for (const auto& [name, value] : f.items()) {
      if (name.size() != 3 || name[0] != 'r') throw std::invalid_argument(path + ": unknown coordinate " + name);
      int i = name[1] - '0', jj = name[2] - '0';
      if (i < 1 || jj > 5 || i >= jj) throw std::invalid_argument(path + ": unknown coordinate " + name);
      std::string text = value.is_string() ? value.get<std::string>() : value.dump();
      out.coeffs[k][SkewRat5::slot(i, jj)] = parse_rational(text);
    }
  }
  return out;
}

CheckResult check_lforms(const Case& c, const LForms& forms, const std::string& id) {
  Recorder rec(id);
  RatMatrix f(6, 10);
  for (std::size_t k = 0; k < 6; ++k)
    for (std::size_t l = 0; l < 10; ++l) f(k, l) = forms.coeffs[k][l];
  if (!rec.expect(rat_rank(f) == 6, "the six forms are linearly independent")) return rec.result();

  if (c.tag == Tag::special) {
    RatMatrix g(10, 10);
    for (std::size_t k = 0; k < 6; ++k)
      for (std::size_t l = 0; l < 10; ++l) g(k, l) = f(k, l);
    for (int i = 1; i <= 4; ++i) g(5 + static_cast<std::size_t>(i), SkewRat5::slot(i, 5)) = 1;
    rec.expect(rat_rank(g) == 10, "the 3-space misses r15 = r25 = r35 = r45 = 0");
  }

  // Coordinates t1..t4 on the 3-space.
  auto basis = rat_nullspace(f);
  RingPtr t = make_ring(numbered("t", 1, 4), {1, 1, 1, 1});
  std::vector<Poly> img;
  for (std::size_t l = 0; l < 10; ++l) {
    Poly e(t);
    for (std::size_t k = 0; k < 4; ++k) e += basis[k][l] * Poly::variable(t, k);
    img.push_back(e);
  }
  img.push_back(Poly(t));  // s
  PolyMap restrict(c.cover, t, img);
  auto pf = plucker(skew_variables(c.cover, "r"));
  std::vector<Poly> quadrics;
  for (const auto& p : pf) quadrics.push_back(substitute(p, restrict));

  // A zero-dimensional scheme of length 5 has Hilbert function 5 from some degree on.
  std::string hf;
  for (int d = 2; d <= 5; ++d) {
    std::size_t h = binomial(static_cast<std::size_t>(d) + 3, 3) - macaulay_rank(quadrics, t, d);
    hf += (hf.empty() ? "" : " ") + std::to_string(h);
    if (d >= 3) rec.expect(h == 5, "Hilbert function in degree " + std::to_string(d) + " is 5", std::to_string(h));
  }
  rec.note("Hilbert function of G(2,V) cut by the forms, degrees 2..5: " + hf);

  Poly b = substitute(c.branch, restrict);
  auto deg = b.weighted_degree();
  if (!rec.expect(deg && *deg == 4, "B restricted to the 3-space is a quartic", b.to_string())) return rec.result();
  GeneratorSet gens(quadrics);
  for (std::size_t k = 0; k < 4; ++k) {
    Poly d = b.derivative(k);
    if (d.is_zero()) continue;
    auto cert = find_certificate(d, gens);
    if (rec.expect(cert.has_value(), "dB/dt" + std::to_string(k + 1) + " vanishes on G(2,V) cut by the forms"))
      rec.add_certificate("dB/dt" + std::to_string(k + 1), *cert);
  }
  rec.note("A<=2 type of the five singular points is not examined");
  return rec.result();
}

}  // namespace qfano::type_ir
