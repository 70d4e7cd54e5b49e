#include <map>
#include <stdexcept>

#include "qfano/parse.hpp"
#include "qfano/type_r.hpp"

namespace qfano::type_r {

namespace {

// Linear parts of RF1..RF5 in q and r.
const char* const kLin[5] = {
    "-q13*r24 + (q12-q14-q24)*r34 - (q14+q24)*r35",
    "q23*r15 - (q15+q25)*r34 + (q12+q13-q15-q25)*r35",
    "q24*r15 + q15*r24 + q14*r35",
    "q34*r15 + (q15+q45)*r34 - (q14-q45)*r35",
    "-q35*r24 + (q25-q45)*r34 - (q24+q34+q45)*r35",
};

const char* const kF[5] = {
    "-r24*(r34+r35)", "-(r15-r35)*(r34+r35)", "r15*r24", "r15*r34", "-(r24+r34)*r35",
};

const char* const kS[4] = {
    "-q15*q24 + q45*q13 - q15*q14 - q15*q25 + q12*q15 + q13*q15 - q15^2",
    "q24*q34 + q24^2 - q12*q24 + q14*q34 + q14*q24 + q24*q25 - q12*q34 + q15*q24",
    "q15*q34 - q13*q34 - q13*q24 + q24*q35",
    "-q15*q34 - q15*q23 - q24*q35",
};

const char* const kK[4] = {
    "(3*q12+3*q13-3*q14-6*q15-2*q24-3*q25-q34)*r15 - 2*q15*r24 + 2*(q15+q45)*r34 + 2*(q14+3*q15+q45)*r35",
    "2*q24*r15 + (-3*q12-q13+3*q14+2*q15+6*q24+3*q25+3*q34)*r24 + 2*(-q12+q14+q24)*r34 + 2*(-q14-2*q24)*r35",
    "2*q34*r15 + (-2*q13+2*q35)*r24 + (-q12-3*q13+q14+2*q15-2*q24+q25-3*q34-2*q45)*r34 + 2*(q14-2*q34-q45)*r35",
    "2*(-q23-q34)*r15 - 2*q35*r24 + 2*(-q25+q45)*r34 + (q12+q13-q14+2*q15-2*q24-q25+q34+2*q45)*r35",
};

const char* const kL[4] = {
    "-r15*(3*r15+2*r24-2*r34-6*r35)",
    "r24*(2*r15+3*r24+2*r34-4*r35)",
    "-r34*(-2*r15+2*r24+3*r34+4*r35)",
    "r35*(2*r15-2*r24+2*r34+r35)",
};

const char* const kR4[4] = {"r15", "r24", "r34", "r35"};

// Named polynomials for one ring. The formulas above are written in the
// generic names x, y, r, s; each ring maps them onto its own coordinates.
class Env {
 public:
  explicit Env(RingPtr ring) : ring_(std::move(ring)) {}

  const RingPtr& ring() const { return ring_; }

  void define(const std::string& name, Poly p) { names_.insert_or_assign(name, std::move(p)); }
  const Poly& get(const std::string& name) const { return names_.at(name); }

  Poly operator()(const std::string& text) const {
    return parse_poly(text, ring_, [this](std::string_view n) -> std::optional<Poly> {
      auto it = names_.find(std::string(n));
      if (it == names_.end()) return std::nullopt;
      return it->second;
    });
  }

  // x_i, y_i, r_ij aliases followed by q_ij, f_i, and optionally S, K, L.
  void standard(const std::string& xs, const std::string& ys, const std::string& rs, bool with_skl) {
    for (int i = 1; i <= 5; ++i) {
      define("x" + std::to_string(i), Poly::variable(ring_, xs + std::to_string(i)));
      define("y" + std::to_string(i), Poly::variable(ring_, ys + std::to_string(i)));
    }
    for (const char* r : kR4) define(r, Poly::variable(ring_, rs + std::string(r + 1)));
    for (int i = 1; i <= 5; ++i)
      for (int j = i + 1; j <= 5; ++j) {
        std::string a = std::to_string(i), b = std::to_string(j);
        define("q" + a + b, get("x" + a) * get("y" + b) - get("x" + b) * get("y" + a));
      }
    for (int i = 0; i < 5; ++i) define("f" + std::to_string(i + 1), (*this)(kF[i]));
    if (!with_skl) return;
    for (int i = 0; i < 4; ++i) {
      std::string n = std::to_string(i + 1);
      define("S" + n, (*this)(kS[i]));
      define("K" + n, (*this)(kK[i]));
      define("L" + n, (*this)(kL[i]));
    }
  }

 private:
  RingPtr ring_;
  std::map<std::string, Poly> names_;
};

std::vector<std::string> concat(std::initializer_list<std::vector<std::string>> parts) {
  std::vector<std::string> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

std::vector<std::string> prefixed(const std::string& stem, std::initializer_list<const char*> tails) {
  std::vector<std::string> out;
  for (const char* t : tails) out.push_back(stem + t);
  return out;
}

PolyMatrix matrix_of(const Env& env, const std::vector<std::vector<std::string>>& rows) {
  PolyMatrix m(env.ring(), rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw std::logic_error("ragged matrix text");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = env(rows[i][j]);
  }
  return m;
}

RatMatrix maybe_transposed(const RatMatrix& m, bool t) { return t ? m.transpose() : m; }

// Index k with q_k proportional to v, if any.
std::optional<std::size_t> find_point(const std::array<std::array<Rational, 4>, 5>& pts, const std::vector<Rational>& v) {
  for (std::size_t k = 0; k < pts.size(); ++k) {
    RatMatrix m(2, 4);
    for (std::size_t j = 0; j < 4; ++j) {
      m(0, j) = v[j];
      m(1, j) = pts[k][j];
    }
    if (rat_rank(m) == 1) return k;
  }
  return std::nullopt;
}

// True when every rep_r matrix (under the convention) permutes the five
// points as a transposition.
bool permutes_as_transpositions(const Data& d, bool transpose) {
  for (const auto& m : d.rep_r) {
    RatMatrix a = maybe_transposed(m, transpose);
    int moved = 0;
    for (std::size_t k = 0; k < 5; ++k) {
      auto img = find_point(d.segre_points, a * std::vector<Rational>(d.segre_points[k].begin(), d.segre_points[k].end()));
      if (!img) return false;
      if (*img != k) ++moved;
    }
    if (moved != 2) return false;
  }
  return true;
}

PolyMap make_sigma(const Data& d, std::size_t i) {
  const RingPtr& ring = d.ring;
  std::vector<Poly> img(ring->arity(), Poly(ring));
  RatMatrix mx = maybe_transposed(d.rep_x[i], d.transpose_convention);
  for (std::size_t k = 0; k < 5; ++k) {
    Poly ix(ring), iy(ring);
    for (std::size_t j = 0; j < 5; ++j) {
      ix += mx(k, j) * Poly::variable(ring, j);
      iy += mx(k, j) * Poly::variable(ring, 5 + j);
    }
    img[k] = ix;
    img[5 + k] = iy;
  }
  const std::size_t r0 = ring->index("r0");
  std::vector<std::size_t> rv;
  for (const char* r : kR4) rv.push_back(ring->index(r));
  if (i < 4) {
    RatMatrix mr = maybe_transposed(d.rep_r[i], d.transpose_convention);
    for (std::size_t k = 0; k < 4; ++k) {
      Poly p(ring);
      for (std::size_t j = 0; j < 4; ++j) p += mr(k, j) * Poly::variable(ring, rv[j]);
      img[rv[k]] = p;
    }
    img[r0] = -Poly::variable(ring, r0);
  } else {
    std::vector<std::size_t> v = rv;
    v.push_back(r0);
    RatMatrix mr = maybe_transposed(d.sigma5_r, d.transpose_convention);
    for (std::size_t k = 0; k < 5; ++k) {
      Poly p = d.sigma5_shift[k];
      for (std::size_t j = 0; j < 5; ++j) p += mr(k, j) * Poly::variable(ring, v[j]);
      img[v[k]] = p;
    }
  }
  return PolyMap(ring, ring, std::move(img), 1);
}

void expect_degree(const Poly& p, int d, const std::string& what) {
  if (p.weighted_degree() != d)
    throw std::logic_error("type R data: " + what + " is not weighted-homogeneous of degree " + std::to_string(d));
}

Locus locus(std::string name, std::initializer_list<std::initializer_list<Rational>> rows, std::pair<int, int> open,
            std::optional<std::array<Rational, 5>> rp = std::nullopt) {
  return Locus{std::move(name), RatMatrix(rows), open, rp};
}

Data build() {
  Data d;
  auto xs = numbered("x", 1, 5), ys = numbered("y", 1, 5);
  auto r4 = prefixed("r", {"15", "24", "34", "35"});
  d.ring = make_ring(concat({xs, ys, {"r0"}, r4}), {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2});
  d.bar = make_ring(concat({xs, ys, r4}), {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2});

  std::vector<std::string> rb;
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j) rb.push_back("rb" + std::to_string(i) + std::to_string(j));
  {
    std::vector<int> w(10, 1);
    w.insert(w.end(), 10, 2);
    d.gbar = make_ring(concat({numbered("xb", 1, 5), numbered("yb", 1, 5), rb}), w);
  }
  {
    auto names = concat({prefixed("rt", {"15", "24", "34", "35"}), numbered("xt", 1, 5), numbered("yt", 1, 5), {"w"}});
    std::vector<int> g1, g2;
    for (int i = 0; i < 4; ++i) g1.push_back(1), g2.push_back(0);
    for (int i = 0; i < 10; ++i) g1.push_back(0), g2.push_back(1);
    g1.push_back(-1), g2.push_back(2);
    std::vector<int> w;
    for (std::size_t i = 0; i < g1.size(); ++i) w.push_back(g1[i] + g2[i]);
    d.tilde = make_ring(names, w, {{"FR-1", g1}, {"FR-2", g2}});
  }
  auto rh = prefixed("rh", {"15", "24", "34", "35"});
  {
    auto names = concat({{"s", "rh0"}, rh, numbered("xh", 1, 5), numbered("yh", 1, 5)});
    std::vector<int> g1 = {0, 2, 2, 2, 2, 2}, g2 = {1, 1, -1, -1, -1, -1};
    for (int i = 0; i < 10; ++i) g1.push_back(1), g2.push_back(0);
    std::vector<int> w;
    for (std::size_t i = 0; i < g1.size(); ++i) w.push_back(g1[i] + g2[i]);
    d.hat = make_ring(names, w, {{"hat-1", g1}, {"hat-2", g2}});
    std::vector<int> wt = {1, 6, 2, 2, 2, 2};
    for (int i = 0; i < 10; ++i) wt.push_back(2);
    d.hat_t = make_ring(concat({{"t", "rh0"}, rh, numbered("xh", 1, 5), numbered("yh", 1, 5)}), wt);
  }
  d.zring = make_ring(numbered("z", 1, 5), {1, 1, 1, 1, 1});
  d.scroll = make_ring(concat({xs, ys, numbered("z", 1, 5)}), std::vector<int>(15, 1));

  // The key variety and its building blocks.
  Env e(d.ring);
  e.standard("x", "y", "r", true);
  e.define("r0", Poly::variable(d.ring, "r0"));
  {
    std::size_t k = 0;
    for (int i = 1; i <= 5; ++i)
      for (int j = i + 1; j <= 5; ++j) d.q[k++] = e.get("q" + std::to_string(i) + std::to_string(j));
  }
  for (int i = 0; i < 5; ++i) {
    std::string n = std::to_string(i + 1);
    d.f[i] = e.get("f" + n);
    d.RF[i] = e(std::string(kLin[i]) + " + f" + n);
    e.define("RF" + n, d.RF[i]);
  }
  for (int i = 0; i < 4; ++i) {
    std::string n = std::to_string(i + 1);
    d.S[i] = e.get("S" + n);
    d.K[i] = e.get("K" + n);
    d.L[i] = e.get("L" + n);
    d.U[i] = e("(30*S" + n + " + 5*K" + n + " + 2*L" + n + ")/30");
    e.define("U" + n, d.U[i]);
    d.RF[5 + i] = e(std::string("r0*") + kR4[i] + " - 30*U" + n);
    e.define("RF" + std::to_string(6 + i), d.RF[5 + i]);
  }

  d.rf_matrix = SkewPolyMatrix5({e("q12"), e("r34+r35+q13"), e("q14"), e("r15+q15"), e("-r34-r35+q23"),
                                 e("r24+q24"), e("-r35+q25"), e("r34+q34"), e("r35+q35"), e("q45")});

  d.A1 = matrix_of(e, {{"RF5", "-RF4", "RF3", "-RF2", "RF1"}});
  d.A3 = matrix_of(e, {{"RF5"}, {"-RF4"}, {"RF3"}, {"-RF2"}, {"RF1"}});
  d.A2 = PolyMatrix(d.ring, 5, 5);
  for (int i = 1; i <= 5; ++i)
    for (int j = 1; j <= 5; ++j)
      if (i != j) d.A2(i - 1, j - 1) = d.rf_matrix.at(i, j);
  d.C1 = matrix_of(e, {{"r15", "r24", "r34", "r35"}});
  d.C2 = matrix_of(e, {{"-r24", "-r34", "-r35", "0", "0", "0"},
                       {"r15", "0", "0", "-r34", "-r35", "0"},
                       {"0", "r15", "0", "r24", "0", "-r35"},
                       {"0", "0", "r15", "0", "r24", "r34"}});
  d.C3 = matrix_of(e, {{"0", "0", "r35", "r34"},
                       {"0", "r35", "0", "-r24"},
                       {"0", "-r34", "-r24", "0"},
                       {"r35", "0", "0", "r15"},
                       {"-r34", "0", "r15", "0"},
                       {"r24", "r15", "0", "0"}});
  d.C4 = matrix_of(e, {{"r15"}, {"-r24"}, {"r34"}, {"-r35"}});
  d.B3 = matrix_of(e, {{"U1"}, {"-U2"}, {"U3"}, {"-U4"}});
  d.B2 = matrix_of(
      e, {{"1/3*q13", "-2/3*q23 + 1/3*(r34 + r35)", "0", "2/3*q34 + 1/3*r34", "-1/3*q35"},
          {"1/3*q13 + q24 - 2/3*q15 + 1/3*(-2*r15 + r24 + r34 + r35)",
           "-q24 + 1/3*q23 - 2/3*q25 + 1/3*(-2*r24 - r34 + r35)", "-q23 - q34 - 2/3*q35",
           "-q24 - 1/3*q34 - 2/3*q45 - 1/3*(2*r24 + r34)", "-1/3*q35"},
          {"q24 + 2/3*q14 + 1/3*r24", "-1/3*q24", "-1/3*q34", "0", "-q24 - q34 - 2/3*q45 - 1/3*(r24 + r34)"},
          {"1/3*q15", "-q15 - 2/3*q25 - 1/3*(r15 - r35)", "1/3*q35", "-q15 - 2/3*q45 - 1/3*r15", "0"},
          {"q15 + 2/3*r15", "q13 - q15 - 1/3*(r15 - r34)", "-q13 + q35 - 2/3*r34", "0", "-q15 - 2/3*r15"},
          {"0", "-q12 + q14 + q24 + (2*r24)/3", "q12 - q14 - q15 - q24 - q25 - 1/3*(r15 + r24)", "0",
           "-q15 - q45 - 2/3*r15"}});
  d.B1 = matrix_of(e, {{"0", "-q34", "q24 + 1/3*(r24 + r34)", "-q23 + 2/3*r35", "-2/3*r34"},
                       {"-q35", "0", "q15 + 2/3*r15", "0", "-q13 - 2/3*r34"},
                       {"q25 - q45", "-q15 - q45 - r15", "-1/3*r15", "q15 + q25 + r15", "q12 - q14 - q24 + 1/3*(2*r15 - r24)"},
                       {"-q24 - q34 - q45 - r24 - r34", "q14 - q45", "q14",
                        "-q12 - q13 + q15 + q25 + 1/3*(r15 - 3*r34 - 3*r35)", "-q14 - q24 - r24"}});
  d.Mq = matrix_of(e, {{"0", "-q13", "q12 - q14 - q24", "-q14 - q24"},
                       {"q23", "0", "-q15 - q25", "q12 + q13 - q15 - q25"},
                       {"q24", "q15", "0", "q14"},
                       {"q34", "0", "q15 + q45", "-q14 + q45"},
                       {"0", "-q35", "q25 - q45", "-q24 - q34 - q45"}});

  d.DR = e("x1^2*x2^2 + 2*x1^2*x2*x3 + x1^2*x3^2 - 2*x1^2*x2*x4 - 2*x1^2*x3*x4"
           " + 2*x1*x2*x3*x4 + 2*x1*x3^2*x4 + x1^2*x4^2 - 2*x1*x3*x4^2"
           " + x3^2*x4^2 + 2*x1*x2^2*x5 + 2*x1*x2*x3*x5 - 2*x1*x2*x4*x5"
           " - 4*x1*x3*x4*x5 - 2*x2*x3*x4*x5 + x2^2*x5^2");

  d.rep_r = {RatMatrix{{-1, 0, 0, 0}, {0, 1, 0, 0}, {0, -1, -1, 0}, {0, 1, 0, -1}},
             RatMatrix{{0, 0, 0, -1}, {-1, -1, 0, 1}, {1, 0, -1, -1}, {-1, 0, 0, 0}},
             RatMatrix{{0, 0, -1, -1}, {0, -1, 0, 0}, {-1, 0, 0, 1}, {0, 0, 0, -1}},
             RatMatrix{{-1, 0, 1, 1}, {0, -1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}}};
  d.rep_x = {RatMatrix{{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, -1, -1, 0, 0}, {0, 0, 0, 1, 0}, {-1, 0, 0, -1, -1}},
             RatMatrix{{0, 0, -1, 0, 0}, {1, 1, 1, 0, 0}, {-1, 0, 0, 0, 0}, {0, 1, 1, -1, -1}, {0, 0, 0, 0, 1}},
             RatMatrix{{1, 0, 0, 0, 0}, {-1, 0, 0, -1, 0}, {0, 0, 0, 0, -1}, {-1, -1, 0, 0, 0}, {0, 0, -1, 0, 0}},
             RatMatrix{{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 1, 0, -1, 0}, {-1, 0, 1, 0, -1}},
             RatMatrix{{0, 1, 0, -1, 0}, {1, 0, 0, 1, 0}, {-1, 0, 0, -1, -1}, {0, 0, 0, 1, 0}, {0, -1, -1, 0, 0}}};
  d.sigma5_r = RatMatrix{{rat(-4, 5), rat(-1, 5), rat(1, 5), rat(3, 5), rat(1, 30)},
                         {0, -1, 0, 0, 0},
                         {0, 0, -1, 0, 0},
                         {rat(1, 5), rat(-1, 5), rat(1, 5), rat(-2, 5), rat(1, 30)},
                         {rat(36, 5), rat(-36, 5), rat(36, 5), rat(108, 5), rat(1, 5)}};
  d.sigma5_shift = {e("1/2*(q12 + q13 - q14 - 2*q15 + 2*q23 + q34 - q25)"), e("-q14 - q24"), e("q14 - q34 - q45"),
                    e("1/2*(-q12 - q13 - q14 + q25 + q34)"),
                    e("6*(q12 + q13 + q15 - q23 - q24 - q25 - q34 + q45)")};

  d.segre_points = {{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, -1, 1}}};
  if (permutes_as_transpositions(d, false)) {
    d.transpose_convention = false;
    d.convention = "coordinate substitution v_k -> sum_j M[k][j] v_j (points move by p -> M p)";
  } else if (permutes_as_transpositions(d, true)) {
    d.transpose_convention = true;
    d.convention = "coordinate substitution v_k -> sum_j M[j][k] v_j (points move by p -> M^T p)";
  } else {
    throw std::logic_error("type R data: no action convention permutes the five points by transpositions");
  }
  for (std::size_t i = 0; i < 5; ++i) d.sigma.push_back(make_sigma(d, i));

  {
    Env z(d.zring);
    d.S3 = z("-z1*(z3*z4 - z2*z5) - (z2 - z3)*(z2 + z4)*z5");
  }
  d.mu_coords = {d.f[4], -d.f[3], d.f[2], -d.f[1], d.f[0]};

  d.p_points = {{{1, 0, 0, 0, 0}, {-6, 1, 0, 0, 0}, {6, 0, 1, 0, 0}, {-6, 0, 0, 1, 0}, {6, 1, 0, 0, 1}, {-6, 0, 1, -1, 1}}};
  d.gammas = {
      locus("Gamma1", {{0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}}, {1, 5}, d.p_points[1]),
      locus("Gamma2", {{1, 0, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 0, 1}}, {2, 4}, d.p_points[2]),
      locus("Gamma3", {{1, 1, 0, 0, 0}, {1, 0, 0, 1, 0}, {0, 0, 0, 0, 1}}, {3, 4}, d.p_points[3]),
      locus("Gamma4", {{0, 0, 0, 1, 0}, {1, 1, 0, 0, 0}, {1, 0, -1, 0, 1}}, {3, 5}, d.p_points[4]),
      locus("Gamma5", {{1, 0, 0, 0, 0}, {0, 1, 1, 0, 0}, {0, 0, 0, 1, 1}}, {2, 4}, d.p_points[5]),
  };
  d.deltas = {
      locus("Delta1", {{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}}, {4, 5}),
      locus("Delta2", {{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 0, 1, 0}}, {3, 5}),
      locus("Delta3", {{1, 0, 0, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}}, {2, 3}),
      locus("Delta4", {{0, 0, 1, 0, 0}, {0, 0, 0, 0, 1}, {0, 1, 0, -1, 0}}, {1, 2}),
      locus("Delta5", {{1, 0, 0, 0, 0}, {0, 1, 0, -1, 0}, {0, 0, 1, 0, -1}}, {2, 3}),
      locus("Delta6", {{0, 0, 1, 1, 0}, {0, 1, 0, -1, 0}, {1, 0, 0, 1, 1}}, {1, 2}),
      locus("Delta7", {{0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {1, 0, 0, 0, 1}}, {1, 2}),
      locus("Delta8", {{0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}, {0, 1, 1, 0, 0}}, {1, 2}),
      locus("Delta9", {{0, 0, 1, 0, 0}, {1, 1, 0, 0, 0}, {1, 0, 0, 1, 1}}, {1, 2}),
      locus("Delta10", {{0, 0, 0, 0, 1}, {0, 1, 1, 0, 0}, {1, 0, -1, 0, 0}}, {1, 2}),
  };

  // The midpoint and its two relations.
  Env b(d.bar);
  b.standard("x", "y", "r", false);
  for (int i = 0; i < 5; ++i) d.RFbar[i] = b(std::string(kLin[i]) + " + f" + std::to_string(i + 1));
  d.rvar2rel = {b("x1*f5 - x2*f4 + x3*f3 - x4*f2 + x5*f1"), b("y1*f5 - y2*f4 + y3*f3 - y4*f2 + y5*f1")};

  // The cone over G(2,5): Pfaffians of A(rb + q(xb, yb)).
  {
    auto sk = skew_variables(d.gbar, "rb");
    std::array<Poly, 10> qv;
    std::size_t k = 0;
    for (int i = 1; i <= 5; ++i)
      for (int j = i + 1; j <= 5; ++j) {
        auto xi = Poly::variable(d.gbar, "xb" + std::to_string(i)), xj = Poly::variable(d.gbar, "xb" + std::to_string(j));
        auto yi = Poly::variable(d.gbar, "yb" + std::to_string(i)), yj = Poly::variable(d.gbar, "yb" + std::to_string(j));
        qv[k++] = xi * yj - xj * yi;
      }
    SkewPolyMatrix5 qm(qv);
    auto pf = plucker(sk);
    for (std::size_t i = 0; i < 5; ++i) {
      auto [a, bb, c, dd] = kPluckerIndex[i];
      auto bil = [&](int i1, int j1, int k1, int l1) { return sk.upper(i1, j1) * qm.upper(k1, l1) + sk.upper(k1, l1) * qm.upper(i1, j1); };
      d.gbar_gens[i] = bil(a, bb, c, dd) - bil(a, c, bb, dd) + bil(a, dd, bb, c) + pf[i];
    }
    Env g(d.gbar);
    for (std::size_t i = 0; i < 5; ++i) {
      auto [a, bb, c, dd] = kPluckerIndex[i];
      g.define("Pf" + std::to_string(a) + std::to_string(bb) + std::to_string(c) + std::to_string(dd), pf[i]);
    }
    d.gr_rel = {g("xb1*Pf2345 - xb2*Pf1345 + xb3*Pf1245 - xb4*Pf1235 + xb5*Pf1234"),
                g("yb1*Pf2345 - yb2*Pf1345 + yb3*Pf1245 - yb4*Pf1235 + yb5*Pf1234")};
  }

  // The tilde scroll.
  Env t(d.tilde);
  t.standard("xt", "yt", "rt", false);
  d.rtilde = {t("x1*f5 - x2*f4 + x3*f3 - x4*f2 + x5*f1"), t("y1*f5 - y2*f4 + y3*f3 - y4*f2 + y5*f1")};
  for (int i = 0; i < 5; ++i) d.rtilde.push_back(t(std::string(kLin[i]) + " + w*f" + std::to_string(i + 1)));

  // The hat scroll, and the same equations with s = t^2.
  auto hat_equations = [&](Env& h) {
    std::vector<Poly> out;
    for (int i = 0; i < 5; ++i) out.push_back(h(std::string(kLin[i]) + " + s*f" + std::to_string(i + 1)));
    for (int i = 0; i < 4; ++i) {
      std::string n = std::to_string(i + 1);
      out.push_back(h(std::string("rh0*") + kR4[i] + " - (30*S" + n + " + 5*s*K" + n + " + 2*s^2*L" + n + ")"));
    }
    return out;
  };
  Env h(d.hat);
  h.standard("xh", "yh", "rh", true);
  d.rhat = hat_equations(h);
  Env ht(d.hat_t);
  ht.standard("xh", "yh", "rh", true);
  ht.define("s", ht("t^2"));
  d.rhat_t = hat_equations(ht);

  d.hR = PolyMap::assign(d.bar, d.tilde,
                         {{"x1", t("x1")}, {"x2", t("x2")}, {"x3", t("x3")}, {"x4", t("x4")}, {"x5", t("x5")},
                          {"y1", t("y1")}, {"y2", t("y2")}, {"y3", t("y3")}, {"y4", t("y4")}, {"y5", t("y5")},
                          {"r15", t("w*r15")}, {"r24", t("w*r24")}, {"r34", t("w*r34")}, {"r35", t("w*r35")}});
  d.gR = PolyMap::assign(d.bar, d.hat,
                         {{"x1", h("x1")}, {"x2", h("x2")}, {"x3", h("x3")}, {"x4", h("x4")}, {"x5", h("x5")},
                          {"y1", h("y1")}, {"y2", h("y2")}, {"y3", h("y3")}, {"y4", h("y4")}, {"y5", h("y5")},
                          {"r15", h("s*r15")}, {"r24", h("s*r24")}, {"r34", h("s*r34")}, {"r35", h("s*r35")}});
  {
    std::vector<std::pair<std::string, Poly>> img;
    for (int i = 1; i <= 5; ++i) {
      img.emplace_back("x" + std::to_string(i), ht("t*x" + std::to_string(i)));
      img.emplace_back("y" + std::to_string(i), ht("t*y" + std::to_string(i)));
    }
    for (const char* r : kR4) img.emplace_back(r, ht(std::string("t^4*") + r));
    img.emplace_back("r0", Poly::variable(d.hat_t, "rh0"));
    d.fR = PolyMap(d.ring, d.hat_t, PolyMap::assign(d.ring, d.hat_t, img).images(), 3);
  }
  {
    std::vector<std::pair<std::string, Poly>> img;
    img.emplace_back("s", Poly::constant(d.ring, 1));
    img.emplace_back("rh0", Poly::variable(d.ring, "r0"));
    for (const char* r : kR4) img.emplace_back(std::string("rh") + (r + 1), Poly::variable(d.ring, r));
    for (int i = 1; i <= 5; ++i) {
      img.emplace_back("xh" + std::to_string(i), Poly::variable(d.ring, "x" + std::to_string(i)));
      img.emplace_back("yh" + std::to_string(i), Poly::variable(d.ring, "y" + std::to_string(i)));
    }
    d.s_to_one = PolyMap::assign(d.hat, d.ring, img);
  }
  {
    std::vector<std::pair<std::string, Poly>> img;
    for (int i = 1; i <= 5; ++i) {
      std::string n = std::to_string(i);
      img.emplace_back("x" + n, b("y" + n));
      img.emplace_back("y" + n, b("-x" + n));
    }
    d.swap_xy = PolyMap(d.bar, d.bar, PolyMap::assign(d.bar, d.bar, img).images(), 1);
  }

  d.scroll_cases = {
      ScrollCase{"case1",
                 {{"x1", "0"}, {"x2", "-y1"}, {"x3", "0"}, {"x4", "-y2"}, {"x5", "-y3"}, {"y4", "0"}, {"y5", "0"}},
                 {{{"z1", "z2", "z3"}, {"z2", "z4", "z5"}}}},
      ScrollCase{"case2",
                 {{"x1", "0"}, {"x2", "-y1"}, {"x3", "-y2"}, {"x4", "-y3"}, {"x5", "0"}, {"y4", "0"}, {"y5", "0"}},
                 {{{"z1", "z2", "z3"}, {"z2", "z3", "z4"}}}},
  };

  for (const auto& p : d.q) expect_degree(p, 2, "q_ij");
  for (int i = 0; i < 5; ++i) expect_degree(d.f[i], 4, "f" + std::to_string(i + 1));
  for (int i = 0; i < 9; ++i) expect_degree(d.RF[i], 4, "RF" + std::to_string(i + 1));
  for (int i = 0; i < 4; ++i) {
    std::string n = std::to_string(i + 1);
    expect_degree(d.S[i], 4, "S" + n);
    expect_degree(d.K[i], 4, "K" + n);
    expect_degree(d.L[i], 4, "L" + n);
    expect_degree(d.U[i], 4, "U" + n);
  }
  return d;
}

}  // namespace

std::size_t q_slot(int i, int j) { return SkewPolyMatrix5::slot(i, j); }

const Poly& Data::qij(int i, int j) const { return q[q_slot(i, j)]; }

const Data& data() {
  static const Data d = build();
  return d;
}

std::vector<Rational> apply_to_point(const PolyMap& m, const std::vector<Rational>& point) {
  std::vector<Rational> out;
  out.reserve(m.images().size());
  for (const auto& p : m.images()) out.push_back(p.evaluate(point));
  return out;
}

SkewRat5 chart_matrix(const std::vector<Rational>& p) {
  const Data& d = data();
  const Ring& r = *d.tilde;
  if (p.size() != r.arity()) throw std::invalid_argument("chart_matrix: point has wrong length");
  auto v = [&](const std::string& n) -> const Rational& { return p[r.index(n)]; };
  if (v("rt34") != 1) throw std::invalid_argument("chart_matrix: point is not in the chart rt34 = 1");
  Rational a15 = v("rt15"), a24 = v("rt24"), a35 = v("rt35");
  Rational u = 1 + a35;
  if (u == 0) throw std::domain_error("chart_matrix: 1 + rt35 = 0 is excluded");
  auto x = [&](int i) { return v("xt" + std::to_string(i)); };
  auto y = [&](int i) { return v("yt" + std::to_string(i)); };
  Rational q34 = x(3) * y(4) - x(4) * y(3);
  return SkewRat5({u * (v("w") + q34), x(1) + x(4) * u, x(2) - x(3) * a24 - x(4) * u, x(1) * a35 + x(5) * u,
                   y(1) + y(4) * u, y(2) - y(3) * a24 - y(4) * u, y(1) * a35 + y(5) * u, a24, -a15, a35});
}

std::optional<std::vector<Rational>> sample_tilde_point(Sampler& rng, bool chart34) {
  const Data& d = data();
  const Ring& ring = *d.tilde;
  std::vector<Rational> p(ring.arity());
  for (const char* n : {"rt15", "rt24", "rt34", "rt35"}) p[ring.index(n)] = rng.rational();
  if (chart34) p[ring.index("rt34")] = 1;
  Rational f1 = d.f[0].evaluate({0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, p[0], p[1], p[2], p[3]});
  if (f1 == 0) return std::nullopt;
  // xt1..xt4 free, xt5 from the first relation (its xt5 coefficient is f1).
  for (int i = 1; i <= 4; ++i) p[ring.index("xt" + std::to_string(i))] = rng.rational();
  std::size_t x5 = ring.index("xt5");
  p[x5] = 0;
  p[x5] = -d.rtilde[0].evaluate(p) / f1;
  // Remaining equations are linear homogeneous in (yt, w).
  std::vector<std::size_t> unknowns;
  for (int i = 1; i <= 5; ++i) unknowns.push_back(ring.index("yt" + std::to_string(i)));
  unknowns.push_back(ring.index("w"));
  RatMatrix a(d.rtilde.size() - 1, unknowns.size());
  for (std::size_t e = 1; e < d.rtilde.size(); ++e)
    for (std::size_t u = 0; u < unknowns.size(); ++u) {
      auto q = p;
      q[unknowns[u]] = 1;
      a(e - 1, u) = d.rtilde[e].evaluate(q);
    }
  auto basis = rat_nullspace(a);
  if (basis.empty()) return std::nullopt;
  std::vector<Rational> sol(unknowns.size());
  for (const auto& v : basis) {
    Rational c = rng.rational();
    for (std::size_t u = 0; u < sol.size(); ++u) sol[u] += c * v[u];
  }
  for (std::size_t u = 0; u < unknowns.size(); ++u) p[unknowns[u]] = sol[u];
  return p;
}

std::optional<std::vector<Rational>> sample_r0_chart_point(Sampler& rng) {
  const Data& d = data();
  auto t = sample_tilde_point(rng, false);
  if (!t) return std::nullopt;
  auto b = apply_to_point(*d.hR, *t);  // point of the midpoint
  std::vector<Rational> p(d.ring->arity());
  for (std::size_t i = 0; i < 10; ++i) p[i] = b[i];
  for (std::size_t i = 0; i < 4; ++i) p[11 + i] = b[10 + i];
  for (std::size_t i = 0; i < 4; ++i) {
    if (p[11 + i] == 0) continue;
    p[10] = 30 * d.U[i].evaluate(p) / p[11 + i];
    if (p[10] == 0) return std::nullopt;
    return p;
  }
  return std::nullopt;
}

}  // namespace qfano::type_r
