#include "qfano/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace qfano {

Monomial make_monomial(const Ring& ring, std::vector<std::uint16_t> exp) {
  if (exp.size() != ring.arity()) throw std::invalid_argument("monomial arity mismatch");
  Monomial m;
  for (std::size_t i = 0; i < exp.size(); ++i) m.wdeg += ring.weight(i) * exp[i];
  m.exp = std::move(exp);
  return m;
}

Monomial monomial_product(const Monomial& a, const Monomial& b) {
  Monomial m;
  m.wdeg = a.wdeg + b.wdeg;
  m.exp.resize(a.exp.size());
  for (std::size_t i = 0; i < a.exp.size(); ++i) m.exp[i] = a.exp[i] + b.exp[i];
  return m;
}

Poly Poly::constant(RingPtr ring, const Rational& c) {
  Poly p(std::move(ring));
  if (c != 0) p.terms_.emplace(make_monomial(*p.ring_, std::vector<std::uint16_t>(p.ring_->arity(), 0)), c);
  return p;
}

Poly Poly::variable(RingPtr ring, std::size_t index) {
  Poly p(std::move(ring));
  std::vector<std::uint16_t> e(p.ring_->arity(), 0);
  e.at(index) = 1;
  p.terms_.emplace(make_monomial(*p.ring_, std::move(e)), Rational(1));
  return p;
}

Poly Poly::variable(RingPtr ring, std::string_view name) {
  std::size_t i = ring->index(name);
  return variable(std::move(ring), i);
}

Poly Poly::term(RingPtr ring, const Monomial& m, const Rational& c) {
  Poly p(std::move(ring));
  if (c != 0) p.terms_.emplace(m, c);
  return p;
}

void Poly::check_ring(const Poly& o) const {
  if (ring_ != o.ring_) {
    if (!ring_ || !o.ring_) throw std::invalid_argument("poly: unbound ring");
    throw std::invalid_argument("poly: ring mismatch");
  }
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  check_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_ring(b);
  Poly out(a.ring_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(monomial_product(ma, mb), ca * cb);
  return out;
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& [m, v] : out.terms_) v = -v;
  return out;
}

Poly operator+(Poly a, const Rational& c) {
  return a += Poly::constant(a.ring(), c);
}

Poly operator-(Poly a, const Rational& c) {
  return a -= Poly::constant(a.ring(), c);
}

bool Poly::operator==(const Poly& o) const {
  check_ring(o);
  if (terms_.size() != o.terms_.size()) return false;
  auto it = o.terms_.begin();
  for (const auto& [m, c] : terms_) {
    if (!(m == it->first) || c != it->second) return false;
    ++it;
  }
  return true;
}

Poly Poly::pow(unsigned e) const {
  Poly result = constant(ring_, 1);
  Poly base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

std::optional<int> Poly::weighted_degree() const {
  if (terms_.empty()) return std::nullopt;
  int d = terms_.begin()->first.wdeg;
  for (const auto& [m, c] : terms_)
    if (m.wdeg != d) return std::nullopt;
  return d;
}

std::optional<int> Poly::grading_degree(std::size_t row) const {
  if (terms_.empty()) return std::nullopt;
  const auto& w = ring_->gradings().at(row).weights;
  std::optional<int> d;
  for (const auto& [m, c] : terms_) {
    int s = 0;
    for (std::size_t i = 0; i < m.exp.size(); ++i) s += w[i] * m.exp[i];
    if (d && *d != s) return std::nullopt;
    d = s;
  }
  return d;
}

int Poly::max_degree() const {
  return terms_.empty() ? -1 : terms_.begin()->first.wdeg;
}

Rational Poly::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != ring_->arity()) throw std::invalid_argument("evaluate: arity mismatch");
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational v = c;
    for (std::size_t i = 0; i < m.exp.size() && v != 0; ++i)
      for (unsigned k = 0; k < m.exp[i]; ++k) v *= point[i];
    total += v;
  }
  return total;
}

Poly Poly::derivative(std::size_t var) const {
  Poly out(ring_);
  for (const auto& [m, c] : terms_) {
    if (m.exp.at(var) == 0) continue;
    Monomial d = m;
    d.exp[var] -= 1;
    d.wdeg -= ring_->weight(var);
    out.add_term(d, c * static_cast<long>(m.exp[var]));
  }
  return out;
}

Rational Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool Poly::involves(std::size_t var) const {
  for (const auto& [m, c] : terms_)
    if (m.exp.at(var) != 0) return true;
  return false;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    os << a.get_str();
    for (std::size_t i = 0; i < m.exp.size(); ++i) {
      if (m.exp[i] == 0) continue;
      os << '*' << ring_->name(i);
      if (m.exp[i] > 1) os << '^' << m.exp[i];
    }
  }
  return os.str();
}

PolyMap::PolyMap(RingPtr source, RingPtr target, std::vector<Poly> images,
                 std::optional<int> graded_scale)
    : source_(std::move(source)),
      target_(std::move(target)),
      images_(std::move(images)),
      scale_(graded_scale) {
  if (images_.size() != source_->arity()) throw std::invalid_argument("polymap: image count differs from source arity");
  for (const auto& p : images_)
    if (p.ring() != target_) throw std::invalid_argument("polymap: image outside target ring");
  if (scale_) {
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i].is_zero()) continue;
      auto d = images_[i].weighted_degree();
      if (!d || *d != *scale_ * source_->weight(i))
        throw std::invalid_argument("polymap: image of " + source_->name(i) + " breaks the declared grading");
    }
  }
}

PolyMap PolyMap::identity(const RingPtr& ring) {
  std::vector<Poly> images;
  for (std::size_t i = 0; i < ring->arity(); ++i) images.push_back(Poly::variable(ring, i));
  return PolyMap(ring, ring, std::move(images), 1);
}

PolyMap PolyMap::embedding(const RingPtr& source, const RingPtr& target) {
  return assign(source, target, {});
}

PolyMap PolyMap::assign(const RingPtr& source, const RingPtr& target,
                        const std::vector<std::pair<std::string, Poly>>& named) {
  std::vector<std::optional<Poly>> slots(source->arity());
  for (const auto& [name, p] : named) slots.at(source->index(name)) = p;
  std::vector<Poly> images;
  for (std::size_t i = 0; i < source->arity(); ++i) {
    if (slots[i]) {
      images.push_back(*slots[i]);
    } else {
      auto j = target->find(source->name(i));
      if (!j) throw std::invalid_argument("polymap: no image for " + source->name(i));
      images.push_back(Poly::variable(target, *j));
    }
  }
  return PolyMap(source, target, std::move(images));
}

PolyMap PolyMap::followed_by(const PolyMap& next) const {
  if (next.source_ != target_) throw std::invalid_argument("polymap: composition ring mismatch");
  std::vector<Poly> images;
  for (const auto& p : images_) images.push_back(substitute(p, next));
  std::optional<int> scale;
  if (scale_ && next.scale_) scale = *scale_ * *next.scale_;
  return PolyMap(source_, next.target_, std::move(images), scale);
}

bool PolyMap::operator==(const PolyMap& o) const {
  return source_ == o.source_ && target_ == o.target_ && images_ == o.images_;
}

Poly substitute(const Poly& p, const PolyMap& m) {
  if (p.ring() != m.source()) throw std::invalid_argument("substitute: ring mismatch");
  const std::size_t n = p.ring()->arity();
  // powers[i][k] = image(i)^k, filled lazily
  std::vector<std::vector<Poly>> powers(n);
  auto power = [&](std::size_t i, unsigned k) -> const Poly& {
    auto& v = powers[i];
    if (v.empty()) v.push_back(Poly::constant(m.target(), 1));
    while (v.size() <= k) v.push_back(v.back() * m.image(i));
    return v[k];
  };
  Poly out(m.target());
  for (const auto& [mono, c] : p.terms()) {
    Poly t = Poly::constant(m.target(), c);
    for (std::size_t i = 0; i < n && !t.is_zero(); ++i)
      if (mono.exp[i]) t *= power(i, mono.exp[i]);
    out += t;
  }
  return out;
}

namespace {

void enumerate(const Ring& ring, std::size_t var, int remaining, std::vector<std::uint16_t>& exp,
               std::vector<Monomial>& out) {
  if (var == ring.arity()) {
    if (remaining == 0) out.push_back(make_monomial(ring, exp));
    return;
  }
  int w = ring.weight(var);
  for (int e = remaining / w; e >= 0; --e) {
    exp[var] = static_cast<std::uint16_t>(e);
    enumerate(ring, var + 1, remaining - e * w, exp, out);
  }
  exp[var] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(const Ring& ring, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  std::vector<std::uint16_t> exp(ring.arity(), 0);
  enumerate(ring, 0, d, exp, out);
  return out;
}

}  // namespace qfano
