#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qfano/rational.hpp"
#include "qfano/ring.hpp"

namespace qfano {

struct Monomial {
  int wdeg = 0;  // weighted degree under the ring's primary weights
  std::vector<std::uint16_t> exp;

  bool operator==(const Monomial& o) const { return exp == o.exp; }
};

// Graded lexicographic, leading term first.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.wdeg != b.wdeg) return a.wdeg > b.wdeg;
    return a.exp > b.exp;
  }
};

Monomial make_monomial(const Ring& ring, std::vector<std::uint16_t> exp);
Monomial monomial_product(const Monomial& a, const Monomial& b);

class Poly {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialOrder>;

  Poly() = default;
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

  static Poly constant(RingPtr ring, const Rational& c);
  static Poly variable(RingPtr ring, std::size_t index);
  static Poly variable(RingPtr ring, std::string_view name);
  static Poly term(RingPtr ring, const Monomial& m, const Rational& c);

  const RingPtr& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& c);
  Poly operator-() const;

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend Poly operator+(Poly a, const Rational& c);
  friend Poly operator-(Poly a, const Rational& c);

  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly pow(unsigned e) const;

  // Primary weighted degree; nullopt for inhomogeneous input and for zero.
  std::optional<int> weighted_degree() const;
  // Degree under ring().gradings()[row], same conventions.
  std::optional<int> grading_degree(std::size_t row) const;
  // Largest weighted degree of a term (zero polynomial gives -1).
  int max_degree() const;

  Rational evaluate(const std::vector<Rational>& point) const;
  Poly derivative(std::size_t var) const;
  Rational coefficient(const Monomial& m) const;
  bool involves(std::size_t var) const;

  // Deterministic "coeff*var^e*..." text in canonical term order.
  std::string to_string() const;

  // Adds c*m in place; used by bulk builders.
  void add_term(const Monomial& m, const Rational& c);

 private:
  void check_ring(const Poly& o) const;

  RingPtr ring_;
  TermMap terms_;
};

// Ring homomorphism given by one image per source variable.
class PolyMap {
 public:
  PolyMap(RingPtr source, RingPtr target, std::vector<Poly> images,
          std::optional<int> graded_scale = std::nullopt);

  static PolyMap identity(const RingPtr& ring);
  // Sends each source variable to the same-named target variable.
  static PolyMap embedding(const RingPtr& source, const RingPtr& target);
  // Named images; every other source variable goes to its namesake in target.
  static PolyMap assign(const RingPtr& source, const RingPtr& target,
                        const std::vector<std::pair<std::string, Poly>>& images);

  const RingPtr& source() const { return source_; }
  const RingPtr& target() const { return target_; }
  const Poly& image(std::size_t i) const { return images_.at(i); }
  const std::vector<Poly>& images() const { return images_; }
  std::optional<int> graded_scale() const { return scale_; }

  // Substitute this map, then substitute `next` into the result.
  PolyMap followed_by(const PolyMap& next) const;

  bool operator==(const PolyMap& o) const;

 private:
  RingPtr source_;
  RingPtr target_;
  std::vector<Poly> images_;
  std::optional<int> scale_;
};

Poly substitute(const Poly& p, const PolyMap& m);

// Weighted monomials of exact degree d (primary weights).
std::vector<Monomial> monomials_of_degree(const Ring& ring, int d);

}  // namespace qfano
