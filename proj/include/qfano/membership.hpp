#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qfano/matrix.hpp"
#include "qfano/poly.hpp"

namespace qfano {

class GeneratorSet {
 public:
  explicit GeneratorSet(std::vector<Poly> gens);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Poly>& gens() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  const Poly& operator[](std::size_t i) const { return gens_[i]; }

 private:
  RingPtr ring_;
  std::vector<Poly> gens_;
};

// target = sum coefficients[i] * gens[i]; the constructor re-expands and throws
// std::logic_error if the identity fails.
class MembershipCertificate {
 public:
  MembershipCertificate(Poly target, std::vector<Poly> coefficients, const GeneratorSet& gens,
                        std::optional<int> bound);

  const Poly& target() const { return target_; }
  const std::vector<Poly>& coefficients() const { return coefficients_; }
  std::optional<int> bound() const { return bound_; }

  // "g<i>: <poly>" entries for nonzero coefficients, 1-based generator index.
  std::vector<std::string> serialize() const;
  std::size_t support() const;

 private:
  Poly target_;
  std::vector<Poly> coefficients_;
  std::optional<int> bound_;
};

enum class Ansatz {
  graded,  // coefficient degrees forced by the grading (capped by the bound)
  full     // every monomial of weighted degree <= bound
};

// Default cap for inhomogeneous targets.
inline constexpr int kDefaultDegreeCap = 4;

// nullopt means "no certificate at this bound", never non-membership.
std::optional<MembershipCertificate> find_certificate(const Poly& target, const GeneratorSet& gens,
                                                      std::optional<int> bound = std::nullopt,
                                                      Ansatz ansatz = Ansatz::graded);

// One certificate per substitute(g, map), g in source_gens, over image_gens.
std::optional<std::vector<MembershipCertificate>> map_preserves(const PolyMap& map, const GeneratorSet& source_gens,
                                                                const GeneratorSet& image_gens,
                                                                std::optional<int> bound = std::nullopt);

// Rows M with substitute(polys[k], map) = sum_l M[k][l] polys[l]. Throws
// std::invalid_argument when polys are dependent; nullopt when an image leaves the span.
std::optional<RatMatrix> linear_span_matrix(const std::vector<Poly>& polys, const PolyMap& map);

// Coordinates of p in the span of independent polys, or nullopt.
std::optional<std::vector<Rational>> span_coordinates(const Poly& p, const std::vector<Poly>& polys);

std::optional<MembershipCertificate> equal_mod_ideal(const Poly& p, const Poly& q, const GeneratorSet& gens,
                                                     std::optional<int> bound = std::nullopt);

}  // namespace qfano
