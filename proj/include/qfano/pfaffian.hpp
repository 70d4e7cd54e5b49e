#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>

#include "qfano/poly.hpp"
#include "qfano/rational.hpp"

namespace qfano {

// Upper entries t_ij (1 <= i < j <= 5) of a 5x5 skew-symmetric matrix, stored
// in the order 12,13,14,15,23,24,25,34,35,45. Lower entries are implied.
template <class T>
class Skew5 {
 public:
  Skew5() = default;
  explicit Skew5(std::array<T, 10> upper) : t_(std::move(upper)) {}

  static std::size_t slot(int i, int j) {
    if (i < 1 || j > 5 || i >= j) throw std::out_of_range("skew index");
    static constexpr int base[5] = {0, 4, 7, 9, 10};
    return static_cast<std::size_t>(base[i - 1] + (j - i - 1));
  }

  // Entry A_ij with A_ji = -A_ij; the diagonal is not representable here.
  T at(int i, int j) const {
    if (i < j) return t_[slot(i, j)];
    if (i > j) return -t_[slot(j, i)];
    throw std::out_of_range("skew diagonal");
  }
  const T& upper(int i, int j) const { return t_[slot(i, j)]; }
  T& upper(int i, int j) { return t_[slot(i, j)]; }
  const std::array<T, 10>& entries() const { return t_; }

 private:
  std::array<T, 10> t_{};
};

using SkewPolyMatrix5 = Skew5<Poly>;
using SkewRat5 = Skew5<Rational>;

using Quad = std::array<int, 4>;
// Fixed order of the Plucker system.
inline constexpr std::array<Quad, 5> kPluckerIndex = {
    Quad{1, 2, 3, 4}, Quad{1, 2, 3, 5}, Quad{1, 2, 4, 5}, Quad{1, 3, 4, 5}, Quad{2, 3, 4, 5}};

inline void check_quad(const Quad& q) {
  if (q[0] < 1 || q[3] > 5 || !(q[0] < q[1] && q[1] < q[2] && q[2] < q[3]))
    throw std::invalid_argument("pfaffian index set must be strictly increasing in 1..5");
}

template <class T>
T pfaffian4(const Skew5<T>& m, const Quad& q) {
  check_quad(q);
  auto [i, j, k, l] = q;
  return m.upper(i, j) * m.upper(k, l) - m.upper(i, k) * m.upper(j, l) + m.upper(i, l) * m.upper(j, k);
}

template <class T>
std::array<T, 5> plucker(const Skew5<T>& m) {
  return {pfaffian4(m, kPluckerIndex[0]), pfaffian4(m, kPluckerIndex[1]), pfaffian4(m, kPluckerIndex[2]),
          pfaffian4(m, kPluckerIndex[3]), pfaffian4(m, kPluckerIndex[4])};
}

template <class T>
Skew5<T> wedge2(const std::array<T, 5>& u, const std::array<T, 5>& v) {
  std::array<T, 10> t;
  std::size_t s = 0;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) t[s++] = u[i] * v[j] - u[j] * v[i];
  return Skew5<T>(std::move(t));
}

template <class T>
Skew5<T> operator+(const Skew5<T>& a, const Skew5<T>& b) {
  std::array<T, 10> t;
  for (std::size_t s = 0; s < 10; ++s) t[s] = a.entries()[s] + b.entries()[s];
  return Skew5<T>(std::move(t));
}

// Skew matrix of the ten variables named <stem>12, ..., <stem>45 of a ring.
SkewPolyMatrix5 skew_variables(const RingPtr& ring, const std::string& stem);

struct UndefinedMap : std::domain_error {
  using std::domain_error::domain_error;
};

// [Pf2345, -Pf1345, Pf1245, -Pf1235, Pf1234]; throws UndefinedMap at rank <= 2.
std::array<Rational, 5> mu_map(const SkewRat5& r);

enum class LineProfile { disjoint, one_point, tangent, two_points, contained };
std::string to_string(LineProfile p);

// Spanning vectors of a decomposable skew vector: rows i and j of the matrix
// for the first nonzero r_ij. Throws std::invalid_argument otherwise.
std::pair<std::array<Rational, 5>, std::array<Rational, 5>> line_basis(const SkewRat5& r);

// Incidence of the line r with the quadric Q (a form in 5 variables). With a
// hyperplane coordinate h, Q is read as a quadric inside {p_h = 0}: a line
// leaving the hyperplane meets it in one point, reported as disjoint or
// one_point according to whether that point lies on Q.
LineProfile line_quadric_profile(const SkewRat5& r, const Poly& q,
                                 std::optional<std::size_t> hyperplane = std::nullopt);

}  // namespace qfano
