#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qfano/rational.hpp"

namespace qfano {

// Sparse linear system A*x = b with rational entries, solved by incremental
// fraction-free integer elimination. Sized for certificate ansatz systems.
class SparseSystem {
 public:
  explicit SparseSystem(std::size_t unknowns) : n_(unknowns) {}

  // Row given as (column, coefficient) pairs; columns may repeat.
  void add_equation(const std::vector<std::pair<std::size_t, Rational>>& row, const Rational& rhs);

  std::size_t unknowns() const { return n_; }
  std::size_t rank() const { return pivots_.size(); }
  bool consistent() const { return consistent_; }

  // Particular solution with free unknowns set to zero.
  std::optional<std::vector<Rational>> solve() const;

 private:
  using Row = std::vector<std::pair<std::size_t, Integer>>;
  void reduce(Row& row) const;

  std::size_t n_;
  bool consistent_ = true;
  std::vector<std::pair<std::size_t, Row>> pivots_;  // sorted by leading column
};

}  // namespace qfano
