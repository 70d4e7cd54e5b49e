#pragma once

#include <optional>
#include <vector>

#include "qfano/poly.hpp"
#include "qfano/rational.hpp"

namespace qfano {

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);
  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  RatMatrix transpose() const;
  Rational trace() const;
  bool operator==(const RatMatrix& o) const;
  bool operator!=(const RatMatrix& o) const { return !(*this == o); }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
std::vector<Rational> operator*(const RatMatrix& a, const std::vector<Rational>& v);

std::size_t rat_rank(const RatMatrix& m);
Rational rat_det(const RatMatrix& m);
// A particular solution of a*x = b, or nullopt when the system is inconsistent.
std::optional<std::vector<Rational>> rat_solve(const RatMatrix& a, const std::vector<Rational>& b);
// Basis of {x : a*x = 0}, one vector per free column.
std::vector<std::vector<Rational>> rat_nullspace(const RatMatrix& a);

class PolyMatrix {
 public:
  PolyMatrix() : rows_(0), cols_(0) {}
  PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols);

  const RingPtr& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Poly& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Poly& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool is_zero() const;
  bool operator==(const PolyMatrix& o) const;
  bool operator!=(const PolyMatrix& o) const { return !(*this == o); }
  PolyMatrix operator-(const PolyMatrix& o) const;

  RatMatrix evaluate(const std::vector<Rational>& point) const;
  PolyMatrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
  // Cofactor expansion; meant for the small square blocks used by minor tests.
  Poly det() const;

 private:
  RingPtr ring_;
  std::size_t rows_, cols_;
  std::vector<Poly> a_;
};

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);

// Entry (i,j) is the partial derivative of polys[i] by ring variable j.
PolyMatrix jacobian(const RingPtr& ring, const std::vector<Poly>& polys);

// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k);

}  // namespace qfano
