#include "qfano/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace qfano {

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    a_.insert(a_.end(), r.begin(), r.end());
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Rational RatMatrix::trace() const {
  Rational t = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

bool RatMatrix::operator==(const RatMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
  RatMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

std::vector<Rational> operator*(const RatMatrix& a, const std::vector<Rational>& v) {
  if (a.cols() != v.size()) throw std::invalid_argument("matrix-vector product: shape mismatch");
  std::vector<Rational> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * v[j];
  return out;
}

namespace {

using IntRows = std::vector<std::vector<Integer>>;

// Rows scaled by the lcm of their denominators.
IntRows integer_rows(const RatMatrix& m, const std::vector<Rational>* rhs = nullptr) {
  IntRows out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    if (rhs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), (*rhs)[i].get_den_mpz_t());
    auto& row = out[i];
    row.reserve(m.cols() + (rhs ? 1 : 0));
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_num() * (l / m(i, j).get_den()));
    if (rhs) row.push_back((*rhs)[i].get_num() * (l / (*rhs)[i].get_den()));
  }
  return out;
}

struct Echelon {
  IntRows rows;
  std::vector<std::size_t> pivot_cols;
  int sign = 1;
  Integer last_pivot = 1;
};

// Bareiss fraction-free elimination; every division below is exact.
Echelon bareiss(IntRows a, std::size_t ncols) {
  Echelon e;
  std::size_t r = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < ncols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      e.sign = -e.sign;
    }
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      for (std::size_t j = c + 1; j < a[i].size(); ++j) {
        a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    e.pivot_cols.push_back(c);
    ++r;
  }
  e.last_pivot = prev;
  e.rows = std::move(a);
  return e;
}

// Solves the echelon system; entries of x at free columns are kept as given.
std::vector<Rational> back_substitute(const Echelon& e, std::size_t ncols,
                                      std::vector<Rational> x, bool augmented) {
  for (std::size_t k = e.pivot_cols.size(); k-- > 0;) {
    std::size_t c = e.pivot_cols[k];
    const auto& row = e.rows[k];
    Rational acc = augmented ? Rational(row[ncols]) : Rational(0);
    for (std::size_t j = c + 1; j < ncols; ++j)
      if (row[j] != 0 && x[j] != 0) acc -= Rational(row[j]) * x[j];
    x[c] = acc / Rational(row[c]);
  }
  return x;
}

}  // namespace

std::size_t rat_rank(const RatMatrix& m) {
  return bareiss(integer_rows(m), m.cols()).pivot_cols.size();
}

Rational rat_det(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix not square");
  if (m.rows() == 0) return 1;
  Integer scale = 1;
  IntRows rows = integer_rows(m);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    scale *= l;
  }
  Echelon e = bareiss(std::move(rows), m.cols());
  if (e.pivot_cols.size() < m.rows()) return 0;
  return Rational(e.sign * e.last_pivot) / Rational(scale);
}

std::optional<std::vector<Rational>> rat_solve(const RatMatrix& a, const std::vector<Rational>& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: right-hand side length mismatch");
  Echelon e = bareiss(integer_rows(a, &b), a.cols() + 1);
  if (!e.pivot_cols.empty() && e.pivot_cols.back() == a.cols()) return std::nullopt;
  return back_substitute(e, a.cols(), std::vector<Rational>(a.cols()), true);
}

std::vector<std::vector<Rational>> rat_nullspace(const RatMatrix& a) {
  Echelon e = bareiss(integer_rows(a), a.cols());
  std::vector<bool> pivot(a.cols(), false);
  for (auto c : e.pivot_cols) pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (pivot[f]) continue;
    std::vector<Rational> x(a.cols());
    x[f] = 1;
    basis.push_back(back_substitute(e, a.cols(), std::move(x), false));
  }
  return basis;
}

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), a_(rows * cols, Poly(ring_)) {}

bool PolyMatrix::is_zero() const {
  for (const auto& p : a_)
    if (!p.is_zero()) return false;
  return true;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix difference: shape mismatch");
  PolyMatrix d = *this;
  for (std::size_t k = 0; k < a_.size(); ++k) d.a_[k] -= o.a_[k];
  return d;
}

RatMatrix PolyMatrix::evaluate(const std::vector<Rational>& point) const {
  RatMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).evaluate(point);
  return m;
}

PolyMatrix PolyMatrix::submatrix(const std::vector<std::size_t>& rows,
                                 const std::vector<std::size_t>& cols) const {
  PolyMatrix s(ring_, rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = (*this)(rows[i], cols[j]);
  return s;
}

Poly PolyMatrix::det() const {
  if (rows_ != cols_) throw std::invalid_argument("det: matrix not square");
  if (rows_ == 0) return Poly::constant(ring_, 1);
  if (rows_ == 1) return a_[0];
  Poly total(ring_);
  std::vector<std::size_t> rest;
  for (std::size_t i = 1; i < rows_; ++i) rest.push_back(i);
  for (std::size_t j = 0; j < cols_; ++j) {
    if ((*this)(0, j).is_zero()) continue;
    std::vector<std::size_t> cols;
    for (std::size_t k = 0; k < cols_; ++k)
      if (k != j) cols.push_back(k);
    Poly t = (*this)(0, j) * submatrix(rest, cols).det();
    if (j % 2) total -= t;
    else total += t;
  }
  return total;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
  PolyMatrix c(a.ring(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      for (std::size_t k = 0; k < a.cols(); ++k)
        if (!a(i, k).is_zero() && !b(k, j).is_zero()) c(i, j) += a(i, k) * b(k, j);
  return c;
}

PolyMatrix jacobian(const RingPtr& ring, const std::vector<Poly>& polys) {
  PolyMatrix j(ring, polys.size(), ring->arity());
  for (std::size_t i = 0; i < polys.size(); ++i)
    for (std::size_t v = 0; v < ring->arity(); ++v) j(i, v) = polys[i].derivative(v);
  return j;
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

}  // namespace qfano
