#include "qfano/sparse_solve.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qfano {

namespace {

void divide_content(std::vector<std::pair<std::size_t, Integer>>& row) {
  Integer g = 0;
  for (const auto& [c, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) return;
  }
  if (g == 0) return;
  for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

}  // namespace

void SparseSystem::reduce(Row& row) const {
  while (!row.empty()) {
    std::size_t lead = row.front().first;
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), lead,
                               [](const auto& p, std::size_t c) { return p.first < c; });
    if (it == pivots_.end() || it->first != lead) return;
    const Row& piv = it->second;
    // row <- p*row - a*piv, where p and a are the two leading coefficients
    Integer g;
    mpz_gcd(g.get_mpz_t(), piv.front().second.get_mpz_t(), row.front().second.get_mpz_t());
    Integer p = piv.front().second / g;
    Integer a = row.front().second / g;
    Row out;
    out.reserve(row.size() + piv.size());
    std::size_t i = 0, j = 0;
    while (i < row.size() || j < piv.size()) {
      if (j == piv.size() || (i < row.size() && row[i].first < piv[j].first)) {
        out.emplace_back(row[i].first, p * row[i].second);
        ++i;
      } else if (i == row.size() || piv[j].first < row[i].first) {
        out.emplace_back(piv[j].first, -a * piv[j].second);
        ++j;
      } else {
        Integer v = p * row[i].second - a * piv[j].second;
        if (v != 0) out.emplace_back(row[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    divide_content(out);
    row = std::move(out);
  }
}

void SparseSystem::add_equation(const std::vector<std::pair<std::size_t, Rational>>& entries,
                                const Rational& rhs) {
  std::map<std::size_t, Rational> merged;
  for (const auto& [c, v] : entries) {
    if (c >= n_) throw std::out_of_range("sparse system: column out of range");
    merged[c] += v;
  }
  if (rhs != 0) merged[n_] = rhs;
  Integer l = 1;
  for (const auto& [c, v] : merged) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  Row row;
  for (const auto& [c, v] : merged)
    if (v != 0) row.emplace_back(c, v.get_num() * (l / v.get_den()));
  divide_content(row);
  reduce(row);
  if (row.empty()) return;
  if (row.front().first == n_) {
    consistent_ = false;
    return;
  }
  auto it = std::lower_bound(pivots_.begin(), pivots_.end(), row.front().first,
                             [](const auto& p, std::size_t c) { return p.first < c; });
  pivots_.insert(it, {row.front().first, std::move(row)});
}

std::optional<std::vector<Rational>> SparseSystem::solve() const {
  if (!consistent_) return std::nullopt;
  std::vector<Rational> x(n_);
  for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
    const Row& row = it->second;
    Rational acc = 0;
    for (std::size_t k = 1; k < row.size(); ++k) {
      const auto& [c, v] = row[k];
      if (c == n_) acc += Rational(v);
      else if (x[c] != 0) acc -= Rational(v) * x[c];
    }
    x[it->first] = acc / Rational(row.front().second);
  }
  return x;
}

}  // namespace qfano
