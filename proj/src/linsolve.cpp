#include "lgn/linsolve.hpp"

namespace lgn {

void LinearSystem::add_equation(std::vector<Scalar> coeffs, Scalar rhs) {
  if (coeffs.size() != n_) throw std::invalid_argument("equation width mismatch");
  coeffs.push_back(std::move(rhs));
  rows_.push_back(std::move(coeffs));
}

namespace {

Scalar exact_quotient(const Scalar& num, const Scalar& den) {
  if (!num.is_laurent()) return num * den.inverse();
  auto q = num.laurent().divide_exact(den.laurent());
  if (!q) throw StructuralInconsistency("linear system has no solution in Z[q^{1/2},q^{-1/2}]");
  return Scalar(*q);
}

// Eliminates in place; returns pivot column per row (or -1).
std::vector<int> eliminate(std::vector<std::vector<Scalar>>& m, size_t cols) {
  std::vector<int> piv_col;
  size_t row = 0;
  for (size_t c = 0; c < cols && row < m.size(); ++c) {
    size_t best = m.size();
    for (size_t r = row; r < m.size(); ++r) {
      if (m[r][c].is_zero()) continue;
      if (m[r][c].is_invertible()) {
        best = r;
        break;
      }
      if (best == m.size()) best = r;
    }
    if (best == m.size()) continue;
    std::swap(m[row], m[best]);
    if (m[row][c].is_invertible()) {
      Scalar inv = m[row][c].inverse();
      for (auto& x : m[row]) x *= inv;
      for (size_t r = 0; r < m.size(); ++r) {
        if (r == row || m[r][c].is_zero()) continue;
        Scalar f = m[r][c];
        for (size_t k = 0; k < m[r].size(); ++k)
          if (!m[row][k].is_zero()) m[r][k] -= f * m[row][k];
      }
    } else {
      Scalar p = m[row][c];
      for (size_t r = 0; r < m.size(); ++r) {
        if (r == row || m[r][c].is_zero()) continue;
        Scalar f = m[r][c];
        for (size_t k = 0; k < m[r].size(); ++k) m[r][k] = p * m[r][k] - f * m[row][k];
      }
    }
    piv_col.push_back(static_cast<int>(c));
    ++row;
  }
  piv_col.resize(m.size(), -1);
  return piv_col;
}

}  // namespace

std::vector<Scalar> LinearSystem::solve() const {
  auto m = rows_;
  auto piv = eliminate(m, n_);
  std::vector<Scalar> x(n_, Scalar::zero(ring_));
  std::vector<bool> seen(n_, false);
  for (size_t r = 0; r < m.size(); ++r) {
    if (piv[r] < 0) {
      if (!m[r][n_].is_zero()) throw StructuralInconsistency("linear system is inconsistent");
      continue;
    }
    x[piv[r]] = exact_quotient(m[r][n_], m[r][piv[r]]);
    seen[piv[r]] = true;
  }
  for (size_t k = 0; k < n_; ++k)
    if (!seen[k]) throw StructuralInconsistency("linear system has no unique solution");
  return x;
}

size_t rank_of(std::vector<std::vector<Scalar>> vectors) {
  if (vectors.empty()) return 0;
  size_t cols = vectors[0].size();
  auto piv = eliminate(vectors, cols);
  size_t r = 0;
  for (int c : piv) r += c >= 0;
  return r;
}

}  // namespace lgn
