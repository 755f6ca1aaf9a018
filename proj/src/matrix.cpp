#include "btmf/matrix.hpp"

namespace btmf {

namespace {

// Row-reduces in place; returns pivot column per pivot row and the determinant factor.
std::vector<std::size_t> row_echelon(const FiniteField& F, FqMatrix& m, FiniteField::Elem* det) {
  std::vector<std::size_t> pivots;
  FiniteField::Elem d = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
      d = F.neg(d);
    }
    const auto p = m(row, col);
    d = F.mul(d, p);
    const auto pinv = F.inv(p);
    for (std::size_t j = 0; j < m.cols(); ++j) m(row, j) = F.mul(m(row, j), pinv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const auto f = m(i, col);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = F.sub(m(i, j), F.mul(f, m(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  if (det) *det = (m.rows() == m.cols() && pivots.size() == m.rows()) ? d : 0;
  return pivots;
}

}  // namespace

std::size_t rank(const FiniteField& F, FqMatrix m) { return row_echelon(F, m, nullptr).size(); }

FiniteField::Elem determinant(const FiniteField& F, FqMatrix m) {
  FiniteField::Elem d = 0;
  row_echelon(F, m, &d);
  return d;
}

std::optional<std::vector<FiniteField::Elem>> kernel_vector(const FiniteField& F, FqMatrix m) {
  auto pivots = row_echelon(F, m, nullptr);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<FiniteField::Elem> v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = F.neg(m(r, free));
    return v;
  }
  return std::nullopt;
}

PolyMatrix identity_poly(const FiniteField& F, std::size_t n) {
  PolyMatrix m(n, n, FqPoly(F));
  for (std::size_t i = 0; i < n; ++i) m(i, i) = FqPoly::constant(F, 1);
  return m;
}

LaurentMatrix to_laurent(const PolyMatrix& m) {
  LaurentMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = FqLaurent(m(i, j));
  return out;
}

}  // namespace btmf
