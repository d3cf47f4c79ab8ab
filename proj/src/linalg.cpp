#include "hopfish/linalg.hpp"

#include <stdexcept>

namespace hopfish {

Mat rref(Mat m, std::vector<std::size_t>* pivots) {
  const std::size_t rows = m.rows(), cols = m.cols();
  if (pivots) pivots->clear();
  std::size_t lead = 0;
  for (std::size_t r = 0; r < rows && lead < cols; ++r) {
    std::size_t i = r;
    while (i < rows && m(i, lead) == 0) ++i;
    if (i == rows) {
      --r;
      ++lead;
      continue;
    }
    if (i != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(i, j), m(r, j));
    Rat inv = 1 / m(r, lead);
    for (std::size_t j = lead; j < cols; ++j) m(r, j) *= inv;
    for (std::size_t k = 0; k < rows; ++k) {
      if (k == r || m(k, lead) == 0) continue;
      Rat f = m(k, lead);
      for (std::size_t j = lead; j < cols; ++j) m(k, j) -= f * m(r, j);
    }
    if (pivots) pivots->push_back(lead);
    ++lead;
  }
  return m;
}

std::size_t rank(const Mat& m) {
  std::vector<std::size_t> pivots;
  rref(m, &pivots);
  return pivots.size();
}

Rat determinant(Mat m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det of non-square");
  const std::size_t n = m.rows();
  Rat det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    Rat inv = 1 / m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m(r, c) == 0) continue;
      Rat f = m(r, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return det;
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  Mat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  std::vector<std::size_t> pivots;
  Mat red = rref(std::move(aug), &pivots);
  if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
  Mat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = red(i, n + j);
  return inv;
}

std::vector<std::vector<Rat>> kernel_basis(const Mat& m) {
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  Mat red = rref(m, &pivots);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rat>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rat> v(cols);
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -red(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

Quotient quotient_basis(std::size_t ambient_dim,
                        const std::vector<std::vector<Rat>>& relations) {
  Mat rel(relations.size(), ambient_dim);
  for (std::size_t i = 0; i < relations.size(); ++i) {
    if (relations[i].size() != ambient_dim)
      throw std::invalid_argument("relation length mismatch");
    for (std::size_t j = 0; j < ambient_dim; ++j) rel(i, j) = relations[i][j];
  }
  std::vector<std::size_t> pivots;
  Mat red = rref(std::move(rel), &pivots);
  std::vector<bool> is_pivot(ambient_dim, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < ambient_dim; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);

  const std::size_t q = free_cols.size();
  // projection(x) = free coordinates of x reduced modulo the RREF rows.
  Mat proj(q, ambient_dim);
  for (std::size_t a = 0; a < q; ++a) {
    std::size_t f = free_cols[a];
    proj(a, f) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      proj(a, pivots[r]) = -red(r, f);
  }
  Mat sect(ambient_dim, q);
  for (std::size_t a = 0; a < q; ++a) sect(free_cols[a], a) = 1;
  return {std::move(proj), std::move(sect)};
}

bool same_span(const std::vector<std::vector<Rat>>& a,
               const std::vector<std::vector<Rat>>& b, std::size_t dim) {
  auto pack = [dim](const std::vector<std::vector<Rat>>& rows,
                    const std::vector<std::vector<Rat>>& more) {
    Mat m(rows.size() + more.size(), dim);
    std::size_t r = 0;
    for (const auto& v : rows) {
      for (std::size_t j = 0; j < dim; ++j) m(r, j) = v[j];
      ++r;
    }
    for (const auto& v : more) {
      for (std::size_t j = 0; j < dim; ++j) m(r, j) = v[j];
      ++r;
    }
    return m;
  };
  std::size_t ra = rank(pack(a, {}));
  std::size_t rb = rank(pack(b, {}));
  std::size_t rab = rank(pack(a, b));
  return ra == rb && rb == rab;
}

GenericInvertible is_invertible_generic(const std::vector<Mat>& family) {
  if (family.empty()) return {};
  const std::size_t n = family[0].rows();
  for (const auto& m : family)
    if (m.rows() != n || m.cols() != n)
      throw std::invalid_argument("family matrices must be square, equal size");
  const std::size_t k = family.size();
  std::vector<unsigned> grid(k, 1);  // each coordinate ranges over 1..n+1
  for (;;) {
    Mat comb(n, n);
    for (std::size_t i = 0; i < k; ++i) comb = comb + family[i] * Rat(grid[i]);
    if (determinant(comb) != 0) {
      std::vector<Rat> coeff(k);
      for (std::size_t i = 0; i < k; ++i) coeff[i] = grid[i];
      return {true, std::move(coeff)};
    }
    std::size_t pos = 0;
    while (pos < k && grid[pos] == n + 1) grid[pos++] = 1;
    if (pos == k) return {};
    ++grid[pos];
  }
}

}  // namespace hopfish
