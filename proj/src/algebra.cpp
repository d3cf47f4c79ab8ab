#include "hopfish/algebra.hpp"

#include <stdexcept>

namespace hopfish {

Algebra::Algebra(std::size_t dim, std::vector<Rat> structure_constants,
                 std::vector<Rat> unit)
    : dim_(dim), unit_(std::move(unit)) {
  if (structure_constants.size() != dim_ * dim_ * dim_)
    throw std::invalid_argument("structure constant count mismatch");
  if (unit_.size() != dim_) throw std::invalid_argument("unit length mismatch");
  for (std::size_t idx = 0; idx < structure_constants.size(); ++idx)
    if (structure_constants[idx] != 0)
      c_.emplace(idx, std::move(structure_constants[idx]));
}

Algebra::Algebra(std::size_t dim, std::map<std::size_t, Rat> structure_constants,
                 std::vector<Rat> unit)
    : dim_(dim), c_(std::move(structure_constants)), unit_(std::move(unit)) {
  if (unit_.size() != dim_) throw std::invalid_argument("unit length mismatch");
  std::erase_if(c_, [](const auto& e) { return e.second == 0; });
  if (!c_.empty() && c_.rbegin()->first >= dim_ * dim_ * dim_)
    throw std::invalid_argument("structure constant index out of range");
}

std::vector<Rat> Algebra::multiply(const std::vector<Rat>& a,
                                   const std::vector<Rat>& b) const {
  std::vector<Rat> out(dim_);
  for (const auto& [idx, val] : c_) {
    const std::size_t k = idx % dim_, j = (idx / dim_) % dim_,
                      i = idx / (dim_ * dim_);
    if (a[i] != 0 && b[j] != 0) out[k] += a[i] * b[j] * val;
  }
  return out;
}

Mat Algebra::left_mult(const std::vector<Rat>& a) const {
  Mat m(dim_, dim_);
  for (const auto& [idx, val] : c_) {
    const std::size_t k = idx % dim_, j = (idx / dim_) % dim_,
                      i = idx / (dim_ * dim_);
    if (a[i] != 0) m(k, j) += a[i] * val;
  }
  return m;
}

Mat Algebra::right_mult(const std::vector<Rat>& a) const {
  Mat m(dim_, dim_);
  for (const auto& [idx, val] : c_) {
    const std::size_t k = idx % dim_, j = (idx / dim_) % dim_,
                      i = idx / (dim_ * dim_);
    if (a[j] != 0) m(k, i) += a[j] * val;
  }
  return m;
}

Mat Algebra::left_mult_basis(std::size_t i) const {
  return left_mult(basis_element(i));
}

Mat Algebra::right_mult_basis(std::size_t i) const {
  return right_mult(basis_element(i));
}

std::vector<Rat> Algebra::basis_element(std::size_t i) const {
  std::vector<Rat> v(dim_);
  v[i] = 1;
  return v;
}

bool Algebra::is_valid(std::string* why) const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) {
      auto ij = multiply(basis_element(i), basis_element(j));
      for (std::size_t k = 0; k < dim_; ++k) {
        auto lhs = multiply(ij, basis_element(k));
        auto rhs = multiply(basis_element(i),
                            multiply(basis_element(j), basis_element(k)));
        if (lhs != rhs) {
          if (why)
            *why = "associativity fails at basis triple (" + std::to_string(i) +
                   "," + std::to_string(j) + "," + std::to_string(k) + ")";
          return false;
        }
      }
    }
  if (!left_mult(unit_).is_identity() || !right_mult(unit_).is_identity()) {
    if (why) *why = "unit laws fail";
    return false;
  }
  return true;
}

Algebra Algebra::scalars() { return functions(1); }

Algebra Algebra::functions(std::size_t n) {
  std::vector<Rat> c(n * n * n), unit(n, Rat(1));
  for (std::size_t i = 0; i < n; ++i) c[(i * n + i) * n + i] = 1;
  return Algebra(n, std::move(c), std::move(unit));
}

Algebra Algebra::cyclic_group_algebra(std::size_t n) {
  std::vector<Rat> c(n * n * n), unit(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c[(i * n + j) * n + (i + j) % n] = 1;
  unit[0] = 1;
  return Algebra(n, std::move(c), std::move(unit));
}

Algebra Algebra::matrix_algebra(std::size_t n) {
  // Basis E_pq at index p*n+q; E_pq E_uv = delta_qu E_pv.
  std::size_t d = n * n;
  std::vector<Rat> c(d * d * d), unit(d);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t v = 0; v < n; ++v)
        c[((p * n + q) * d + (q * n + v)) * d + (p * n + v)] = 1;
  for (std::size_t p = 0; p < n; ++p) unit[p * n + p] = 1;
  return Algebra(d, std::move(c), std::move(unit));
}

Algebra Algebra::opposite(const Algebra& a) {
  std::size_t n = a.dim();
  std::map<std::size_t, Rat> c;
  for (const auto& [idx, val] : a.structure_constants()) {
    const std::size_t k = idx % n, j = (idx / n) % n, i = idx / (n * n);
    c.emplace((j * n + i) * n + k, val);
  }
  return Algebra(n, std::move(c), a.unit());
}

Algebra Algebra::tensor(const Algebra& a, const Algebra& b) {
  std::size_t da = a.dim(), db = b.dim(), d = da * db;
  std::map<std::size_t, Rat> c;
  std::vector<Rat> unit(d);
  for (const auto& [ia, va] : a.structure_constants()) {
    const std::size_t k = ia % da, j = (ia / da) % da, i = ia / (da * da);
    for (const auto& [ib, vb] : b.structure_constants()) {
      const std::size_t kp = ib % db, jp = (ib / db) % db, ip = ib / (db * db);
      c.emplace(((i * db + ip) * d + (j * db + jp)) * d + (k * db + kp),
                va * vb);
    }
  }
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t ip = 0; ip < db; ++ip)
      unit[i * db + ip] = a.unit()[i] * b.unit()[ip];
  return Algebra(d, std::move(c), std::move(unit));
}

bool Homomorphism::is_valid(std::string* why) const {
  if (matrix.rows() != target.dim() || matrix.cols() != source.dim()) {
    if (why) *why = "homomorphism matrix shape mismatch";
    return false;
  }
  if (apply(source.unit()) != target.unit()) {
    if (why) *why = "homomorphism not unital";
    return false;
  }
  for (std::size_t i = 0; i < source.dim(); ++i)
    for (std::size_t j = 0; j < source.dim(); ++j) {
      auto lhs = apply(source.multiply(source.basis_element(i),
                                       source.basis_element(j)));
      auto rhs = target.multiply(apply(source.basis_element(i)),
                                 apply(source.basis_element(j)));
      if (lhs != rhs) {
        if (why)
          *why = "homomorphism not multiplicative at (" + std::to_string(i) +
                 "," + std::to_string(j) + ")";
        return false;
      }
    }
  return true;
}

Homomorphism Homomorphism::identity(const Algebra& a) {
  return {a, a, Mat::identity(a.dim())};
}

Homomorphism Homomorphism::compose(const Homomorphism& f,
                                   const Homomorphism& g) {
  if (g.target.dim() != f.source.dim())
    throw std::invalid_argument("compose: shape mismatch");
  return {g.source, f.target, f.matrix * g.matrix};
}

}  // namespace hopfish
