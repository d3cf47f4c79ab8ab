#ifndef HOPFISH_ALGEBRA_HPP
#define HOPFISH_ALGEBRA_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "hopfish/linalg.hpp"
#include "hopfish/matrix.hpp"

namespace hopfish {

// Finite-dimensional unital associative algebra over Q, given by structure
// constants: e_i * e_j = sum_k c[i][j][k] e_k. The constants are stored
// sparsely (flat index (i*dim + j)*dim + k) so that large tensor-product
// algebras stay affordable.
class Algebra {
 public:
  Algebra() = default;
  Algebra(std::size_t dim, std::vector<Rat> structure_constants,
          std::vector<Rat> unit);
  Algebra(std::size_t dim, std::map<std::size_t, Rat> structure_constants,
          std::vector<Rat> unit);

  std::size_t dim() const { return dim_; }
  const Rat& c(std::size_t i, std::size_t j, std::size_t k) const {
    static const Rat kZero;
    auto it = c_.find((i * dim_ + j) * dim_ + k);
    return it == c_.end() ? kZero : it->second;
  }
  const std::vector<Rat>& unit() const { return unit_; }
  const std::map<std::size_t, Rat>& structure_constants() const { return c_; }

  std::vector<Rat> multiply(const std::vector<Rat>& a,
                            const std::vector<Rat>& b) const;

  // Matrix of left multiplication by the element a: (L_a x) = a * x.
  Mat left_mult(const std::vector<Rat>& a) const;
  Mat right_mult(const std::vector<Rat>& a) const;
  Mat left_mult_basis(std::size_t i) const;
  Mat right_mult_basis(std::size_t i) const;

  std::vector<Rat> basis_element(std::size_t i) const;

  // Associativity and two-sided unit laws, exactly.
  bool is_valid(std::string* why = nullptr) const;

  bool operator==(const Algebra& o) const = default;

  static Algebra scalars();                       // Q
  static Algebra functions(std::size_t n);        // Q^n, pointwise product
  static Algebra cyclic_group_algebra(std::size_t n);  // Q[Z/n]
  static Algebra matrix_algebra(std::size_t n);   // M_n(Q)
  static Algebra opposite(const Algebra& a);
  static Algebra tensor(const Algebra& a, const Algebra& b);
  // Index of the pair (i, j) in tensor(a, b): i * b.dim + j.

 private:
  std::size_t dim_ = 0;
  std::map<std::size_t, Rat> c_;  // nonzero constants only
  std::vector<Rat> unit_;
};

// Unital algebra homomorphism, target <- source, as a matrix acting on
// coordinate vectors (target.dim x source.dim). Anti-homomorphisms are
// stored as homomorphisms out of the opposite algebra.
struct Homomorphism {
  Algebra source;
  Algebra target;
  Mat matrix;

  std::vector<Rat> apply(const std::vector<Rat>& x) const { return matrix * x; }
  bool is_valid(std::string* why = nullptr) const;

  static Homomorphism identity(const Algebra& a);
  static Homomorphism compose(const Homomorphism& f, const Homomorphism& g);
};

}  // namespace hopfish

#endif
