#ifndef HOPFISH_LINALG_HPP
#define HOPFISH_LINALG_HPP

#include <optional>
#include <vector>

#include "hopfish/matrix.hpp"

namespace hopfish {

// Reduced row echelon form; pivots receives the pivot column of each
// nonzero row, in order.
Mat rref(Mat m, std::vector<std::size_t>* pivots = nullptr);

std::size_t rank(const Mat& m);

Rat determinant(Mat m);

std::optional<Mat> inverse(const Mat& m);

// Basis of the right null space {v : m v = 0}. Size is cols - rank.
std::vector<std::vector<Rat>> kernel_basis(const Mat& m);

// Quotient of Q^ambient_dim by the span of the relation vectors.
// projection is (q x ambient), section (ambient x q), with
// projection * section = I_q and projection * r = 0 exactly for every
// relation r; ker(projection) is exactly the span of the relations.
struct Quotient {
  Mat projection;
  Mat section;
  std::size_t dim() const { return projection.rows(); }
};
Quotient quotient_basis(std::size_t ambient_dim,
                        const std::vector<std::vector<Rat>>& relations);

// Row space spanned by the given vectors equals that of the others.
bool same_span(const std::vector<std::vector<Rat>>& a,
               const std::vector<std::vector<Rat>>& b, std::size_t dim);

// Decides whether some rational combination sum c_i * family[i] is
// invertible, scanning the deterministic grid {1..D+1}^k where D is the
// matrix size. det is a polynomial of degree <= D in each c_i, so a
// nonzero determinant polynomial cannot vanish on the whole grid: a
// negative answer is a proof.
struct GenericInvertible {
  bool invertible = false;
  std::vector<Rat> coefficients;  // witness when invertible
};
GenericInvertible is_invertible_generic(const std::vector<Mat>& family);

}  // namespace hopfish

#endif
