#ifndef HOPFISH_POLYNOMIAL_HPP
#define HOPFISH_POLYNOMIAL_HPP

#include <optional>
#include <vector>

#include "hopfish/matrix.hpp"
#include "hopfish/rational.hpp"

namespace hopfish {

// Integer polynomial, coefficients in ascending degree order.
// Invariant: leading coefficient nonzero unless the polynomial is zero
// (represented by an empty coefficient vector).
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs);

  static IntPoly from_rational(const std::vector<Rat>& coeffs);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return is_zero() ? -1 : static_cast<int>(c_.size()) - 1; }
  const std::vector<Int>& coeffs() const { return c_; }

  Rat eval(const Rat& x) const;
  Int eval_int(const Int& x) const;

  IntPoly derivative() const;
  // Content-free (primitive) part with positive leading coefficient.
  IntPoly primitive() const;
  // gcd over Q, returned primitive with positive leading coefficient.
  static IntPoly gcd(const IntPoly& a, const IntPoly& b);
  // p / gcd(p, p'): same roots, all simple.
  IntPoly square_free_part() const;

  bool operator==(const IntPoly& o) const = default;

 private:
  std::vector<Int> c_;
};

// Characteristic polynomial det(xI - m), exact (Faddeev-LeVerrier).
// Integer output requires an integer input matrix.
IntPoly char_poly(const Mat& m);

// Number of distinct real roots of the square-free polynomial in (lo, hi],
// by Sturm's theorem.
std::size_t sturm_root_count(const IntPoly& square_free, const Rat& lo,
                             const Rat& hi);

struct RootInterval {
  Rat lo, hi;               // lo < root <= hi, hi - lo < width target
  std::optional<Int> integer_value;  // set iff an integer root lies inside
};

// Isolates the largest real root of p, which must exist in
// (-radius_bound-1, radius_bound+1]. Interval width < 10^-12. Repeated
// roots are handled by square-free decomposition first.
// Throws std::invalid_argument for constant polynomials ("degenerate").
RootInterval dominant_root(const IntPoly& p, const Rat& radius_bound);

}  // namespace hopfish

#endif
