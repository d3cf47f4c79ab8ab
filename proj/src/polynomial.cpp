#include "hopfish/polynomial.hpp"

#include <stdexcept>

namespace hopfish {
namespace {

// Rational polynomial helpers used for Euclid / Sturm chains.
using RatPoly = std::vector<Rat>;  // ascending, normalized (no zero lead)

RatPoly trim(RatPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

RatPoly to_rat(const IntPoly& p) {
  RatPoly r;
  r.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) r.emplace_back(c);
  return r;
}

Rat eval(const RatPoly& p, const Rat& x) {
  Rat acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Remainder of a by b, b nonzero.
RatPoly rem(RatPoly a, const RatPoly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    Rat f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a = trim(std::move(a));
  }
  return a;
}

int sign_variations(const std::vector<RatPoly>& chain, const Rat& x) {
  int variations = 0, last = 0;
  for (const auto& p : chain) {
    int s = sgn(eval(p, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

std::vector<RatPoly> sturm_chain(const IntPoly& square_free) {
  std::vector<RatPoly> chain;
  chain.push_back(to_rat(square_free));
  chain.push_back(to_rat(square_free.derivative()));
  while (!chain.back().empty() && chain.back().size() > 1) {
    RatPoly r = rem(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  return chain;
}

}  // namespace

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::from_rational(const std::vector<Rat>& coeffs) {
  Int lcm = 1;
  for (const auto& c : coeffs) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
                                       c.get_den().get_mpz_t());
  std::vector<Int> out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) out.push_back(c.get_num() * (lcm / c.get_den()));
  return IntPoly(std::move(out));
}

Rat IntPoly::eval(const Rat& x) const {
  Rat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Int IntPoly::eval_int(const Int& x) const {
  Int acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPoly IntPoly::derivative() const {
  std::vector<Int> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Int(i));
  return IntPoly(std::move(d));
}

IntPoly IntPoly::primitive() const {
  if (is_zero()) return {};
  Int g = 0;
  for (const auto& c : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (sgn(c_.back()) < 0) g = -g;
  std::vector<Int> out;
  out.reserve(c_.size());
  for (const auto& c : c_) out.push_back(c / g);
  return IntPoly(std::move(out));
}

IntPoly IntPoly::gcd(const IntPoly& a, const IntPoly& b) {
  RatPoly x = to_rat(a), y = to_rat(b);
  while (!y.empty()) {
    RatPoly r = rem(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  std::vector<Rat> coeffs(x.begin(), x.end());
  return from_rational(coeffs).primitive();
}

IntPoly IntPoly::square_free_part() const {
  if (degree() <= 0) return primitive();
  IntPoly g = gcd(*this, derivative());
  if (g.degree() == 0) return primitive();
  // Exact division by g over Q.
  RatPoly num = to_rat(*this), den = to_rat(g);
  RatPoly q(num.size() - den.size() + 1, Rat(0));
  while (num.size() >= den.size() && !num.empty()) {
    Rat f = num.back() / den.back();
    std::size_t shift = num.size() - den.size();
    q[shift] = f;
    for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= f * den[i];
    num = trim(std::move(num));
  }
  std::vector<Rat> coeffs(q.begin(), q.end());
  return from_rational(coeffs).primitive();
}

IntPoly char_poly(const Mat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("char_poly: non-square");
  const std::size_t n = m.rows();
  // Faddeev-LeVerrier. Coefficients of det(xI - m), ascending.
  std::vector<Rat> coeffs(n + 1);
  coeffs[n] = 1;
  Mat mk = Mat::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk;
    Rat tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += mk(i, i);
    Rat ck = -tr / Rat(k);
    coeffs[n - k] = ck;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += ck;
  }
  return IntPoly::from_rational(coeffs);
}

std::size_t sturm_root_count(const IntPoly& square_free, const Rat& lo,
                             const Rat& hi) {
  auto chain = sturm_chain(square_free);
  int v = sign_variations(chain, lo) - sign_variations(chain, hi);
  return v > 0 ? static_cast<std::size_t>(v) : 0;
}

RootInterval dominant_root(const IntPoly& p, const Rat& radius_bound) {
  if (p.degree() <= 0) throw std::invalid_argument("degenerate");
  IntPoly q = p.square_free_part();
  auto chain = sturm_chain(q);
  auto count = [&](const Rat& a, const Rat& b) {
    int v = sign_variations(chain, a) - sign_variations(chain, b);
    return v > 0 ? static_cast<std::size_t>(v) : std::size_t{0};
  };
  // All roots lie strictly inside (-B, B), so the endpoints are non-roots.
  Rat bound = radius_bound + 1;
  Rat lo = -bound, hi = bound;
  if (count(lo, hi) == 0)
    throw std::invalid_argument("polynomial has no real root in bound");

  // Keeps endpoints off roots of q so half-open Sturm counts stay exact.
  auto off_root = [&](Rat x, const Rat& a, const Rat& b) {
    Rat step = (b - a) / 16;
    while (q.eval(x) == 0) {
      x += step;
      step /= 2;
    }
    return x;
  };

  Int tenp12;
  mpz_ui_pow_ui(tenp12.get_mpz_t(), 10, 12);
  Rat eps = Rat(1) / Rat(tenp12);
  while (hi - lo >= eps || count(lo, hi) != 1) {
    Rat mid = off_root((lo + hi) / 2, lo, hi);
    if (count(mid, hi) >= 1)
      lo = mid;
    else
      hi = mid;
  }

  RootInterval out{lo, hi, std::nullopt};
  // Width < 10^-12, so at most one integer can lie inside.
  Int cand;
  mpz_fdiv_q(cand.get_mpz_t(), hi.get_num().get_mpz_t(),
             hi.get_den().get_mpz_t());
  if (Rat(cand) > lo && Rat(cand) < hi && p.eval_int(cand) == 0)
    out.integer_value = cand;
  return out;
}

}  // namespace hopfish
