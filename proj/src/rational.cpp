#include "hopfish/rational.hpp"

#include <stdexcept>

namespace hopfish {

Rat parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rat q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: '" + s + "'");
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rat& q) {
  return q.get_str();
}

std::string rational_to_decimal(const Rat& q, int digits) {
  Rat a = abs(q);
  Int scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  Int scaled = (a.get_num() * scale) / a.get_den();  // truncated
  Int ip = scaled / scale;
  Int fp = scaled % scale;
  std::string frac = fp.get_str();
  frac.insert(0, digits - frac.size(), '0');
  std::string out = ip.get_str() + "." + frac;
  if (sgn(q) < 0) out.insert(0, "-");
  return out;
}

}  // namespace hopfish
