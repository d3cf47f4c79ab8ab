#ifndef HOPFISH_RATIONAL_HPP
#define HOPFISH_RATIONAL_HPP

#include <gmpxx.h>
#include <string>

namespace hopfish {

// Exact rational scalar. All linear algebra in this project is over Q;
// floating point never appears in results.
using Rat = mpq_class;
using Int = mpz_class;

// Parses "p", "-p" or "p/q" (q > 0 after canonicalization).
Rat parse_rational(const std::string& s);

// Renders in lowest terms, "p" or "p/q".
std::string rational_to_string(const Rat& q);

// Decimal rendering with the given number of fractional digits,
// truncated toward zero. Used for human-readable report output only.
std::string rational_to_decimal(const Rat& q, int digits);

}  // namespace hopfish

#endif
