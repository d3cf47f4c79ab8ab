#ifndef HOPFISH_JSON_IO_HPP
#define HOPFISH_JSON_IO_HPP

#include <stdexcept>
#include <string>

#include "hopfish/algebra.hpp"
#include "hopfish/hypergroupoid.hpp"

namespace hopfish {

// Input rejection with a JSON-pointer-style position, e.g. "d[1][0]".
struct ParseError : std::runtime_error {
  ParseError(const std::string& where, const std::string& what)
      : std::runtime_error(where.empty() ? what : where + ": " + what),
        position(where) {}
  std::string position;
};

// {"n": int, "e": [int,...], "d": [[[int,...],...],...]}, d indexed
// [g][h][k]. Negative entries and ragged arrays are rejected with the
// offending position.
StructureTensor structure_from_json(const std::string& text);
std::string structure_to_json(const StructureTensor& t);

// {"dim": int, "unit": ["p/q",...], "mult": [[["p/q",...],...],...]},
// mult indexed [i][j][k]; rationals serialized as strings so exactness
// survives the round trip.
Algebra algebra_from_json(const std::string& text);
std::string algebra_to_json(const Algebra& a);

}  // namespace hopfish

#endif
