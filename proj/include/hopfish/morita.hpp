#ifndef HOPFISH_MORITA_HPP
#define HOPFISH_MORITA_HPP

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "hopfish/bimodule.hpp"
#include "hopfish/hopf.hpp"

namespace hopfish {

// An invertible pair of bimodules: p is (A,B), q is (B,A), with
// p (x)_B q isomorphic to the regular A-bimodule and q (x)_A p to the
// regular B-bimodule.
struct MoritaPair {
  Algebra a, b;
  Bimodule p;  // (A, B)
  Bimodule q;  // (B, A)
};

bool verify_morita_pair(const MoritaPair& pair, std::string* why = nullptr);

// Composition of an (A,B)-pair with a (B,C)-pair into an (A,C)-pair.
MoritaPair compose_pairs(const MoritaPair& first, const MoritaPair& second);

// The identity pair on a: regular bimodules both ways.
MoritaPair identity_pair(const Algebra& a);

// Full structure tuple: coproduct (A (x) A, A), counit (k, A), antipode
// (A, A^op) bimodules over the algebra.
struct HopfishData {
  Algebra algebra;
  Bimodule coproduct;
  Bimodule counit;
  Bimodule antipode;
};

// The function-algebra structure tuple of a validated hypergroupoid.
HopfishData hopfish_from_tensor(const StructureTensor& t);

struct TransportResult {
  HopfishData data;          // structures on pair.b
  FreeRank1 antipode_free;   // free-rank-1 test on the transported antipode
  bool hopfish = false;      // == antipode_free.free
};

// Transports (counit, coproduct, antipode) along the pair via relative
// tensor products. Throws std::invalid_argument if the pair invariants
// fail. The result is a sesquialgebra with preantipode whenever the
// source is; hopfish-ness is decided by the free-rank-1 test. With
// coproduct_left_actions = false the transported coproduct carries only
// its right action (enough for hom computations against the counit).
TransportResult transport(const HopfishData& src, const MoritaPair& pair,
                          bool coproduct_left_actions = true);

// Is the right module q self-conjugate with respect to the antipode s?
// Compares Hom_A(A, q) (with left action (a.f)(x) = f(xa)) against
// s (x)_{A^op} q as left A-modules.
bool self_conjugate(const Bimodule& s, const Bimodule& q);

// Ranks of the left actions of the given central idempotents on x.
std::vector<std::size_t> block_dimensions(
    const Bimodule& x, const std::vector<std::vector<Rat>>& idempotents);

// The Z/3-graded projective module family: A = k^{Z/3},
// q = A_0^r + A_1^s + A_2^t, b = End_A(q) with blocks (r, s, t).
struct Z3Example {
  MoritaPair pair;
  HopfishData source;  // standard structure on k^{Z/3}
  std::vector<std::vector<Rat>> central_idempotents;  // of b, 3 blocks
  std::array<std::size_t, 3> predicted_antipode_dims;  // (r^2, s t, s t)
  std::array<std::size_t, 3> b_block_dims;             // (r^2, s^2, t^2)
};
// Requires r, s, t >= 1 (full support, else q is not invertible).
Z3Example build_z3_example(std::size_t r, std::size_t s, std::size_t t);

// Matrix-algebra example: b = M_n(a) with column/row modules.
struct MatrixExample {
  MoritaPair pair;
  HopfishData source;  // function-algebra structure on k^{Z/m}
};
// a = k^{Z/m} with its group structure tensor.
MatrixExample build_matrix_example(std::size_t n, std::size_t m);

// The plain Morita pair b = M_n(a) for an arbitrary algebra.
MoritaPair matrix_morita_pair(const Algebra& a, std::size_t n);

// The four-condition comparison: transports x through the pair and tests
// bimodule isomorphism against y componentwise.
bool hopfish_morita_equivalent(const HopfishData& x, const HopfishData& y,
                               const MoritaPair& pair);

}  // namespace hopfish

#endif
