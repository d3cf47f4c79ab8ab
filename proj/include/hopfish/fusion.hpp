#ifndef HOPFISH_FUSION_HPP
#define HOPFISH_FUSION_HPP

#include <cstddef>
#include <vector>

#include "hopfish/hypergroupoid.hpp"
#include "hopfish/polynomial.hpp"

namespace hopfish {

// Perron-Frobenius data of one basis element of the based ring:
// (mult_matrix)_{k,h} = d(g,h,k), the matrix of left multiplication by g.
struct FpEntry {
  std::size_t element = 0;
  Mat mult_matrix;
  IntPoly charpoly;
  RootInterval dimension;  // spectral radius, isolated to width < 1e-12
};

struct FpReport {
  std::vector<FpEntry> entries;
  bool obstructed = false;               // some dimension is non-integral
  std::vector<std::size_t> witnesses;    // elements with no integer value
};

FpReport fp_dimensions(const Hypergroupoid& h);

// "Obstructed" means no quasi-Hopf algebra is Morita equivalent to the
// function algebra of h (integrality of spectral radii is necessary).
// "Unobstructed" is NOT a positivity claim, only the absence of this test.
struct ObstructionVerdict {
  bool obstructed = false;
  std::vector<std::size_t> witnesses;
};
ObstructionVerdict quasi_hopf_obstruction(const Hypergroupoid& h);

// Decomposition table of tensor products of the simple (point-supported)
// modules: entry [(g*n+h)*n+k] is the multiplicity of the simple at k in
// the product of the simples at g and h. Coincides with the structure
// tensor d by construction; recomputed from the coproduct for the
// consistency check.
std::vector<std::uint64_t> representation_ring_table(const Hypergroupoid& h);

// The candidate common Perron eigenvector test: within each transitivity
// component the vector of FP dimensions must satisfy N_g v = dim_g v,
// exactly when all dimensions are integers and by interval overlap
// otherwise; rows crossing components must vanish.
bool fp_eigenvector_consistent(const FpReport& r);

}  // namespace hopfish

#endif
