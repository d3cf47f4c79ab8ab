#ifndef HOPFISH_ENUMERATE_HPP
#define HOPFISH_ENUMERATE_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hopfish/fusion.hpp"
#include "hopfish/hypergroupoid.hpp"

namespace hopfish {

struct SearchConfig {
  std::size_t n = 1;
  std::uint64_t max_mult = 1;
  enum class Mode { sesquialgebra, hypergroupoid } mode = Mode::hypergroupoid;
  std::size_t workers = 1;
  // Backtracking node budget; exceeding it flags the census incomplete.
  std::uint64_t node_budget = 50'000'000;
};

struct CensusFlags {
  bool is_hypergroupoid = false;
  bool is_groupoid = false;
  bool is_group = false;
  bool sigma_involutive = false;
};

struct CensusEntry {
  StructureTensor canonical;
  CensusFlags flags;
  std::vector<RootInterval> fp_dims;  // hypergroupoid entries only
};

struct Census {
  std::vector<CensusEntry> entries;  // sorted by canonical tensor
  bool complete = true;
};

// Lexicographically least representative of the relabeling orbit of t
// (the n! simultaneous permutations of all indices of d and of e).
StructureTensor canonicalize(const StructureTensor& t);

// Pruned backtracking search: e first (entries in {0,1}), then d in index
// order, with partial counit sums, per-(g,h) antipode row sums (in
// hypergroupoid mode), and every associativity quadruple checked as soon
// as all of its terms are assigned. Deduplicates by canonical form.
Census enumerate_census(const SearchConfig& cfg);

// Unpruned independent oracle: walks all (max_mult+1)^(n^3) * 2^n raw
// tensors, filters with validate, dedups by canonical form. Throws
// std::invalid_argument beyond n = 2, max_mult = 3.
std::size_t brute_force_oracle(const SearchConfig& cfg);

}  // namespace hopfish

#endif
