#ifndef HOPFISH_HYPERGROUPOID_HPP
#define HOPFISH_HYPERGROUPOID_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hopfish/algebra.hpp"

namespace hopfish {

// Nonnegative-integer structure tensor on a set of size n: d(g,h,k) is the
// multiplicity of k in the product g*h, e[g] the counit dimension at g.
//
// Index convention, fixed project-wide: d(g,h,k) means "k appears in g*h",
// i.e. the superscript-k, subscript-(g,h) structure constant.
struct StructureTensor {
  std::size_t n = 0;
  std::vector<std::uint64_t> d;  // n^3 entries, index (g*n + h)*n + k
  std::vector<std::uint64_t> e;  // n entries

  static StructureTensor zeros(std::size_t n) {
    return {n, std::vector<std::uint64_t>(n * n * n),
            std::vector<std::uint64_t>(n)};
  }

  std::uint64_t& at(std::size_t g, std::size_t h, std::size_t k) {
    return d[(g * n + h) * n + k];
  }
  std::uint64_t at(std::size_t g, std::size_t h, std::size_t k) const {
    return d[(g * n + h) * n + k];
  }

  bool operator==(const StructureTensor& o) const = default;
  auto operator<=>(const StructureTensor& o) const = default;
};

// Cyclic group table on Z/n with unit at 0.
StructureTensor cyclic_group_tensor(std::size_t n);
// G = {e, g}, gg = e + m*g. m = 0 is Z/2; m = 1 is the Yang-Lee fusion rule.
StructureTensor yang_lee_tensor(std::uint64_t m);
// n isolated objects: d(g,h,k) = delta_gh delta_gk, every element a unit.
StructureTensor discrete_groupoid_tensor(std::size_t n);

struct AxiomFailure {
  std::string axiom;                 // e.g. "associativity", "inversion"
  std::vector<std::size_t> witness;  // offending indices
  std::string message;
};

struct AssocCheck {
  bool ok = true;
  std::size_t g = 0, h = 0, k = 0, m = 0;  // first violating quadruple
};
// sum_s d(g,h,s) d(s,k,m) = sum_s d(h,k,s) d(g,s,m) for all quadruples.
// Throws std::overflow_error if the convolution overflows 64 bits.
AssocCheck check_associativity(const StructureTensor& t);

// sum_h e[h] d(h,g,k) = delta_gk = sum_h e[h] d(g,h,k).
bool check_counit(const StructureTensor& t);

struct UnitsLR {
  std::vector<std::size_t> units;
  std::vector<std::size_t> l, r;  // index -> unit index
};
// Requires associativity and counit. Failure means the input violated the
// preconditions, not that a valid sesquialgebra can lack units.
struct UnitsResult {
  std::optional<UnitsLR> value;
  std::optional<AxiomFailure> failure;
};
UnitsResult derive_units_l_r(const StructureTensor& t);

// sigma(g) is the unique h with sum_t e[t] d(g,h,t) = 1 (and 0 elsewhere).
// Failure means the sesquialgebra is not hopfish of finite free type.
struct InversionResult {
  std::optional<std::vector<std::size_t>> sigma;
  std::optional<AxiomFailure> failure;
};
InversionResult derive_inversion(const StructureTensor& t);

struct Hypergroupoid {
  StructureTensor base;
  std::vector<std::size_t> units;
  std::vector<std::size_t> l, r;
  std::vector<std::size_t> sigma;
};

enum class ValidationStage {
  valid,
  not_sesquialgebra,  // associativity or counit failed
  not_hopfish,        // sesquialgebra, but inversion/support axioms failed
};

struct ValidationResult {
  ValidationStage stage = ValidationStage::valid;
  std::optional<Hypergroupoid> value;
  std::optional<AxiomFailure> failure;
  bool ok() const { return stage == ValidationStage::valid; }
};

// Runs all axioms in order and assembles the hypergroupoid, including the
// two-sided support axiom: d(g,h,.) vanishes identically iff r(g) != l(h).
ValidationResult validate(const StructureTensor& t);

// Every composable product has a single output with multiplicity 1.
bool is_groupoid(const Hypergroupoid& h);

// Whether sigma^2 = id on this instance. Recorded, never asserted globally.
bool involution_scan(const Hypergroupoid& h);

// The fusion ring A' tensor Q: basis G, multiplication d, unit sum e[g] g.
Algebra to_algebra(const Hypergroupoid& h);

}  // namespace hopfish

#endif
