#ifndef HOPFISH_BIMODULE_HPP
#define HOPFISH_BIMODULE_HPP

#include <optional>
#include <string>
#include <vector>

#include "hopfish/algebra.hpp"

namespace hopfish {

// Finite-dimensional (A,B)-bimodule in coordinates: one action matrix per
// basis element of each algebra. The left action is a unital
// representation of A, the right action a unital anti-representation of B
// (i.e. xterms compose in reverse), and the two commute.
struct Bimodule {
  Algebra left_alg;
  Algebra right_alg;
  std::size_t dim = 0;
  std::vector<Mat> left_action;   // one per left_alg basis element
  std::vector<Mat> right_action;  // one per right_alg basis element

  Mat left_act(const std::vector<Rat>& a) const;
  Mat right_act(const std::vector<Rat>& b) const;

  bool is_valid(std::string* why = nullptr) const;
};

// The regular (A,A)-bimodule: A acting on itself by multiplication.
Bimodule regular_bimodule(const Algebra& a);

// Modulation of f in Hom0(A, B) (i.e. f: B -> A): the space A with
// a.x.b = a x f(b).
Bimodule modulate(const Homomorphism& f);

// External tensor product: (A,B) x (C,D) -> (A tensor C, B tensor D).
Bimodule ext_tensor(const Bimodule& x, const Bimodule& y);

// Relative tensor product X tensor_B Y of X:(A,B) and Y:(B,C), the
// quotient of X tensor Y by the middle-action relations x.b (x) y -
// x (x) b.y, with the residual outer actions.
Bimodule tensor_over(const Bimodule& x, const Bimodule& y);

// Fused form of tensor_over(ext_tensor(x, y), z) that never materializes
// the external tensor product: relations and actions are built sparsely
// from the factors. With with_left_actions = false the result's
// left_action list is left empty (for large outer algebras where only the
// right-module structure is needed downstream).
Bimodule tensor_over_ext(const Bimodule& x, const Bimodule& y,
                         const Bimodule& z, bool with_left_actions = true);

// Swaps in a structurally identical algebra (e.g. k tensor A for A).
// Structure constants and units must agree entrywise.
Bimodule relabel_left_algebra(Bimodule x, const Algebra& replacement);
Bimodule relabel_right_algebra(Bimodule x, const Algebra& replacement);

// An (A,B)-bimodule viewed as a left module over A tensor B^op,
// i.e. a (A tensor B^op, k)-bimodule.
Bimodule collapse_to_left_module(const Bimodule& x);
// Inverse direction: a left (A tensor C)-module as an (A, C^op)-bimodule.
Bimodule expand_from_left_module(const Bimodule& m, const Algebra& a,
                                 const Algebra& c);

// Forgets one side of the action (the other algebra becomes scalars).
Bimodule as_left_module(const Bimodule& x);
Bimodule as_right_module(const Bimodule& x);

// Basis of the space of linear maps X -> Y commuting with both actions.
std::vector<Mat> intertwiner_basis(const Bimodule& x, const Bimodule& y);
// Commuting with the right (resp. left) action only.
std::vector<Mat> right_module_hom_basis(const Bimodule& x, const Bimodule& y);
std::vector<Mat> left_module_hom_basis(const Bimodule& x, const Bimodule& y);

struct IsoResult {
  bool isomorphic = false;
  std::optional<Mat> witness;
};

// Decides bimodule isomorphism. Complete: unequal dimensions of
// Hom(X,Y), Hom(X,X), Hom(Y,Y) refute isomorphism outright; otherwise a
// generic intertwiner combination is searched, with an exhaustive grid
// exceeding the determinant degree bound as the completeness backstop.
IsoResult bimodule_iso(const Bimodule& x, const Bimodule& y);

// Isomorphism as left (resp. right) modules only.
IsoResult left_module_iso(const Bimodule& x, const Bimodule& y);

// Morita criterion: A -> End_B(X) and B^op -> End_A(X) both bijective.
bool morita_invertible(const Bimodule& x);

struct FreeRank1 {
  bool free = false;
  std::vector<Rat> generator;  // v with a -> a.v bijective, when free
};

// Is X free of rank 1 as a left module over its left algebra? Tries the
// given candidate generators, then coordinate vectors, then a
// deterministic small-integer batch, then the complete coefficient grid.
FreeRank1 free_rank1_left(const Bimodule& x,
                          const std::vector<std::vector<Rat>>& candidates = {});
// Same test on the right side (reported separately, never folded into
// hopfish verdicts).
FreeRank1 free_rank1_right(const Bimodule& x,
                           const std::vector<std::vector<Rat>>& candidates = {});

}  // namespace hopfish

#endif
