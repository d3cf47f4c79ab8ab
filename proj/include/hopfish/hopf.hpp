#ifndef HOPFISH_HOPF_HPP
#define HOPFISH_HOPF_HPP

#include <string>
#include <vector>

#include "hopfish/bimodule.hpp"
#include "hopfish/hypergroupoid.hpp"
#include "hopfish/linalg.hpp"

namespace hopfish {

// Bialgebra structure maps in matrix form. coproduct: A -> A tensor A,
// counit: A -> k, antipode: A <- A^op (anti-homomorphisms are always
// stored as homomorphisms out of the opposite algebra).
struct HopfData {
  Algebra algebra;
  Homomorphism coproduct;
  Homomorphism counit;
  Homomorphism antipode;
};

// Quasi-bialgebra data: strict coassociativity is replaced by the
// invertible associator phi in A tensor A tensor A, with antipode
// elements alpha, beta.
struct QuasiHopfData {
  Algebra algebra;
  Homomorphism coproduct;
  Homomorphism counit;
  Homomorphism antipode;
  std::vector<Rat> phi, phi_inv;  // elements of A^(x)3, length dim^3
  std::vector<Rat> alpha, beta;   // elements of A
};

struct CheckItem {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Verdict {
  bool ok = false;
  std::vector<CheckItem> checks;
  const CheckItem* find(const std::string& name) const;
};

// Modulations of the structure maps.
Bimodule coproduct_bimodule(const Homomorphism& coproduct);  // (A tensor A, A)
Bimodule counit_bimodule(const Homomorphism& counit);        // (k, A)

// Sesquiunital sesquialgebra axioms, checked up to bimodule isomorphism:
// coassociativity of delta and the two counit isomorphisms with the
// regular bimodule.
Verdict check_sesquialgebra(const Algebra& a, const Bimodule& delta,
                            const Bimodule& eps);

// (A tensor A)/W with W the left ideal generated by
// { eps(a) 1 tensor 1 - Delta(a) }; cross-checked against the left ideal
// generated by Delta(ker eps) (the two must coincide for valid input).
struct Preantipode {
  Bimodule bimodule;  // (A, A^op)
  Mat projection;     // A tensor A -> quotient
  Mat section;
  std::vector<Rat> unit_class;  // class of 1 tensor 1
};
Preantipode preantipode(const Algebra& a, const Homomorphism& coproduct,
                        const Homomorphism& counit);

// Certifies that the modulation of a Hopf algebra is hopfish: the map
// a tensor b -> a S(b) must descend to a bimodule isomorphism
// (A tensor A)/W -> modulation(S).
Verdict hopf_verify(const HopfData& h);

// The quasi-Hopf counterpart: checks the QuasiHopfData identities, builds
// omega = sum S(P)alpha Q tensor R, the maps phi, psi on A tensor A, and
// the induced bijection (A tensor A)/W -> A.
Verdict quasi_hopf_verify(const QuasiHopfData& q);

// Hopf data for the function algebra on Z/n (pointwise product).
HopfData function_hopf_data(std::size_t n);
// Hopf data for the group algebra Q[Z/n].
HopfData group_algebra_hopf_data(std::size_t n);
// Recasts Hopf data with the trivial associator and alpha = beta = 1.
QuasiHopfData as_quasi_hopf(const HopfData& h);

// Function algebra on Z/2 with the nontrivial 3-cocycle associator
// phi = sum (-1)^{abc} delta_a x delta_b x delta_c (its own inverse) and
// S = id. The normalization axiom forces alpha_0 beta_0 = 1 and
// alpha_1 beta_1 = -1; the default pair is one solution.
QuasiHopfData twisted_z2_quasi_hopf(const std::vector<Rat>& alpha = {1, 1},
                                    const std::vector<Rat>& beta = {1, -1});

// Finite-free-type structure bimodules of a structure tensor over
// A = Q^G: delta has component rank d(g,h,k) at ((g,h),k), eps rank e[g]
// at g.
struct FiniteFreeType {
  Algebra functions;  // Q^G, pointwise
  Bimodule delta;     // (A tensor A, A)
  Bimodule eps;       // (k, A)
};
FiniteFreeType finite_free_type_data(const StructureTensor& t);

// The candidate preantipode of a finite-free-type sesquialgebra: block
// (g,h) has rank sum_t e[t] d(g,h,t). Hopfish iff this is free of rank 1
// as a left module.
Bimodule finite_free_type_preantipode(const StructureTensor& t);

// Antipode bimodule of a validated hypergroupoid: rank 1 at (g, sigma(g)).
Bimodule antipode_bimodule(const Hypergroupoid& h);

}  // namespace hopfish

#endif
