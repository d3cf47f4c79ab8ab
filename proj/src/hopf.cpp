#include "hopfish/hopf.hpp"

#include <array>
#include <stdexcept>

namespace hopfish {
namespace {

std::vector<Rat> tensor2(const std::vector<Rat>& u, const std::vector<Rat>& v) {
  std::vector<Rat> out(u.size() * v.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j) out[i * v.size() + j] = u[i] * v[j];
  }
  return out;
}

// Left-ideal closure of the given generators inside the algebra t.
std::vector<std::vector<Rat>> left_ideal(const Algebra& t,
                                         const std::vector<std::vector<Rat>>& gens) {
  std::vector<std::vector<Rat>> out;
  for (std::size_t i = 0; i < t.dim(); ++i) {
    Mat li = t.left_mult_basis(i);
    for (const auto& g : gens) out.push_back(li * g);
  }
  return out;
}

}  // namespace

const CheckItem* Verdict::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

Bimodule coproduct_bimodule(const Homomorphism& coproduct) {
  // Delta: A -> A tensor A modulates to the (A tensor A, A)-bimodule.
  return modulate(coproduct);
}

Bimodule counit_bimodule(const Homomorphism& counit) { return modulate(counit); }

Verdict check_sesquialgebra(const Algebra& a, const Bimodule& delta,
                            const Bimodule& eps) {
  Verdict v;
  Bimodule reg = regular_bimodule(a);

  Bimodule lhs = tensor_over_ext(reg, delta, delta);
  Bimodule rhs = tensor_over_ext(delta, reg, delta);
  bool coassoc = bimodule_iso(lhs, rhs).isomorphic;
  v.checks.push_back({"coassociativity", coassoc,
                      coassoc ? "" : "triple tensor products not isomorphic"});

  Bimodule left_counit = tensor_over_ext(eps, reg, delta);
  Bimodule right_counit = tensor_over_ext(reg, eps, delta);
  bool cl = bimodule_iso(relabel_left_algebra(left_counit, a), reg).isomorphic;
  bool cr = bimodule_iso(relabel_left_algebra(right_counit, a), reg).isomorphic;
  v.checks.push_back({"counit-left", cl, ""});
  v.checks.push_back({"counit-right", cr, ""});
  v.ok = coassoc && cl && cr;
  return v;
}

Preantipode preantipode(const Algebra& a, const Homomorphism& coproduct,
                        const Homomorphism& counit) {
  const std::size_t d = a.dim();
  Algebra t = Algebra::tensor(a, a);
  std::vector<Rat> unit2 = tensor2(a.unit(), a.unit());

  std::vector<std::vector<Rat>> gens;
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<Rat> w = coproduct.apply(a.basis_element(i));
    Rat eps_i = counit.apply(a.basis_element(i))[0];
    for (std::size_t j = 0; j < t.dim(); ++j) w[j] = eps_i * unit2[j] - w[j];
    gens.push_back(std::move(w));
  }
  auto w_span = left_ideal(t, gens);

  // Cross-check: W must equal the left ideal generated by Delta(ker eps).
  Mat eps_mat = counit.matrix;
  std::vector<std::vector<Rat>> gens2;
  for (const auto& v : kernel_basis(eps_mat)) gens2.push_back(coproduct.apply(v));
  if (!same_span(w_span, left_ideal(t, gens2), t.dim()))
    throw std::logic_error(
        "preantipode: the two constructions of W disagree; input is not a "
        "biunital (quasi-)bialgebra");

  Quotient q = quotient_basis(t.dim(), w_span);
  Bimodule s{a, Algebra::opposite(a), q.dim(), {}, {}};
  for (std::size_t i = 0; i < d; ++i) {
    // a acts by multiplication with a tensor 1 on the quotient.
    std::vector<Rat> elt = tensor2(a.basis_element(i), a.unit());
    s.left_action.push_back(q.projection * t.left_mult(elt) * q.section);
  }
  for (std::size_t j = 0; j < d; ++j) {
    std::vector<Rat> elt = tensor2(a.unit(), a.basis_element(j));
    s.right_action.push_back(q.projection * t.left_mult(elt) * q.section);
  }
  std::vector<Rat> unit_class = q.projection * unit2;
  return {std::move(s), q.projection, q.section, std::move(unit_class)};
}

namespace {

// mu: A tensor A -> A in matrix form.
Mat mult_matrix(const Algebra& a) {
  const std::size_t d = a.dim();
  Mat mu(d, d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      mu.set_col(i * d + j, a.multiply(a.basis_element(i), a.basis_element(j)));
  return mu;
}

bool bialgebra_axioms(const Algebra& a, const Homomorphism& coproduct,
                      const Homomorphism& counit, Verdict& v,
                      bool strict_coassoc) {
  const std::size_t d = a.dim();
  Mat dm = coproduct.matrix;  // d^2 x d
  Mat em = counit.matrix;     // 1 x d
  Mat id = Mat::identity(d);

  bool shapes = coproduct.is_valid() && counit.is_valid();
  v.checks.push_back({"structure-maps-homomorphisms", shapes, ""});
  if (!shapes) return false;

  if (strict_coassoc) {
    bool coassoc = dm.kron(id) * dm == id.kron(dm) * dm;
    v.checks.push_back({"coassociativity", coassoc, ""});
    if (!coassoc) return false;
  }
  bool counit_ax = em.kron(id) * dm == id && id.kron(em) * dm == id;
  v.checks.push_back({"counit-axiom", counit_ax, ""});
  return counit_ax;
}

}  // namespace

Verdict hopf_verify(const HopfData& h) {
  Verdict v;
  const Algebra& a = h.algebra;
  const std::size_t d = a.dim();
  if (!bialgebra_axioms(a, h.coproduct, h.counit, v, true)) return v;

  // Antipode axiom mu (S tensor id) Delta = 1 eps = mu (id tensor S) Delta.
  Mat mu = mult_matrix(a);
  Mat sm = h.antipode.matrix;
  Mat id = Mat::identity(d);
  Mat unit_eps(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    Rat e = h.counit.matrix(0, j);
    for (std::size_t i = 0; i < d; ++i) unit_eps(i, j) = e * a.unit()[i];
  }
  bool antipode_ax = mu * sm.kron(id) * h.coproduct.matrix == unit_eps &&
                     mu * id.kron(sm) * h.coproduct.matrix == unit_eps;
  v.checks.push_back({"antipode-axiom", antipode_ax, ""});

  Preantipode pre = preantipode(a, h.coproduct, h.counit);
  Bimodule mod_s = modulate(h.antipode);

  // phi0: a tensor b -> a S(b).
  Mat phi0(d, d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      phi0.set_col(i * d + j,
                   a.multiply(a.basis_element(i),
                              h.antipode.apply(a.basis_element(j))));

  // Well defined iff phi0 annihilates W = ker(projection).
  bool well_defined = true;
  for (auto& krn : kernel_basis(pre.projection)) {
    std::vector<Rat> img = phi0 * krn;
    for (const auto& c : img)
      if (c != 0) {
        well_defined = false;
        break;
      }
    if (!well_defined) break;
  }
  v.checks.push_back({"phi-well-defined", well_defined,
                      well_defined ? "" : "a tensor b -> a S(b) does not kill W"});

  Mat phi = phi0 * pre.section;  // quotient -> A
  bool right_dim = pre.bimodule.dim == d;
  v.checks.push_back({"preantipode-dimension", right_dim, ""});
  bool bijective = right_dim && determinant(phi) != 0;
  v.checks.push_back({"phi-bijective", bijective, ""});

  bool bimod_map = true;
  if (right_dim) {
    for (std::size_t i = 0; i < d && bimod_map; ++i)
      if (phi * pre.bimodule.left_action[i] != mod_s.left_action[i] * phi)
        bimod_map = false;
    for (std::size_t j = 0; j < d && bimod_map; ++j)
      if (phi * pre.bimodule.right_action[j] != mod_s.right_action[j] * phi)
        bimod_map = false;
  } else {
    bimod_map = false;
  }
  v.checks.push_back({"phi-bimodule-map", bimod_map, ""});

  v.ok = antipode_ax && well_defined && right_dim && bijective && bimod_map;
  return v;
}

Verdict quasi_hopf_verify(const QuasiHopfData& q) {
  Verdict v;
  const Algebra& a = q.algebra;
  const std::size_t d = a.dim();
  if (!bialgebra_axioms(a, q.coproduct, q.counit, v, false)) return v;

  Algebra t2 = Algebra::tensor(a, a);
  Algebra t3 = Algebra::tensor(t2, a);  // flat indexing (i*d + j)*d + k
  Mat dm = q.coproduct.matrix;
  Mat em = q.counit.matrix;
  Mat id = Mat::identity(d);
  auto s_of = [&](std::size_t i) { return q.antipode.apply(a.basis_element(i)); };

  std::vector<Rat> unit3 = tensor2(tensor2(a.unit(), a.unit()), a.unit());
  bool invertible = t3.multiply(q.phi, q.phi_inv) == unit3 &&
                    t3.multiply(q.phi_inv, q.phi) == unit3;
  v.checks.push_back({"associator-invertible", invertible, ""});

  // (id tensor Delta) Delta (a) = Phi^-1 (Delta tensor id) Delta (a) Phi.
  Mat lhs3 = id.kron(dm) * dm;
  Mat rhs3 = dm.kron(id) * dm;
  bool twisted = true;
  for (std::size_t i = 0; i < d && twisted; ++i) {
    std::vector<Rat> left = lhs3.col(i);
    std::vector<Rat> right =
        t3.multiply(q.phi_inv, t3.multiply(rhs3.col(i), q.phi));
    if (left != right) twisted = false;
  }
  v.checks.push_back({"twisted-coassociativity", twisted, ""});

  // Pentagon: (D x id x id)(Phi) (id x id x D)(Phi)
  //           = (Phi x 1) (id x D x id)(Phi) (1 x Phi).
  Algebra t4 = Algebra::tensor(t3, a);
  Mat id2 = Mat::identity(d * d);
  std::vector<Rat> p1 = dm.kron(id2) * q.phi;
  std::vector<Rat> p2 = id2.kron(dm) * q.phi;
  std::vector<Rat> p3 = tensor2(q.phi, a.unit());
  std::vector<Rat> p4 = id.kron(dm).kron(id) * q.phi;
  std::vector<Rat> p5 = tensor2(a.unit(), q.phi);
  bool pentagon =
      t4.multiply(p1, p2) == t4.multiply(t4.multiply(p3, p4), p5);
  v.checks.push_back({"pentagon", pentagon, ""});

  std::vector<Rat> unit2 = tensor2(a.unit(), a.unit());
  bool counit_assoc = id.kron(em).kron(id) * q.phi == unit2;
  v.checks.push_back({"counit-associator", counit_assoc, ""});

  // Quasi-antipode identities, per basis element.
  bool quasi_alpha = true, quasi_beta = true;
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<Rat> da = dm.col(i);
    std::vector<Rat> acc_a(d), acc_b(d);
    for (std::size_t p = 0; p < d; ++p)
      for (std::size_t r = 0; r < d; ++r) {
        const Rat& coeff = da[p * d + r];
        if (coeff == 0) continue;
        auto term_a = a.multiply(a.multiply(s_of(p), q.alpha), a.basis_element(r));
        auto term_b = a.multiply(a.multiply(a.basis_element(p), q.beta), s_of(r));
        for (std::size_t x = 0; x < d; ++x) {
          acc_a[x] += coeff * term_a[x];
          acc_b[x] += coeff * term_b[x];
        }
      }
    Rat eps_i = em(0, i);
    for (std::size_t x = 0; x < d; ++x) {
      if (acc_a[x] != eps_i * q.alpha[x]) quasi_alpha = false;
      if (acc_b[x] != eps_i * q.beta[x]) quasi_beta = false;
    }
  }
  v.checks.push_back({"quasi-antipode-alpha", quasi_alpha, ""});
  v.checks.push_back({"quasi-antipode-beta", quasi_beta, ""});

  // sum_j X_j beta S(Y_j) alpha Z_j = 1.
  std::vector<Rat> norm(d);
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y)
      for (std::size_t z = 0; z < d; ++z) {
        const Rat& coeff = q.phi[(x * d + y) * d + z];
        if (coeff == 0) continue;
        auto term = a.multiply(
            a.multiply(a.multiply(a.multiply(a.basis_element(x), q.beta),
                                  s_of(y)),
                       q.alpha),
            a.basis_element(z));
        for (std::size_t w = 0; w < d; ++w) norm[w] += coeff * term[w];
      }
  bool normalized = norm == a.unit();
  v.checks.push_back({"antipode-normalization", normalized, ""});

  bool axioms_ok = invertible && twisted && pentagon && counit_assoc &&
                   quasi_alpha && quasi_beta && normalized;
  if (!axioms_ok) {
    v.ok = false;
    return v;
  }

  // omega = sum S(P) alpha Q tensor R over Phi^-1.
  std::vector<Rat> omega(d * d);
  for (std::size_t p = 0; p < d; ++p)
    for (std::size_t qq = 0; qq < d; ++qq)
      for (std::size_t r = 0; r < d; ++r) {
        const Rat& coeff = q.phi_inv[(p * d + qq) * d + r];
        if (coeff == 0) continue;
        auto u = a.multiply(a.multiply(s_of(p), q.alpha), a.basis_element(qq));
        for (std::size_t x = 0; x < d; ++x)
          if (u[x] != 0) omega[x * d + r] += coeff * u[x];
      }

  // phi(a tensor b) = (a tensor 1) omega Delta(b).
  Mat phi_map(d * d, d * d);
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<Rat> ai1 = tensor2(a.basis_element(i), a.unit());
    std::vector<Rat> pre = t2.multiply(ai1, omega);
    for (std::size_t j = 0; j < d; ++j)
      phi_map.set_col(i * d + j, t2.multiply(pre, dm.col(j)));
  }

  // psi(a tensor b) = sum_i a X_i beta S(Y_i) S(b_1) tensor b_2 Z_i.
  Mat psi_map(d * d, d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      std::vector<Rat> acc(d * d);
      std::vector<Rat> db = dm.col(j);
      for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y)
          for (std::size_t z = 0; z < d; ++z) {
            const Rat& cphi = q.phi[(x * d + y) * d + z];
            if (cphi == 0) continue;
            auto head = a.multiply(
                a.multiply(a.multiply(a.basis_element(i), a.basis_element(x)),
                           q.beta),
                s_of(y));
            for (std::size_t b1 = 0; b1 < d; ++b1)
              for (std::size_t b2 = 0; b2 < d; ++b2) {
                const Rat& cdel = db[b1 * d + b2];
                if (cdel == 0) continue;
                auto u = a.multiply(head, s_of(b1));
                auto w = a.multiply(a.basis_element(b2), a.basis_element(z));
                Rat f = cphi * cdel;
                for (std::size_t p = 0; p < d; ++p) {
                  if (u[p] == 0) continue;
                  for (std::size_t r = 0; r < d; ++r)
                    if (w[r] != 0) acc[p * d + r] += f * u[p] * w[r];
                }
              }
          }
      psi_map.set_col(i * d + j, acc);
    }

  bool inverse_pair = (phi_map * psi_map).is_identity() &&
                      (psi_map * phi_map).is_identity();
  v.checks.push_back({"phi-psi-identity", inverse_pair, ""});

  // (id tensor eps)(phi^-1 (a tensor b)) = a beta S(b).
  Mat beta_s(d, d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      beta_s.set_col(i * d + j,
                     a.multiply(a.multiply(a.basis_element(i), q.beta), s_of(j)));
  bool counit_inverse = id.kron(em) * psi_map == beta_s;
  v.checks.push_back({"counit-inverse-formula", counit_inverse, ""});

  // a tensor b -> a beta S(b) induces a bijection (A tensor A)/W -> A.
  Preantipode pre = preantipode(a, q.coproduct, q.counit);
  bool kills_w = true;
  for (auto& krn : kernel_basis(pre.projection)) {
    std::vector<Rat> img = beta_s * krn;
    for (const auto& c : img)
      if (c != 0) {
        kills_w = false;
        break;
      }
    if (!kills_w) break;
  }
  bool induced_bijection = kills_w && pre.bimodule.dim == d &&
                           determinant(beta_s * pre.section) != 0;
  v.checks.push_back({"induced-bijection", induced_bijection, ""});

  v.ok = inverse_pair && counit_inverse && induced_bijection;
  return v;
}

HopfData function_hopf_data(std::size_t n) {
  Algebra a = Algebra::functions(n);
  Mat dm(n * n, n), em(1, n), sm(n, n);
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t b = 0; b < n; ++b) dm(b * n + (g + n - b % n) % n, g) = 1;
    em(0, g) = (g == 0) ? 1 : 0;
    sm((n - g) % n, g) = 1;
  }
  Homomorphism coproduct{a, Algebra::tensor(a, a), std::move(dm)};
  Homomorphism counit{a, Algebra::scalars(), std::move(em)};
  Homomorphism antipode{Algebra::opposite(a), a, std::move(sm)};
  return {std::move(a), std::move(coproduct), std::move(counit),
          std::move(antipode)};
}

HopfData group_algebra_hopf_data(std::size_t n) {
  Algebra a = Algebra::cyclic_group_algebra(n);
  Mat dm(n * n, n), em(1, n), sm(n, n);
  for (std::size_t g = 0; g < n; ++g) {
    dm(g * n + g, g) = 1;  // group-likes: Delta(g) = g tensor g
    em(0, g) = 1;
    sm((n - g) % n, g) = 1;
  }
  Homomorphism coproduct{a, Algebra::tensor(a, a), std::move(dm)};
  Homomorphism counit{a, Algebra::scalars(), std::move(em)};
  Homomorphism antipode{Algebra::opposite(a), a, std::move(sm)};
  return {std::move(a), std::move(coproduct), std::move(counit),
          std::move(antipode)};
}

QuasiHopfData as_quasi_hopf(const HopfData& h) {
  const std::size_t d = h.algebra.dim();
  std::vector<Rat> unit3 =
      tensor2(tensor2(h.algebra.unit(), h.algebra.unit()), h.algebra.unit());
  return {h.algebra, h.coproduct, h.counit, h.antipode,
          unit3,     unit3,       h.algebra.unit(), h.algebra.unit()};
}

QuasiHopfData twisted_z2_quasi_hopf(const std::vector<Rat>& alpha,
                                    const std::vector<Rat>& beta) {
  HopfData base = function_hopf_data(2);
  std::vector<Rat> phi(8, 1);
  phi[7] = -1;  // (-1)^{abc} is -1 only at a = b = c = 1
  return {base.algebra, base.coproduct, base.counit, base.antipode,
          phi,          phi,            alpha,       beta};
}

FiniteFreeType finite_free_type_data(const StructureTensor& t) {
  const std::size_t n = t.n;
  Algebra f = Algebra::functions(n);
  Algebra ff = Algebra::tensor(f, f);

  // Enumerate the basis of delta: (g, h, k) repeated d(g,h,k) times.
  std::vector<std::array<std::size_t, 3>> basis;
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h)
      for (std::size_t k = 0; k < n; ++k)
        for (std::uint64_t c = 0; c < t.at(g, h, k); ++c)
          basis.push_back({g, h, k});

  Bimodule delta{ff, f, basis.size(), {}, {}};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Mat m(basis.size(), basis.size());
      for (std::size_t i = 0; i < basis.size(); ++i)
        if (basis[i][0] == a && basis[i][1] == b) m(i, i) = 1;
      delta.left_action.push_back(std::move(m));
    }
  for (std::size_t c = 0; c < n; ++c) {
    Mat m(basis.size(), basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (basis[i][2] == c) m(i, i) = 1;
    delta.right_action.push_back(std::move(m));
  }

  std::vector<std::size_t> eps_basis;
  for (std::size_t g = 0; g < n; ++g)
    for (std::uint64_t c = 0; c < t.e[g]; ++c) eps_basis.push_back(g);
  Bimodule eps{Algebra::scalars(), f, eps_basis.size(),
               {Mat::identity(eps_basis.size())}, {}};
  for (std::size_t c = 0; c < n; ++c) {
    Mat m(eps_basis.size(), eps_basis.size());
    for (std::size_t i = 0; i < eps_basis.size(); ++i)
      if (eps_basis[i] == c) m(i, i) = 1;
    eps.right_action.push_back(std::move(m));
  }
  return {std::move(f), std::move(delta), std::move(eps)};
}

Bimodule finite_free_type_preantipode(const StructureTensor& t) {
  const std::size_t n = t.n;
  Algebra f = Algebra::functions(n);
  std::vector<std::pair<std::size_t, std::size_t>> basis;
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h) {
      std::uint64_t s = 0;
      for (std::size_t u = 0; u < n; ++u) s += t.e[u] * t.at(g, h, u);
      for (std::uint64_t c = 0; c < s; ++c) basis.push_back({g, h});
    }
  Bimodule s{f, Algebra::opposite(f), basis.size(), {}, {}};
  for (std::size_t a = 0; a < n; ++a) {
    Mat l(basis.size(), basis.size()), r(basis.size(), basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (basis[i].first == a) l(i, i) = 1;
      if (basis[i].second == a) r(i, i) = 1;
    }
    s.left_action.push_back(std::move(l));
    s.right_action.push_back(std::move(r));
  }
  return s;
}

Bimodule antipode_bimodule(const Hypergroupoid& h) {
  const std::size_t n = h.base.n;
  Algebra f = Algebra::functions(n);
  Bimodule s{f, Algebra::opposite(f), n, {}, {}};
  for (std::size_t a = 0; a < n; ++a) {
    Mat l(n, n), r(n, n);
    for (std::size_t g = 0; g < n; ++g) {
      if (g == a) l(g, g) = 1;
      if (h.sigma[g] == a) r(g, g) = 1;
    }
    s.left_action.push_back(std::move(l));
    s.right_action.push_back(std::move(r));
  }
  return s;
}

}  // namespace hopfish
