#include "hopfish/bimodule.hpp"

#include <cstdint>
#include <stdexcept>

#include "hopfish/sparse.hpp"

namespace hopfish {
namespace {

std::vector<SparseVec> sparse_cols(const Mat& m) {
  std::vector<SparseVec> cols(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (m(i, j) != 0) cols[j].emplace_back(i, m(i, j));
  return cols;
}

Mat act(const std::vector<Mat>& action, const std::vector<Rat>& elt,
        std::size_t dim) {
  Mat m(dim, dim);
  for (std::size_t i = 0; i < elt.size(); ++i)
    if (elt[i] != 0) m = m + action[i] * elt[i];
  return m;
}

}  // namespace

Mat Bimodule::left_act(const std::vector<Rat>& a) const {
  return act(left_action, a, dim);
}

Mat Bimodule::right_act(const std::vector<Rat>& b) const {
  return act(right_action, b, dim);
}

bool Bimodule::is_valid(std::string* why) const {
  const std::size_t da = left_alg.dim(), db = right_alg.dim();
  if (left_action.size() != da || right_action.size() != db) {
    if (why) *why = "action matrix count mismatch";
    return false;
  }
  if (!left_act(left_alg.unit()).is_identity()) {
    if (why) *why = "left action not unital";
    return false;
  }
  if (!right_act(right_alg.unit()).is_identity()) {
    if (why) *why = "right action not unital";
    return false;
  }
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j) {
      Mat expected(dim, dim);
      for (std::size_t k = 0; k < da; ++k)
        if (left_alg.c(i, j, k) != 0)
          expected = expected + left_action[k] * left_alg.c(i, j, k);
      if (left_action[i] * left_action[j] != expected) {
        if (why) *why = "left action not a representation";
        return false;
      }
    }
  for (std::size_t i = 0; i < db; ++i)
    for (std::size_t j = 0; j < db; ++j) {
      // x.(e_i e_j) applies e_i first: R(e_i e_j) = R_j R_i.
      Mat expected(dim, dim);
      for (std::size_t k = 0; k < db; ++k)
        if (right_alg.c(i, j, k) != 0)
          expected = expected + right_action[k] * right_alg.c(i, j, k);
      if (right_action[j] * right_action[i] != expected) {
        if (why) *why = "right action not an anti-representation";
        return false;
      }
    }
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < db; ++j)
      if (left_action[i] * right_action[j] != right_action[j] * left_action[i]) {
        if (why) *why = "left and right actions do not commute";
        return false;
      }
  return true;
}

Bimodule regular_bimodule(const Algebra& a) {
  return modulate(Homomorphism::identity(a));
}

Bimodule modulate(const Homomorphism& f) {
  const Algebra& a = f.target;
  const Algebra& b = f.source;
  Bimodule m{a, b, a.dim(), {}, {}};
  for (std::size_t i = 0; i < a.dim(); ++i)
    m.left_action.push_back(a.left_mult_basis(i));
  for (std::size_t j = 0; j < b.dim(); ++j)
    m.right_action.push_back(a.right_mult(f.apply(b.basis_element(j))));
  return m;
}

Bimodule ext_tensor(const Bimodule& x, const Bimodule& y) {
  Bimodule m{Algebra::tensor(x.left_alg, y.left_alg),
             Algebra::tensor(x.right_alg, y.right_alg), x.dim * y.dim, {}, {}};
  for (std::size_t i = 0; i < x.left_alg.dim(); ++i)
    for (std::size_t j = 0; j < y.left_alg.dim(); ++j)
      m.left_action.push_back(x.left_action[i].kron(y.left_action[j]));
  for (std::size_t i = 0; i < x.right_alg.dim(); ++i)
    for (std::size_t j = 0; j < y.right_alg.dim(); ++j)
      m.right_action.push_back(x.right_action[i].kron(y.right_action[j]));
  return m;
}

namespace {

void require_same_algebra(const Algebra& a, const Algebra& b,
                          const char* what) {
  if (a.dim() != b.dim() ||
      a.structure_constants() != b.structure_constants() ||
      a.unit() != b.unit())
    throw std::invalid_argument(what);
}

// Writes the class coordinates of a reduced ambient vector into column j.
void write_class_col(Mat& m, std::size_t j, const SparseVec& reduced,
                     const std::vector<std::size_t>& class_of) {
  for (const auto& [col, val] : reduced) m(class_of[col], j) = val;
}

std::vector<std::size_t> class_index(const std::vector<std::size_t>& frees,
                                     std::size_t ambient) {
  std::vector<std::size_t> class_of(ambient, ambient);
  for (std::size_t a = 0; a < frees.size(); ++a) class_of[frees[a]] = a;
  return class_of;
}

}  // namespace

Bimodule tensor_over(const Bimodule& x, const Bimodule& y) {
  require_same_algebra(x.right_alg, y.left_alg,
                       "tensor_over: middle algebras differ");
  const Algebra& mid = x.right_alg;
  const std::size_t dx = x.dim, dy = y.dim, ambient = dx * dy;

  SparseEliminator elim(ambient);
  std::vector<std::vector<SparseVec>> rb(mid.dim()), lb(mid.dim());
  for (std::size_t b = 0; b < mid.dim(); ++b) {
    rb[b] = sparse_cols(x.right_action[b]);
    lb[b] = sparse_cols(y.left_action[b]);
  }
  for (std::size_t b = 0; b < mid.dim(); ++b)
    for (std::size_t p = 0; p < dx; ++p)
      for (std::size_t q = 0; q < dy; ++q) {
        std::vector<std::pair<std::size_t, Rat>> entries;
        for (const auto& [pp, c] : rb[b][p]) entries.emplace_back(pp * dy + q, c);
        for (const auto& [qq, c] : lb[b][q]) entries.emplace_back(p * dy + qq, -c);
        elim.add(sparse_collect(std::move(entries)));
      }

  auto frees = elim.free_columns();
  auto class_of = class_index(frees, ambient);
  const std::size_t qd = frees.size();

  Bimodule m{x.left_alg, y.right_alg, qd, {}, {}};
  for (std::size_t i = 0; i < x.left_alg.dim(); ++i) {
    auto cols = sparse_cols(x.left_action[i]);
    Mat mat(qd, qd);
    for (std::size_t a = 0; a < qd; ++a) {
      std::size_t u = frees[a] / dy, v = frees[a] % dy;
      std::vector<std::pair<std::size_t, Rat>> entries;
      for (const auto& [uu, c] : cols[u]) entries.emplace_back(uu * dy + v, c);
      write_class_col(mat, a, elim.reduce(sparse_collect(std::move(entries))),
                      class_of);
    }
    m.left_action.push_back(std::move(mat));
  }
  for (std::size_t j = 0; j < y.right_alg.dim(); ++j) {
    auto cols = sparse_cols(y.right_action[j]);
    Mat mat(qd, qd);
    for (std::size_t a = 0; a < qd; ++a) {
      std::size_t u = frees[a] / dy, v = frees[a] % dy;
      std::vector<std::pair<std::size_t, Rat>> entries;
      for (const auto& [vv, c] : cols[v]) entries.emplace_back(u * dy + vv, c);
      write_class_col(mat, a, elim.reduce(sparse_collect(std::move(entries))),
                      class_of);
    }
    m.right_action.push_back(std::move(mat));
  }
  return m;
}

Bimodule tensor_over_ext(const Bimodule& x, const Bimodule& y,
                         const Bimodule& z, bool with_left_actions) {
  Algebra mid = Algebra::tensor(x.right_alg, y.right_alg);
  require_same_algebra(mid, z.left_alg,
                       "tensor_over_ext: middle algebras differ");
  const std::size_t dx = x.dim, dy = y.dim, dz = z.dim;
  const std::size_t ambient = dx * dy * dz;
  const std::size_t dyr = y.right_alg.dim();

  std::vector<std::vector<SparseVec>> rx(x.right_alg.dim()),
      ry(y.right_alg.dim()), lz(z.left_alg.dim());
  for (std::size_t i = 0; i < x.right_alg.dim(); ++i)
    rx[i] = sparse_cols(x.right_action[i]);
  for (std::size_t j = 0; j < dyr; ++j) ry[j] = sparse_cols(y.right_action[j]);
  for (std::size_t b = 0; b < z.left_alg.dim(); ++b)
    lz[b] = sparse_cols(z.left_action[b]);

  auto at = [dy, dz](std::size_t u, std::size_t v, std::size_t w) {
    return (u * dy + v) * dz + w;
  };

  SparseEliminator elim(ambient);
  for (std::size_t i = 0; i < x.right_alg.dim(); ++i)
    for (std::size_t j = 0; j < dyr; ++j) {
      const std::size_t b = i * dyr + j;
      for (std::size_t u = 0; u < dx; ++u)
        for (std::size_t v = 0; v < dy; ++v)
          for (std::size_t w = 0; w < dz; ++w) {
            std::vector<std::pair<std::size_t, Rat>> entries;
            for (const auto& [uu, cu] : rx[i][u])
              for (const auto& [vv, cv] : ry[j][v])
                entries.emplace_back(at(uu, vv, w), cu * cv);
            for (const auto& [ww, cw] : lz[b][w])
              entries.emplace_back(at(u, v, ww), -cw);
            elim.add(sparse_collect(std::move(entries)));
          }
    }

  auto frees = elim.free_columns();
  auto class_of = class_index(frees, ambient);
  const std::size_t qd = frees.size();

  Bimodule m{Algebra::tensor(x.left_alg, y.left_alg), z.right_alg, qd, {}, {}};
  if (with_left_actions) {
    const std::size_t dyl = y.left_alg.dim();
    std::vector<std::vector<SparseVec>> lx(x.left_alg.dim()),
        ly(y.left_alg.dim());
    for (std::size_t p = 0; p < x.left_alg.dim(); ++p)
      lx[p] = sparse_cols(x.left_action[p]);
    for (std::size_t q = 0; q < dyl; ++q) ly[q] = sparse_cols(y.left_action[q]);
    for (std::size_t p = 0; p < x.left_alg.dim(); ++p)
      for (std::size_t q = 0; q < dyl; ++q) {
        Mat mat(qd, qd);
        for (std::size_t a = 0; a < qd; ++a) {
          std::size_t u = frees[a] / (dy * dz);
          std::size_t v = (frees[a] / dz) % dy;
          std::size_t w = frees[a] % dz;
          std::vector<std::pair<std::size_t, Rat>> entries;
          for (const auto& [uu, cu] : lx[p][u])
            for (const auto& [vv, cv] : ly[q][v])
              entries.emplace_back(at(uu, vv, w), cu * cv);
          write_class_col(mat, a,
                          elim.reduce(sparse_collect(std::move(entries))),
                          class_of);
        }
        m.left_action.push_back(std::move(mat));
      }
  }
  for (std::size_t t = 0; t < z.right_alg.dim(); ++t) {
    auto cols = sparse_cols(z.right_action[t]);
    Mat mat(qd, qd);
    for (std::size_t a = 0; a < qd; ++a) {
      std::size_t u = frees[a] / (dy * dz);
      std::size_t v = (frees[a] / dz) % dy;
      std::size_t w = frees[a] % dz;
      std::vector<std::pair<std::size_t, Rat>> entries;
      for (const auto& [ww, cw] : cols[w]) entries.emplace_back(at(u, v, ww), cw);
      write_class_col(mat, a, elim.reduce(sparse_collect(std::move(entries))),
                      class_of);
    }
    m.right_action.push_back(std::move(mat));
  }
  return m;
}

Bimodule relabel_left_algebra(Bimodule x, const Algebra& replacement) {
  if (x.left_alg.dim() != replacement.dim() ||
      x.left_alg.structure_constants() != replacement.structure_constants() ||
      x.left_alg.unit() != replacement.unit())
    throw std::invalid_argument("relabel: algebras not structurally equal");
  x.left_alg = replacement;
  return x;
}

Bimodule relabel_right_algebra(Bimodule x, const Algebra& replacement) {
  if (x.right_alg.dim() != replacement.dim() ||
      x.right_alg.structure_constants() != replacement.structure_constants() ||
      x.right_alg.unit() != replacement.unit())
    throw std::invalid_argument("relabel: algebras not structurally equal");
  x.right_alg = replacement;
  return x;
}

Bimodule collapse_to_left_module(const Bimodule& x) {
  Algebra big = Algebra::tensor(x.left_alg, Algebra::opposite(x.right_alg));
  Bimodule m{big, Algebra::scalars(), x.dim, {}, {Mat::identity(x.dim)}};
  for (std::size_t i = 0; i < x.left_alg.dim(); ++i)
    for (std::size_t j = 0; j < x.right_alg.dim(); ++j)
      m.left_action.push_back(x.left_action[i] * x.right_action[j]);
  return m;
}

Bimodule expand_from_left_module(const Bimodule& m, const Algebra& a,
                                 const Algebra& c) {
  const std::size_t da = a.dim(), dc = c.dim();
  if (m.left_alg.dim() != da * dc)
    throw std::invalid_argument("expand: dimension mismatch");
  Bimodule out{a, Algebra::opposite(c), m.dim, {}, {}};
  for (std::size_t i = 0; i < da; ++i) {
    Mat l(m.dim, m.dim);
    for (std::size_t j = 0; j < dc; ++j)
      if (c.unit()[j] != 0)
        l = l + m.left_action[i * dc + j] * c.unit()[j];
    out.left_action.push_back(std::move(l));
  }
  for (std::size_t j = 0; j < dc; ++j) {
    Mat r(m.dim, m.dim);
    for (std::size_t i = 0; i < da; ++i)
      if (a.unit()[i] != 0)
        r = r + m.left_action[i * dc + j] * a.unit()[i];
    out.right_action.push_back(std::move(r));
  }
  return out;
}

Bimodule as_left_module(const Bimodule& x) {
  return {x.left_alg, Algebra::scalars(), x.dim, x.left_action,
          {Mat::identity(x.dim)}};
}

Bimodule as_right_module(const Bimodule& x) {
  return {Algebra::scalars(), x.right_alg, x.dim, {Mat::identity(x.dim)},
          x.right_action};
}

namespace {

// T (dy x dx) with T*M_a = N_a*T for each listed action pair. Constraints
// are eliminated incrementally and sparsely; unknown T(p,q) has index
// p*dx + q.
std::vector<Mat> commutant_basis(
    std::size_t dx, std::size_t dy,
    const std::vector<std::pair<const Mat*, const Mat*>>& pairs) {
  const std::size_t unknowns = dx * dy;
  SparseEliminator elim(unknowns);
  for (const auto& [mx, ny] : pairs) {
    for (std::size_t p = 0; p < dy; ++p)
      for (std::size_t q = 0; q < dx; ++q) {
        std::vector<std::pair<std::size_t, Rat>> entries;
        for (std::size_t s = 0; s < dx; ++s)
          if ((*mx)(s, q) != 0) entries.emplace_back(p * dx + s, (*mx)(s, q));
        for (std::size_t s = 0; s < dy; ++s)
          if ((*ny)(p, s) != 0) entries.emplace_back(s * dx + q, -(*ny)(p, s));
        elim.add(sparse_collect(std::move(entries)));
      }
  }
  std::vector<Mat> basis;
  for (const auto& v : elim.kernel()) {
    Mat t(dy, dx);
    for (const auto& [idx, val] : v) t(idx / dx, idx % dx) = val;
    basis.push_back(std::move(t));
  }
  return basis;
}

}  // namespace

std::vector<Mat> intertwiner_basis(const Bimodule& x, const Bimodule& y) {
  std::vector<std::pair<const Mat*, const Mat*>> pairs;
  for (std::size_t i = 0; i < x.left_action.size(); ++i)
    pairs.emplace_back(&x.left_action[i], &y.left_action[i]);
  for (std::size_t j = 0; j < x.right_action.size(); ++j)
    pairs.emplace_back(&x.right_action[j], &y.right_action[j]);
  return commutant_basis(x.dim, y.dim, pairs);
}

std::vector<Mat> right_module_hom_basis(const Bimodule& x, const Bimodule& y) {
  std::vector<std::pair<const Mat*, const Mat*>> pairs;
  for (std::size_t j = 0; j < x.right_action.size(); ++j)
    pairs.emplace_back(&x.right_action[j], &y.right_action[j]);
  return commutant_basis(x.dim, y.dim, pairs);
}

std::vector<Mat> left_module_hom_basis(const Bimodule& x, const Bimodule& y) {
  std::vector<std::pair<const Mat*, const Mat*>> pairs;
  for (std::size_t i = 0; i < x.left_action.size(); ++i)
    pairs.emplace_back(&x.left_action[i], &y.left_action[i]);
  return commutant_basis(x.dim, y.dim, pairs);
}

namespace {

// Decides whether the span of basis = Hom(X, Y) contains an invertible
// element. endo_x and endo_y are dim Hom(X, X) and dim Hom(Y, Y): an
// isomorphism X -> Y induces linear bijections of all three hom spaces,
// so unequal dimensions refute isomorphism outright. That pre-check keeps
// the exhaustive grid fallback (the completeness guarantee) off every
// non-isomorphic pair over a semisimple algebra, where the three
// dimensions agree only for isomorphic modules.
IsoResult iso_from_basis(std::size_t dx, std::size_t dy,
                         const std::vector<Mat>& basis, std::size_t endo_x,
                         std::size_t endo_y) {
  if (dx != dy) return {};
  // Zero modules are isomorphic via the empty map.
  if (dx == 0) return {true, Mat(0, 0)};
  if (basis.empty()) return {};
  if (basis.size() != endo_x || basis.size() != endo_y) return {};
  auto combine = [&](const std::vector<Rat>& coeff) {
    Mat m(dy, dx);
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (coeff[i] != 0) m = m + basis[i] * coeff[i];
    return m;
  };
  // Cheap deterministic pseudorandom trials; the exhaustive grid below is
  // the completeness guarantee but is only reached on (rare) misses.
  std::uint64_t state = 0x243f6a8885a308d3ull;
  for (int trial = 0; trial < 64; ++trial) {
    std::vector<Rat> coeff(basis.size());
    for (auto& c : coeff) {
      state = state * 6364136223846793005ull + 1442695040888963407ull;
      c = Rat(static_cast<long>((state >> 33) % 17) - 8);
    }
    Mat w = combine(coeff);
    if (determinant(w) != 0) return {true, std::move(w)};
  }
  auto generic = is_invertible_generic(basis);
  if (!generic.invertible) return {};
  return {true, combine(generic.coefficients)};
}

}  // namespace

IsoResult bimodule_iso(const Bimodule& x, const Bimodule& y) {
  if (x.left_alg.dim() != y.left_alg.dim() ||
      x.right_alg.dim() != y.right_alg.dim())
    throw std::invalid_argument("bimodule_iso: algebra pair mismatch");
  if (x.dim != y.dim) return {};
  return iso_from_basis(x.dim, y.dim, intertwiner_basis(x, y),
                        intertwiner_basis(x, x).size(),
                        intertwiner_basis(y, y).size());
}

IsoResult left_module_iso(const Bimodule& x, const Bimodule& y) {
  if (x.dim != y.dim) return {};
  return iso_from_basis(x.dim, y.dim, left_module_hom_basis(x, y),
                        left_module_hom_basis(x, x).size(),
                        left_module_hom_basis(y, y).size());
}

bool morita_invertible(const Bimodule& x) {
  auto span_rank = [&](const std::vector<Mat>& mats) {
    Mat m(mats.size(), x.dim * x.dim);
    for (std::size_t i = 0; i < mats.size(); ++i)
      for (std::size_t j = 0; j < x.dim * x.dim; ++j)
        m(i, j) = mats[i].data()[j];
    return rank(m);
  };
  std::size_t end_b = right_module_hom_basis(x, x).size();
  if (span_rank(x.left_action) != x.left_alg.dim() ||
      end_b != x.left_alg.dim())
    return false;
  std::size_t end_a = left_module_hom_basis(x, x).size();
  return span_rank(x.right_action) == x.right_alg.dim() &&
         end_a == x.right_alg.dim();
}

namespace {

FreeRank1 free_rank1_impl(const Algebra& alg, const std::vector<Mat>& action,
                          std::size_t dim,
                          const std::vector<std::vector<Rat>>& candidates) {
  if (dim != alg.dim()) return {};
  // Matrix of a -> a.v, columns indexed by the algebra basis.
  auto action_map = [&](const std::vector<Rat>& v) {
    Mat m(dim, alg.dim());
    for (std::size_t i = 0; i < alg.dim(); ++i) m.set_col(i, action[i] * v);
    return m;
  };
  auto try_vec = [&](const std::vector<Rat>& v) {
    return determinant(action_map(v)) != 0;
  };
  for (const auto& v : candidates)
    if (v.size() == dim && try_vec(v)) return {true, v};
  for (std::size_t j = 0; j < dim; ++j) {
    std::vector<Rat> v(dim);
    v[j] = 1;
    if (try_vec(v)) return {true, v};
  }
  // Deterministic small-integer batch before the exhaustive grid.
  std::uint64_t state = 0x9e3779b97f4a7c15ull;
  for (int trial = 0; trial < 256; ++trial) {
    std::vector<Rat> v(dim);
    for (std::size_t j = 0; j < dim; ++j) {
      state = state * 6364136223846793005ull + 1442695040888963407ull;
      v[j] = Rat(static_cast<long>((state >> 33) % 19) - 9);
    }
    if (try_vec(v)) return {true, v};
  }
  // Complete fallback: det(action_map(v)) has degree <= dim in each v_j.
  std::vector<Mat> family;
  for (std::size_t j = 0; j < dim; ++j) {
    std::vector<Rat> ej(dim);
    ej[j] = 1;
    family.push_back(action_map(ej));
  }
  auto generic = is_invertible_generic(family);
  if (!generic.invertible) return {};
  return {true, generic.coefficients};
}

}  // namespace

FreeRank1 free_rank1_left(const Bimodule& x,
                          const std::vector<std::vector<Rat>>& candidates) {
  return free_rank1_impl(x.left_alg, x.left_action, x.dim, candidates);
}

FreeRank1 free_rank1_right(const Bimodule& x,
                           const std::vector<std::vector<Rat>>& candidates) {
  return free_rank1_impl(x.right_alg, x.right_action, x.dim, candidates);
}

}  // namespace hopfish
