#include "hopfish/morita.hpp"

#include <numeric>
#include <stdexcept>

#include "hopfish/linalg.hpp"

namespace hopfish {
namespace {

bool same_algebra(const Algebra& a, const Algebra& b) {
  return a.dim() == b.dim() &&
         a.structure_constants() == b.structure_constants() &&
         a.unit() == b.unit();
}

// Direct sum of full matrix algebras with the given block sizes; basis
// element offset[g] + a*size[g] + b is the matrix unit E^g_{ab}.
Algebra block_matrix_algebra(const std::vector<std::size_t>& sizes) {
  std::size_t dim = 0;
  std::vector<std::size_t> offset;
  for (std::size_t s : sizes) {
    offset.push_back(dim);
    dim += s * s;
  }
  std::vector<Rat> c(dim * dim * dim), unit(dim);
  for (std::size_t g = 0; g < sizes.size(); ++g) {
    const std::size_t s = sizes[g], o = offset[g];
    for (std::size_t a = 0; a < s; ++a) {
      unit[o + a * s + a] = 1;
      for (std::size_t b = 0; b < s; ++b)
        for (std::size_t d = 0; d < s; ++d) {
          std::size_t i = o + a * s + b, j = o + b * s + d, k = o + a * s + d;
          c[(i * dim + j) * dim + k] = 1;
        }
    }
  }
  return Algebra(dim, std::move(c), std::move(unit));
}

// Coordinates of each target in the span of the (independent) basis
// matrices: target_t = sum_k C(k, t) * basis_k.
Mat coordinates(const std::vector<Mat>& basis,
                const std::vector<Mat>& targets) {
  const std::size_t k = basis.size();
  const std::size_t flat = basis.empty() ? 0 : basis[0].rows() * basis[0].cols();
  Mat aug(flat, k + targets.size());
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t f = 0; f < flat; ++f) aug(f, j) = basis[j].data()[f];
  for (std::size_t t = 0; t < targets.size(); ++t)
    for (std::size_t f = 0; f < flat; ++f)
      aug(f, k + t) = targets[t].data()[f];
  std::vector<std::size_t> pivots;
  Mat red = rref(std::move(aug), &pivots);
  Mat coords(k, targets.size());
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] >= k)
      throw std::invalid_argument("coordinates: target outside span");
    for (std::size_t t = 0; t < targets.size(); ++t)
      coords(pivots[r], t) = red(r, k + t);
  }
  return coords;
}

}  // namespace

bool verify_morita_pair(const MoritaPair& pair, std::string* why) {
  auto fail = [&](const char* msg) {
    if (why) *why = msg;
    return false;
  };
  if (!same_algebra(pair.p.left_alg, pair.a) ||
      !same_algebra(pair.p.right_alg, pair.b) ||
      !same_algebra(pair.q.left_alg, pair.b) ||
      !same_algebra(pair.q.right_alg, pair.a))
    return fail("pair algebras do not match the bimodule sides");
  std::string inner;
  if (!pair.p.is_valid(&inner) || !pair.q.is_valid(&inner))
    return fail("pair bimodule invalid");
  if (!bimodule_iso(tensor_over(pair.p, pair.q), regular_bimodule(pair.a))
           .isomorphic)
    return fail("p (x)_B q is not the regular A-bimodule");
  if (!bimodule_iso(tensor_over(pair.q, pair.p), regular_bimodule(pair.b))
           .isomorphic)
    return fail("q (x)_A p is not the regular B-bimodule");
  return true;
}

MoritaPair compose_pairs(const MoritaPair& first, const MoritaPair& second) {
  if (!same_algebra(first.b, second.a))
    throw std::invalid_argument("compose_pairs: middle algebras differ");
  return {first.a, second.b, tensor_over(first.p, second.p),
          tensor_over(second.q, first.q)};
}

MoritaPair identity_pair(const Algebra& a) {
  return {a, a, regular_bimodule(a), regular_bimodule(a)};
}

HopfishData hopfish_from_tensor(const StructureTensor& t) {
  ValidationResult r = validate(t);
  if (!r.ok())
    throw std::invalid_argument("hopfish_from_tensor: " +
                                (r.failure ? r.failure->message
                                           : std::string("invalid structure")));
  FiniteFreeType ff = finite_free_type_data(t);
  Bimodule s = antipode_bimodule(*r.value);
  return {std::move(ff.functions), std::move(ff.delta), std::move(ff.eps),
          std::move(s)};
}

TransportResult transport(const HopfishData& src, const MoritaPair& pair,
                          bool coproduct_left_actions) {
  std::string why;
  if (!verify_morita_pair(pair, &why))
    throw std::invalid_argument("transport: invalid Morita pair: " + why);
  if (!same_algebra(src.algebra, pair.a))
    throw std::invalid_argument("transport: source algebra is not pair.a");

  Bimodule counit_b = tensor_over(src.counit, pair.p);
  Bimodule inner = tensor_over(src.coproduct, pair.p);  // (A (x) A, B)
  Bimodule coproduct_b =
      tensor_over_ext(pair.q, pair.q, inner, coproduct_left_actions);

  Bimodule s_flat = tensor_over_ext(pair.q, pair.q,
                                    collapse_to_left_module(src.antipode));
  Bimodule antipode_b = expand_from_left_module(s_flat, pair.b, pair.b);

  TransportResult out{HopfishData{pair.b, std::move(coproduct_b),
                                  std::move(counit_b), std::move(antipode_b)},
                      {}, false};
  out.antipode_free = free_rank1_left(out.data.antipode);
  out.hopfish = out.antipode_free.free;
  return out;
}

bool self_conjugate(const Bimodule& s, const Bimodule& q) {
  const Algebra& a = s.left_alg;
  if (!same_algebra(q.right_alg, a))
    throw std::invalid_argument("self_conjugate: right algebra of q must be A");

  // Hom_A(A, Q): right-module maps with left action (x.f)(y) = f(y x).
  Bimodule reg = regular_bimodule(a);
  std::vector<Mat> basis = right_module_hom_basis(reg, q);
  Bimodule hom{a, Algebra::scalars(), basis.size(), {},
               {Mat::identity(basis.size())}};
  for (std::size_t i = 0; i < a.dim(); ++i) {
    std::vector<Mat> targets;
    for (const auto& t : basis) targets.push_back(t * reg.right_action[i]);
    hom.left_action.push_back(coordinates(basis, targets));
  }

  // S (x)_{A^op} Q, with Q viewed as a left A^op-module.
  Bimodule qop{s.right_alg, Algebra::scalars(), q.dim, q.right_action,
               {Mat::identity(q.dim)}};
  Bimodule twisted = tensor_over(s, qop);
  return left_module_iso(hom, twisted).isomorphic;
}

std::vector<std::size_t> block_dimensions(
    const Bimodule& x, const std::vector<std::vector<Rat>>& idempotents) {
  std::vector<std::size_t> dims;
  for (const auto& z : idempotents) dims.push_back(rank(x.left_act(z)));
  return dims;
}

Z3Example build_z3_example(std::size_t r, std::size_t s, std::size_t t) {
  if (r < 1 || s < 1 || t < 1)
    throw std::invalid_argument(
        "build_z3_example: all three multiplicities must be >= 1 (full "
        "support)");
  Z3Example ex;
  ex.source = hopfish_from_tensor(cyclic_group_tensor(3));
  const Algebra& a = ex.source.algebra;

  std::vector<std::size_t> sizes{r, s, t};
  Algebra b = block_matrix_algebra(sizes);
  std::vector<std::size_t> alg_off{0, r * r, r * r + s * s};
  std::vector<std::size_t> mod_off{0, r, r + s};
  const std::size_t qdim = r + s + t;

  Bimodule q{b, a, qdim, {}, {}};
  q.left_action.assign(b.dim(), Mat(qdim, qdim));
  for (std::size_t g = 0; g < 3; ++g)
    for (std::size_t x = 0; x < sizes[g]; ++x)
      for (std::size_t y = 0; y < sizes[g]; ++y)
        q.left_action[alg_off[g] + x * sizes[g] + y](mod_off[g] + x,
                                                     mod_off[g] + y) = 1;
  for (std::size_t j = 0; j < 3; ++j) {
    Mat m(qdim, qdim);
    for (std::size_t x = 0; x < sizes[j]; ++x) m(mod_off[j] + x, mod_off[j] + x) = 1;
    q.right_action.push_back(std::move(m));
  }

  Bimodule p{a, b, qdim, {}, {}};
  for (std::size_t j = 0; j < 3; ++j) {
    Mat m(qdim, qdim);
    for (std::size_t x = 0; x < sizes[j]; ++x) m(mod_off[j] + x, mod_off[j] + x) = 1;
    p.left_action.push_back(std::move(m));
  }
  p.right_action.assign(b.dim(), Mat(qdim, qdim));
  for (std::size_t g = 0; g < 3; ++g)
    for (std::size_t x = 0; x < sizes[g]; ++x)
      for (std::size_t y = 0; y < sizes[g]; ++y)
        p.right_action[alg_off[g] + x * sizes[g] + y](mod_off[g] + y,
                                                      mod_off[g] + x) = 1;

  for (std::size_t g = 0; g < 3; ++g) {
    std::vector<Rat> z(b.dim());
    for (std::size_t x = 0; x < sizes[g]; ++x)
      z[alg_off[g] + x * sizes[g] + x] = 1;
    ex.central_idempotents.push_back(std::move(z));
  }
  ex.predicted_antipode_dims = {r * r, s * t, s * t};
  ex.b_block_dims = {r * r, s * s, t * t};
  ex.pair = {a, std::move(b), std::move(p), std::move(q)};
  return ex;
}

MoritaPair matrix_morita_pair(const Algebra& a, std::size_t n) {
  const std::size_t da = a.dim();
  Algebra b = Algebra::tensor(Algebra::matrix_algebra(n), a);
  const std::size_t qdim = n * da;

  Bimodule q{b, a, qdim, {}, {}};
  q.left_action.assign(b.dim(), Mat(qdim, qdim));
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t qq = 0; qq < n; ++qq)
      for (std::size_t i = 0; i < da; ++i) {
        Mat& m = q.left_action[(p * n + qq) * da + i];
        for (std::size_t l = 0; l < da; ++l)
          for (std::size_t k = 0; k < da; ++k)
            if (a.c(i, l, k) != 0) m(p * da + k, qq * da + l) += a.c(i, l, k);
      }
  for (std::size_t j = 0; j < da; ++j) {
    Mat m(qdim, qdim);
    for (std::size_t bcol = 0; bcol < n; ++bcol)
      for (std::size_t l = 0; l < da; ++l)
        for (std::size_t k = 0; k < da; ++k)
          if (a.c(l, j, k) != 0) m(bcol * da + k, bcol * da + l) += a.c(l, j, k);
    q.right_action.push_back(std::move(m));
  }

  Bimodule pm{a, b, qdim, {}, {}};
  for (std::size_t i = 0; i < da; ++i) {
    Mat m(qdim, qdim);
    for (std::size_t bcol = 0; bcol < n; ++bcol)
      for (std::size_t l = 0; l < da; ++l)
        for (std::size_t k = 0; k < da; ++k)
          if (a.c(i, l, k) != 0) m(bcol * da + k, bcol * da + l) += a.c(i, l, k);
    pm.left_action.push_back(std::move(m));
  }
  pm.right_action.assign(b.dim(), Mat(qdim, qdim));
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t qq = 0; qq < n; ++qq)
      for (std::size_t i = 0; i < da; ++i) {
        Mat& m = pm.right_action[(p * n + qq) * da + i];
        for (std::size_t l = 0; l < da; ++l)
          for (std::size_t k = 0; k < da; ++k)
            if (a.c(l, i, k) != 0) m(qq * da + k, p * da + l) += a.c(l, i, k);
      }

  return {a, std::move(b), std::move(pm), std::move(q)};
}

MatrixExample build_matrix_example(std::size_t n, std::size_t m) {
  MatrixExample ex;
  ex.source = hopfish_from_tensor(cyclic_group_tensor(m));
  ex.pair = matrix_morita_pair(ex.source.algebra, n);
  return ex;
}

bool hopfish_morita_equivalent(const HopfishData& x, const HopfishData& y,
                               const MoritaPair& pair) {
  if (!same_algebra(x.algebra, pair.a) || !same_algebra(y.algebra, pair.b))
    throw std::invalid_argument(
        "hopfish_morita_equivalent: algebras do not match the pair");
  TransportResult tr = transport(x, pair);
  return bimodule_iso(tr.data.counit, y.counit).isomorphic &&
         bimodule_iso(tr.data.coproduct, y.coproduct).isomorphic &&
         bimodule_iso(tr.data.antipode, y.antipode).isomorphic;
}

}  // namespace hopfish
