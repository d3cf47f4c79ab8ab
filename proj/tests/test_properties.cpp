#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hopfish/bimodule.hpp"

using namespace hopfish;

namespace {

// Random unital homs between function algebras are pullbacks of set maps:
// a map phi: [p] -> [q] induces k^q -> k^p, e_j -> sum_{phi(i)=j} e_i.
Homomorphism pullback(const std::vector<std::size_t>& phi, std::size_t q) {
  const std::size_t p = phi.size();
  Mat m(p, q);
  for (std::size_t i = 0; i < p; ++i) m(i, phi[i]) = 1;
  return Homomorphism{Algebra::functions(q), Algebra::functions(p), m};
}

std::vector<std::size_t> random_map(std::mt19937& rng, std::size_t from,
                                    std::size_t to) {
  std::uniform_int_distribution<std::size_t> pick(0, to - 1);
  std::vector<std::size_t> phi(from);
  for (auto& x : phi) x = pick(rng);
  return phi;
}

// Random (k^p, k^q)-bimodule: a multiplicity pattern of component ranks,
// acting by diagonal projectors.
Bimodule random_fn_bimodule(std::mt19937& rng, std::size_t p, std::size_t q,
                            std::size_t max_dim) {
  std::uniform_int_distribution<std::size_t> cell(0, p * q - 1);
  std::uniform_int_distribution<std::size_t> extra(1, max_dim);
  std::vector<std::size_t> owner;  // basis vector -> (g, h) cell
  const std::size_t dim = extra(rng);
  for (std::size_t v = 0; v < dim; ++v) owner.push_back(cell(rng));
  Bimodule x{Algebra::functions(p), Algebra::functions(q), dim, {}, {}};
  for (std::size_t g = 0; g < p; ++g) {
    Mat m(dim, dim);
    for (std::size_t v = 0; v < dim; ++v)
      if (owner[v] / q == g) m(v, v) = 1;
    x.left_action.push_back(std::move(m));
  }
  for (std::size_t h = 0; h < q; ++h) {
    Mat m(dim, dim);
    for (std::size_t v = 0; v < dim; ++v)
      if (owner[v] % q == h) m(v, v) = 1;
    x.right_action.push_back(std::move(m));
  }
  return x;
}

}  // namespace

TEST_CASE("modulation is functorial on 60 random composable homs") {
  std::mt19937 rng(424242);
  std::uniform_int_distribution<std::size_t> size(1, 3);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t p = size(rng), q = size(rng), r = size(rng);
    // f: k^q -> k^p and g: k^r -> k^q as algebra maps.
    Homomorphism f = pullback(random_map(rng, p, q), q);
    Homomorphism g = pullback(random_map(rng, q, r), r);
    REQUIRE(f.is_valid());
    REQUIRE(g.is_valid());
    Homomorphism gf = Homomorphism::compose(f, g);  // k^r -> k^p
    REQUIRE(gf.is_valid());
    // modulate(f): (k^p, k^q), modulate(g): (k^q, k^r).
    Bimodule lhs = modulate(gf);
    Bimodule rhs = tensor_over(modulate(f), modulate(g));
    CHECK(lhs.dim == rhs.dim);
    CHECK(bimodule_iso(lhs, rhs).isomorphic);
  }
}

TEST_CASE("relative tensor product is associative on 60 random triples") {
  std::mt19937 rng(777);
  std::uniform_int_distribution<std::size_t> size(1, 3);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t a = size(rng), b = size(rng), c = size(rng),
                      d = size(rng);
    Bimodule x = random_fn_bimodule(rng, a, b, 3);
    Bimodule y = random_fn_bimodule(rng, b, c, 3);
    Bimodule z = random_fn_bimodule(rng, c, d, 3);
    REQUIRE(x.is_valid());
    REQUIRE(y.is_valid());
    REQUIRE(z.is_valid());
    Bimodule left = tensor_over(tensor_over(x, y), z);
    Bimodule right = tensor_over(x, tensor_over(y, z));
    CHECK(left.dim == right.dim);
    CHECK(bimodule_iso(left, right).isomorphic);
  }
}

TEST_CASE("unit bimodules are neutral for the tensor product") {
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t p = 1 + trial % 3, q = 1 + (trial / 3) % 3;
    Bimodule x = random_fn_bimodule(rng, p, q, 3);
    REQUIRE(x.is_valid());
    Bimodule lu = tensor_over(regular_bimodule(x.left_alg), x);
    Bimodule ru = tensor_over(x, regular_bimodule(x.right_alg));
    CHECK(lu.dim == x.dim);
    CHECK(ru.dim == x.dim);
    CHECK(bimodule_iso(lu, x).isomorphic);
    CHECK(bimodule_iso(ru, x).isomorphic);
  }
}

TEST_CASE("isomorphism is reflexive and respects external tensor") {
  std::mt19937 rng(90210);
  for (int trial = 0; trial < 50; ++trial) {
    Bimodule x = random_fn_bimodule(rng, 2, 2, 2);
    Bimodule y = random_fn_bimodule(rng, 2, 2, 2);
    REQUIRE(x.is_valid());
    CHECK(bimodule_iso(x, x).isomorphic);
    Bimodule xy = ext_tensor(x, y);
    CHECK(xy.is_valid());
    CHECK(xy.dim == x.dim * y.dim);
  }
}
