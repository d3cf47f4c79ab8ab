#include "hopfish/hypergroupoid.hpp"

#include <stdexcept>

namespace hopfish {
namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("multiplicity product overflows 64 bits");
  return r;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("multiplicity sum overflows 64 bits");
  return r;
}

}  // namespace

StructureTensor cyclic_group_tensor(std::size_t n) {
  StructureTensor t = StructureTensor::zeros(n);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h) t.at(g, h, (g + h) % n) = 1;
  t.e[0] = 1;
  return t;
}

StructureTensor yang_lee_tensor(std::uint64_t m) {
  StructureTensor t = StructureTensor::zeros(2);
  t.at(0, 0, 0) = 1;
  t.at(0, 1, 1) = 1;
  t.at(1, 0, 1) = 1;
  t.at(1, 1, 0) = 1;
  t.at(1, 1, 1) = m;
  t.e = {1, 0};
  return t;
}

StructureTensor discrete_groupoid_tensor(std::size_t n) {
  StructureTensor t = StructureTensor::zeros(n);
  for (std::size_t g = 0; g < n; ++g) {
    t.at(g, g, g) = 1;
    t.e[g] = 1;
  }
  return t;
}

AssocCheck check_associativity(const StructureTensor& t) {
  const std::size_t n = t.n;
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t m = 0; m < n; ++m) {
          std::uint64_t lhs = 0, rhs = 0;
          for (std::size_t s = 0; s < n; ++s) {
            lhs = checked_add(lhs, checked_mul(t.at(g, h, s), t.at(s, k, m)));
            rhs = checked_add(rhs, checked_mul(t.at(h, k, s), t.at(g, s, m)));
          }
          if (lhs != rhs) return {false, g, h, k, m};
        }
  return {};
}

bool check_counit(const StructureTensor& t) {
  const std::size_t n = t.n;
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t k = 0; k < n; ++k) {
      std::uint64_t left = 0, right = 0;
      for (std::size_t h = 0; h < n; ++h) {
        left = checked_add(left, checked_mul(t.e[h], t.at(h, g, k)));
        right = checked_add(right, checked_mul(t.e[h], t.at(g, h, k)));
      }
      std::uint64_t want = (g == k) ? 1 : 0;
      if (left != want || right != want) return false;
    }
  return true;
}

UnitsResult derive_units_l_r(const StructureTensor& t) {
  const std::size_t n = t.n;
  for (std::size_t g = 0; g < n; ++g)
    if (t.e[g] > 1)
      return {std::nullopt,
              AxiomFailure{"counit-dimensions", {g}, "e[g] exceeds 1"}};
  UnitsLR out;
  for (std::size_t g = 0; g < n; ++g)
    if (t.e[g] == 1) out.units.push_back(g);
  if (out.units.empty())
    return {std::nullopt, AxiomFailure{"units", {}, "no unit components"}};
  out.l.assign(n, n);
  out.r.assign(n, n);
  for (std::size_t g = 0; g < n; ++g) {
    std::size_t lcount = 0, rcount = 0;
    for (std::size_t u : out.units) {
      if (t.at(u, g, g) == 1) {
        out.l[g] = u;
        ++lcount;
      }
      if (t.at(g, u, g) == 1) {
        out.r[g] = u;
        ++rcount;
      }
    }
    if (lcount != 1 || rcount != 1)
      return {std::nullopt,
              AxiomFailure{"not a sesquialgebra",
                           {g},
                           "left/right unit not unique; input violates the "
                           "sesquialgebra preconditions"}};
  }
  return {std::move(out), std::nullopt};
}

InversionResult derive_inversion(const StructureTensor& t) {
  const std::size_t n = t.n;
  std::vector<std::size_t> sigma(n, n);
  for (std::size_t g = 0; g < n; ++g) {
    std::size_t hits = 0;
    for (std::size_t h = 0; h < n; ++h) {
      std::uint64_t sum = 0;
      for (std::size_t u = 0; u < n; ++u)
        sum = checked_add(sum, checked_mul(t.e[u], t.at(g, h, u)));
      if (sum > 1)
        return {std::nullopt,
                AxiomFailure{"inversion",
                             {g, h},
                             "sum_t e^t d(g,h,t) exceeds 1; no antipode of "
                             "finite free type"}};
      if (sum == 1) {
        sigma[g] = h;
        ++hits;
      }
    }
    if (hits != 1)
      return {std::nullopt,
              AxiomFailure{"inversion",
                           {g},
                           hits == 0 ? "no inverse candidate"
                                     : "multiple inverse candidates"}};
  }
  return {std::move(sigma), std::nullopt};
}

ValidationResult validate(const StructureTensor& t) {
  if (auto a = check_associativity(t); !a.ok)
    return {ValidationStage::not_sesquialgebra, std::nullopt,
            AxiomFailure{"associativity",
                         {a.g, a.h, a.k, a.m},
                         "associativity convolution mismatch"}};
  if (!check_counit(t))
    return {ValidationStage::not_sesquialgebra, std::nullopt,
            AxiomFailure{"counit", {}, "counit sums are not Kronecker deltas"}};
  auto units = derive_units_l_r(t);
  if (!units.value)
    return {ValidationStage::not_sesquialgebra, std::nullopt, units.failure};
  auto inv = derive_inversion(t);
  if (!inv.sigma)
    return {ValidationStage::not_hopfish, std::nullopt, inv.failure};

  // Support axiom, both directions: d(g,h,.) = 0 iff r(g) != l(h).
  const std::size_t n = t.n;
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h) {
      bool zero = true;
      for (std::size_t k = 0; k < n; ++k)
        if (t.at(g, h, k) != 0) {
          zero = false;
          break;
        }
      bool composable = units.value->r[g] == units.value->l[h];
      if (composable == zero)
        return {ValidationStage::not_hopfish, std::nullopt,
                AxiomFailure{"product-existence",
                             {g, h},
                             composable ? "composable pair with empty product"
                                        : "non-composable pair with nonzero "
                                          "product"}};
    }

  Hypergroupoid h{t, units.value->units, units.value->l, units.value->r,
                  *inv.sigma};
  return {ValidationStage::valid, std::move(h), std::nullopt};
}

bool is_groupoid(const Hypergroupoid& h) {
  const auto& t = h.base;
  for (std::size_t g = 0; g < t.n; ++g)
    for (std::size_t x = 0; x < t.n; ++x) {
      if (h.r[g] != h.l[x]) continue;
      std::uint64_t total = 0;
      for (std::size_t k = 0; k < t.n; ++k) total += t.at(g, x, k);
      if (total != 1) return false;
    }
  return true;
}

bool involution_scan(const Hypergroupoid& h) {
  for (std::size_t g = 0; g < h.base.n; ++g)
    if (h.sigma[h.sigma[g]] != g) return false;
  return true;
}

Algebra to_algebra(const Hypergroupoid& h) {
  const auto& t = h.base;
  const std::size_t n = t.n;
  std::vector<Rat> c(n * n * n), unit(n);
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t k = 0; k < n; ++k)
        c[(g * n + x) * n + k] = Rat(static_cast<unsigned long>(t.at(g, x, k)));
    unit[g] = Rat(static_cast<unsigned long>(t.e[g]));
  }
  return Algebra(n, std::move(c), std::move(unit));
}

}  // namespace hopfish
