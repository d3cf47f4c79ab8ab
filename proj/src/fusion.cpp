#include "hopfish/fusion.hpp"

#include <algorithm>

#include "hopfish/hopf.hpp"
#include "hopfish/linalg.hpp"

namespace hopfish {

FpReport fp_dimensions(const Hypergroupoid& h) {
  const std::size_t n = h.base.n;
  FpReport report;
  for (std::size_t g = 0; g < n; ++g) {
    FpEntry entry;
    entry.element = g;
    entry.mult_matrix = Mat(n, n);
    Rat bound = 0;
    for (std::size_t k = 0; k < n; ++k) {
      Rat row_sum = 0;
      for (std::size_t hh = 0; hh < n; ++hh) {
        entry.mult_matrix(k, hh) = Rat(static_cast<long>(h.base.at(g, hh, k)));
        row_sum += entry.mult_matrix(k, hh);
      }
      bound = std::max(bound, row_sum);
    }
    entry.charpoly = char_poly(entry.mult_matrix);
    // Spectral radius <= max row sum, so the dominant real root (which
    // exists for nonnegative matrices) lies within this bound.
    entry.dimension = dominant_root(entry.charpoly, bound);
    if (!entry.dimension.integer_value) report.witnesses.push_back(g);
    report.entries.push_back(std::move(entry));
  }
  report.obstructed = !report.witnesses.empty();
  return report;
}

ObstructionVerdict quasi_hopf_obstruction(const Hypergroupoid& h) {
  FpReport r = fp_dimensions(h);
  return {r.obstructed, std::move(r.witnesses)};
}

std::vector<std::uint64_t> representation_ring_table(const Hypergroupoid& h) {
  const std::size_t n = h.base.n;
  // Recomputed from the coproduct bimodule rather than read off d: the
  // multiplicity of the simple at k in (simple at g) x (simple at h) is
  // the rank of the ((g,h),k) component of the coproduct.
  FiniteFreeType t = finite_free_type_data(h.base);
  std::vector<std::uint64_t> table(n * n * n);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t hh = 0; hh < n; ++hh)
      for (std::size_t k = 0; k < n; ++k)
        table[(g * n + hh) * n + k] = rank(
            t.delta.left_action[g * n + hh] * t.delta.right_action[k]);
  return table;
}

bool fp_eigenvector_consistent(const FpReport& r) {
  const std::size_t n = r.entries.size();

  // The eigenvector identity N_g v = v_g v only holds within a
  // transitivity component; a disjoint union of groups is an immediate
  // counterexample to the global form. Union-find over the support of the
  // multiplication: d(g,h,k) > 0 links g ~ k and h ~ k.
  std::vector<std::size_t> parent(n);
  for (std::size_t g = 0; g < n; ++g) parent[g] = g;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t hh = 0; hh < n; ++hh)
        if (r.entries[g].mult_matrix(k, hh) != 0) {
          parent[find(g)] = find(k);
          parent[find(hh)] = find(k);
        }

  bool all_integer = true;
  for (const auto& e : r.entries)
    if (!e.dimension.integer_value) all_integer = false;

  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t k = 0; k < n; ++k) {
      if (find(g) != find(k)) {
        // Products never leave the component: the row must vanish.
        for (std::size_t hh = 0; hh < n; ++hh)
          if (r.entries[g].mult_matrix(k, hh) != 0) return false;
        continue;
      }
      if (all_integer) {
        Rat sum = 0;
        for (std::size_t hh = 0; hh < n; ++hh)
          sum += r.entries[g].mult_matrix(k, hh) *
                 Rat(*r.entries[hh].dimension.integer_value);
        if (sum != Rat(*r.entries[g].dimension.integer_value) *
                       Rat(*r.entries[k].dimension.integer_value))
          return false;
        continue;
      }
      // Interval arithmetic: every quantity is positive, so endpoint
      // products bound value products; disjoint ranges disprove equality.
      Rat lo_sum = 0, hi_sum = 0;
      for (std::size_t hh = 0; hh < n; ++hh) {
        const Rat& c = r.entries[g].mult_matrix(k, hh);
        lo_sum += c * r.entries[hh].dimension.lo;
        hi_sum += c * r.entries[hh].dimension.hi;
      }
      Rat lo_prod = r.entries[g].dimension.lo * r.entries[k].dimension.lo;
      Rat hi_prod = r.entries[g].dimension.hi * r.entries[k].dimension.hi;
      if (hi_sum < lo_prod || hi_prod < lo_sum) return false;
    }
  return true;
}

}  // namespace hopfish
