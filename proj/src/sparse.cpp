#include "hopfish/sparse.hpp"

#include <algorithm>

namespace hopfish {

SparseVec sparse_collect(std::vector<std::pair<std::size_t, Rat>> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec out;
  for (auto& [idx, val] : entries) {
    if (!out.empty() && out.back().first == idx)
      out.back().second += val;
    else
      out.emplace_back(idx, std::move(val));
  }
  std::erase_if(out, [](const auto& e) { return e.second == 0; });
  return out;
}

SparseVec SparseEliminator::reduce(SparseVec v) const {
  // Worklist sweep from the smallest column. Substituting a pivot row can
  // reintroduce entries at any column, but only ones whose pivots were
  // created later, so every chain terminates.
  std::map<std::size_t, Rat> work(v.begin(), v.end());
  std::map<std::size_t, Rat> done;
  while (!work.empty()) {
    auto [col, coeff] = std::move(*work.begin());
    work.erase(work.begin());
    if (coeff == 0) continue;
    auto it = rows_.find(col);
    if (it == rows_.end()) {
      done[col] += coeff;
      continue;
    }
    for (const auto& [c2, v2] : it->second)
      if (c2 != col) work[c2] -= coeff * v2;
  }
  SparseVec out;
  out.reserve(done.size());
  for (auto& [col, val] : done)
    if (val != 0) out.emplace_back(col, std::move(val));
  return out;
}

bool SparseEliminator::add(SparseVec v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  const std::size_t pivot = v.front().first;
  const Rat lead = v.front().second;
  for (auto& [col, val] : v) val /= lead;
  insertion_order_.push_back(pivot);
  rows_.emplace(pivot, std::move(v));
  return true;
}

std::vector<std::size_t> SparseEliminator::free_columns() const {
  std::vector<std::size_t> out;
  out.reserve(dim_ - rows_.size());
  auto it = rows_.begin();
  for (std::size_t c = 0; c < dim_; ++c) {
    if (it != rows_.end() && it->first == c)
      ++it;
    else
      out.push_back(c);
  }
  return out;
}

std::vector<SparseVec> SparseEliminator::kernel() const {
  auto frees = free_columns();
  std::vector<std::vector<std::pair<std::size_t, Rat>>> raw(frees.size());
  std::map<std::size_t, std::size_t> free_index;
  for (std::size_t a = 0; a < frees.size(); ++a) {
    free_index[frees[a]] = a;
    raw[a].emplace_back(frees[a], 1);
  }
  // Solve row_p . x = 0 for each pivot p, newest first: a row's non-pivot
  // entries lie on columns that are either still free or were pivoted
  // later, so at the time p is processed all of them are known.
  std::map<std::size_t, std::map<std::size_t, Rat>> solved;  // p -> x_p
  for (auto pit = insertion_order_.rbegin(); pit != insertion_order_.rend();
       ++pit) {
    const std::size_t p = *pit;
    std::map<std::size_t, Rat> xp;  // kernel-basis index -> coordinate
    for (const auto& [col, val] : rows_.at(p)) {
      if (col == p) continue;
      auto fit = free_index.find(col);
      if (fit != free_index.end()) {
        xp[fit->second] -= val;
      } else {
        for (const auto& [basis, coord] : solved.at(col))
          xp[basis] -= val * coord;
      }
    }
    std::erase_if(xp, [](const auto& e) { return e.second == 0; });
    for (const auto& [basis, coord] : xp) raw[basis].emplace_back(p, coord);
    solved.emplace(p, std::move(xp));
  }
  std::vector<SparseVec> out;
  out.reserve(frees.size());
  for (auto& v : raw) out.push_back(sparse_collect(std::move(v)));
  return out;
}

}  // namespace hopfish
