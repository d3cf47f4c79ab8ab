#include "hopfish/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

namespace hopfish {

StructureTensor canonicalize(const StructureTensor& t) {
  const std::size_t n = t.n;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  StructureTensor best = t;
  do {
    StructureTensor cand = StructureTensor::zeros(n);
    for (std::size_t g = 0; g < n; ++g) {
      cand.e[perm[g]] = t.e[g];
      for (std::size_t h = 0; h < n; ++h)
        for (std::size_t k = 0; k < n; ++k)
          cand.at(perm[g], perm[h], perm[k]) = t.at(g, h, k);
    }
    if (cand < best) best = cand;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

namespace {

// A linear pruning constraint over d entries: sum of the listed indices
// must never exceed cap, and must equal target once all are assigned.
struct SumConstraint {
  std::vector<std::size_t> members;
  std::uint64_t target = 0;
  std::uint64_t cap = 0;
  // runtime state
  std::uint64_t sum = 0;
  std::size_t remaining = 0;
};

struct Quadruple {
  std::size_t g, h, k, m;
};

class Searcher {
 public:
  Searcher(const SearchConfig& cfg, std::set<StructureTensor>* out,
           std::atomic<std::uint64_t>* nodes, std::atomic<bool>* complete)
      : cfg_(cfg), out_(out), nodes_(nodes), complete_(complete) {}

  // Runs the subtree where the first d entry takes values v with
  // v % stride == offset (worker split at the first branching level).
  void run(const std::vector<std::uint64_t>& e, std::size_t offset,
           std::size_t stride) {
    const std::size_t n = cfg_.n;
    t_ = StructureTensor::zeros(n);
    t_.e = e;
    build_constraints();
    ones_.assign(n, 0);
    blocks_done_.assign(n, 0);
    first_offset_ = offset;
    first_stride_ = stride;
    descend(0);
  }

 private:
  void build_constraints() {
    const std::size_t n = cfg_.n;
    constraints_.clear();
    index_to_constraints_.assign(n * n * n, {});
    auto add_constraint = [&](std::vector<std::size_t> members,
                              std::uint64_t target, std::uint64_t cap) {
      SumConstraint c{std::move(members), target, cap, 0, 0};
      c.remaining = c.members.size();
      std::size_t id = constraints_.size();
      for (std::size_t idx : c.members) index_to_constraints_[idx].push_back(id);
      constraints_.push_back(std::move(c));
    };
    for (std::size_t g = 0; g < n; ++g)
      for (std::size_t k = 0; k < n; ++k) {
        std::uint64_t target = g == k ? 1 : 0;
        std::vector<std::size_t> left, right;
        for (std::size_t h = 0; h < n; ++h)
          if (t_.e[h] == 1) {
            left.push_back((h * n + g) * n + k);
            right.push_back((g * n + h) * n + k);
          }
        add_constraint(std::move(left), target, target);
        add_constraint(std::move(right), target, target);
      }
    block_constraint_start_ = constraints_.size();
    if (cfg_.mode == SearchConfig::Mode::hypergroupoid) {
      // sum_t e^t d[g][h][t] <= 1, with exactly one h per g reaching 1.
      for (std::size_t g = 0; g < n; ++g)
        for (std::size_t h = 0; h < n; ++h) {
          std::vector<std::size_t> members;
          for (std::size_t tt = 0; tt < n; ++tt)
            if (t_.e[tt] == 1) members.push_back((g * n + h) * n + tt);
          SumConstraint c{std::move(members), 0, 1, 0, 0};
          c.remaining = c.members.size();
          std::size_t id = constraints_.size();
          for (std::size_t idx : c.members)
            index_to_constraints_[idx].push_back(id);
          constraints_.push_back(std::move(c));
        }
    }
    // Associativity quadruples grouped by the last assigned index they need.
    quadruples_ready_.assign(n * n * n, {});
    for (std::size_t g = 0; g < n; ++g)
      for (std::size_t h = 0; h < n; ++h)
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t m = 0; m < n; ++m) {
            std::size_t ready = 0;
            for (std::size_t s = 0; s < n; ++s) {
              ready = std::max({ready, (g * n + h) * n + s, (s * n + k) * n + m,
                                (h * n + k) * n + s, (g * n + s) * n + m});
            }
            quadruples_ready_[ready].push_back({g, h, k, m});
          }
  }

  bool assoc_holds(const Quadruple& q) const {
    const std::size_t n = cfg_.n;
    std::uint64_t lhs = 0, rhs = 0;
    for (std::size_t s = 0; s < n; ++s) {
      lhs += t_.at(q.g, q.h, s) * t_.at(s, q.k, q.m);
      rhs += t_.at(q.h, q.k, s) * t_.at(q.g, s, q.m);
    }
    return lhs == rhs;
  }

  // Applies d[idx] = v to the constraint state; returns false on a prune.
  // undo() must be called iff this returned true.
  bool apply(std::size_t idx, std::uint64_t v, std::vector<std::size_t>& done) {
    const std::size_t n = cfg_.n;
    for (std::size_t id : index_to_constraints_[idx]) {
      SumConstraint& c = constraints_[id];
      c.sum += v;
      --c.remaining;
      done.push_back(id);
      if (c.sum > c.cap) return false;
      if (c.remaining == 0) {
        if (id >= block_constraint_start_) {
          std::size_t g = (id - block_constraint_start_) / n;
          ++blocks_done_[g];
          if (c.sum == 1) {
            ++ones_[g];
            if (ones_[g] > 1) return false;
          }
          if (blocks_done_[g] == n && ones_[g] != 1) return false;
        } else if (c.sum != c.target) {
          return false;
        }
      }
    }
    return true;
  }

  void unapply(std::uint64_t v, const std::vector<std::size_t>& done) {
    for (std::size_t id : done) {
      SumConstraint& c = constraints_[id];
      if (c.remaining == 0 && id >= block_constraint_start_) {
        std::size_t g = (id - block_constraint_start_) / cfg_.n;
        --blocks_done_[g];
        if (c.sum == 1) --ones_[g];
      }
      c.sum -= v;
      ++c.remaining;
    }
  }

  void descend(std::size_t idx) {
    const std::size_t total = cfg_.n * cfg_.n * cfg_.n;
    if (idx == total) {
      emit();
      return;
    }
    if (nodes_->fetch_add(1) >= cfg_.node_budget) {
      complete_->store(false);
      return;
    }
    for (std::uint64_t v = 0; v <= cfg_.max_mult; ++v) {
      if (idx == 0 && v % first_stride_ != first_offset_) continue;
      t_.d[idx] = v;
      std::vector<std::size_t> done;
      bool ok = apply(idx, v, done);
      if (ok)
        for (const Quadruple& q : quadruples_ready_[idx])
          if (!assoc_holds(q)) {
            ok = false;
            break;
          }
      if (ok) descend(idx + 1);
      unapply(v, done);
    }
    t_.d[idx] = 0;
  }

  void emit() {
    ValidationResult r = validate(t_);
    if (cfg_.mode == SearchConfig::Mode::hypergroupoid) {
      if (!r.ok()) return;
    } else {
      if (r.stage == ValidationStage::not_sesquialgebra) return;
    }
    out_->insert(canonicalize(t_));
  }

  SearchConfig cfg_;
  std::set<StructureTensor>* out_;
  std::atomic<std::uint64_t>* nodes_;
  std::atomic<bool>* complete_;
  StructureTensor t_;
  std::vector<SumConstraint> constraints_;
  std::vector<std::vector<std::size_t>> index_to_constraints_;
  std::size_t block_constraint_start_ = 0;
  std::vector<std::vector<Quadruple>> quadruples_ready_;
  std::vector<std::size_t> ones_, blocks_done_;
  std::size_t first_offset_ = 0, first_stride_ = 1;
};

CensusEntry make_entry(const StructureTensor& canonical) {
  CensusEntry entry;
  entry.canonical = canonical;
  ValidationResult r = validate(canonical);
  if (r.ok()) {
    entry.flags.is_hypergroupoid = true;
    entry.flags.is_groupoid = is_groupoid(*r.value);
    entry.flags.is_group =
        entry.flags.is_groupoid && r.value->units.size() == 1;
    entry.flags.sigma_involutive = involution_scan(*r.value);
    for (auto& e : fp_dimensions(*r.value).entries)
      entry.fp_dims.push_back(e.dimension);
  }
  return entry;
}

}  // namespace

Census enumerate_census(const SearchConfig& cfg) {
  if (cfg.n < 1 || cfg.max_mult < 1)
    throw std::invalid_argument("enumerate: need n >= 1 and max_mult >= 1");
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> complete{true};
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(cfg.workers,
                                                     cfg.max_mult + 1));

  std::vector<std::set<StructureTensor>> found(workers);
  auto run_worker = [&](std::size_t w) {
    for (std::uint64_t mask = 1; mask < (1ull << cfg.n); ++mask) {
      std::vector<std::uint64_t> e(cfg.n);
      for (std::size_t g = 0; g < cfg.n; ++g) e[g] = (mask >> g) & 1;
      Searcher s(cfg, &found[w], &nodes, &complete);
      s.run(e, w, workers);
    }
  };
  if (workers == 1) {
    run_worker(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back(run_worker, w);
    for (auto& th : pool) th.join();
  }

  std::set<StructureTensor> merged;
  for (auto& s : found) merged.merge(s);
  Census census;
  census.complete = complete.load();
  for (const auto& t : merged) census.entries.push_back(make_entry(t));
  return census;
}

std::size_t brute_force_oracle(const SearchConfig& cfg) {
  if (cfg.n > 2 || cfg.max_mult > 3)
    throw std::invalid_argument("oracle scale exceeded (n <= 2, max_mult <= 3)");
  const std::size_t cells = cfg.n * cfg.n * cfg.n;
  std::set<StructureTensor> classes;
  for (std::uint64_t mask = 0; mask < (1ull << cfg.n); ++mask) {
    StructureTensor t = StructureTensor::zeros(cfg.n);
    for (std::size_t g = 0; g < cfg.n; ++g) t.e[g] = (mask >> g) & 1;
    std::fill(t.d.begin(), t.d.end(), 0);
    for (;;) {
      ValidationResult r = validate(t);
      bool keep = cfg.mode == SearchConfig::Mode::hypergroupoid
                      ? r.ok()
                      : r.stage != ValidationStage::not_sesquialgebra;
      if (keep) classes.insert(canonicalize(t));
      std::size_t pos = 0;
      while (pos < cells && t.d[pos] == cfg.max_mult) t.d[pos++] = 0;
      if (pos == cells) break;
      ++t.d[pos];
    }
  }
  return classes.size();
}

}  // namespace hopfish
