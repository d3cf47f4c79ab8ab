#ifndef HOPFISH_SPARSE_HPP
#define HOPFISH_SPARSE_HPP

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "hopfish/rational.hpp"

namespace hopfish {

// Sparse vector: (index, value) pairs, sorted by index, values nonzero.
using SparseVec = std::vector<std::pair<std::size_t, Rat>>;

// Accumulates entries (possibly repeated indices) into a SparseVec.
SparseVec sparse_collect(std::vector<std::pair<std::size_t, Rat>> entries);

// Incremental row elimination over Q. Pivot rows are stored lazily
// triangular: each row has coefficient 1 at its pivot column, and its
// other entries lie on columns that were free when the row was inserted
// (they may have been pivoted since). reduce() chases such chains, which
// is well-founded because substitution only reaches strictly later
// pivots. Suited to large sparse relation families where only the row
// span matters.
class SparseEliminator {
 public:
  explicit SparseEliminator(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }

  // Fully reduces v modulo the current row span; the result has no
  // support on pivot columns and differs from v by a span element.
  SparseVec reduce(SparseVec v) const;

  // Reduces and inserts if nonzero. Returns true when the rank grew.
  bool add(SparseVec v);

  bool is_pivot(std::size_t col) const { return rows_.count(col) != 0; }
  std::vector<std::size_t> free_columns() const;

  // Kernel of the row system {row . x = 0}: one basis vector per free
  // column, computed by back-substitution in reverse insertion order.
  std::vector<SparseVec> kernel() const;

 private:
  std::size_t dim_;
  std::map<std::size_t, SparseVec> rows_;
  std::vector<std::size_t> insertion_order_;  // pivot columns, oldest first
};

}  // namespace hopfish

#endif
