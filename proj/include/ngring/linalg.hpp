#pragma once

#include <utility>
#include <vector>

#include "ngring/rational.hpp"

namespace ngring {

// Sparse vector: (index, coefficient) pairs, strictly ascending indices,
// nonzero coefficients.
using SparseRow = std::vector<std::pair<long, Rat>>;

SparseRow sparse_from_dense(const std::vector<Rat>& v);

SparseRow row_sub_scaled(const SparseRow& a, const Rat& c, const SparseRow& b);

// Incremental exact row-echelon span over Q.  Rows are reduced on insertion;
// pivots are kept monic.
class RowSpan {
 public:
  // Returns true when the row enlarged the span.
  bool insert(SparseRow row);

  bool contains(SparseRow row) const;

  long dim() const { return static_cast<long>(pivots_.size()); }

  bool contains_all(const RowSpan& other) const;

  const std::vector<SparseRow>& rows() const { return pivots_; }

 private:
  SparseRow reduce(SparseRow row) const;
  std::vector<SparseRow> pivots_;  // kept sorted by leading index
};

}  // namespace ngring
