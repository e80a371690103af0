#include "ngring/linalg.hpp"

#include <algorithm>

namespace ngring {

SparseRow sparse_from_dense(const std::vector<Rat>& v) {
  SparseRow r;
  for (long i = 0; i < static_cast<long>(v.size()); ++i)
    if (v[i] != 0) r.emplace_back(i, v[i]);
  return r;
}

SparseRow row_sub_scaled(const SparseRow& a, const Rat& c, const SparseRow& b) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, Rat(-c * b[j].second));
      ++j;
    } else {
      Rat v = a[i].second - c * b[j].second;
      if (v != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

SparseRow RowSpan::reduce(SparseRow row) const {
  // pivots_ sorted by leading index: scan once, eliminating as we go.
  size_t p = 0;
  while (!row.empty()) {
    long lead = row.front().first;
    while (p < pivots_.size() && pivots_[p].front().first < lead) ++p;
    if (p == pivots_.size() || pivots_[p].front().first != lead) break;
    row = row_sub_scaled(row, row.front().second, pivots_[p]);
  }
  return row;
}

bool RowSpan::insert(SparseRow row) {
  row = reduce(std::move(row));
  if (row.empty()) return false;
  Rat lead = row.front().second;
  if (lead != 1)
    for (auto& [i, c] : row) c /= lead;
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), row.front().first,
                              [](const SparseRow& r, long idx) { return r.front().first < idx; });
  pivots_.insert(pos, std::move(row));
  return true;
}

bool RowSpan::contains(SparseRow row) const { return reduce(std::move(row)).empty(); }

bool RowSpan::contains_all(const RowSpan& other) const {
  for (const auto& r : other.pivots_)
    if (!contains(r)) return false;
  return true;
}

}  // namespace ngring
