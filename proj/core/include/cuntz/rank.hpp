#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>

namespace cuntz {

/// Incremental exact row echelon form over Q for sparse vectors.
///
/// Each stored row has a distinct pivot (its smallest key) with coefficient
/// one. insert() reduces the candidate against the stored rows and keeps the
/// remainder when it is nonzero.
template <class Key, class Compare = std::less<Key>>
class RowEchelon {
 public:
  using Vector = std::map<Key, mpq_class, Compare>;

  /// Returns true iff v was linearly independent of the rows so far.
  bool insert(Vector v) {
    for (auto it = rows_.begin(); it != rows_.end() && !v.empty(); ++it) {
      auto hit = v.find(it->first);
      if (hit == v.end()) continue;
      const mpq_class factor = hit->second;
      for (const auto& [k, c] : it->second) {
        auto [slot, inserted] = v.try_emplace(k, 0);
        slot->second -= factor * c;
        if (slot->second == 0) v.erase(slot);
      }
    }
    if (v.empty()) return false;
    const Key pivot = v.begin()->first;
    const mpq_class inv = 1 / v.begin()->second;
    for (auto& [k, c] : v) c *= inv;
    // Keep earlier rows reduced against the new pivot so later candidates
    // see a consistent basis regardless of insertion order.
    for (auto& [k, row] : rows_) {
      auto hit = row.find(pivot);
      if (hit == row.end()) continue;
      const mpq_class factor = hit->second;
      for (const auto& [vk, vc] : v) {
        auto [slot, inserted] = row.try_emplace(vk, 0);
        slot->second -= factor * vc;
        if (slot->second == 0) row.erase(slot);
      }
    }
    rows_.emplace(pivot, std::move(v));
    return true;
  }

  std::size_t rank() const noexcept { return rows_.size(); }

 private:
  std::map<Key, Vector, Compare> rows_;
};

/// Rank of a list of sparse rows.
template <class Key, class Compare = std::less<Key>, class Rows>
std::size_t exact_rank(const Rows& rows) {
  RowEchelon<Key, Compare> echelon;
  for (const auto& r : rows) echelon.insert(r);
  return echelon.rank();
}

}  // namespace cuntz
