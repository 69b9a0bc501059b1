#pragma once

// Exact rank over Q(z_N) by incremental sparse row reduction.

#include <map>
#include <vector>

#include "brsym/cyclotomic.hpp"

namespace brsym {

using SparseRow = std::map<int, Cyclotomic>;

/// Echelon basis built one vector at a time. Each stored row is normalized
/// so that its leading entry is 1.
class EchelonBasis {
 public:
  /// Reduces v against the basis; returns true (and keeps it) if independent.
  bool insert(SparseRow v) {
    drop_zeros(v);
    while (!v.empty()) {
      auto lead = v.begin();
      auto pivot = pivots_.find(lead->first);
      if (pivot == pivots_.end()) {
        const Cyclotomic inv = lead->second.inverse();
        for (auto& [col, c] : v) c *= inv;
        v.begin()->second = Cyclotomic(Rational(1), inv.order());
        const int col = v.begin()->first;
        pivots_.emplace(col, std::move(v));
        return true;
      }
      const int lead_col = lead->first;
      const Cyclotomic factor = lead->second;
      for (const auto& [col, c] : pivot->second) {
        auto it = v.find(col);
        if (it == v.end()) {
          v.emplace(col, -(factor * c));
        } else {
          it->second -= factor * c;
          if (it->second.is_zero()) v.erase(it);
        }
      }
      v.erase(lead_col);
    }
    return false;
  }

  std::size_t rank() const { return pivots_.size(); }

 private:
  static void drop_zeros(SparseRow& v) {
    for (auto it = v.begin(); it != v.end();) {
      it = it->second.is_zero() ? v.erase(it) : std::next(it);
    }
  }

  std::map<int, SparseRow> pivots_;
};

inline std::size_t exact_rank(const std::vector<SparseRow>& rows) {
  EchelonBasis basis;
  for (const auto& r : rows) basis.insert(r);
  return basis.rank();
}

}  // namespace brsym
