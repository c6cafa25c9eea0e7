#ifndef ROPACK_DETAIL_LEX_MATCHING_HPP
#define ROPACK_DETAIL_LEX_MATCHING_HPP

#include <vector>

#include "ropack/rational.hpp"

namespace ropack::detail {

// Maximum-weight bipartite matching by suffix DP over resource subsets.
// Weights <= 0 mean "no edge". Among maximum-weight matchings the
// lexicographically smallest edge set under (row, column) is reconstructed:
// committing an edge at the earliest possible row (smallest column first)
// whenever doing so still completes to the optimum. Buffers are reusable
// across solves.
class LexMatching {
 public:
  // weight(i, r) for i in [rows), r in [m). m must be <= kMaxResources.
  template <typename WeightFn>
  void solve(int rows, int m, WeightFn&& weight) {
    const int masks = 1 << m;
    const std::size_t needed = static_cast<std::size_t>(rows + 1) * masks;
    if (table_.size() < needed) table_.resize(needed);
    assign_.assign(rows, -1);
    // Base row (no items left); every other entry is overwritten below.
    for (int avail = 0; avail < masks; ++avail)
      table_[static_cast<std::size_t>(rows) * masks + avail] = 0;
    Rational candidate;
    row_weights_.resize(m);
    for (int i = rows - 1; i >= 0; --i) {
      Rational* cur = &table_[static_cast<std::size_t>(i) * masks];
      const Rational* next = &table_[static_cast<std::size_t>(i + 1) * masks];
      for (int r = 0; r < m; ++r) row_weights_[r] = weight(i, r);
      for (int avail = 0; avail < masks; ++avail) {
        cur[avail] = next[avail];
        for (int r = 0; r < m; ++r) {
          if (!(avail & (1 << r))) continue;
          const Rational& w = row_weights_[r];
          if (w <= 0) continue;
          candidate = w;
          candidate += next[avail ^ (1 << r)];
          if (candidate > cur[avail]) cur[avail] = candidate;
        }
      }
    }
    total_ = table_[masks - 1];

    int avail = masks - 1;
    for (int i = 0; i < rows; ++i) {
      const Rational* cur = &table_[static_cast<std::size_t>(i) * masks];
      const Rational* next = &table_[static_cast<std::size_t>(i + 1) * masks];
      for (int r = 0; r < m; ++r) {
        if (!(avail & (1 << r))) continue;
        const Rational& w = weight(i, r);
        if (w <= 0) continue;
        candidate = w;
        candidate += next[avail ^ (1 << r)];
        if (candidate == cur[avail]) {
          assign_[i] = r;
          avail ^= 1 << r;
          break;
        }
      }
    }
  }

  // Row assignments of the reconstructed matching (-1 = unmatched).
  const std::vector<int>& assignment() const { return assign_; }
  const Rational& total() const { return total_; }

  static constexpr int kMaxResources = 12;

 private:
  std::vector<Rational> table_;
  std::vector<Rational> row_weights_;
  std::vector<int> assign_;
  Rational total_;
};

}  // namespace ropack::detail

#endif  // ROPACK_DETAIL_LEX_MATCHING_HPP
