#ifndef ROPACK_SPLIT_HPP
#define ROPACK_SPLIT_HPP

#include <vector>

#include "ropack/instance.hpp"

namespace ropack {

// An item (or option) is delta-large if its size strictly exceeds delta * W,
// delta-small otherwise. The boundary size = delta * W is small.
bool is_delta_large(const Rational& size, const Rational& capacity, const Rational& delta);

// Large/small sub-instances with the same ids and arrival positions as the
// source; entries of the other class keep their slot but have profit zero.
struct SplitPair {
  KnapsackInstance large;  // delta-small items replaced by (size W, profit 0)
  KnapsackInstance small;  // delta-large items keep their size, profit zeroed
  Rational delta;
};

struct GapSplitPair {
  GapInstance large;  // small options become (0, W_r)
  GapInstance small;  // large options become (0, delta * W_r)
  Rational delta;
};

// Throws std::invalid_argument unless delta is in (0,1).
SplitPair classify_knapsack(const KnapsackInstance& instance, const Rational& delta);
GapSplitPair classify_gap(const GapInstance& instance, const Rational& delta);

// Ids sorted by decreasing profit, ties by ascending id. The position of an
// item in this order is its rank (rank 1 = most profitable).
std::vector<int> rank_order(const std::vector<KnapsackItem>& items);

}  // namespace ropack

#endif  // ROPACK_SPLIT_HPP
