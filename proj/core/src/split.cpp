#include "ropack/split.hpp"

#include <algorithm>
#include <stdexcept>

namespace ropack {

bool is_delta_large(const Rational& size, const Rational& capacity, const Rational& delta) {
  return size > delta * capacity;
}

namespace {

void check_delta(const Rational& delta) {
  if (delta <= 0 || delta >= 1) throw std::invalid_argument("delta must be in (0,1)");
}

}  // namespace

SplitPair classify_knapsack(const KnapsackInstance& instance, const Rational& delta) {
  check_delta(delta);
  instance.validate();
  SplitPair pair;
  pair.delta = delta;
  pair.large = instance;
  pair.small = instance;
  for (int i = 0; i < instance.n(); ++i) {
    if (is_delta_large(instance.items[i].size, instance.capacity, delta)) {
      pair.small.items[i].profit = 0;
    } else {
      pair.large.items[i].size = instance.capacity;
      pair.large.items[i].profit = 0;
    }
  }
  return pair;
}

GapSplitPair classify_gap(const GapInstance& instance, const Rational& delta) {
  check_delta(delta);
  instance.validate();
  GapSplitPair pair;
  pair.delta = delta;
  pair.large = instance;
  pair.small = instance;
  for (int i = 0; i < instance.n(); ++i) {
    for (int r = 0; r < instance.m(); ++r) {
      if (is_delta_large(instance.items[i][r].size, instance.capacities[r], delta)) {
        pair.small.items[i][r] = GapOption{0, delta * instance.capacities[r]};
      } else {
        pair.large.items[i][r] = GapOption{0, instance.capacities[r]};
      }
    }
  }
  return pair;
}

std::vector<int> rank_order(const std::vector<KnapsackItem>& items) {
  std::vector<const KnapsackItem*> ptrs;
  ptrs.reserve(items.size());
  for (const KnapsackItem& item : items) ptrs.push_back(&item);
  std::sort(ptrs.begin(), ptrs.end(), [](const KnapsackItem* a, const KnapsackItem* b) {
    const int cmp = mpq_cmp(a->profit.get_mpq_t(), b->profit.get_mpq_t());
    if (cmp != 0) return cmp > 0;
    return a->id < b->id;
  });
  std::vector<int> ids;
  ids.reserve(ptrs.size());
  for (const KnapsackItem* p : ptrs) ids.push_back(p->id);
  return ids;
}

}  // namespace ropack
