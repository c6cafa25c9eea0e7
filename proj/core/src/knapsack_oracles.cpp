#include <algorithm>
#include <string>

#include "ropack/oracles.hpp"

namespace ropack {

namespace {

// Density order: profit/size descending, ties by ascending id.
std::vector<int> density_order(const KnapsackInstance& instance) {
  std::vector<int> idx(instance.items.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    const KnapsackItem& x = instance.items[a];
    const KnapsackItem& y = instance.items[b];
    // v_a/s_a > v_b/s_b  <=>  v_a*s_b > v_b*s_a (sizes positive)
    const Rational lhs = x.profit * y.size;
    const Rational rhs = y.profit * x.size;
    const int cmp = mpq_cmp(lhs.get_mpq_t(), rhs.get_mpq_t());
    if (cmp != 0) return cmp > 0;
    return x.id < y.id;
  });
  return idx;
}

struct BranchState {
  const KnapsackInstance* instance;
  const std::vector<int>* order;  // indices in density order
  Rational best_value;
  std::vector<char> best_taken;
  std::vector<char> taken;
};

// Greedy fractional value of the suffix order[pos..] within `room`; admissible
// upper bound because the fractional relaxation dominates.
Rational suffix_bound(const BranchState& st, std::size_t pos, Rational room) {
  Rational bound(0);
  for (std::size_t k = pos; k < st.order->size(); ++k) {
    const KnapsackItem& item = st.instance->items[(*st.order)[k]];
    if (room <= 0) break;
    if (item.size <= room) {
      bound += item.profit;
      room -= item.size;
    } else {
      bound += item.profit * room / item.size;
      break;
    }
  }
  return bound;
}

void branch(BranchState& st, std::size_t pos, const Rational& value, const Rational& room) {
  if (value > st.best_value) {
    st.best_value = value;
    st.best_taken = st.taken;
  }
  if (pos >= st.order->size()) return;
  if (value + suffix_bound(st, pos, room) <= st.best_value) return;

  const KnapsackItem& item = st.instance->items[(*st.order)[pos]];
  if (item.size <= room) {
    st.taken[pos] = 1;
    branch(st, pos + 1, value + item.profit, room - item.size);
    st.taken[pos] = 0;
  }
  branch(st, pos + 1, value, room);
}

}  // namespace

KnapsackOptResult knapsack_opt_integral(const KnapsackInstance& instance, int exact_cap) {
  if (instance.n() > exact_cap)
    throw capability_error("knapsack_opt_integral: n = " + std::to_string(instance.n()) +
                           " exceeds the exact-solve cap " + std::to_string(exact_cap) +
                           "; use the fractional bound instead");
  const std::vector<int> order = density_order(instance);
  BranchState st;
  st.instance = &instance;
  st.order = &order;
  st.best_value = 0;
  st.taken.assign(order.size(), 0);
  st.best_taken = st.taken;
  branch(st, 0, Rational(0), instance.capacity);

  KnapsackOptResult result;
  result.value = st.best_value;
  for (std::size_t k = 0; k < order.size(); ++k)
    if (st.best_taken[k]) result.chosen.push_back(instance.items[order[k]].id);
  std::sort(result.chosen.begin(), result.chosen.end());
  return result;
}

FractionalSolution knapsack_opt_fractional(const KnapsackInstance& instance) {
  FractionalSolution solution;
  solution.value = 0;
  Rational room = instance.capacity;
  for (int idx : density_order(instance)) {
    const KnapsackItem& item = instance.items[idx];
    if (room <= 0) break;
    if (item.size <= room) {
      solution.coefficients.emplace_back(item.id, Rational(1));
      solution.value += item.profit;
      room -= item.size;
    } else {
      const Rational alpha = room / item.size;
      solution.coefficients.emplace_back(item.id, alpha);
      solution.value += alpha * item.profit;
      break;
    }
  }
  return solution;
}

}  // namespace ropack
