#include <string>

#include "ropack/oracles.hpp"

namespace ropack {

GapOptResult gap_opt_integral(const GapInstance& instance, long long cap) {
  instance.validate();
  const int n = instance.n();
  const int m = instance.m();

  long long combos = 1;
  for (int i = 0; i < n; ++i) {
    combos *= m + 1;
    if (combos > cap)
      throw capability_error("gap_opt_integral: (m+1)^n exceeds the enumeration cap " +
                             std::to_string(cap));
  }

  GapOptResult best;
  best.value = 0;
  best.assignment.assign(n, -1);

  std::vector<int> assign(n, -1);  // -1 = unassigned, otherwise resource
  std::vector<Rational> usage(m);
  Rational value;
  for (long long code = 0; code < combos; ++code) {
    long long rest = code;
    for (int i = 0; i < n; ++i) {
      assign[i] = static_cast<int>(rest % (m + 1)) - 1;
      rest /= m + 1;
    }
    for (int r = 0; r < m; ++r) usage[r] = 0;
    value = 0;
    bool feasible = true;
    for (int i = 0; i < n && feasible; ++i) {
      const int r = assign[i];
      if (r < 0) continue;
      usage[r] += instance.items[i][r].size;
      if (usage[r] > instance.capacities[r]) feasible = false;
      value += instance.items[i][r].profit;
    }
    if (feasible && value > best.value) {
      best.value = value;
      best.assignment = assign;
    }
  }
  return best;
}

}  // namespace ropack
