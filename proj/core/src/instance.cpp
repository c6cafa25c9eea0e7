#include "ropack/instance.hpp"

#include <set>
#include <string>

namespace ropack {

void KnapsackInstance::validate() const {
  if (capacity <= 0) throw std::invalid_argument("knapsack capacity must be positive");
  std::set<int> ids;
  for (const KnapsackItem& item : items) {
    if (item.id < 0) throw std::invalid_argument("item id must be non-negative");
    if (!ids.insert(item.id).second)
      throw std::invalid_argument("duplicate item id " + std::to_string(item.id));
    if (item.size <= 0)
      throw std::invalid_argument("item " + std::to_string(item.id) + ": size must be positive");
    if (item.size > capacity)
      throw std::invalid_argument("item " + std::to_string(item.id) + ": size exceeds capacity");
    if (item.profit < 0)
      throw std::invalid_argument("item " + std::to_string(item.id) + ": profit must be non-negative");
  }
}

void GapInstance::validate() const {
  if (capacities.empty()) throw std::invalid_argument("gap instance needs at least one resource");
  for (const Rational& w : capacities)
    if (w <= 0) throw std::invalid_argument("resource capacity must be positive");
  const auto m = capacities.size();
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (items[i].size() != m)
      throw std::invalid_argument("item " + std::to_string(i) + ": expected exactly " +
                                  std::to_string(m) + " options");
    for (std::size_t r = 0; r < m; ++r) {
      const GapOption& opt = items[i][r];
      if (opt.size <= 0)
        throw std::invalid_argument("item " + std::to_string(i) + ": option size must be positive");
      if (opt.size > capacities[r])
        throw std::invalid_argument("item " + std::to_string(i) +
                                    ": option size exceeds capacity of resource " + std::to_string(r));
      if (opt.profit < 0)
        throw std::invalid_argument("item " + std::to_string(i) + ": option profit must be non-negative");
    }
  }
}

}  // namespace ropack
