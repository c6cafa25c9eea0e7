#ifndef ROPACK_INSTANCE_HPP
#define ROPACK_INSTANCE_HPP

#include <vector>

#include "ropack/rational.hpp"

namespace ropack {

struct KnapsackItem {
  int id = 0;
  Rational size;    // > 0, same unit as the capacity
  Rational profit;  // >= 0
};

// Immutable after construction; all algorithms share instances across threads.
struct KnapsackInstance {
  Rational capacity;
  std::vector<KnapsackItem> items;

  int n() const { return static_cast<int>(items.size()); }

  // Checks: capacity > 0, sizes in (0, capacity], profits >= 0, distinct
  // non-negative ids. Throws std::invalid_argument.
  void validate() const;
};

// Option of an item for one resource: assigning the item raises `profit` and
// consumes `size` of that resource's capacity.
struct GapOption {
  Rational profit;  // >= 0
  Rational size;    // > 0
};

struct GapInstance {
  std::vector<Rational> capacities;            // W_r, r in [m]
  std::vector<std::vector<GapOption>> items;   // items[i][r], exactly m options per item

  int n() const { return static_cast<int>(items.size()); }
  int m() const { return static_cast<int>(capacities.size()); }

  // Every item carries exactly m options (use zero-profit dummies to fill
  // gaps); capacities > 0; option sizes in (0, W_r]; profits >= 0.
  void validate() const;
};

}  // namespace ropack

#endif  // ROPACK_INSTANCE_HPP
