#ifndef ROPACK_PERMUTATION_HPP
#define ROPACK_PERMUTATION_HPP

#include <cstdint>
#include <vector>

namespace ropack {

// One arrival order: order[l] is the index (position in the instance's item
// list) of the item revealed in round l+1. Fully determined by
// (seed, trial_index, n); regeneration reproduces it bit-exactly.
struct Permutation {
  std::vector<int> order;
  std::uint64_t seed = 0;
  std::uint64_t trial_index = 0;

  int n() const { return static_cast<int>(order.size()); }
};

// Uniform over all n! orders, deterministic in (seed, trial_index).
// Throws std::invalid_argument for n = 0.
Permutation random_permutation(int n, std::uint64_t seed, std::uint64_t trial_index);

}  // namespace ropack

#endif  // ROPACK_PERMUTATION_HPP
