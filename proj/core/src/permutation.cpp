#include "ropack/permutation.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

#include "ropack/rng.hpp"

namespace ropack {

Permutation random_permutation(int n, std::uint64_t seed, std::uint64_t trial_index) {
  if (n < 1) throw std::invalid_argument("random_permutation: n must be at least 1");
  Permutation perm;
  perm.seed = seed;
  perm.trial_index = trial_index;
  perm.order.resize(n);
  std::iota(perm.order.begin(), perm.order.end(), 0);
  RngStream rng(seed, trial_index, RngStream::kPermutation);
  for (int i = n - 1; i > 0; --i) {
    const auto j = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(i) + 1));
    std::swap(perm.order[i], perm.order[j]);
  }
  return perm;
}

}  // namespace ropack
