#ifndef ROPACK_ONLINE_KNAPSACK_HPP
#define ROPACK_ONLINE_KNAPSACK_HPP

#include <optional>
#include <vector>

#include "ropack/instance.hpp"
#include "ropack/permutation.hpp"
#include "ropack/rng.hpp"
#include "ropack/split.hpp"

namespace ropack {

enum class Decision : unsigned char {
  kSampled,          // round inside a sampling phase
  kRejected,         // decision rule declined the item
  kPacked,           // item packed / assigned
  kBlockedCapacity,  // rule accepted but the capacity guard refused
};

// Per-round record of one online execution. Rounds are 1-based.
struct RunTrace {
  std::vector<Decision> decisions;      // decisions[l-1] is round l
  std::vector<int> packed_ids;          // in packing order
  Rational profit;                      // sum of packed profits
  std::vector<Rational> residual;       // remaining capacity after each round
  std::vector<int> coin_rounds;         // rounds that consumed a random draw
  std::optional<int> first_packed_round;  // round after which the knapsack was
                                          // first non-empty; nullopt = never
};

// Phase boundaries of the sequential approach. cn and dn are realized as
// floor(c*n) and floor(d*n).
struct SeqParams {
  Rational c;      // in (0,1)
  Rational d;      // in (c,1]
  Rational delta;  // in (0,1)
  int n = 0;

  int cn() const;
  int dn() const;

  // Enforces the ranges above and floor(c*n) < floor(d*n) <= n.
  void validate() const;
};

// Algorithm for delta-large items (two-choice secretary style): sample
// rounds 1..cn, record the best profit v*, then in rounds cn+1..dn pack an
// arriving item iff its profit beats v*, fewer than two items are packed, and
// it fits the residual capacity. Rounds after dn are rejected. Deterministic.
// Zero-profit arrivals are always skipped.
RunTrace run_AL(const KnapsackInstance& large_view, const Permutation& perm,
                const SeqParams& params);

// Randomized-rounding algorithm for delta-small items: sample rounds 1..dn;
// afterwards pack the arriving item with probability equal to its coefficient
// in the greedy fractional solution over the small items seen so far, provided
// the residual capacity is at least delta * W. `residual_at_start` is the
// capacity still free when the run begins (W for a standalone run). A round
// enters coin_rounds iff a strictly fractional probability was realized
// against one rng draw.
RunTrace run_AS(const KnapsackInstance& small_view, const Permutation& perm,
                const Rational& residual_at_start, const SeqParams& params,
                RngStream& rng);

// Sequential combination: sampling through cn, the large-item rule on the
// large view through dn, then the small-item rule on the small view with the
// shared residual capacity.
RunTrace run_sequential(const KnapsackInstance& instance, const Permutation& perm,
                        const SeqParams& params, RngStream& rng);

// Streaming view of the greedy fractional solution: items from `view` are
// revealed one at a time; reveal() returns the revealed item's coefficient in
// the greedy solution over everything revealed so far. Equals the coefficient
// computed from scratch by knapsack_opt_fractional on the revealed subset.
class GreedyCoefficientStream {
 public:
  explicit GreedyCoefficientStream(const KnapsackInstance& view);

  // `item_index` is a position in view.items. Zero-profit items return 0 and
  // never influence later coefficients.
  Rational reveal(int item_index);

  // Forgets all revealed items; the (permutation-independent) density order
  // is kept, so a reset stream can be reused across trials.
  void reset();

 private:
  Rational prefix_smaller_rank(int rank) const;

  const KnapsackInstance* view_;
  std::vector<int> rank_of_;          // density rank per item index (-1: zero profit)
  std::vector<Rational> tree_;        // Fenwick tree over size sums by rank
};

// Variant for hot loops: reuses a stream already constructed for `small_view`
// (it is reset on entry).
RunTrace run_AS(const KnapsackInstance& small_view, const Permutation& perm,
                const Rational& residual_at_start, const SeqParams& params,
                RngStream& rng, GreedyCoefficientStream& stream);

// Variant reusing a precomputed split and greedy stream across trials.
RunTrace run_sequential(const KnapsackInstance& instance, const SplitPair& split,
                        const Permutation& perm, const SeqParams& params, RngStream& rng,
                        GreedyCoefficientStream& stream);

}  // namespace ropack

#endif  // ROPACK_ONLINE_KNAPSACK_HPP
