#ifndef ROPACK_ONLINE_GAP_HPP
#define ROPACK_ONLINE_GAP_HPP

#include <vector>

#include "ropack/instance.hpp"
#include "ropack/online_knapsack.hpp"
#include "ropack/permutation.hpp"
#include "ropack/rng.hpp"

namespace ropack {

struct GapDecision {
  Decision kind = Decision::kRejected;
  int resource = -1;  // set when kind == kPacked
};

// Per-round record of one online GAP execution. Rounds are 1-based.
struct AssignmentTrace {
  std::vector<GapDecision> decisions;
  std::vector<int> assignment;                   // item index -> resource (-1 = none)
  Rational profit;
  std::vector<std::vector<Rational>> residuals;  // residuals[l-1][r] after round l
};

// Matching-based algorithm for (1/2)-large options: sample rounds 1..cn; in
// rounds cn+1..dn compute a maximum-weight matching on the graph revealed so
// far (zero-profit edges excluded, lexicographic tie-break) and commit the
// tentative edge at the arriving vertex iff its resource is still free.
AssignmentTrace run_matching_AL(const GapInstance& large_view, const Permutation& perm,
                                const SeqParams& params);

// LP-rounding algorithm for (1/2)-small options: sample rounds 1..dn; in later
// rounds solve the fractional relaxation over the revealed small options, draw
// a resource r with probability x_{i,r} (none with the residual probability),
// and assign iff the residual of r is at least W_r / 2.
AssignmentTrace run_lp_AS(const GapInstance& small_view, const Permutation& perm,
                          const std::vector<Rational>& residuals_at_start,
                          const SeqParams& params, RngStream& rng);

// Sequential combination over shared per-resource residuals; requires
// params.delta == 1/2.
AssignmentTrace run_sequential_gap(const GapInstance& instance, const Permutation& perm,
                                   const SeqParams& params, RngStream& rng);

}  // namespace ropack

#endif  // ROPACK_ONLINE_GAP_HPP
