#include "ropack/online_gap.hpp"

#include <algorithm>
#include <stdexcept>

#include "ropack/detail/lex_matching.hpp"
#include "ropack/lp.hpp"
#include "ropack/split.hpp"

namespace ropack {

namespace {

void check_permutation(const Permutation& perm, int n) {
  if (perm.n() != n)
    throw std::invalid_argument("permutation length does not match the instance");
}

AssignmentTrace make_trace(const GapInstance& instance,
                           const std::vector<Rational>& residuals_at_start) {
  AssignmentTrace trace;
  trace.decisions.assign(instance.n(), GapDecision{});
  trace.assignment.assign(instance.n(), -1);
  trace.profit = 0;
  trace.residuals.assign(instance.n(), residuals_at_start);
  return trace;
}

}  // namespace

AssignmentTrace run_matching_AL(const GapInstance& large_view, const Permutation& perm,
                                const SeqParams& params) {
  params.validate();
  check_permutation(perm, large_view.n());
  if (params.delta < Rational(1, 2))
    throw std::invalid_argument("run_matching_AL: delta must be at least 1/2");
  for (const auto& options : large_view.items)
    for (int r = 0; r < large_view.m(); ++r)
      if (options[r].profit > 0 &&
          !is_delta_large(options[r].size, large_view.capacities[r], params.delta))
        throw std::invalid_argument("run_matching_AL: positive-profit options must be delta-large");

  const int n = large_view.n();
  const int m = large_view.m();
  if (m > detail::LexMatching::kMaxResources)
    throw capability_error("run_matching_AL: too many resources for the matching solver");
  const int cn = params.cn();
  const int dn = params.dn();

  AssignmentTrace trace = make_trace(large_view, large_view.capacities);
  std::vector<Rational> residual = large_view.capacities;
  std::vector<int> matched_resource(m, -1);  // committed matching, item per resource
  std::vector<int> revealed;                 // revealed item indices, ascending
  revealed.reserve(n);
  detail::LexMatching solver;

  for (int round = 1; round <= n; ++round) {
    const int idx = perm.order[round - 1];
    const auto insert_at = std::lower_bound(revealed.begin(), revealed.end(), idx);
    const int row_of_idx = static_cast<int>(insert_at - revealed.begin());
    revealed.insert(insert_at, idx);

    GapDecision decision;
    if (round <= cn) {
      decision.kind = Decision::kSampled;
    } else if (round <= dn) {
      decision.kind = Decision::kRejected;
      solver.solve(static_cast<int>(revealed.size()), m,
                   [&](int row, int r) -> const Rational& {
                     return large_view.items[revealed[row]][r].profit;
                   });
      const int tentative = solver.assignment()[row_of_idx];
      if (tentative >= 0) {
        if (matched_resource[tentative] < 0) {
          matched_resource[tentative] = idx;
          decision.kind = Decision::kPacked;
          decision.resource = tentative;
          trace.assignment[idx] = tentative;
          trace.profit += large_view.items[idx][tentative].profit;
          residual[tentative] -= large_view.items[idx][tentative].size;
        } else {
          decision.kind = Decision::kBlockedCapacity;
        }
      }
    } else {
      decision.kind = Decision::kRejected;
    }
    trace.decisions[round - 1] = decision;
    trace.residuals[round - 1] = residual;
  }
  return trace;
}

AssignmentTrace run_lp_AS(const GapInstance& small_view, const Permutation& perm,
                          const std::vector<Rational>& residuals_at_start,
                          const SeqParams& params, RngStream& rng) {
  params.validate();
  check_permutation(perm, small_view.n());
  if (static_cast<int>(residuals_at_start.size()) != small_view.m())
    throw std::invalid_argument("run_lp_AS: one starting residual per resource required");
  for (const auto& options : small_view.items)
    for (int r = 0; r < small_view.m(); ++r)
      if (options[r].profit > 0 &&
          is_delta_large(options[r].size, small_view.capacities[r], params.delta))
        throw std::invalid_argument("run_lp_AS: positive-profit options must be delta-small");

  const int n = small_view.n();
  const int m = small_view.m();
  const int dn = params.dn();
  std::vector<Rational> guard(m);
  for (int r = 0; r < m; ++r) guard[r] = params.delta * small_view.capacities[r];

  AssignmentTrace trace = make_trace(small_view, residuals_at_start);
  std::vector<Rational> residual = residuals_at_start;
  GapLp lp(small_view.capacities);
  std::vector<int> lp_index(n, -1);

  for (int round = 1; round <= n; ++round) {
    const int idx = perm.order[round - 1];
    lp_index[idx] = lp.add_item(small_view.items[idx]);
    lp.reoptimize();

    GapDecision decision;
    if (round <= dn) {
      decision.kind = Decision::kSampled;
    } else {
      decision.kind = Decision::kRejected;
      const std::vector<Rational> row = lp.item_row(lp_index[idx]);
      bool any_positive = false;
      for (const Rational& x : row)
        if (x > 0) { any_positive = true; break; }
      if (any_positive) {
        const int r = rng.categorical(row);
        if (r >= 0) {
          if (residual[r] >= guard[r]) {
            decision.kind = Decision::kPacked;
            decision.resource = r;
            trace.assignment[idx] = r;
            trace.profit += small_view.items[idx][r].profit;
            residual[r] -= small_view.items[idx][r].size;
          } else {
            decision.kind = Decision::kBlockedCapacity;
          }
        }
      }
    }
    trace.decisions[round - 1] = decision;
    trace.residuals[round - 1] = residual;
  }
  return trace;
}

AssignmentTrace run_sequential_gap(const GapInstance& instance, const Permutation& perm,
                                   const SeqParams& params, RngStream& rng) {
  params.validate();
  if (params.delta != Rational(1, 2))
    throw std::invalid_argument("run_sequential_gap: delta must be exactly 1/2");
  instance.validate();
  check_permutation(perm, instance.n());

  const GapSplitPair split = classify_gap(instance, params.delta);
  const int n = instance.n();
  const int cn = params.cn();
  const int dn = params.dn();

  AssignmentTrace large = run_matching_AL(split.large, perm, params);
  const std::vector<Rational>& after_large = large.residuals[n - 1];
  AssignmentTrace small = run_lp_AS(split.small, perm, after_large, params, rng);

  AssignmentTrace trace = make_trace(instance, instance.capacities);
  for (int round = 1; round <= n; ++round) {
    const int i = round - 1;
    if (round <= cn) {
      trace.decisions[i] = GapDecision{Decision::kSampled, -1};
      trace.residuals[i] = instance.capacities;
    } else if (round <= dn) {
      trace.decisions[i] = large.decisions[i];
      trace.residuals[i] = large.residuals[i];
    } else {
      trace.decisions[i] = small.decisions[i];
      trace.residuals[i] = small.residuals[i];
    }
  }
  for (int idx = 0; idx < n; ++idx) {
    if (large.assignment[idx] >= 0)
      trace.assignment[idx] = large.assignment[idx];
    else if (small.assignment[idx] >= 0)
      trace.assignment[idx] = small.assignment[idx];
  }
  trace.profit = large.profit + small.profit;
  return trace;
}

}  // namespace ropack
