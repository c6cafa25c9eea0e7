#ifndef ROPACK_ORACLES_HPP
#define ROPACK_ORACLES_HPP

#include <utility>
#include <vector>

#include "ropack/instance.hpp"

namespace ropack {

template <typename Key>
struct FractionalSolutionT {
  std::vector<std::pair<Key, Rational>> coefficients;  // only nonzero entries
  Rational value;

  Rational coefficient(const Key& key) const {
    for (const auto& [k, v] : coefficients)
      if (k == key) return v;
    return Rational(0);
  }
};

// Knapsack coefficients are keyed by item id; GAP coefficients by
// (item index, resource).
using FractionalSolution = FractionalSolutionT<int>;
using GapFractionalSolution = FractionalSolutionT<std::pair<int, int>>;

struct KnapsackOptResult {
  Rational value;
  std::vector<int> chosen;  // item ids, ascending
};

// Exact optimum via branch-and-bound with the greedy fractional value as
// admissible upper bound. Throws capability_error when n exceeds `exact_cap`
// (callers should fall back to the fractional bound).
KnapsackOptResult knapsack_opt_integral(const KnapsackInstance& instance, int exact_cap = 40);

// Greedy solution of the fractional knapsack: items sorted by density
// (profit/size, ties by ascending id), prefix packed integrally, the break
// item fractionally. At most one coefficient is strictly fractional and
// sum(alpha_i * s_i) = min(W, total size).
FractionalSolution knapsack_opt_fractional(const KnapsackInstance& instance);

struct Matching {
  std::vector<std::pair<int, int>> edges;  // (online id, resource id), ascending
  Rational weight;
};

// Maximum-weight bipartite matching of a rectangular weight table
// (rows = online vertices, columns = resources). Zero-weight edges are never
// included; among maximum-weight matchings the lexicographically smallest
// edge set under (online id, resource id) is returned. Columns are limited to
// 20 (capability_error above).
Matching matching_opt(const std::vector<std::vector<Rational>>& weights);

struct GapOptResult {
  Rational value;
  std::vector<int> assignment;  // item index -> resource, -1 = unassigned
};

// Exact optimum by exhaustive assignment enumeration with feasibility
// filtering. Throws capability_error when (m+1)^n exceeds `cap`.
GapOptResult gap_opt_integral(const GapInstance& instance, long long cap = 2'000'000);

// Optimal basic solution of the fractional GAP relaxation
//   max sum v_{i,r} x_{i,r}
//   s.t. per-resource capacity, per-item sum <= 1, 0 <= x <= 1
// by primal simplex with exact rational pivots (Bland's rule).
GapFractionalSolution gap_opt_fractional(const GapInstance& instance);

}  // namespace ropack

#endif  // ROPACK_ORACLES_HPP
