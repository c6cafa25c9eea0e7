#ifndef ROPACK_ANALYSIS_HPP
#define ROPACK_ANALYSIS_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ropack/rational.hpp"

namespace ropack {
namespace analysis {

// --- Exact acceptance probabilities of the large-item rule ----------------
//
// p_first: probability that the item of rank i is accepted first,
//   p_i = cn/(n(n-1)) * sum_{k=cn+1}^{dn} C(n-i,k-1)/C(n-2,k-2).
// p_pair: probability that ranks (i,j), i<j, are accepted first and second;
//   depends only on j:
//   p_ij = cn/(n(n-1)(n-2)) * sum_{k=cn+1}^{dn-1} sum_{l=k+1}^{dn}
//          C(n-j,l-2)/C(n-3,l-3),
// and p_ji = p_ij (swapping the two accepted items maps permutations
// one-to-one). Both need 1 <= cn <= dn <= n; an empty sum yields 0.
// Big-integer binomials keep these exact up to kExactFormulaCap.
inline constexpr int kExactFormulaCap = 500;

Rational p_first_exact(int n, int cn, int dn, int i);
Rational p_pair_exact(int n, int cn, int dn, int j);

// Double-precision evaluation: exact path for n <= kExactFormulaCap, log-gamma
// binomials (relative error ~1e-12) beyond.
double p_first_value(int n, int cn, int dn, int i);

// --- Asymptotic (n -> infinity) closed forms -------------------------------

double p_first_asymptotic(double c, double d, int i);   // i in [4]
double p_pair_asymptotic(double c, double d, int pair);  // pair: 12 or 13 (= 23)

// f(x) = 2 ln x - 6x + 2x^2 - x^3/3; the parameter pair (c,d) is feasible for
// the case analysis iff f(c) >= f(d).
double feasibility_f(double x);
bool feasible_pair(double c, double d);

// Case bounds of the large-item rule:
//   case1 = p1
//   case2 = p12 + (p1+p2)/2
//   case3 = p13 + (p1+p2+p3)/2
//   case4 = p23 + (p1+p2+p3)/2   (= case3)
//   case5 = (p1+p2+p3+p4)/2
// Throws std::domain_error naming the violated condition when f(c) < f(d).
std::array<double, 5> case_bounds(double c, double d);

// Small-item bound (c/d) * ((1-d)(1+Delta) - Delta ln(1/d)).
double ratio_AS_bound(double c, double d, double Delta);

// Matching bound c ln(d/c).
double ratio_matching_bound(double c, double d);

// --- Parameter optimization -------------------------------------------------

enum class Problem { kKnapsack, kGap };

struct OptimizeResult {
  double c = 0;
  double d = 0;
  double value = 0;
};

// Grid search maximizing
//   knapsack: min(min case_bounds, ratio_AS_bound(c,d,3/2)) over feasible pairs
//   gap:      min(ratio_matching_bound, ratio_AS_bound(c,d,2))
// at `grid_step` resolution with staged local refinement down to 1e-5.
// `fixed_d` pins d; fixed_d == 1 with knapsack optimizes the large-item rule
// alone (the small-item phase is empty). Throws std::invalid_argument when
// grid_step > 1e-3 or the feasible region is empty.
OptimizeResult optimize_params(Problem problem, double grid_step,
                               std::optional<double> fixed_d = std::nullopt);

// Objective evaluated at one (c,d); -infinity when infeasible. Exposed so the
// optimizer's landscape can be probed directly.
double objective(Problem problem, double c, double d, std::optional<double> fixed_d = std::nullopt);

// --- Exact probability report ----------------------------------------------

struct ProbabilityReport {
  int n = 0, cn = 0, dn = 0;
  std::vector<std::pair<int, Rational>> p_first;                    // i -> p_i, i <= min(n,4)
  std::vector<std::pair<std::pair<int, int>, Rational>> p_pair;     // ordered pairs over [3]
  std::vector<std::pair<std::string, Rational>> type_probs;         // packing types A..M
  std::array<Rational, 5> case_values;  // alpha_w + min((beta_w+gamma_w)/2, beta_w)
  Rational sum_p_first;                 // sum over all i in [n]; at most 1
};

ProbabilityReport probability_report(int n, int cn, int dn);

// --- Ratio bundle for the CLI ------------------------------------------------

struct RatioBundle {
  double c = 0, d = 0, Delta = 0;
  std::string problem;                 // "knapsack" or "gap"
  std::optional<double> ratio_AL;      // min case bound; empty when infeasible
  double ratio_AS = 0;
  double ratio_matching = 0;
  double combined = 0;
};

RatioBundle ratio_bundle(double c, double d, double Delta, Problem problem);
std::string to_json(const RatioBundle& bundle);

}  // namespace analysis
}  // namespace ropack

#endif  // ROPACK_ANALYSIS_HPP
