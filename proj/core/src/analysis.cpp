#include "ropack/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace ropack {
namespace analysis {

namespace {

void check_phase_args(int n, int cn, int dn, int min_n) {
  if (n < min_n) throw std::invalid_argument("n too small");
  if (!(1 <= cn && cn <= dn && dn <= n))
    throw std::invalid_argument("need 1 <= cn <= dn <= n");
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

// mpq_class(num, den) leaves the fraction unreduced; gmp operations require
// canonical operands.
Rational ratio_of(const BigInt& num, const BigInt& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

double log_binomial(double n, double k) {
  return std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1);
}

}  // namespace

Rational p_first_exact(int n, int cn, int dn, int i) {
  check_phase_args(n, cn, dn, 2);
  if (i < 1 || i > n) throw std::invalid_argument("need 1 <= i <= n");
  if (n > kExactFormulaCap)
    throw capability_error("p_first_exact: n exceeds the exact-formula cap; use p_first_value");
  Rational sum(0);
  for (int k = cn + 1; k <= dn; ++k) {
    if (k - 1 > n - i) continue;  // binomial vanishes
    sum += ratio_of(binomial(n - i, k - 1), binomial(n - 2, k - 2));
  }
  return ratio_of(BigInt(cn), BigInt(n) * (n - 1)) * sum;
}

Rational p_pair_exact(int n, int cn, int dn, int j) {
  check_phase_args(n, cn, dn, 2);
  if (j < 2 || j > n) throw std::invalid_argument("need 2 <= j <= n");
  if (n > kExactFormulaCap)
    throw capability_error("p_pair_exact: n exceeds the exact-formula cap");
  if (dn <= cn + 1) return Rational(0);  // no room for two decision rounds
  Rational sum(0);
  for (int l = cn + 2; l <= dn; ++l) {
    if (l - 2 > n - j) continue;
    // The inner term depends on l alone; it appears once per k in
    // [cn+1, l-1], i.e. with multiplicity l-1-cn.
    sum += ratio_of((l - 1 - cn) * binomial(n - j, l - 2), binomial(n - 3, l - 3));
  }
  return ratio_of(BigInt(cn), BigInt(n) * (n - 1) * (n - 2)) * sum;
}

double p_first_value(int n, int cn, int dn, int i) {
  if (n <= kExactFormulaCap) return to_double(p_first_exact(n, cn, dn, i));
  check_phase_args(n, cn, dn, 2);
  if (i < 1 || i > n) throw std::invalid_argument("need 1 <= i <= n");
  double sum = 0;
  for (int k = cn + 1; k <= dn; ++k) {
    if (k - 1 > n - i) continue;
    sum += std::exp(log_binomial(n - i, k - 1) - log_binomial(n - 2, k - 2));
  }
  return static_cast<double>(cn) / (static_cast<double>(n) * (n - 1)) * sum;
}

double p_first_asymptotic(double c, double d, int i) {
  if (!(0 < c && c <= d && d <= 1)) throw std::domain_error("need 0 < c <= d <= 1");
  const double ln = std::log(d / c);
  switch (i) {
    case 1: return c * ln;
    case 2: return c * (ln - (d - c));
    case 3: return c * (ln - 2 * (d - c) + 0.5 * (d * d - c * c));
    case 4:
      return c * (ln - 3 * (d - c) + 1.5 * (d * d - c * c) -
                  (d * d * d - c * c * c) / 3);
    default: throw std::invalid_argument("p_first_asymptotic: i must be in [4]");
  }
}

double p_pair_asymptotic(double c, double d, int pair) {
  if (!(0 < c && c <= d && d <= 1)) throw std::domain_error("need 0 < c <= d <= 1");
  const double base = d - c * std::log(d / c) - c;
  switch (pair) {
    case 12: return c * base;
    case 13:
    case 23: return c * (base - d * d / 2 + c * d - c * c / 2);
    default: throw std::invalid_argument("p_pair_asymptotic: pair must be 12, 13 or 23");
  }
}

double feasibility_f(double x) {
  if (x <= 0) throw std::domain_error("feasibility_f: x must be positive");
  return 2 * std::log(x) - 6 * x + 2 * x * x - x * x * x / 3;
}

bool feasible_pair(double c, double d) { return feasibility_f(c) >= feasibility_f(d); }

std::array<double, 5> case_bounds(double c, double d) {
  if (!(0 < c && c < d && d <= 1)) throw std::domain_error("case_bounds: need 0 < c < d <= 1");
  if (!feasible_pair(c, d))
    throw std::domain_error("case_bounds: infeasible parameters, f(c) < f(d) so the two-item "
                            "case reduction beta_w >= gamma_w is not guaranteed");
  const double p1 = p_first_asymptotic(c, d, 1);
  const double p2 = p_first_asymptotic(c, d, 2);
  const double p3 = p_first_asymptotic(c, d, 3);
  const double p4 = p_first_asymptotic(c, d, 4);
  const double p12 = p_pair_asymptotic(c, d, 12);
  const double p13 = p_pair_asymptotic(c, d, 13);
  return {p1,
          p12 + (p1 + p2) / 2,
          p13 + (p1 + p2 + p3) / 2,
          p13 + (p1 + p2 + p3) / 2,
          (p1 + p2 + p3 + p4) / 2};
}

double ratio_AS_bound(double c, double d, double Delta) {
  if (!(0 < c && c <= d && d <= 1)) throw std::domain_error("need 0 < c <= d <= 1");
  if (Delta < 1) throw std::domain_error("ratio_AS_bound: Delta must be at least 1");
  return c / d * ((1 - d) * (1 + Delta) - Delta * std::log(1 / d));
}

double ratio_matching_bound(double c, double d) {
  if (!(0 < c && c <= d && d <= 1)) throw std::domain_error("need 0 < c <= d <= 1");
  return c * std::log(d / c);
}

double objective(Problem problem, double c, double d, std::optional<double> fixed_d) {
  constexpr double kInfeasible = -std::numeric_limits<double>::infinity();
  if (!(0 < c && c < d && d <= 1)) return kInfeasible;
  if (problem == Problem::kGap)
    return std::min(ratio_matching_bound(c, d), ratio_AS_bound(c, d, 2.0));
  if (!feasible_pair(c, d)) return kInfeasible;
  const auto cases = case_bounds(c, d);
  double value = *std::min_element(cases.begin(), cases.end());
  // With d pinned to 1 the small-item phase is empty and its bound vacuous.
  const bool large_only = fixed_d && *fixed_d == 1.0;
  if (!large_only) value = std::min(value, ratio_AS_bound(c, d, 1.5));
  return value;
}

OptimizeResult optimize_params(Problem problem, double grid_step,
                               std::optional<double> fixed_d) {
  if (!(grid_step > 0 && grid_step <= 1e-3 + 1e-12))
    throw std::invalid_argument("optimize_params: grid_step must be in (0, 1e-3]");

  const auto eval = [&](double c, double d) { return objective(problem, c, d, fixed_d); };

  // Coarse scan. The objective is piecewise smooth with a min operator and a
  // very flat ridge, so several top cells are kept and each is refined.
  struct Cell {
    double value, c, d;
    bool operator<(const Cell& other) const { return value > other.value; }
  };
  std::vector<Cell> top;
  const auto offer = [&top](double value, double c, double d) {
    if (!std::isfinite(value)) return;
    top.push_back({value, c, d});
    std::sort(top.begin(), top.end());
    if (top.size() > 24) top.resize(24);
  };
  for (double c = grid_step; c < 1.0; c += grid_step) {
    if (fixed_d) {
      offer(eval(c, *fixed_d), c, *fixed_d);
    } else {
      for (double d = c + grid_step; d <= 1.0 + 1e-12; d += grid_step)
        offer(eval(c, std::min(d, 1.0)), c, std::min(d, 1.0));
    }
  }
  if (top.empty()) throw std::invalid_argument("optimize_params: empty feasible region");

  // Staged refinement of every surviving cell down to 1e-5.
  OptimizeResult best{top.front().c, top.front().d, top.front().value};
  for (const Cell& cell : top) {
    double cc = cell.c, dd = cell.d, vv = cell.value;
    for (double step = grid_step / 10; step >= 1e-5 * (1 - 1e-9); step /= 10) {
      const double window = step * 15;
      double bc = cc, bd = dd, bv = vv;
      for (double c = cc - window; c <= cc + window + 1e-15; c += step) {
        if (c <= 0 || c >= 1) continue;
        if (fixed_d) {
          const double v = eval(c, *fixed_d);
          if (v > bv) { bv = v; bc = c; bd = *fixed_d; }
        } else {
          for (double d = dd - window; d <= dd + window + 1e-15; d += step) {
            if (d <= c || d > 1) continue;
            const double v = eval(c, d);
            if (v > bv) { bv = v; bc = c; bd = d; }
          }
        }
      }
      cc = bc; dd = bd; vv = bv;
    }
    if (vv > best.value) best = {cc, dd, vv};
  }
  return best;
}

ProbabilityReport probability_report(int n, int cn, int dn) {
  check_phase_args(n, cn, dn, 2);
  ProbabilityReport report;
  report.n = n;
  report.cn = cn;
  report.dn = dn;

  const auto p_first_or_zero = [&](int i) {
    return i <= n ? p_first_exact(n, cn, dn, i) : Rational(0);
  };
  const auto p_pair_or_zero = [&](int j) {
    return (j <= n && n >= 3) ? p_pair_exact(n, cn, dn, j) : Rational(0);
  };

  const Rational p1 = p_first_or_zero(1);
  const Rational p2 = p_first_or_zero(2);
  const Rational p3 = p_first_or_zero(3);
  const Rational p4 = p_first_or_zero(4);
  const Rational p12 = p_pair_or_zero(2);
  const Rational p13 = p_pair_or_zero(3);
  const Rational& p23 = p13;  // the pair probability depends on the larger rank only

  for (int i = 1; i <= std::min(n, 4); ++i) report.p_first.emplace_back(i, p_first_or_zero(i));
  if (n >= 2) {
    report.p_pair.push_back({{1, 2}, p12});
    report.p_pair.push_back({{2, 1}, p12});
  }
  if (n >= 3) {
    report.p_pair.push_back({{1, 3}, p13});
    report.p_pair.push_back({{3, 1}, p13});
    report.p_pair.push_back({{2, 3}, p23});
    report.p_pair.push_back({{3, 2}, p23});
  }

  report.type_probs = {
      {"A", p12 + p12}, {"B", p13 + p13}, {"C", p23 + p23},
      {"D", p1},        {"E", p2},        {"F", p3},        {"G", p4},
      {"H", p1 - p12},  {"I", p1 - p13},
      {"J", p2 - p12},  {"K", p2 - p23},
      {"L", p3 - p13},  {"M", p3 - p23},
  };

  const auto case_value = [](const Rational& alpha, const Rational& beta, const Rational& gamma) {
    const Rational balanced = (beta + gamma) / 2;
    return alpha + std::min(balanced, beta);
  };
  report.case_values[0] = case_value(p1, Rational(0), Rational(0));
  report.case_values[1] = case_value(p12 + p12, p1 - p12, p2 - p12);
  report.case_values[2] = case_value(p13 + p13, p1 - p13, p2 + p3 - p13);
  report.case_values[3] = case_value(p23 + p23, p1 + p2 - p23, p3 - p23);
  report.case_values[4] = case_value(Rational(0), p1, p2 + p3 + p4);

  report.sum_p_first = 0;
  for (int i = 1; i <= n; ++i) report.sum_p_first += p_first_exact(n, cn, dn, i);
  return report;
}

RatioBundle ratio_bundle(double c, double d, double Delta, Problem problem) {
  RatioBundle bundle;
  bundle.c = c;
  bundle.d = d;
  bundle.Delta = Delta;
  bundle.problem = problem == Problem::kKnapsack ? "knapsack" : "gap";
  if (!(0 < c && c < d && d <= 1)) throw std::invalid_argument("ratio_bundle: need 0 < c < d <= 1");
  if (feasible_pair(c, d)) {
    const auto cases = case_bounds(c, d);
    bundle.ratio_AL = *std::min_element(cases.begin(), cases.end());
  }
  bundle.ratio_AS = ratio_AS_bound(c, d, Delta);
  bundle.ratio_matching = ratio_matching_bound(c, d);
  if (problem == Problem::kKnapsack) {
    if (!bundle.ratio_AL)
      throw std::domain_error("ratio_bundle: knapsack bundle needs a feasible pair, f(c) >= f(d)");
    bundle.combined = std::min(*bundle.ratio_AL, bundle.ratio_AS);
  } else {
    bundle.combined = std::min(bundle.ratio_matching, bundle.ratio_AS);
  }
  return bundle;
}

std::string to_json(const RatioBundle& bundle) {
  nlohmann::json j;
  j["c"] = bundle.c;
  j["d"] = bundle.d;
  j["Delta"] = bundle.Delta;
  j["problem"] = bundle.problem;
  if (bundle.ratio_AL)
    j["ratio_AL"] = *bundle.ratio_AL;
  else
    j["ratio_AL"] = nullptr;
  j["ratio_AS"] = bundle.ratio_AS;
  j["ratio_matching"] = bundle.ratio_matching;
  j["combined"] = bundle.combined;
  return j.dump();
}

}  // namespace analysis
}  // namespace ropack
