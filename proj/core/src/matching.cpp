#include <string>

#include "ropack/detail/lex_matching.hpp"
#include "ropack/oracles.hpp"

namespace ropack {

Matching matching_opt(const std::vector<std::vector<Rational>>& weights) {
  const int rows = static_cast<int>(weights.size());
  int m = 0;
  for (int i = 0; i < rows; ++i) {
    if (i == 0)
      m = static_cast<int>(weights[i].size());
    else if (static_cast<int>(weights[i].size()) != m)
      throw std::invalid_argument("matching_opt: weight table must be rectangular");
  }
  if (m > detail::LexMatching::kMaxResources)
    throw capability_error("matching_opt: more than " +
                           std::to_string(detail::LexMatching::kMaxResources) +
                           " resource columns");
  Matching result;
  result.weight = 0;
  if (rows == 0 || m == 0) return result;

  detail::LexMatching solver;
  solver.solve(rows, m, [&](int i, int r) -> const Rational& { return weights[i][r]; });
  result.weight = solver.total();
  for (int i = 0; i < rows; ++i)
    if (solver.assignment()[i] >= 0) result.edges.emplace_back(i, solver.assignment()[i]);
  return result;
}

}  // namespace ropack
