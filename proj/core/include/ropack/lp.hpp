#ifndef ROPACK_LP_HPP
#define ROPACK_LP_HPP

#include <vector>

#include "ropack/instance.hpp"

namespace ropack {

// Exact primal simplex for the fractional GAP relaxation
//
//   max  sum_{i,r} v_{i,r} x_{i,r}
//   s.t. sum_i s_{i,r} x_{i,r} <= W_r          (capacity rows)
//        sum_r x_{i,r} <= 1                    (item rows)
//        x >= 0
//
// specialized to the two-nonzero column pattern: every variable touches one
// capacity row and one item row. The basis inverse is kept dense only on the
// "core" block (capacity rows plus rows of items that currently carry a basic
// variable besides their slack); all other item rows stay implicit with their
// slack basic at value 1. Items can be appended between reoptimize() calls,
// which warm-starts from the previous optimal basis, so maintaining the LP
// along an online arrival sequence costs a few pivots per round instead of a
// full solve.
class GapLp {
 public:
  enum class Pricing { kBland, kDantzig };

  explicit GapLp(std::vector<Rational> capacities);

  // Adds an item with one option per resource. Zero-profit options carry no
  // LP variable (an optimal solution never uses them). Returns the item index.
  int add_item(const std::vector<GapOption>& options);

  // Pivots until all reduced costs are non-positive. kDantzig falls back to
  // Bland's rule after a run of degenerate pivots; both rules terminate.
  void reoptimize(Pricing pricing = Pricing::kDantzig);

  const Rational& objective() const { return objective_; }
  Rational coefficient(int item, int r) const;
  std::vector<Rational> item_row(int item) const;

  int item_count() const { return static_cast<int>(items_.size()); }
  int resource_count() const { return m_; }
  long pivot_count() const { return pivots_; }

  // Recomputes feasibility and dual optimality of the current basis from the
  // instance data. Intended for tests.
  bool check_optimal_basis() const;

 private:
  struct Col {
    enum Kind : unsigned char { kEdge, kCapSlack, kItemSlack } kind;
    int item = -1;
    int r = -1;
  };
  struct Var {
    Rational v;
    Rational s;
    bool exists = false;    // profit > 0
    bool in_basis = false;
    int basis_pos = -1;
  };
  struct Item {
    std::vector<Var> vars;      // per resource
    int core_row = -1;          // -1: inactive (slack implicitly basic at 1)
    bool slack_in_basis = false;
    int slack_pos = -1;
  };

  int core_size() const { return static_cast<int>(basic_.size()); }
  void activate(int item);
  void try_deactivate_all();
  std::vector<Rational> duals() const;
  Rational reduced_cost(const Col& col, const std::vector<Rational>& pi) const;
  void column_support(const Col& col, std::vector<std::pair<int, Rational>>& out) const;
  bool find_entering(Pricing pricing, const std::vector<Rational>& pi, Col& out) const;
  long column_order(const Col& col) const;
  bool pivot(const Col& entering);  // returns true when the step was degenerate
  void reseat_position(int p);
  void refresh_objective();

  int m_ = 0;
  std::vector<Rational> cap_;
  std::vector<Item> items_;
  std::vector<int> core_items_;              // item of core row m_ + k
  std::vector<Col> basic_;                   // basic column per basis position
  std::vector<std::vector<Rational>> binv_;  // basis inverse, positions x core rows
  std::vector<Rational> xb_;                 // basic values
  std::vector<char> cap_slack_basic_;
  std::vector<int> cap_slack_pos_;
  Rational objective_;
  long pivots_ = 0;
  // Items appended since the basis was last optimal. When the cached duals
  // price all of their options non-positive, reoptimize() is a no-op: columns
  // of the previously optimal LP kept their reduced costs.
  std::vector<int> fresh_items_;
  std::vector<Rational> pi_cache_;
  bool pi_valid_ = false;
};

}  // namespace ropack

#endif  // ROPACK_LP_HPP
