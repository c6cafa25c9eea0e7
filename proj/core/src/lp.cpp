#include "ropack/lp.hpp"

#include <cassert>
#include <stdexcept>

#include "ropack/oracles.hpp"

namespace ropack {

GapLp::GapLp(std::vector<Rational> capacities)
    : m_(static_cast<int>(capacities.size())), cap_(std::move(capacities)) {
  if (m_ == 0) throw std::invalid_argument("GapLp: need at least one resource");
  basic_.reserve(m_ + 16);
  for (int r = 0; r < m_; ++r) basic_.push_back(Col{Col::kCapSlack, -1, r});
  binv_.assign(m_, std::vector<Rational>(m_, Rational(0)));
  xb_.resize(m_);
  cap_slack_basic_.assign(m_, 1);
  cap_slack_pos_.resize(m_);
  for (int r = 0; r < m_; ++r) {
    binv_[r][r] = 1;
    xb_[r] = cap_[r];
    cap_slack_pos_[r] = r;
  }
  objective_ = 0;
}

int GapLp::add_item(const std::vector<GapOption>& options) {
  if (static_cast<int>(options.size()) != m_)
    throw std::invalid_argument("GapLp: item must carry exactly one option per resource");
  Item item;
  item.vars.resize(m_);
  for (int r = 0; r < m_; ++r) {
    Var& var = item.vars[r];
    var.v = options[r].profit;
    var.s = options[r].size;
    var.exists = options[r].profit > 0;
    if (var.exists && var.s <= 0)
      throw std::invalid_argument("GapLp: option sizes must be positive");
  }
  items_.push_back(std::move(item));
  const int index = static_cast<int>(items_.size()) - 1;
  fresh_items_.push_back(index);
  return index;
}

void GapLp::activate(int item) {
  Item& it = items_[item];
  assert(it.core_row == -1);
  const int q = core_size();
  core_items_.push_back(item);
  it.core_row = q;
  it.slack_in_basis = true;
  it.slack_pos = q;
  basic_.push_back(Col{Col::kItemSlack, item, -1});
  xb_.emplace_back(1);
  for (auto& row : binv_) row.emplace_back(0);
  binv_.emplace_back(q + 1, Rational(0));
  binv_.back()[q] = 1;
}

void GapLp::column_support(const Col& col, std::vector<std::pair<int, Rational>>& out) const {
  out.clear();
  switch (col.kind) {
    case Col::kEdge: {
      const Item& it = items_[col.item];
      out.emplace_back(col.r, it.vars[col.r].s);
      assert(it.core_row >= 0);
      out.emplace_back(it.core_row, Rational(1));
      break;
    }
    case Col::kCapSlack:
      out.emplace_back(col.r, Rational(1));
      break;
    case Col::kItemSlack:
      assert(items_[col.item].core_row >= 0);
      out.emplace_back(items_[col.item].core_row, Rational(1));
      break;
  }
}

std::vector<Rational> GapLp::duals() const {
  const int q = core_size();
  std::vector<Rational> pi(q, Rational(0));
  Rational term;
  for (int p = 0; p < q; ++p) {
    const Col& col = basic_[p];
    if (col.kind != Col::kEdge) continue;
    const Rational& v = items_[col.item].vars[col.r].v;
    if (v == 0) continue;
    const auto& row = binv_[p];
    for (int k = 0; k < q; ++k) {
      if (row[k] == 0) continue;
      term = v;
      term *= row[k];
      pi[k] += term;
    }
  }
  return pi;
}

Rational GapLp::reduced_cost(const Col& col, const std::vector<Rational>& pi) const {
  switch (col.kind) {
    case Col::kEdge: {
      const Item& it = items_[col.item];
      const Var& var = it.vars[col.r];
      Rational rc = var.v;
      rc -= pi[col.r] * var.s;
      if (it.core_row >= 0) rc -= pi[it.core_row];
      return rc;
    }
    case Col::kCapSlack:
      return -pi[col.r];
    case Col::kItemSlack:
      return -pi[items_[col.item].core_row];
  }
  return Rational(0);
}

long GapLp::column_order(const Col& col) const {
  const long edge_block = static_cast<long>(items_.size()) * m_;
  switch (col.kind) {
    case Col::kEdge: return static_cast<long>(col.item) * m_ + col.r;
    case Col::kCapSlack: return edge_block + col.r;
    case Col::kItemSlack: return edge_block + m_ + col.item;
  }
  return 0;
}

bool GapLp::find_entering(Pricing pricing, const std::vector<Rational>& pi, Col& out) const {
  bool found = false;
  Rational best_rc;
  long best_order = 0;
  auto consider = [&](const Col& col) -> bool {
    const Rational rc = reduced_cost(col, pi);
    if (rc <= 0) return false;
    if (pricing == Pricing::kBland) {
      out = col;
      found = true;
      return true;  // first positive index wins
    }
    const long order = column_order(col);
    if (!found || rc > best_rc || (rc == best_rc && order < best_order)) {
      out = col;
      best_rc = rc;
      best_order = order;
      found = true;
    }
    return false;
  };

  for (int i = 0; i < static_cast<int>(items_.size()); ++i) {
    const Item& it = items_[i];
    for (int r = 0; r < m_; ++r) {
      const Var& var = it.vars[r];
      if (!var.exists || var.in_basis) continue;
      if (consider(Col{Col::kEdge, i, r})) return true;
    }
  }
  for (int r = 0; r < m_; ++r) {
    if (cap_slack_basic_[r]) continue;
    if (consider(Col{Col::kCapSlack, -1, r})) return true;
  }
  for (int idx = 0; idx < static_cast<int>(core_items_.size()); ++idx) {
    const int i = core_items_[idx];
    if (items_[i].slack_in_basis) continue;
    if (consider(Col{Col::kItemSlack, i, -1})) return true;
  }
  return found;
}

void GapLp::reseat_position(int p) {
  const Col& col = basic_[p];
  switch (col.kind) {
    case Col::kEdge:
      items_[col.item].vars[col.r].basis_pos = p;
      break;
    case Col::kCapSlack:
      cap_slack_pos_[col.r] = p;
      break;
    case Col::kItemSlack:
      items_[col.item].slack_pos = p;
      break;
  }
}

bool GapLp::pivot(const Col& entering) {
  const int q = core_size();
  std::vector<std::pair<int, Rational>> support;
  column_support(entering, support);

  // Direction d = B^{-1} a for the entering column.
  std::vector<Rational> d(q, Rational(0));
  Rational term;
  for (int p = 0; p < q; ++p) {
    for (const auto& [k, coef] : support) {
      if (binv_[p][k] == 0) continue;
      term = binv_[p][k];
      term *= coef;
      d[p] += term;
    }
  }

  int leave = -1;
  Rational best_ratio;
  for (int p = 0; p < q; ++p) {
    if (d[p] <= 0) continue;
    Rational ratio = xb_[p] / d[p];
    if (leave < 0 || ratio < best_ratio ||
        (ratio == best_ratio && column_order(basic_[p]) < column_order(basic_[leave]))) {
      leave = p;
      best_ratio = std::move(ratio);
    }
  }
  if (leave < 0) throw std::logic_error("GapLp: unbounded direction in a bounded LP");

  const Rational theta = best_ratio;
  for (int p = 0; p < q; ++p) {
    if (p == leave || d[p] == 0) continue;
    term = theta;
    term *= d[p];
    xb_[p] -= term;
  }
  xb_[leave] = theta;

  const Rational piv = d[leave];
  for (int k = 0; k < q; ++k)
    if (binv_[leave][k] != 0) binv_[leave][k] /= piv;
  for (int p = 0; p < q; ++p) {
    if (p == leave || d[p] == 0) continue;
    for (int k = 0; k < q; ++k) {
      if (binv_[leave][k] == 0) continue;
      term = d[p];
      term *= binv_[leave][k];
      binv_[p][k] -= term;
    }
  }

  // Basis bookkeeping.
  const Col leaving = basic_[leave];
  switch (leaving.kind) {
    case Col::kEdge: {
      Var& var = items_[leaving.item].vars[leaving.r];
      var.in_basis = false;
      var.basis_pos = -1;
      break;
    }
    case Col::kCapSlack:
      cap_slack_basic_[leaving.r] = 0;
      cap_slack_pos_[leaving.r] = -1;
      break;
    case Col::kItemSlack:
      items_[leaving.item].slack_in_basis = false;
      items_[leaving.item].slack_pos = -1;
      break;
  }
  switch (entering.kind) {
    case Col::kEdge: {
      Var& var = items_[entering.item].vars[entering.r];
      var.in_basis = true;
      var.basis_pos = leave;
      break;
    }
    case Col::kCapSlack:
      cap_slack_basic_[entering.r] = 1;
      cap_slack_pos_[entering.r] = leave;
      break;
    case Col::kItemSlack:
      items_[entering.item].slack_in_basis = true;
      items_[entering.item].slack_pos = leave;
      break;
  }
  basic_[leave] = entering;
  ++pivots_;
  return theta == 0;
}

void GapLp::reoptimize(Pricing pricing) {
  if (!pi_valid_) {
    pi_cache_ = duals();
    pi_valid_ = true;
  }
  bool fresh_price_positive = false;
  for (int i : fresh_items_) {
    const Item& it = items_[i];
    for (int r = 0; r < m_ && !fresh_price_positive; ++r) {
      if (!it.vars[r].exists || it.vars[r].in_basis) continue;
      if (reduced_cost(Col{Col::kEdge, i, r}, pi_cache_) > 0) fresh_price_positive = true;
    }
    if (fresh_price_positive) break;
  }
  fresh_items_.clear();
  if (!fresh_price_positive) return;  // previous basis stays optimal

  Pricing mode = pricing;
  int degenerate_run = 0;
  const long pivot_budget =
      10000 + 40L * (static_cast<long>(items_.size()) * m_ + core_size() + 8);
  long spent = 0;
  for (;;) {
    const std::vector<Rational> pi = duals();
    Col entering;
    if (!find_entering(mode, pi, entering)) break;
    if (entering.kind == Col::kEdge && items_[entering.item].core_row < 0)
      activate(entering.item);
    const bool degenerate = pivot(entering);
    if (degenerate) {
      if (++degenerate_run > core_size() + 16) mode = Pricing::kBland;  // anti-cycling fallback
    } else {
      degenerate_run = 0;
    }
    if (++spent > pivot_budget)
      throw std::logic_error("GapLp: pivot budget exceeded, suspected cycling bug");
  }
  try_deactivate_all();
  refresh_objective();
  pi_cache_ = duals();
  pi_valid_ = true;
}

void GapLp::try_deactivate_all() {
  for (int idx = static_cast<int>(core_items_.size()) - 1; idx >= 0; --idx) {
    const int i = core_items_[idx];
    Item& it = items_[i];
    if (!it.slack_in_basis) continue;
    bool has_basic_edge = false;
    for (const Var& var : it.vars)
      if (var.in_basis) { has_basic_edge = true; break; }
    if (has_basic_edge) continue;

    const int q = core_size();
    int p = it.slack_pos;
    int k = m_ + idx;
    // Move the slack's basis position to the end.
    if (p != q - 1) {
      std::swap(basic_[p], basic_[q - 1]);
      std::swap(xb_[p], xb_[q - 1]);
      std::swap(binv_[p], binv_[q - 1]);
      reseat_position(p);
      it.slack_pos = q - 1;
    }
    // Move the slack's core row to the end.
    if (k != q - 1) {
      for (auto& row : binv_) std::swap(row[k], row[q - 1]);
      const int last_idx = static_cast<int>(core_items_.size()) - 1;
      std::swap(core_items_[idx], core_items_[last_idx]);
      items_[core_items_[idx]].core_row = k;
    }
    assert(binv_[q - 1][q - 1] == 1);
    assert(xb_[q - 1] == 1);
    basic_.pop_back();
    xb_.pop_back();
    binv_.pop_back();
    for (auto& row : binv_) row.pop_back();
    core_items_.pop_back();
    it.core_row = -1;
    it.slack_in_basis = false;
    it.slack_pos = -1;
  }
}

void GapLp::refresh_objective() {
  objective_ = 0;
  Rational term;
  for (int p = 0; p < core_size(); ++p) {
    const Col& col = basic_[p];
    if (col.kind != Col::kEdge || xb_[p] == 0) continue;
    term = items_[col.item].vars[col.r].v;
    term *= xb_[p];
    objective_ += term;
  }
}

Rational GapLp::coefficient(int item, int r) const {
  const Var& var = items_.at(item).vars.at(r);
  if (!var.exists || !var.in_basis) return Rational(0);
  return xb_[var.basis_pos];
}

std::vector<Rational> GapLp::item_row(int item) const {
  std::vector<Rational> row(m_, Rational(0));
  for (int r = 0; r < m_; ++r) row[r] = coefficient(item, r);
  return row;
}

bool GapLp::check_optimal_basis() const {
  for (const Rational& value : xb_)
    if (value < 0) return false;
  std::vector<Rational> usage(m_, Rational(0));
  for (int i = 0; i < item_count(); ++i) {
    Rational item_sum(0);
    for (int r = 0; r < m_; ++r) {
      const Rational x = coefficient(i, r);
      if (x == 0) continue;
      if (x < 0 || x > 1) return false;
      usage[r] += items_[i].vars[r].s * x;
      item_sum += x;
    }
    if (item_sum > 1) return false;
  }
  for (int r = 0; r < m_; ++r)
    if (usage[r] > cap_[r]) return false;

  const std::vector<Rational> pi = duals();
  for (int i = 0; i < item_count(); ++i) {
    const Item& it = items_[i];
    for (int r = 0; r < m_; ++r) {
      if (!it.vars[r].exists || it.vars[r].in_basis) continue;
      if (reduced_cost(Col{Col::kEdge, i, r}, pi) > 0) return false;
    }
  }
  for (int r = 0; r < m_; ++r)
    if (!cap_slack_basic_[r] && reduced_cost(Col{Col::kCapSlack, -1, r}, pi) > 0) return false;
  for (int i : core_items_)
    if (!items_[i].slack_in_basis && reduced_cost(Col{Col::kItemSlack, i, -1}, pi) > 0) return false;
  return true;
}

GapFractionalSolution gap_opt_fractional(const GapInstance& instance) {
  instance.validate();
  GapLp lp(instance.capacities);
  for (const auto& options : instance.items) lp.add_item(options);
  lp.reoptimize(GapLp::Pricing::kBland);
  GapFractionalSolution solution;
  solution.value = lp.objective();
  for (int i = 0; i < instance.n(); ++i) {
    for (int r = 0; r < instance.m(); ++r) {
      Rational x = lp.coefficient(i, r);
      if (x != 0) solution.coefficients.emplace_back(std::make_pair(i, r), std::move(x));
    }
  }
  return solution;
}

}  // namespace ropack
