#include "ropack/online_knapsack.hpp"

#include <algorithm>
#include <stdexcept>

namespace ropack {

int SeqParams::cn() const { return static_cast<int>(floor_to_long(c * n)); }
int SeqParams::dn() const { return static_cast<int>(floor_to_long(d * n)); }

void SeqParams::validate() const {
  if (n < 1) throw std::invalid_argument("SeqParams: n must be at least 1");
  if (c <= 0 || c >= 1) throw std::invalid_argument("SeqParams: c must be in (0,1)");
  if (d <= c || d > 1) throw std::invalid_argument("SeqParams: d must be in (c,1]");
  if (delta <= 0 || delta >= 1) throw std::invalid_argument("SeqParams: delta must be in (0,1)");
  if (!(cn() < dn() && dn() <= n))
    throw std::invalid_argument("SeqParams: need floor(c*n) < floor(d*n) <= n");
}

namespace {

void check_permutation(const Permutation& perm, int n) {
  if (perm.n() != n)
    throw std::invalid_argument("permutation length does not match the instance");
}

RunTrace make_trace(int n, const Rational& initial_residual) {
  RunTrace trace;
  trace.decisions.assign(n, Decision::kSampled);
  trace.residual.assign(n, initial_residual);
  trace.profit = 0;
  return trace;
}

}  // namespace

RunTrace run_AL(const KnapsackInstance& large_view, const Permutation& perm,
                const SeqParams& params) {
  params.validate();
  check_permutation(perm, large_view.n());
  if (params.delta < Rational(1, 3))
    throw std::invalid_argument("run_AL: delta must be at least 1/3");
  for (const KnapsackItem& item : large_view.items)
    if (item.profit > 0 && !is_delta_large(item.size, large_view.capacity, params.delta))
      throw std::invalid_argument("run_AL: positive-profit items must be delta-large");

  const int n = large_view.n();
  const int cn = params.cn();
  const int dn = params.dn();
  RunTrace trace = make_trace(n, large_view.capacity);

  Rational best_sample(0);  // v*
  Rational residual = large_view.capacity;
  int packed = 0;
  for (int round = 1; round <= n; ++round) {
    const KnapsackItem& item = large_view.items[perm.order[round - 1]];
    Decision decision = Decision::kRejected;
    if (round <= cn) {
      decision = Decision::kSampled;
      if (item.profit > best_sample) best_sample = item.profit;
    } else if (round <= dn && item.profit > best_sample && packed < 2) {
      // Zero-profit placeholders never pass: profit > v* >= 0 fails for them.
      if (item.size <= residual) {
        decision = Decision::kPacked;
        residual -= item.size;
        trace.profit += item.profit;
        trace.packed_ids.push_back(item.id);
        if (!trace.first_packed_round) trace.first_packed_round = round;
        ++packed;
      } else {
        decision = Decision::kBlockedCapacity;
      }
    }
    trace.decisions[round - 1] = decision;
    trace.residual[round - 1] = residual;
  }
  return trace;
}

GreedyCoefficientStream::GreedyCoefficientStream(const KnapsackInstance& view) : view_(&view) {
  std::vector<int> positive;
  for (int i = 0; i < view.n(); ++i)
    if (view.items[i].profit > 0) positive.push_back(i);
  // Density order: profit/size descending, ties by ascending id. Zero-profit
  // items never precede a positive-profit one, so they can be left out
  // entirely without changing any positive item's coefficient.
  std::sort(positive.begin(), positive.end(), [&](int a, int b) {
    const KnapsackItem& x = view.items[a];
    const KnapsackItem& y = view.items[b];
    const Rational lhs = x.profit * y.size;
    const Rational rhs = y.profit * x.size;
    const int cmp = mpq_cmp(lhs.get_mpq_t(), rhs.get_mpq_t());
    if (cmp != 0) return cmp > 0;
    return x.id < y.id;
  });
  rank_of_.assign(view.n(), -1);
  for (std::size_t pos = 0; pos < positive.size(); ++pos)
    rank_of_[positive[pos]] = static_cast<int>(pos);
  tree_.assign(positive.size() + 1, Rational(0));
}

void GreedyCoefficientStream::reset() {
  for (Rational& node : tree_) node = 0;
}

Rational GreedyCoefficientStream::prefix_smaller_rank(int rank) const {
  // Sum of sizes of revealed items with density rank strictly smaller.
  Rational sum(0);
  for (int i = rank; i > 0; i -= i & -i) sum += tree_[i];
  return sum;
}

Rational GreedyCoefficientStream::reveal(int item_index) {
  const KnapsackItem& item = view_->items.at(item_index);
  const int rank = rank_of_.at(item_index);
  if (rank < 0) return Rational(0);  // zero profit

  const Rational before = prefix_smaller_rank(rank);
  const int n = static_cast<int>(tree_.size()) - 1;
  for (int i = rank + 1; i <= n; i += i & -i) tree_[i] += item.size;

  const Rational& capacity = view_->capacity;
  if (before >= capacity) return Rational(0);
  if (before + item.size <= capacity) return Rational(1);
  return (capacity - before) / item.size;
}

RunTrace run_AS(const KnapsackInstance& small_view, const Permutation& perm,
                const Rational& residual_at_start, const SeqParams& params, RngStream& rng,
                GreedyCoefficientStream& stream) {
  params.validate();
  check_permutation(perm, small_view.n());
  for (const KnapsackItem& item : small_view.items)
    if (item.profit > 0 && is_delta_large(item.size, small_view.capacity, params.delta))
      throw std::invalid_argument("run_AS: positive-profit items must be delta-small");
  stream.reset();

  const int n = small_view.n();
  const int dn = params.dn();
  const Rational guard = params.delta * small_view.capacity;
  RunTrace trace = make_trace(n, residual_at_start);

  Rational residual = residual_at_start;
  for (int round = 1; round <= n; ++round) {
    const int idx = perm.order[round - 1];
    const KnapsackItem& item = small_view.items[idx];
    Decision decision;
    if (round <= dn) {
      stream.reveal(idx);
      decision = Decision::kSampled;
    } else if (item.profit == 0) {
      decision = Decision::kRejected;  // explicit zero-profit skip
    } else {
      const Rational x = stream.reveal(idx);
      if (residual < guard) {
        decision = Decision::kBlockedCapacity;
      } else {
        bool pack;
        if (x == 0) {
          pack = false;
        } else if (x == 1) {
          pack = true;
        } else {
          trace.coin_rounds.push_back(round);
          pack = rng.bernoulli(x);
        }
        if (pack) {
          decision = Decision::kPacked;
          residual -= item.size;
          trace.profit += item.profit;
          trace.packed_ids.push_back(item.id);
          if (!trace.first_packed_round) trace.first_packed_round = round;
        } else {
          decision = Decision::kRejected;
        }
      }
    }
    trace.decisions[round - 1] = decision;
    trace.residual[round - 1] = residual;
  }
  return trace;
}

RunTrace run_AS(const KnapsackInstance& small_view, const Permutation& perm,
                const Rational& residual_at_start, const SeqParams& params, RngStream& rng) {
  GreedyCoefficientStream stream(small_view);
  return run_AS(small_view, perm, residual_at_start, params, rng, stream);
}

RunTrace run_sequential(const KnapsackInstance& instance, const SplitPair& split,
                        const Permutation& perm, const SeqParams& params, RngStream& rng,
                        GreedyCoefficientStream& stream) {
  params.validate();
  check_permutation(perm, instance.n());
  const int n = instance.n();
  const int cn = params.cn();
  const int dn = params.dn();

  RunTrace large = run_AL(split.large, perm, params);
  const Rational used_large = instance.capacity - large.residual[n - 1];
  RunTrace small =
      run_AS(split.small, perm, instance.capacity - used_large, params, rng, stream);

  RunTrace trace = make_trace(n, instance.capacity);
  for (int round = 1; round <= n; ++round) {
    const int i = round - 1;
    if (round <= cn) {
      trace.decisions[i] = Decision::kSampled;
      trace.residual[i] = instance.capacity;
    } else if (round <= dn) {
      trace.decisions[i] = large.decisions[i];
      trace.residual[i] = large.residual[i];
    } else {
      trace.decisions[i] = small.decisions[i];
      trace.residual[i] = small.residual[i];
    }
  }
  trace.packed_ids = large.packed_ids;
  trace.packed_ids.insert(trace.packed_ids.end(), small.packed_ids.begin(),
                          small.packed_ids.end());
  trace.profit = large.profit + small.profit;
  trace.coin_rounds = small.coin_rounds;
  if (large.first_packed_round)
    trace.first_packed_round = large.first_packed_round;
  else
    trace.first_packed_round = small.first_packed_round;
  return trace;
}

RunTrace run_sequential(const KnapsackInstance& instance, const Permutation& perm,
                        const SeqParams& params, RngStream& rng) {
  const SplitPair split = classify_knapsack(instance, params.delta);
  GreedyCoefficientStream stream(split.small);
  return run_sequential(instance, split, perm, params, rng, stream);
}

}  // namespace ropack
