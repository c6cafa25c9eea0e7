#ifndef ROPACK_RNG_HPP
#define ROPACK_RNG_HPP

#include <cstdint>
#include <vector>

#include "ropack/rational.hpp"

namespace ropack {

// Counter-based random stream keyed on (seed, trial_index, purpose).
// Output i is a pure function of (key, i), so trials are independent and
// parallelizable without shared state, and every draw is reproducible
// bit-exactly across platforms.
class RngStream {
 public:
  enum Purpose : std::uint64_t {
    kPermutation = 1,
    kCoin = 2,
    kGenerator = 3,
  };

  RngStream(std::uint64_t seed, std::uint64_t trial_index, std::uint64_t purpose);

  std::uint64_t next_u64();

  // Uniform in [0, bound) via rejection sampling; bound >= 1.
  std::uint64_t next_below(std::uint64_t bound);

  // True with probability p (clamped to [0,1]), resolved exactly against a
  // single 64-bit draw: returns u < p * 2^64 with exact integer arithmetic.
  bool bernoulli(const Rational& p);

  // Draws index r with probability probs[r] and -1 with the residual
  // probability (sum(probs) must be <= 1). Consumes one 64-bit draw, resolved
  // exactly against the cumulative sums.
  int categorical(const std::vector<Rational>& probs);

  std::uint64_t draws() const { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace ropack

#endif  // ROPACK_RNG_HPP
