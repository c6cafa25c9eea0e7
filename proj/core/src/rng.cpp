#include "ropack/rng.hpp"

namespace ropack {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t trial_index, std::uint64_t purpose) {
  std::uint64_t k = mix64(seed + kGolden);
  k = mix64(k ^ (trial_index + 0xD1B54A32D192ED03ULL));
  k = mix64(k ^ (purpose + 0x8CB92BA72F3D8DD7ULL));
  key_ = k;
}

std::uint64_t RngStream::next_u64() {
  ++counter_;
  return mix64(key_ + counter_ * kGolden);
}

std::uint64_t RngStream::next_below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("next_below: bound must be positive");
  if (bound == 1) return 0;
  const std::uint64_t limit = bound * (~std::uint64_t{0} / bound);
  for (;;) {
    const std::uint64_t u = next_u64();
    if (u < limit) return u % bound;
  }
}

int RngStream::categorical(const std::vector<Rational>& probs) {
  const std::uint64_t u = next_u64();
  BigInt u_big;
  mpz_import(u_big.get_mpz_t(), 1, 1, sizeof(u), 0, 0, &u);
  Rational cum(0);
  for (std::size_t r = 0; r < probs.size(); ++r) {
    if (probs[r] < 0) throw std::invalid_argument("categorical: negative probability");
    cum += probs[r];
    // u < cum * 2^64  <=>  u * den(cum) < num(cum) << 64
    BigInt lhs = u_big * cum.get_den();
    BigInt rhs = cum.get_num();
    rhs <<= 64;
    if (lhs < rhs) return static_cast<int>(r);
  }
  if (cum > 1) throw std::invalid_argument("categorical: probabilities sum above 1");
  return -1;
}

bool RngStream::bernoulli(const Rational& p) {
  if (p <= 0) {
    next_u64();
    return false;
  }
  if (p >= 1) {
    next_u64();
    return true;
  }
  const std::uint64_t u = next_u64();
  // u < p * 2^64  <=>  u * den(p) < num(p) << 64
  BigInt lhs;
  mpz_import(lhs.get_mpz_t(), 1, 1, sizeof(u), 0, 0, &u);
  lhs *= p.get_den();
  BigInt rhs = p.get_num();
  rhs <<= 64;
  return lhs < rhs;
}

}  // namespace ropack
