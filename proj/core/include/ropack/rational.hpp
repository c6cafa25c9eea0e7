#ifndef ROPACK_RATIONAL_HPP
#define ROPACK_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace ropack {

// All instance data and oracle values are exact rationals. Floating point is
// reserved for Monte Carlo statistics and asymptotic bound evaluation.
using Rational = mpq_class;
using BigInt = mpz_class;

// Raised when an exact solver is asked for more than its configured cap.
class capability_error : public std::runtime_error {
 public:
  explicit capability_error(const std::string& what) : std::runtime_error(what) {}
};

// Parses "p/q", an integer "p", or a plain decimal like "0.42291" (which maps
// to 42291/100000). Throws std::invalid_argument on malformed input or q = 0.
Rational parse_rational(const std::string& text);

// Canonical form "p/q" in lowest terms with q >= 1, e.g. "3/1", "-2/5".
std::string to_fraction_string(const Rational& value);

inline double to_double(const Rational& value) { return value.get_d(); }

// floor(value) as a big integer.
BigInt rational_floor(const Rational& value);

// floor(value) narrowed to long; requires the result to fit.
long floor_to_long(const Rational& value);

}  // namespace ropack

#endif  // ROPACK_RATIONAL_HPP
