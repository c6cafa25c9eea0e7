#include "ropack/rational.hpp"

namespace ropack {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");

  const auto dot = text.find('.');
  if (dot != std::string::npos) {
    // Decimal literal: digits on both sides, exact scaling by a power of ten.
    const std::string head = text.substr(0, dot);
    const std::string tail = text.substr(dot + 1);
    if (tail.empty() || tail.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("malformed decimal literal: " + text);
    std::string digits = head + tail;
    if (digits == "-" || digits == "+") throw std::invalid_argument("malformed decimal literal: " + text);
    mpz_class num;
    if (mpz_set_str(num.get_mpz_t(), digits.c_str(), 10) != 0)
      throw std::invalid_argument("malformed decimal literal: " + text);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, tail.size());
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  Rational q;
  if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
    throw std::invalid_argument("malformed rational literal: " + text);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  q.canonicalize();
  return q;
}

std::string to_fraction_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

BigInt rational_floor(const Rational& value) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num().get_mpz_t(), value.get_den().get_mpz_t());
  return q;
}

long floor_to_long(const Rational& value) {
  BigInt f = rational_floor(value);
  if (!f.fits_slong_p()) throw std::overflow_error("floor does not fit in long");
  return f.get_si();
}

}  // namespace ropack
