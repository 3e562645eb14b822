#ifndef MONORD_BIGINT_HPP
#define MONORD_BIGINT_HPP

#include <gmpxx.h>

#include <compare>
#include <string>

namespace monord {

using BigInt = mpz_class;

/// Generalized binomial coefficient n(n-1)...(n-k+1)/k!, valid for negative n.
BigInt binomial(const BigInt& n, unsigned long k);

inline BigInt binomial(long n, unsigned long k) { return binomial(BigInt(n), k); }

std::string to_string(const BigInt& value);

inline std::strong_ordering compare(const BigInt& a, const BigInt& b) {
  const int c = cmp(a, b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

/// Parses a (possibly signed) decimal integer; throws ParseError on failure.
BigInt parse_bigint(const std::string& text);

}  // namespace monord

#endif  // MONORD_BIGINT_HPP
