#ifndef MONORD_ORDINAL_HPP
#define MONORD_ORDINAL_HPP

#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "monord/bigint.hpp"

namespace monord {

/// An ordinal below epsilon_0 in hereditary Cantor normal form
///
///   w^e1 * c1 + w^e2 * c2 + ... + w^ek * ck,   e1 > e2 > ... > ek,  ci >= 1,
///
/// where every exponent is again an Ordinal. Values are canonical after
/// construction, so structural equality is ordinal equality.
class Ordinal {
 public:
  struct Term;

  Ordinal() = default;
  explicit Ordinal(const BigInt& n);
  explicit Ordinal(unsigned long n) : Ordinal(BigInt(n)) {}

  static Ordinal omega();

  /// Sorts by exponent, merges equal exponents and drops zero coefficients.
  static Ordinal from_terms(std::vector<Term> terms);

  static Ordinal parse(std::string_view text);

  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_finite() const;
  /// Nonzero and without a finite tail.
  bool is_limit() const;
  bool is_successor() const;

  /// Coefficient of w^0 (0 when absent).
  BigInt finite_part() const;
  std::optional<BigInt> to_natural() const;
  /// alpha - 1 for successor ordinals; throws DomainError otherwise.
  Ordinal predecessor() const;

  std::string str() const;

  friend bool operator==(const Ordinal& a, const Ordinal& b);
  friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);

 private:
  std::vector<Term> terms_;
};

struct Ordinal::Term {
  Ordinal exponent;
  BigInt coeff;
};

std::strong_ordering cmp(const Ordinal& a, const Ordinal& b);

/// Hessenberg natural sum: coefficients added exponent-wise.
Ordinal nat_sum(const Ordinal& a, const Ordinal& b);

/// Hessenberg natural product: natural sum over w^(g_i (+) d_j) * a_i * b_j.
Ordinal nat_prod(const Ordinal& a, const Ordinal& b);

/// n-fold natural product; a^(x)0 = 1.
Ordinal nat_pow(const Ordinal& a, unsigned long n);

Ordinal omega_pow(const Ordinal& exponent);

/// Order type of the set of decreasing sequences in alpha (eventually
/// constant descending sequences ordered lexicographically).
Ordinal ot_decreasing_sequences(const Ordinal& alpha);

std::string format(const Ordinal& a);
Ordinal parse_ordinal(std::string_view text);

inline std::ostream& operator<<(std::ostream& os, const Ordinal& a) { return os << format(a); }

}  // namespace monord

#endif  // MONORD_ORDINAL_HPP
