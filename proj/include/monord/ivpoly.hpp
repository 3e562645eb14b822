#ifndef MONORD_IVPOLY_HPP
#define MONORD_IVPOLY_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "monord/bigint.hpp"

namespace monord {

/// Integer-valued polynomial written in the binomial basis
///
///   p(T) = b_d C(T+d, d) + ... + b_1 C(T+1, 1) + b_0.
///
/// Every integer-valued polynomial has integer coordinates in this basis, so
/// arithmetic stays in BigInt. The leading coordinate is never zero; the zero
/// polynomial has no coordinates and degree -1.
class IntegerValuedPoly {
 public:
  IntegerValuedPoly() = default;
  explicit IntegerValuedPoly(std::vector<BigInt> coeffs);

  static IntegerValuedPoly constant(const BigInt& c);
  /// C(T+i, i).
  static IntegerValuedPoly basis(std::size_t i);

  /// Rebuilds the polynomial taking `values[k]` at T = t0 + k. The degree is
  /// inferred (at most values.size() - 1).
  static IntegerValuedPoly from_samples(const BigInt& t0, std::span<const BigInt> values);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  /// b_i, zero past the degree.
  BigInt coeff(std::size_t i) const;
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  const BigInt& leading() const { return coeffs_.back(); }

  BigInt operator()(const BigInt& s) const;
  BigInt evaluate(const BigInt& s) const { return (*this)(s); }

  /// p(T + k). Negative k is allowed.
  IntegerValuedPoly shifted(const BigInt& k) const;

  IntegerValuedPoly& operator+=(const IntegerValuedPoly& q);
  IntegerValuedPoly& operator-=(const IntegerValuedPoly& q);
  IntegerValuedPoly& operator*=(const BigInt& k);

  friend IntegerValuedPoly operator+(IntegerValuedPoly p, const IntegerValuedPoly& q) { return p += q; }
  friend IntegerValuedPoly operator-(IntegerValuedPoly p, const IntegerValuedPoly& q) { return p -= q; }
  friend IntegerValuedPoly operator*(IntegerValuedPoly p, const BigInt& k) { return p *= k; }
  friend IntegerValuedPoly operator*(const BigInt& k, IntegerValuedPoly p) { return p *= k; }
  friend IntegerValuedPoly operator-(IntegerValuedPoly p) { return p *= BigInt(-1); }

  friend bool operator==(const IntegerValuedPoly& p, const IntegerValuedPoly& q) {
    return p.coeffs_ == q.coeffs_;
  }

  /// "C(T+2,2) + 3*C(T+1,1) - 2"
  std::string str() const;

 private:
  void trim();

  std::vector<BigInt> coeffs_;
};

IntegerValuedPoly shift(const IntegerValuedPoly& p, const BigInt& k);
BigInt evaluate(const IntegerValuedPoly& p, const BigInt& s);

/// Eventual pointwise comparison: p < q iff p(s) < q(s) for all s >> 0.
/// Lexicographic on (b_d, ..., b_0) padded to a common degree.
std::strong_ordering dominance_cmp(const IntegerValuedPoly& p, const IntegerValuedPoly& q);

/// d-th Macaulay representation a = C(a_d, d) + ... + C(a_1, 1),
/// a_d > ... > a_1 >= 0. `coeffs` is stored as (a_d, ..., a_1).
struct MacaulayRep {
  unsigned d = 0;
  std::vector<BigInt> coeffs;

  BigInt value() const;
  friend bool operator==(const MacaulayRep&, const MacaulayRep&) = default;
};

MacaulayRep macaulay_rep(const BigInt& a, unsigned d);

/// a^<d>: each a_i and index bumped by one; 0^<d> = 0.
BigInt macaulay_next(const BigInt& a, unsigned d);

struct OSequenceCheck {
  enum class Violation { none, initial_value, first_degree, growth };

  bool ok = true;
  Violation kind = Violation::none;
  /// n where the check failed: 0 for f(0) != 1, 1 for f(1) > m, otherwise
  /// the n with f(n+1) > f(n)^<n>.
  std::optional<std::size_t> index;
  /// f(1) == m, the condition Macaulay's theorem states for ideals whose
  /// degree-one part vanishes.
  bool full_first_degree = false;
};

/// Checks f(0) = 1, f(1) <= m and f(n+1) <= f(n)^<n> on the supplied window.
OSequenceCheck is_osequence(std::span<const BigInt> values, unsigned m);

inline std::ostream& operator<<(std::ostream& os, const IntegerValuedPoly& p) { return os << p.str(); }

}  // namespace monord

#endif  // MONORD_IVPOLY_HPP
