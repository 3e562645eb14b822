#ifndef MONORD_HILBERT_HPP
#define MONORD_HILBERT_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "monord/bigint.hpp"
#include "monord/ideal.hpp"
#include "monord/ivpoly.hpp"
#include "monord/ordinal.hpp"

namespace monord {

struct HilbertOptions {
  /// Cap on the number of distinct lcm terms in the inclusion-exclusion
  /// expansion. Exceeding it raises ResourceError.
  std::size_t max_lcm_terms = std::size_t{1} << 18;
  /// n0 scans H on [1, W] with W = threshold + m + n0_margin, widened to the
  /// stabilization certificate when that is larger.
  std::uint64_t n0_margin = 8;
  /// Largest window n0 may scan before giving up.
  std::uint64_t n0_max_window = std::uint64_t{1} << 16;
};

/// Inclusion-exclusion data for counting monomials in E. The signed lcm
/// expansion over generator subsets is collapsed by lcm and then by degree,
/// so that
///
///   #{nu in E : |nu| = n} = sum_k w_k C(n - k + m - 1, m - 1)   (n >= k).
class HilbertCounter {
 public:
  explicit HilbertCounter(const MonomialIdeal& e, const HilbertOptions& opts = {});

  std::size_t dim() const { return dim_; }
  /// H_E(n): standard monomials of degree n.
  BigInt hilbert(std::uint64_t n) const;
  /// h_E(s): standard monomials of degree <= s.
  BigInt samuel(std::uint64_t s) const;
  /// p_E, agreeing with h_E from threshold() on.
  IntegerValuedPoly samuel_poly() const;
  /// Degree of the lcm of all generators, an upper bound for every subset lcm.
  std::uint64_t threshold() const { return threshold_; }
  /// Degree-grouped weights w_k.
  const std::map<std::uint64_t, BigInt>& weights() const { return weights_; }

 private:
  std::size_t dim_;
  std::uint64_t threshold_ = 0;
  std::map<std::uint64_t, BigInt> weights_;
};

BigInt hilbert_fn(const MonomialIdeal& e, std::uint64_t n);
BigInt hilbert_samuel_fn(const MonomialIdeal& e, std::uint64_t s);

struct SamuelPoly {
  IntegerValuedPoly poly;
  /// evaluate(poly, s) == hilbert_samuel_fn(E, s) for every s >= threshold.
  std::uint64_t threshold = 0;
};

/// Closed form by inclusion-exclusion. Throws ResourceError when the lcm
/// expansion exceeds opts.max_lcm_terms; hilbert_samuel_poly_interpolated is
/// the fallback for such inputs.
SamuelPoly hilbert_samuel_poly(const MonomialIdeal& e, const HilbertOptions& opts = {});

/// Samples h_E at threshold, ..., threshold + m by direct enumeration of
/// standard monomials and interpolates.
SamuelPoly hilbert_samuel_poly_interpolated(const MonomialIdeal& e);

/// The zero ideal's Hilbert-Samuel polynomial C(T+m, m).
IntegerValuedPoly zero_ideal_samuel_poly(std::size_t m);

struct MinimizingCoefficients {
  /// by_power[i] is c_i, the coefficient of w^i; size m.
  std::vector<BigInt> by_power;
  /// All entries nonnegative, i.e. p is the Hilbert-Samuel polynomial of a
  /// nonempty final segment of N^m.
  bool valid = true;
  /// Power index of the first negative entry, scanning from the top.
  std::optional<std::size_t> first_negative;

  /// (c_{m-1}, ..., c_0).
  std::vector<BigInt> descending() const;
};

/// Recursive extraction of (c_{m-1}, ..., c_0): record the leading
/// coordinate b_d at position d, then continue with
///   q(T) = p(T + b_d) - C(T+d+1+b_d, d+1) + C(T+d+1, d+1),
/// which has degree < d. Requires p != 0 and deg p < m.
MinimizingCoefficients minimizing_coefficients(const IntegerValuedPoly& p, std::size_t m);

/// A monomial ideal in m variables whose Hilbert-Samuel polynomial is p,
/// built as (x_m^{b+1}, x_m^b J) from an ideal J realizing the reduced
/// polynomial in m - 1 variables. Throws DomainError when p is not a
/// Hilbert-Samuel polynomial. p = 0 gives the unit ideal and C(T+m, m) the
/// zero ideal.
MonomialIdeal realizing_ideal(const IntegerValuedPoly& p, std::size_t m);

/// w^{m-1} c_{m-1} + ... + c_0, or w^m for C(T+m, m). The zero polynomial
/// (unit ideal) maps to 0. Throws DomainError for invalid p.
Ordinal psi(const IntegerValuedPoly& p, std::size_t m);

/// a_1 >= a_2 >= ... >= a_s with p = sum_i C(T + a_i - (i-1), a_i).
std::vector<std::size_t> canonical_decomposition(const IntegerValuedPoly& p, std::size_t m);

/// Rebuilds sum_i C(T + a_i - (i-1), a_i) from an a-sequence.
IntegerValuedPoly polynomial_from_decomposition(const std::vector<std::size_t>& a_seq);

/// phi(p) = s, the length of the canonical decomposition.
BigInt phi(const IntegerValuedPoly& p, std::size_t m);

/// Smallest n0 >= 1 with H(n+1) = H(n)^<n> for all n >= n0. Requires a
/// proper nonzero ideal.
std::uint64_t n0(const MonomialIdeal& e, const HilbertOptions& opts = {});

/// The lex-segment ideal with the same Hilbert function as E, built from the
/// degree layers up to `max_degree`. Throws DomainError when max_degree is
/// too small to determine the Hilbert function.
MonomialIdeal lex_segment_ideal(const MonomialIdeal& e, std::uint64_t max_degree,
                                const HilbertOptions& opts = {});
/// Same, with max_degree = n0(E).
MonomialIdeal lex_segment_ideal(const MonomialIdeal& e, const HilbertOptions& opts = {});

/// Whether every degree layer of E is a final segment in lex order.
bool is_lex_segment(const MonomialIdeal& e, std::uint64_t max_degree);

/// Height of E among monomial ideals ordered by reverse inclusion:
/// psi(p_E), with w^m for the zero ideal.
Ordinal height(const MonomialIdeal& e, const HilbertOptions& opts = {});

struct HilbertProfile {
  std::size_t dim = 0;
  IntegerValuedPoly poly;
  std::uint64_t threshold = 0;
  /// Absent for the zero ideal.
  std::optional<MinimizingCoefficients> coefficients;
  Ordinal psi;
  std::optional<BigInt> phi;
  std::vector<std::size_t> a_sequence;
  /// Present for proper nonzero ideals.
  std::optional<std::uint64_t> n0;
};

HilbertProfile hilbert_profile(const MonomialIdeal& e, const HilbertOptions& opts = {});

}  // namespace monord

#endif  // MONORD_HILBERT_HPP
