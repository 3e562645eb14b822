#ifndef MONORD_IDEAL_HPP
#define MONORD_IDEAL_HPP

#include <cstddef>
#include <iosfwd>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "monord/monom.hpp"

namespace monord {

/// A monomial ideal of K[x1..xm], i.e. a final segment of N^m, stored as its
/// minimal generators sorted by deglex. Distinct ideals have distinct
/// representations.
///
/// The two extremes are ordinary values: the zero ideal (empty final segment)
/// has no generators, the unit ideal (all of N^m) is generated by the origin.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(std::size_t dim) : dim_(dim) {}

  static MonomialIdeal zero(std::size_t dim) { return MonomialIdeal(dim); }
  static MonomialIdeal unit(std::size_t dim);
  /// Prunes non-minimal and duplicate generators.
  static MonomialIdeal from_generators(std::size_t dim, std::vector<ExpVec> raw);

  std::size_t dim() const { return dim_; }
  const std::vector<ExpVec>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_zero(); }
  bool is_proper_nonzero() const { return !is_zero() && !is_unit(); }
  /// Finite complement: a pure power of every variable is present.
  bool is_artinian() const;

  bool contains(const ExpVec& nu) const;

  /// Largest exponent of the last variable over the generators (0 if none).
  ExpVec::value_type max_last_exponent() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::size_t dim_;
  std::vector<ExpVec> gens_;
};

MonomialIdeal normalize(std::size_t dim, std::vector<ExpVec> raw);
bool contains_point(const MonomialIdeal& e, const ExpVec& nu);

/// E contains F as sets of monomials.
bool superset(const MonomialIdeal& e, const MonomialIdeal& f);

MonomialIdeal sum(const MonomialIdeal& e, const MonomialIdeal& f);
MonomialIdeal intersect(const MonomialIdeal& e, const MonomialIdeal& f);
/// (E : X^nu).
MonomialIdeal colon(const MonomialIdeal& e, const ExpVec& nu);

/// {e' in N^{m-1} : (e', j) in E}. Requires m >= 2.
MonomialIdeal slice(const MonomialIdeal& e, ExpVec::value_type j);

/// E viewed in one more variable (the homogenizing one appended last).
MonomialIdeal cone(const MonomialIdeal& e);

/// Ideal of K[x, y] generated by E, F (in disjoint variables) and all
/// products x_i y_j. Both operands must be proper and nonzero.
MonomialIdeal direct_sum(const MonomialIdeal& e, const MonomialIdeal& f);

/// m^nu = (x_i^{nu_i} : nu_i > 0).
MonomialIdeal irreducible_ideal(const ExpVec& nu);

/// The unique irredundant decomposition E = m^{nu_1} cap ... cap m^{nu_r},
/// returned as the exponent vectors nu_i in deglex order. Rejects the zero
/// and unit ideals.
std::vector<ExpVec> irreducible_decomposition(const MonomialIdeal& e);

/// Irreducible components grouped by support; each group holds the
/// compressed vectors <nu> as a commutative word over N^{|support|}.
/// Supports are 0-based variable index lists.
std::map<std::vector<std::size_t>, CommWord> components_by_support(const MonomialIdeal& e);

/// All monomials of degree <= bound outside E.
std::vector<ExpVec> standard_monomials(const MonomialIdeal& e, std::uint64_t max_degree);

/// All points of N^m with |nu| == degree, in increasing lex order.
std::vector<ExpVec> monomials_of_degree(std::size_t dim, std::uint64_t degree);

// ---------------------------------------------------------------------------
// Text and JSON forms
//
//   # comment
//   dim 3
//   2 0 1
//   x2^3
//   zero | unit

MonomialIdeal parse_ideal(std::string_view text);
MonomialIdeal read_ideal_file(const std::string& path);
/// Canonical text form; parse_ideal(format_ideal(E)) == E.
std::string format_ideal(const MonomialIdeal& e);
std::string ideal_to_json(const MonomialIdeal& e);

inline std::ostream& operator<<(std::ostream& os, const MonomialIdeal& e) { return os << format_ideal(e); }

}  // namespace monord

#endif  // MONORD_IDEAL_HPP
