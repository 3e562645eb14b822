#ifndef MONORD_ORDERINGS_HPP
#define MONORD_ORDERINGS_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "monord/ideal.hpp"
#include "monord/monom.hpp"
#include "monord/ordinal.hpp"

namespace monord {

/// Why a comparison came out the way it did.
struct CompareTrace {
  std::strong_ordering result = std::strong_ordering::equal;
  /// kb: position in the sorted generator sequences where the decision was
  /// made (first difference, or the length of the shorter sequence).
  std::optional<std::size_t> generator_index;
  /// triangle: slice indices j_m, j_{m-1}, ... followed down the recursion.
  std::vector<std::size_t> slice_path;
  /// mintype: whether the Hilbert-Samuel polynomials already decided.
  bool decided_by_polynomial = false;
};

/// Kleene-Brouwer comparison of the minimal generator sequences, each sorted
/// increasingly by `order`: a proper extension precedes, otherwise the first
/// difference decides. The zero ideal (empty sequence) is the maximum.
/// `order` must be degree-compatible (order type w); others are rejected.
std::strong_ordering kb_cmp(const MonomialIdeal& e, const MonomialIdeal& f,
                            const TermOrder& order = TermOrder::deglex());
CompareTrace kb_trace(const MonomialIdeal& e, const MonomialIdeal& f,
                      const TermOrder& order = TermOrder::deglex());

/// The recursive slice ordering. For m = 1, E precedes F iff E contains F.
/// For m > 1 the slice sequences (E_0, E_1, ...) are compared
/// lexicographically with the (m-1)-variable ordering.
std::strong_ordering triangle_cmp(const MonomialIdeal& e, const MonomialIdeal& f);
CompareTrace triangle_trace(const MonomialIdeal& e, const MonomialIdeal& f);

/// Hilbert-Samuel polynomials compared by eventual dominance (the same as
/// comparing their psi ordinals); ties broken by triangle_cmp.
std::strong_ordering min_type_cmp(const MonomialIdeal& e, const MonomialIdeal& f);
CompareTrace min_type_trace(const MonomialIdeal& e, const MonomialIdeal& f);

/// One of the three orderings, validated on construction.
class IdealOrder {
 public:
  enum class Kind { kb, triangle, min_type };

  static IdealOrder kb(TermOrder order = TermOrder::deglex());
  static IdealOrder triangle() { return IdealOrder(Kind::triangle, TermOrder::deglex()); }
  static IdealOrder min_type() { return IdealOrder(Kind::min_type, TermOrder::deglex()); }
  /// "kb", "triangle" or "mintype".
  static IdealOrder parse(const std::string& name, TermOrder order = TermOrder::deglex());

  Kind kind() const { return kind_; }
  const TermOrder& term_order() const { return order_; }
  std::string name() const;

  std::strong_ordering compare(const MonomialIdeal& e, const MonomialIdeal& f) const;
  CompareTrace trace(const MonomialIdeal& e, const MonomialIdeal& f) const;

 private:
  IdealOrder(Kind kind, TermOrder order) : kind_(kind), order_(std::move(order)) {}
  Kind kind_;
  TermOrder order_;
};

struct BoundsReport {
  std::size_t dim = 0;
  /// Height of the set of monomial ideals under reverse inclusion: w^m + 1.
  Ordinal height;
  /// Order type of the Kleene-Brouwer ordering: w^(w^(m-1)) + 1.
  Ordinal kb_order_type;
  /// Lower and upper bounds on the maximal order type.
  Ordinal type_lower;
  Ordinal type_upper;
  /// Order type of the slice ordering, known for m = 2 only.
  std::optional<Ordinal> triangle_order_type;
};

BoundsReport bounds_report(std::size_t m);

}  // namespace monord

#endif  // MONORD_ORDERINGS_HPP
