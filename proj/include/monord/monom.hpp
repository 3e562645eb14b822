#ifndef MONORD_MONOM_HPP
#define MONORD_MONOM_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace monord {

/// Exponent vector nu in N^m, i.e. the monomial X^nu. The ambient dimension
/// travels with the value; binary operations reject mismatched dimensions.
class ExpVec {
 public:
  using value_type = std::uint32_t;

  ExpVec() = default;
  explicit ExpVec(std::size_t dim) : e_(dim, 0) {}
  ExpVec(std::initializer_list<value_type> entries) : e_(entries) {}
  explicit ExpVec(std::vector<value_type> entries) : e_(std::move(entries)) {}

  static ExpVec unit(std::size_t dim, std::size_t i);

  std::size_t dim() const { return e_.size(); }
  std::uint64_t degree() const;
  /// 0-based indices i with nu_i > 0.
  std::vector<std::size_t> support() const;
  /// At most one nonzero entry (includes the origin).
  bool is_pure_power() const;
  bool is_zero() const;

  value_type operator[](std::size_t i) const { return e_[i]; }
  value_type& operator[](std::size_t i) { return e_[i]; }
  const std::vector<value_type>& entries() const { return e_; }
  auto begin() const { return e_.begin(); }
  auto end() const { return e_.end(); }

  /// Drops the zero entries: <nu> in N^{|supp nu|}.
  ExpVec compressed() const;
  /// Space-separated tuple, e.g. "2 0 1".
  std::string str() const;
  /// Monomial notation, e.g. "x1^2*x3"; the origin prints as "1".
  std::string monomial_str() const;

  /// Plain lexicographic order on the entries. Used for containers; it is
  /// not the divisibility order.
  friend auto operator<=>(const ExpVec&, const ExpVec&) = default;
  friend bool operator==(const ExpVec&, const ExpVec&) = default;

 private:
  std::vector<value_type> e_;
};

void require_same_dim(const ExpVec& a, const ExpVec& b);

ExpVec operator+(const ExpVec& a, const ExpVec& b);
/// Componentwise max (the lcm of the monomials).
ExpVec lcm(const ExpVec& a, const ExpVec& b);
/// Componentwise max(a - b, 0), the generator of (X^a) : X^b.
ExpVec colon(const ExpVec& a, const ExpVec& b);

/// mu | nu, i.e. mu_i <= nu_i for all i.
bool divides(const ExpVec& mu, const ExpVec& nu);

/// Parses "2 0 1" or "x1^2*x3" (1-based variable indices). `dim` fixes the
/// ambient dimension; `column` offsets reported error positions.
ExpVec parse_expvec(std::string_view text, std::size_t dim, std::size_t line = 0,
                    std::size_t column = 1);

/// A monomial term order: lex, degree-lex, or an integer weight matrix
/// compared lexicographically (nu <= mu iff A nu <=_lex A mu).
class TermOrder {
 public:
  enum class Kind { lex, deglex, matrix };

  static TermOrder lex() { return TermOrder(Kind::lex, {}); }
  static TermOrder deglex() { return TermOrder(Kind::deglex, {}); }
  /// Validates that the rows give a total order (rank m) in which every
  /// unit vector is positive. Throws DomainError otherwise.
  static TermOrder matrix(std::vector<std::vector<long>> rows);
  /// Whitespace-separated rows, one row per line, '#' comments.
  static TermOrder parse_matrix(std::string_view text);

  Kind kind() const { return kind_; }
  const std::vector<std::vector<long>>& rows() const { return rows_; }

  /// Order type omega: every monomial has finitely many predecessors.
  /// True for deglex and for matrices whose first row is strictly positive.
  bool degree_compatible() const;

  std::strong_ordering compare(const ExpVec& a, const ExpVec& b) const;

  std::string name() const;

 private:
  TermOrder(Kind kind, std::vector<std::vector<long>> rows) : kind_(kind), rows_(std::move(rows)) {}

  Kind kind_;
  std::vector<std::vector<long>> rows_;
};

std::strong_ordering term_cmp(const TermOrder& order, const ExpVec& a, const ExpVec& b);

/// Higman embedding u <=* v: a strictly increasing index map with
/// u_i | v_phi(i).
bool higman_leq(std::span<const ExpVec> u, std::span<const ExpVec> v);

/// A commutative word (finite multiset) over N^k. Letters are kept sorted so
/// equal multisets compare equal.
class CommWord {
 public:
  CommWord() = default;
  CommWord(std::size_t dim, std::vector<ExpVec> letters);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const std::vector<ExpVec>& letters() const { return letters_; }

  friend bool operator==(const CommWord&, const CommWord&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<ExpVec> letters_;
};

/// u <=<> v: an injection of the letters of u into those of v with each
/// letter dividing its image. Decided by maximum bipartite matching.
bool comm_leq(const CommWord& u, const CommWord& v);

/// Multiset ordering: after cancelling the common sub-multiset, every
/// remaining letter of u divides some remaining letter of v.
bool multiset_leq(const CommWord& u, const CommWord& v);

inline std::ostream& operator<<(std::ostream& os, const ExpVec& nu) { return os << "(" << nu.str() << ")"; }

}  // namespace monord

#endif  // MONORD_MONOM_HPP
