#ifndef MONORD_CHAINS_HPP
#define MONORD_CHAINS_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monord/bigint.hpp"
#include "monord/ideal.hpp"
#include "monord/monom.hpp"

namespace monord {

/// A degree bound f: N -> N. Every constructor monotonizes, so the stored
/// function is g(i) = max{f(0), ..., f(i)}.
///
/// Shifts j -> f(j + offset) + add are folded into affine and table bounds,
/// which keeps key() canonical for memoization.
class BoundFn {
 public:
  /// i -> p + i*q. A negative slope monotonizes to the constant p.
  static BoundFn affine(const BigInt& p, const BigInt& q);
  static BoundFn constant(const BigInt& c) { return affine(c, BigInt(0)); }
  /// values[0], values[1], ..., then `tail` forever.
  static BoundFn table(std::vector<BigInt> values, const BigInt& tail);
  /// Arbitrary function; `name` identifies it in memo keys.
  static BoundFn closure(std::function<BigInt(std::uint64_t)> fn, std::string name);
  /// s -> h_m(f(s)).
  static BoundFn h_composed(std::size_t m, const BoundFn& inner);

  BigInt operator()(const BigInt& i) const;
  BigInt operator()(std::uint64_t i) const { return (*this)(BigInt(static_cast<unsigned long>(i))); }

  /// j -> f(j + offset) + add. The result must stay nonnegative; callers
  /// only shift by amounts that keep it so.
  BoundFn shifted(const BigInt& offset, const BigInt& add) const;

  std::string key() const;

  struct Node;

 private:
  BoundFn(std::shared_ptr<const Node> node, BigInt offset, BigInt add)
      : node_(std::move(node)), offset_(std::move(offset)), add_(std::move(add)) {}

  std::shared_ptr<const Node> node_;
  BigInt offset_ = 0;
  BigInt add_ = 0;
};

/// Step budget for the recursions below (number of recursion frames).
struct ChainBudget {
  std::uint64_t steps = 10'000'000;
};

/// Maximal length of a lex-decreasing sequence nu_0 > nu_1 > ... in N^m with
/// |nu_i| <= f(i). Throws BudgetExceeded when the recursion runs out of
/// steps.
BigInt ell(std::size_t m, const BoundFn& f, ChainBudget budget = {});

/// A maximal f-bounded lex-decreasing sequence, truncated to `cap` terms.
std::vector<ExpVec> extremal_sequence(std::size_t m, const BoundFn& f, std::size_t cap,
                                      ChainBudget budget = {});

/// h_m(s) = s + C(s - 1 + m, m).
BigInt h_m(const BigInt& s, std::size_t m);

/// t_m(f) = ell(m, h_m o f).
BigInt t_m(const BoundFn& f, std::size_t m, ChainBudget budget = {});

struct BadVerdict {
  bool bad = true;
  /// Earliest (i, j), i < j, with E_i containing E_j, ordered by j then i.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

BadVerdict is_bad_sequence(const std::vector<MonomialIdeal>& ideals);

struct BadSearchResult {
  std::vector<MonomialIdeal> sequence;
  /// The search space was exhausted, so `sequence` is a longest one.
  bool exhaustive = false;
  std::uint64_t nodes = 0;
};

/// Depth-first search for a longest bad sequence E_0, E_1, ... in m <= 3
/// variables with E_i generated in degrees <= f(i). At most `cap` candidate
/// ideals are tried.
BadSearchResult max_bad_degree_growth(std::size_t m, const BoundFn& f, std::uint64_t cap);

}  // namespace monord

#endif  // MONORD_CHAINS_HPP
