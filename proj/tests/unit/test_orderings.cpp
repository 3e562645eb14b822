#include <gtest/gtest.h>

#include <algorithm>
#include <functional>

#include "monord/errors.hpp"
#include "monord/hilbert.hpp"
#include "monord/orderings.hpp"
#include "oracles.hpp"

using namespace monord;

namespace {

MonomialIdeal I(std::size_t m, std::vector<ExpVec> gens) { return normalize(m, std::move(gens)); }

using Cmp = std::function<std::strong_ordering(const MonomialIdeal&, const MonomialIdeal&)>;

// Slice j of E computed from membership in the box [0, side]^(m-1).
MonomialIdeal slice_by_membership(const MonomialIdeal& e, std::uint32_t j, std::uint32_t side) {
  std::vector<oracle::Point> in;
  for (auto p : oracle::box(e.dim() - 1, side)) {
    auto q = p;
    q.push_back(j);
    if (oracle::member(e, q)) in.push_back(p);
  }
  return oracle::make_ideal(e.dim() - 1, in);
}

// Slice-lex comparison evaluated on every slice up to `side`.
std::strong_ordering triangle_oracle(const MonomialIdeal& e, const MonomialIdeal& f, std::uint32_t side) {
  if (e.dim() == 1) {
    if (e == f) return std::strong_ordering::equal;
    return superset(e, f) ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  for (std::uint32_t j = 0; j <= side; ++j) {
    const auto c = triangle_oracle(slice_by_membership(e, j, side), slice_by_membership(f, j, side), side);
    if (c != 0) return c;
  }
  return std::strong_ordering::equal;
}

// Checks that cmp is a strict total order on `universe` that extends
// strict reverse inclusion. Returns the number of violations.
std::size_t order_violations(const std::vector<MonomialIdeal>& universe, const Cmp& cmp) {
  const std::size_t n = universe.size();
  std::vector<std::vector<std::strong_ordering>> table(n, std::vector<std::strong_ordering>(n, std::strong_ordering::equal));
  std::size_t bad = 0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      table[a][b] = cmp(universe[a], universe[b]);
      if ((table[a][b] == 0) != (a == b)) ++bad;
      if (a != b && superset(universe[a], universe[b]) && table[a][b] != std::strong_ordering::less) ++bad;
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (table[a][b] != (0 <=> table[b][a])) ++bad;
    }
  }
  // A strict order with all pairs comparable is transitive iff sorting by it
  // leaves every pair in increasing position.
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return table[a][b] < 0; });
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i + 1; k < n; ++k) {
      if (table[idx[i]][idx[k]] != std::strong_ordering::less) ++bad;
    }
  }
  return bad;
}

}  // namespace

TEST(Kb, Examples) {
  const auto e = I(2, {ExpVec{1, 0}, ExpVec{0, 2}});
  EXPECT_EQ(kb_cmp(e, e), std::strong_ordering::equal);
  EXPECT_EQ(kb_cmp(I(1, {ExpVec{1}}), I(1, {ExpVec{2}})), std::strong_ordering::less);
  // (0,1) <deglex (1,0), so the ideal generated by (0,1) comes first.
  EXPECT_EQ(kb_cmp(I(2, {ExpVec{0, 1}}), I(2, {ExpVec{1, 0}})), std::strong_ordering::less);
  EXPECT_EQ(kb_cmp(I(2, {ExpVec{1, 0}}), I(2, {ExpVec{0, 1}})), std::strong_ordering::greater);
  EXPECT_EQ(kb_cmp(MonomialIdeal::unit(2), e), std::strong_ordering::less);
  EXPECT_EQ(kb_cmp(e, MonomialIdeal::zero(2)), std::strong_ordering::less);
  EXPECT_EQ(kb_cmp(MonomialIdeal::zero(2), MonomialIdeal::zero(2)), std::strong_ordering::equal);
}

TEST(Kb, TraceAndValidation) {
  const auto t = kb_trace(I(2, {ExpVec{1, 0}, ExpVec{0, 3}}), I(2, {ExpVec{1, 0}, ExpVec{0, 2}}));
  EXPECT_EQ(t.result, std::strong_ordering::greater);
  ASSERT_TRUE(t.generator_index);
  EXPECT_EQ(*t.generator_index, 1u);
  EXPECT_THROW(kb_cmp(I(2, {ExpVec{1, 0}}), I(2, {ExpVec{0, 1}}), TermOrder::lex()), DomainError);
  EXPECT_THROW(IdealOrder::kb(TermOrder::lex()), DomainError);
  EXPECT_NO_THROW(IdealOrder::kb(TermOrder::matrix({{1, 1}, {1, 0}})));
  EXPECT_THROW(kb_cmp(MonomialIdeal::zero(1), MonomialIdeal::zero(2)), DimensionMismatch);
}

TEST(Triangle, Examples) {
  EXPECT_EQ(triangle_cmp(I(1, {ExpVec{2}}), I(1, {ExpVec{5}})), std::strong_ordering::less);
  EXPECT_EQ(triangle_cmp(MonomialIdeal::zero(1), I(1, {ExpVec{5}})), std::strong_ordering::greater);
  const auto e = I(2, {ExpVec{1, 1}});
  const auto f = I(2, {ExpVec{2, 0}});
  EXPECT_EQ(triangle_cmp(e, e), std::strong_ordering::equal);
  // Slice 0: zero ideal against (x^2), and the zero ideal is largest.
  EXPECT_EQ(triangle_cmp(e, f), std::strong_ordering::greater);
  EXPECT_EQ(triangle_cmp(e, f), triangle_oracle(e, f, 4));
  const auto t = triangle_trace(e, f);
  EXPECT_EQ(t.slice_path.front(), 0u);
  EXPECT_THROW(triangle_cmp(MonomialIdeal::zero(1), MonomialIdeal::zero(2)), DimensionMismatch);
}

TEST(TriangleProperty, MatchesSliceOracle) {
  const auto universe = oracle::all_ideals_in_box(2, 2);
  for (const auto& e : universe) {
    for (const auto& f : universe) ASSERT_EQ(triangle_cmp(e, f), triangle_oracle(e, f, 3));
  }
  oracle::Rng rng(41);
  for (int t = 0; t < 150; ++t) {
    const auto e = oracle::random_ideal(rng, 3, 3, 4);
    const auto f = oracle::random_ideal(rng, 3, 3, 4);
    ASSERT_EQ(triangle_cmp(e, f), triangle_oracle(e, f, 4)) << format_ideal(e) << format_ideal(f);
  }
}

TEST(MinType, Examples) {
  const auto big = I(2, {ExpVec{1, 0}});
  const auto small = I(2, {ExpVec{2, 0}, ExpVec{1, 1}});
  EXPECT_EQ(min_type_cmp(big, small), std::strong_ordering::less);
  EXPECT_EQ(min_type_cmp(small, small), std::strong_ordering::equal);
  // Equal colength: the polynomial ties and the slice ordering decides.
  const auto a = I(2, {ExpVec{2, 0}, ExpVec{0, 1}});
  const auto b = I(2, {ExpVec{1, 0}, ExpVec{0, 2}});
  const auto t = min_type_trace(a, b);
  EXPECT_FALSE(t.decided_by_polynomial);
  EXPECT_EQ(t.result, triangle_cmp(a, b));
  EXPECT_NE(t.result, std::strong_ordering::equal);
  EXPECT_TRUE(min_type_trace(big, small).decided_by_polynomial);
}

TEST(MinTypeProperty, FirstKeyIsDominance) {
  oracle::Rng rng(42);
  for (int t = 0; t < 200; ++t) {
    const std::size_t m = 1 + t % 3;
    const auto e = oracle::random_ideal(rng, m, 3, 4);
    const auto f = oracle::random_ideal(rng, m, 3, 4);
    const auto d = dominance_cmp(hilbert_samuel_poly(e).poly, hilbert_samuel_poly(f).poly);
    const auto c = min_type_cmp(e, f);
    if (d != 0) {
      ASSERT_EQ(c, d);
    } else {
      ASSERT_EQ(c, triangle_cmp(e, f));
    }
  }
}

TEST(OrderProperty, TotalOrdersExtendingReverseInclusion) {
  const auto universe = oracle::all_ideals_in_box(2, 3);
  EXPECT_EQ(universe.size(), 70u);
  EXPECT_EQ(order_violations(universe, [](const auto& e, const auto& f) { return kb_cmp(e, f); }), 0u);
  EXPECT_EQ(order_violations(universe, triangle_cmp), 0u);
  EXPECT_EQ(order_violations(universe, min_type_cmp), 0u);
  const auto cube = oracle::all_ideals_in_box(3, 1);
  EXPECT_EQ(order_violations(cube, [](const auto& e, const auto& f) { return kb_cmp(e, f); }), 0u);
  EXPECT_EQ(order_violations(cube, triangle_cmp), 0u);
  EXPECT_EQ(order_violations(cube, min_type_cmp), 0u);
}

TEST(KbProperty, LexSegmentLayers) {
  // For a lex-segment E with E <_KB F, the first degree layer where E and F
  // differ has E strictly larger.
  const auto universe = oracle::all_ideals_in_box(2, 3);
  std::size_t checked = 0;
  for (const auto& e : universe) {
    if (e.is_zero() || !is_lex_segment(e, 8)) continue;
    for (const auto& f : universe) {
      if (kb_cmp(e, f) != std::strong_ordering::less) continue;
      ++checked;
      bool decided = false;
      for (std::uint64_t d = 0; d <= 8 && !decided; ++d) {
        std::vector<ExpVec> le;
        std::vector<ExpVec> lf;
        for (const auto& nu : monomials_of_degree(2, d)) {
          if (contains_point(e, nu)) le.push_back(nu);
          if (contains_point(f, nu)) lf.push_back(nu);
        }
        if (le == lf) continue;
        decided = true;
        for (const auto& nu : lf) ASSERT_TRUE(contains_point(e, nu)) << format_ideal(e) << format_ideal(f);
      }
      ASSERT_TRUE(decided);
    }
  }
  EXPECT_GT(checked, 50u);
}

TEST(IdealOrder, ParseAndDispatch) {
  EXPECT_EQ(IdealOrder::parse("kb").kind(), IdealOrder::Kind::kb);
  EXPECT_EQ(IdealOrder::parse("triangle").kind(), IdealOrder::Kind::triangle);
  EXPECT_EQ(IdealOrder::parse("mintype").kind(), IdealOrder::Kind::min_type);
  EXPECT_THROW(IdealOrder::parse("lexicographic"), DomainError);
  const auto e = I(2, {ExpVec{1, 1}});
  const auto f = I(2, {ExpVec{2, 0}});
  EXPECT_EQ(IdealOrder::triangle().compare(e, f), triangle_cmp(e, f));
  EXPECT_EQ(IdealOrder::kb().compare(e, f), kb_cmp(e, f));
  EXPECT_EQ(IdealOrder::min_type().compare(e, f), min_type_cmp(e, f));
}

TEST(Bounds, Report) {
  const auto w = Ordinal::omega();
  const Ordinal one(1UL);
  for (std::size_t m = 1; m <= 4; ++m) {
    const Ordinal mm(static_cast<unsigned long>(m));
    const auto r = bounds_report(m);
    EXPECT_EQ(r.height, nat_sum(omega_pow(mm), one));
    EXPECT_EQ(r.kb_order_type, nat_sum(omega_pow(omega_pow(Ordinal(static_cast<unsigned long>(m - 1)))), one));
    EXPECT_EQ(r.type_lower, r.kb_order_type);
    EXPECT_EQ(r.type_upper, omega_pow(nat_pow(nat_sum(w, one), m)));
    EXPECT_EQ(r.triangle_order_type.has_value(), m == 2);
  }
  EXPECT_EQ(format(bounds_report(1).kb_order_type), "w + 1");
  EXPECT_EQ(format(bounds_report(2).type_upper), "w^(w^2 + w*2 + 1)");
  EXPECT_EQ(format(bounds_report(3).height), "w^3 + 1");
  EXPECT_EQ(format(*bounds_report(2).triangle_order_type), "w^(w + 1) + 1");
  EXPECT_THROW(bounds_report(0), DomainError);
}
