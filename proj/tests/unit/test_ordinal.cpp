#include <gtest/gtest.h>

#include "monord/errors.hpp"
#include "monord/ordinal.hpp"
#include "oracles.hpp"

using namespace monord;

namespace {

Ordinal O(const char* s) { return parse_ordinal(s); }
Ordinal N(unsigned long n) { return Ordinal(n); }

}  // namespace

TEST(Ordinal, ComparesCantorNormalForms) {
  EXPECT_EQ(cmp(N(0), N(0)), std::strong_ordering::equal);
  EXPECT_EQ(cmp(N(3), Ordinal::omega()), std::strong_ordering::less);
  EXPECT_EQ(cmp(O("w^2 + 1"), O("w^2 + w")), std::strong_ordering::less);
  EXPECT_LT(O("w^w"), O("w^(w+1)"));
  EXPECT_LT(O("w^3*100"), O("w^4"));
}

TEST(Ordinal, NaturalSum) {
  EXPECT_EQ(nat_sum(O("w^2*3 + 1"), N(0)), O("w^2*3 + 1"));
  EXPECT_EQ(nat_sum(N(1), Ordinal::omega()), O("w + 1"));
  EXPECT_EQ(nat_sum(O("w + 1"), O("w + 2")), O("w*2 + 3"));
  EXPECT_EQ(nat_sum(O("w^w + 1"), O("w^2")), O("w^w + w^2 + 1"));
}

TEST(Ordinal, NaturalProduct) {
  EXPECT_EQ(nat_prod(O("w^2 + 5"), N(1)), O("w^2 + 5"));
  EXPECT_EQ(nat_prod(Ordinal::omega(), Ordinal::omega()), O("w^2"));
  EXPECT_EQ(nat_prod(O("w + 1"), O("w + 1")), O("w^2 + w*2 + 1"));
  EXPECT_EQ(nat_prod(O("w^w"), O("w")), O("w^(w + 1)"));
  EXPECT_EQ(nat_prod(N(0), O("w^w")), N(0));
}

TEST(Ordinal, NaturalPower) {
  EXPECT_EQ(nat_pow(O("w + 1"), 0), N(1));
  EXPECT_EQ(nat_pow(O("w + 1"), 1), O("w + 1"));
  EXPECT_EQ(nat_pow(O("w + 1"), 2), O("w^2 + w*2 + 1"));
  EXPECT_EQ(nat_pow(O("w + 1"), 3), O("w^3 + w^2*3 + w*3 + 1"));
}

TEST(Ordinal, OmegaPower) {
  EXPECT_EQ(omega_pow(N(0)), N(1));
  EXPECT_EQ(omega_pow(N(1)), Ordinal::omega());
  EXPECT_EQ(omega_pow(Ordinal::omega()), O("w^w"));
}

TEST(Ordinal, DecreasingSequenceOrderType) {
  EXPECT_EQ(ot_decreasing_sequences(N(0)), N(0));
  EXPECT_EQ(ot_decreasing_sequences(N(1)), N(1));
  EXPECT_EQ(ot_decreasing_sequences(N(2)), O("w + 1"));
  EXPECT_EQ(ot_decreasing_sequences(N(3)), O("w^2 + 1"));
  EXPECT_EQ(ot_decreasing_sequences(Ordinal::omega()), O("w^w"));
  EXPECT_EQ(ot_decreasing_sequences(O("w + 1")), O("w^(w + 1) + 1"));
}

TEST(Ordinal, FormatAndParseRoundTrip) {
  EXPECT_EQ(format(N(0)), "0");
  EXPECT_EQ(format(O("w^2*3 + w + 5")), "w^2*3 + w + 5");
  EXPECT_EQ(O("w^(w)"), O("w^w"));
  EXPECT_EQ(format(O("w^(w^2 + w*2 + 1)")), "w^(w^2 + w*2 + 1)");
  oracle::Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    const auto a = oracle::random_ordinal(rng);
    EXPECT_EQ(parse_ordinal(format(a)), a) << format(a);
  }
}

TEST(Ordinal, ParseErrorsCarryColumns) {
  try {
    parse_ordinal("w + w^2");
    FAIL() << "non-decreasing terms accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 0u);
    EXPECT_GT(e.column(), 1u);
  }
  EXPECT_THROW(parse_ordinal("w^"), ParseError);
  EXPECT_THROW(parse_ordinal("w*0"), ParseError);
  EXPECT_THROW(parse_ordinal("x"), ParseError);
  EXPECT_THROW(parse_ordinal(""), ParseError);
}

TEST(Ordinal, Classification) {
  EXPECT_TRUE(O("w*2").is_limit());
  EXPECT_TRUE(O("w + 3").is_successor());
  EXPECT_EQ(O("w + 3").predecessor(), O("w + 2"));
  EXPECT_THROW(O("w").predecessor(), DomainError);
  EXPECT_EQ(O("17").to_natural(), BigInt(17));
  EXPECT_FALSE(O("w").to_natural().has_value());
}

TEST(OrdinalProperty, NaturalOperationsOnNaturalsAgreeWithArithmetic) {
  for (unsigned long a = 0; a <= 50; ++a) {
    for (unsigned long b = 0; b <= 50; ++b) {
      ASSERT_EQ(nat_sum(N(a), N(b)), N(a + b));
      ASSERT_EQ(nat_prod(N(a), N(b)), N(a * b));
    }
  }
}

TEST(OrdinalProperty, CommutativeAssociativeDistributive) {
  oracle::Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    const auto a = oracle::random_ordinal(rng);
    const auto b = oracle::random_ordinal(rng);
    const auto c = oracle::random_ordinal(rng);
    ASSERT_EQ(nat_sum(a, b), nat_sum(b, a));
    ASSERT_EQ(nat_prod(a, b), nat_prod(b, a));
    ASSERT_EQ(nat_sum(nat_sum(a, b), c), nat_sum(a, nat_sum(b, c)));
    ASSERT_EQ(nat_prod(nat_prod(a, b), c), nat_prod(a, nat_prod(b, c)));
    ASSERT_EQ(nat_prod(a, nat_sum(b, c)), nat_sum(nat_prod(a, b), nat_prod(a, c)));
  }
}

TEST(OrdinalProperty, StrictMonotonicityAndCancellation) {
  oracle::Rng rng(12);
  for (int i = 0; i < 300; ++i) {
    const auto a = oracle::random_ordinal(rng);
    const auto b = oracle::random_ordinal(rng);
    const auto c = oracle::random_ordinal(rng);
    ASSERT_EQ(cmp(nat_sum(a, c), nat_sum(b, c)), cmp(a, b));
    if (!c.is_zero()) {
      ASSERT_EQ(cmp(nat_prod(a, c), nat_prod(b, c)), cmp(a, b));
    }
  }
}
