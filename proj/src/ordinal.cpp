#include "monord/ordinal.hpp"

#include <algorithm>
#include <cctype>

#include "monord/errors.hpp"

namespace monord {

Ordinal::Ordinal(const BigInt& n) {
  if (sgn(n) < 0) throw DomainError("ordinals are nonnegative");
  if (sgn(n) > 0) terms_.push_back(Term{Ordinal(), n});
}

Ordinal Ordinal::omega() { return omega_pow(Ordinal(1UL)); }

Ordinal Ordinal::from_terms(std::vector<Term> terms) {
  std::stable_sort(terms.begin(), terms.end(),
                   [](const Term& x, const Term& y) { return y.exponent < x.exponent; });
  Ordinal result;
  for (auto& t : terms) {
    if (sgn(t.coeff) < 0) throw DomainError("negative coefficient in Cantor normal form");
    if (sgn(t.coeff) == 0) continue;
    if (!result.terms_.empty() && result.terms_.back().exponent == t.exponent) {
      result.terms_.back().coeff += t.coeff;
    } else {
      result.terms_.push_back(std::move(t));
    }
  }
  return result;
}

bool Ordinal::is_finite() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().exponent.is_zero());
}

bool Ordinal::is_successor() const {
  return !terms_.empty() && terms_.back().exponent.is_zero();
}

bool Ordinal::is_limit() const { return !terms_.empty() && !is_successor(); }

BigInt Ordinal::finite_part() const { return is_successor() ? terms_.back().coeff : BigInt(0); }

std::optional<BigInt> Ordinal::to_natural() const {
  if (!is_finite()) return std::nullopt;
  return finite_part();
}

Ordinal Ordinal::predecessor() const {
  if (!is_successor()) throw DomainError("predecessor of a non-successor ordinal");
  Ordinal result = *this;
  result.terms_.back().coeff -= 1;
  if (sgn(result.terms_.back().coeff) == 0) result.terms_.pop_back();
  return result;
}

bool operator==(const Ordinal& a, const Ordinal& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].coeff != b.terms_[i].coeff) return false;
    if (!(a.terms_[i].exponent == b.terms_[i].exponent)) return false;
  }
  return true;
}

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
  const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& x = a.terms_[i];
    const auto& y = b.terms_[i];
    if (auto c = x.exponent <=> y.exponent; c != 0) return c;
    if (auto c = compare(x.coeff, y.coeff); c != 0) return c;
  }
  return a.terms_.size() <=> b.terms_.size();
}

std::strong_ordering cmp(const Ordinal& a, const Ordinal& b) { return a <=> b; }

Ordinal nat_sum(const Ordinal& a, const Ordinal& b) {
  std::vector<Ordinal::Term> terms = a.terms();
  terms.insert(terms.end(), b.terms().begin(), b.terms().end());
  return Ordinal::from_terms(std::move(terms));
}

Ordinal nat_prod(const Ordinal& a, const Ordinal& b) {
  std::vector<Ordinal::Term> terms;
  terms.reserve(a.terms().size() * b.terms().size());
  for (const auto& x : a.terms()) {
    for (const auto& y : b.terms()) {
      terms.push_back({nat_sum(x.exponent, y.exponent), x.coeff * y.coeff});
    }
  }
  return Ordinal::from_terms(std::move(terms));
}

Ordinal nat_pow(const Ordinal& a, unsigned long n) {
  Ordinal result(1UL);
  Ordinal base = a;
  while (n > 0) {
    if (n & 1UL) result = nat_prod(result, base);
    n >>= 1;
    if (n > 0) base = nat_prod(base, base);
  }
  return result;
}

Ordinal omega_pow(const Ordinal& exponent) {
  return Ordinal::from_terms({Ordinal::Term{exponent, BigInt(1)}});
}

Ordinal ot_decreasing_sequences(const Ordinal& alpha) {
  const Ordinal one(1UL);
  if (alpha.is_finite()) {
    if (alpha <= one) return alpha;
    return nat_sum(omega_pow(alpha.predecessor()), one);
  }
  if (alpha.is_limit()) return omega_pow(alpha);
  return nat_sum(omega_pow(alpha), one);
}

// ---------------------------------------------------------------------------
// Text form

namespace {

std::string format_exponent(const Ordinal& e) {
  if (e.is_finite() || e == Ordinal::omega()) return e.str();
  return "(" + e.str() + ")";
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Ordinal parse_all() {
    Ordinal result = parse_sum();
    skip_spaces();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return result;
  }

 private:
  Ordinal parse_sum() {
    std::vector<Ordinal::Term> terms;
    terms.push_back(parse_term());
    for (;;) {
      skip_spaces();
      if (!consume('+')) break;
      const std::size_t term_pos = pos_;
      auto term = parse_term();
      if (sgn(terms.back().coeff) == 0 || sgn(term.coeff) == 0) {
        pos_ = term_pos;
        fail("'0' may only appear as the whole ordinal");
      }
      if (!(term.exponent < terms.back().exponent)) {
        pos_ = term_pos;
        fail("terms must have strictly decreasing exponents");
      }
      terms.push_back(std::move(term));
    }
    return Ordinal::from_terms(std::move(terms));
  }

  Ordinal::Term parse_term() {
    skip_spaces();
    if (peek() == 'w') {
      ++pos_;
      Ordinal exponent(1UL);
      skip_spaces();
      if (consume('^')) exponent = parse_exponent();
      BigInt coeff(1);
      skip_spaces();
      if (consume('*')) {
        skip_spaces();
        const std::size_t at = pos_;
        coeff = parse_natural();
        if (sgn(coeff) == 0) {
          pos_ = at;
          fail("coefficient must be positive");
        }
      }
      return {exponent, coeff};
    }
    if (std::isdigit(static_cast<unsigned char>(peek()))) return {Ordinal(), parse_natural()};
    fail("expected 'w' or a natural number");
  }

  Ordinal parse_exponent() {
    skip_spaces();
    if (consume('(')) {
      Ordinal e = parse_sum();
      skip_spaces();
      if (!consume(')')) fail("expected ')'");
      return e;
    }
    if (peek() == 'w') {
      ++pos_;
      return Ordinal::omega();
    }
    if (std::isdigit(static_cast<unsigned char>(peek()))) return Ordinal(parse_natural());
    fail("expected exponent");
  }

  BigInt parse_natural() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return BigInt(std::string(text_.substr(start, pos_ - start)), 10);
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  bool consume(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void skip_spaces() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, 0, pos_ + 1); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string Ordinal::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += " + ";
    if (t.exponent.is_zero()) {
      out += to_string(t.coeff);
      continue;
    }
    out += "w";
    if (!(t.exponent == Ordinal(1UL))) out += "^" + format_exponent(t.exponent);
    if (t.coeff != 1) out += "*" + to_string(t.coeff);
  }
  return out;
}

Ordinal Ordinal::parse(std::string_view text) { return Parser(text).parse_all(); }

std::string format(const Ordinal& a) { return a.str(); }

Ordinal parse_ordinal(std::string_view text) { return Ordinal::parse(text); }

}  // namespace monord
