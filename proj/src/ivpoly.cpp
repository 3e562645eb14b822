#include "monord/ivpoly.hpp"

#include <algorithm>

#include "monord/errors.hpp"

namespace monord {

IntegerValuedPoly::IntegerValuedPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

IntegerValuedPoly IntegerValuedPoly::constant(const BigInt& c) {
  return IntegerValuedPoly(std::vector<BigInt>{c});
}

IntegerValuedPoly IntegerValuedPoly::basis(std::size_t i) {
  std::vector<BigInt> coeffs(i + 1);
  coeffs[i] = 1;
  return IntegerValuedPoly(std::move(coeffs));
}

void IntegerValuedPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

BigInt IntegerValuedPoly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : BigInt(0);
}

IntegerValuedPoly IntegerValuedPoly::from_samples(const BigInt& t0,
                                                  std::span<const BigInt> values) {
  const std::size_t n = values.size();
  if (n == 0) return {};

  // Newton form around t0: p(t0 + x) = sum_k diff[k] * C(x, k).
  std::vector<BigInt> diff(values.begin(), values.end());
  for (std::size_t k = 1; k < n; ++k) {
    for (std::size_t i = n - 1; i >= k; --i) diff[i] -= diff[i - 1];
  }
  auto newton = [&](const BigInt& t) {
    const BigInt x = t - t0;
    BigInt acc = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (sgn(diff[k]) != 0) acc += diff[k] * binomial(x, k);
    }
    return acc;
  };

  // Since Delta C(T+i, i) = C(T+i-1, i-1) for the backward difference and
  // C(T+i, i) vanishes at T = -1 for i >= 1, the i-th coordinate is
  // (Delta^i p)(-1).
  std::vector<BigInt> tail(n);  // tail[j] = p(-1 - j)
  for (std::size_t j = 0; j < n; ++j) tail[j] = newton(BigInt(-1) - BigInt(static_cast<unsigned long>(j)));
  std::vector<BigInt> coeffs(n);
  for (std::size_t k = 0; k < n; ++k) {
    BigInt acc = 0;
    for (std::size_t j = 0; j <= k; ++j) {
      BigInt term = binomial(BigInt(static_cast<unsigned long>(k)), j) * tail[j];
      if (j % 2 == 0) acc += term; else acc -= term;
    }
    coeffs[k] = acc;
  }
  return IntegerValuedPoly(std::move(coeffs));
}

BigInt IntegerValuedPoly::operator()(const BigInt& s) const {
  BigInt acc = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) != 0) acc += coeffs_[i] * binomial(s + static_cast<unsigned long>(i), i);
  }
  return acc;
}

IntegerValuedPoly IntegerValuedPoly::shifted(const BigInt& k) const {
  if (is_zero() || sgn(k) == 0) return *this;
  // Sample-and-rebuild; the degree is unchanged by a shift.
  std::vector<BigInt> values;
  values.reserve(coeffs_.size());
  for (std::size_t j = 0; j < coeffs_.size(); ++j) values.push_back((*this)(k + static_cast<unsigned long>(j)));
  return from_samples(BigInt(0), values);
}

IntegerValuedPoly& IntegerValuedPoly::operator+=(const IntegerValuedPoly& q) {
  if (coeffs_.size() < q.coeffs_.size()) coeffs_.resize(q.coeffs_.size());
  for (std::size_t i = 0; i < q.coeffs_.size(); ++i) coeffs_[i] += q.coeffs_[i];
  trim();
  return *this;
}

IntegerValuedPoly& IntegerValuedPoly::operator-=(const IntegerValuedPoly& q) {
  if (coeffs_.size() < q.coeffs_.size()) coeffs_.resize(q.coeffs_.size());
  for (std::size_t i = 0; i < q.coeffs_.size(); ++i) coeffs_[i] -= q.coeffs_[i];
  trim();
  return *this;
}

IntegerValuedPoly& IntegerValuedPoly::operator*=(const BigInt& k) {
  for (auto& c : coeffs_) c *= k;
  trim();
  return *this;
}

std::string IntegerValuedPoly::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t idx = coeffs_.size(); idx-- > 0;) {
    const BigInt& c = coeffs_[idx];
    if (sgn(c) == 0) continue;
    BigInt magnitude = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    if (idx == 0) {
      out += to_string(magnitude);
      continue;
    }
    if (magnitude != 1) out += to_string(magnitude) + "*";
    out += "C(T+" + std::to_string(idx) + "," + std::to_string(idx) + ")";
  }
  return out;
}

IntegerValuedPoly shift(const IntegerValuedPoly& p, const BigInt& k) { return p.shifted(k); }

BigInt evaluate(const IntegerValuedPoly& p, const BigInt& s) { return p(s); }

std::strong_ordering dominance_cmp(const IntegerValuedPoly& p, const IntegerValuedPoly& q) {
  const std::size_t n = std::max(p.coeffs().size(), q.coeffs().size());
  for (std::size_t i = n; i-- > 0;) {
    if (auto c = compare(p.coeff(i), q.coeff(i)); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// Macaulay representations

BigInt MacaulayRep::value() const {
  BigInt acc = 0;
  for (std::size_t k = 0; k < coeffs.size(); ++k) acc += binomial(coeffs[k], d - k);
  return acc;
}

namespace {

// Largest x >= i - 1 with C(x, i) <= a (requires a >= 0, i >= 1).
BigInt largest_binomial_below(const BigInt& a, unsigned long i) {
  BigInt lo = i - 1;  // C(i-1, i) = 0 <= a
  BigInt step = 1;
  BigInt hi = lo + step;
  while (binomial(hi, i) <= a) {
    lo = hi;
    step *= 2;
    hi = lo + step;
  }
  // invariant: C(lo, i) <= a < C(hi, i)
  while (hi - lo > 1) {
    BigInt mid = (lo + hi) / 2;
    if (binomial(mid, i) <= a) lo = mid; else hi = mid;
  }
  return lo;
}

}  // namespace

MacaulayRep macaulay_rep(const BigInt& a, unsigned d) {
  if (d == 0) throw DomainError("macaulay_rep: d must be positive");
  if (sgn(a) <= 0) throw DomainError("macaulay_rep: a must be positive");
  MacaulayRep rep;
  rep.d = d;
  BigInt rest = a;
  for (unsigned i = d; i >= 1; --i) {
    BigInt x = largest_binomial_below(rest, i);
    rest -= binomial(x, i);
    rep.coeffs.push_back(std::move(x));
  }
  return rep;
}

BigInt macaulay_next(const BigInt& a, unsigned d) {
  if (d == 0) throw DomainError("macaulay_next: d must be positive");
  if (sgn(a) < 0) throw DomainError("macaulay_next: a must be nonnegative");
  if (sgn(a) == 0) return 0;
  const MacaulayRep rep = macaulay_rep(a, d);
  BigInt acc = 0;
  for (std::size_t k = 0; k < rep.coeffs.size(); ++k) {
    const unsigned long i = d - k;
    acc += binomial(rep.coeffs[k] + 1, i + 1);
  }
  return acc;
}

OSequenceCheck is_osequence(std::span<const BigInt> values, unsigned m) {
  OSequenceCheck result;
  auto fail = [&](OSequenceCheck::Violation kind, std::size_t n) {
    result.ok = false;
    result.kind = kind;
    result.index = n;
    return result;
  };
  if (values.empty()) throw DomainError("is_osequence: empty sequence");
  if (m == 0) throw DomainError("is_osequence: m must be positive");
  for (const auto& v : values) {
    if (sgn(v) < 0) throw DomainError("is_osequence: values must be natural numbers");
  }
  if (values[0] != 1) return fail(OSequenceCheck::Violation::initial_value, 0);
  if (values.size() < 2) return result;
  result.full_first_degree = values[1] == m;
  if (values[1] > m) return fail(OSequenceCheck::Violation::first_degree, 1);
  for (std::size_t n = 1; n + 1 < values.size(); ++n) {
    if (values[n + 1] > macaulay_next(values[n], static_cast<unsigned>(n))) {
      return fail(OSequenceCheck::Violation::growth, n);
    }
  }
  return result;
}

}  // namespace monord
