#include "monord/hilbert.hpp"

#include <algorithm>
#include <cassert>

#include "monord/errors.hpp"

namespace monord {

HilbertCounter::HilbertCounter(const MonomialIdeal& e, const HilbertOptions& opts)
    : dim_(e.dim()) {
  // Union of the cones over the generators: adding cone(g) contributes +cone(g)
  // minus the overlap with every signed term seen so far.
  std::map<ExpVec, BigInt> terms;
  for (const auto& g : e.generators()) {
    std::vector<std::pair<ExpVec, BigInt>> update;
    update.reserve(terms.size() + 1);
    update.emplace_back(g, BigInt(1));
    for (const auto& [l, c] : terms) update.emplace_back(lcm(l, g), -c);
    for (auto& [l, c] : update) {
      auto it = terms.find(l);
      if (it == terms.end()) {
        terms.emplace(std::move(l), std::move(c));
      } else {
        it->second += c;
        if (sgn(it->second) == 0) terms.erase(it);
      }
    }
    if (terms.size() > opts.max_lcm_terms) {
      throw ResourceError("inclusion-exclusion expansion exceeds " +
                          std::to_string(opts.max_lcm_terms) +
                          " lcm terms; use the interpolation fallback");
    }
  }
  for (const auto& [l, c] : terms) weights_[l.degree()] += c;
  for (auto it = weights_.begin(); it != weights_.end();) {
    it = sgn(it->second) == 0 ? weights_.erase(it) : std::next(it);
  }
  if (!e.generators().empty()) {
    ExpVec all = e.generators().front();
    for (const auto& g : e.generators()) all = lcm(all, g);
    threshold_ = all.degree();
  }
}

BigInt HilbertCounter::hilbert(std::uint64_t n) const {
  const unsigned long m = dim_;
  BigInt total = binomial(BigInt(static_cast<unsigned long>(n + m - 1)), m - 1);
  for (const auto& [k, w] : weights_) {
    if (k > n) break;
    total -= w * binomial(BigInt(static_cast<unsigned long>(n - k + m - 1)), m - 1);
  }
  return total;
}

BigInt HilbertCounter::samuel(std::uint64_t s) const {
  const unsigned long m = dim_;
  BigInt total = binomial(BigInt(static_cast<unsigned long>(s + m)), m);
  for (const auto& [k, w] : weights_) {
    if (k > s) break;
    total -= w * binomial(BigInt(static_cast<unsigned long>(s - k + m)), m);
  }
  return total;
}

IntegerValuedPoly HilbertCounter::samuel_poly() const {
  // C(T+m, m) - sum_k w_k C(T-k+m, m) as polynomials (no cut-off), sampled
  // at T = 0..m and rebuilt.
  const unsigned long m = dim_;
  std::vector<BigInt> values;
  for (unsigned long t = 0; t <= m; ++t) {
    BigInt v = binomial(BigInt(t + m), m);
    for (const auto& [k, w] : weights_) {
      v -= w * binomial(BigInt(t + m) - BigInt(static_cast<unsigned long>(k)), m);
    }
    values.push_back(std::move(v));
  }
  return IntegerValuedPoly::from_samples(BigInt(0), values);
}

BigInt hilbert_fn(const MonomialIdeal& e, std::uint64_t n) { return HilbertCounter(e).hilbert(n); }

BigInt hilbert_samuel_fn(const MonomialIdeal& e, std::uint64_t s) {
  return HilbertCounter(e).samuel(s);
}

SamuelPoly hilbert_samuel_poly(const MonomialIdeal& e, const HilbertOptions& opts) {
  HilbertCounter counter(e, opts);
  return {counter.samuel_poly(), counter.threshold()};
}

SamuelPoly hilbert_samuel_poly_interpolated(const MonomialIdeal& e) {
  std::uint64_t threshold = 0;
  if (!e.generators().empty()) {
    ExpVec all = e.generators().front();
    for (const auto& g : e.generators()) all = lcm(all, g);
    threshold = all.degree();
  }
  const std::uint64_t top = threshold + e.dim();
  std::vector<BigInt> per_degree(top + 1);
  for (std::uint64_t n = 0; n <= top; ++n) {
    for (const auto& nu : monomials_of_degree(e.dim(), n)) {
      if (!e.contains(nu)) per_degree[n] += 1;
    }
  }
  std::vector<BigInt> values;
  BigInt running = 0;
  for (std::uint64_t n = 0; n <= top; ++n) {
    running += per_degree[n];
    if (n >= threshold) values.push_back(running);
  }
  return {IntegerValuedPoly::from_samples(BigInt(static_cast<unsigned long>(threshold)), values),
          threshold};
}

IntegerValuedPoly zero_ideal_samuel_poly(std::size_t m) { return IntegerValuedPoly::basis(m); }

// ---------------------------------------------------------------------------
// Minimizing coefficients and psi

std::vector<BigInt> MinimizingCoefficients::descending() const {
  return {by_power.rbegin(), by_power.rend()};
}

MinimizingCoefficients minimizing_coefficients(const IntegerValuedPoly& p, std::size_t m) {
  if (p.is_zero()) throw DomainError("minimizing_coefficients: p must be nonzero");
  if (p.degree() >= static_cast<int>(m)) {
    throw DomainError("minimizing_coefficients: deg p = " + std::to_string(p.degree()) +
                      " must be below m = " + std::to_string(m));
  }
  MinimizingCoefficients out;
  out.by_power.assign(m, BigInt(0));
  IntegerValuedPoly cur = p;
  for (;;) {
    const int d = cur.degree();
    if (d <= 0) {
      out.by_power[0] = cur.coeff(0);
      break;
    }
    const BigInt b = cur.leading();
    out.by_power[static_cast<std::size_t>(d)] = b;
    const auto next_basis = IntegerValuedPoly::basis(static_cast<std::size_t>(d) + 1);
    IntegerValuedPoly q = cur.shifted(b) - next_basis.shifted(b) + next_basis;
    assert(q.degree() < d);
    cur = std::move(q);
  }
  for (std::size_t i = m; i-- > 0;) {
    if (sgn(out.by_power[i]) < 0) {
      out.valid = false;
      out.first_negative = i;
      break;
    }
  }
  return out;
}

namespace {

MinimizingCoefficients require_valid(const IntegerValuedPoly& p, std::size_t m) {
  auto c = minimizing_coefficients(p, m);
  if (!c.valid) {
    throw DomainError("not a Hilbert-Samuel polynomial in " + std::to_string(m) +
                      " variables: c_" + std::to_string(*c.first_negative) + " = " +
                      to_string(c.by_power[*c.first_negative]) + " is negative");
  }
  return c;
}

}  // namespace

MonomialIdeal realizing_ideal(const IntegerValuedPoly& p, std::size_t m) {
  if (m == 0) throw DomainError("realizing_ideal needs m >= 1");
  if (p.is_zero()) return MonomialIdeal::unit(m);
  if (p == zero_ideal_samuel_poly(m)) return MonomialIdeal::zero(m);
  require_valid(p, m);
  const int d = p.degree();
  if (d < static_cast<int>(m) - 1) {
    // Adding the last variable to the generators leaves p unchanged.
    auto gens = cone(realizing_ideal(p, m - 1)).generators();
    gens.push_back(ExpVec::unit(m, m - 1));
    return normalize(m, std::move(gens));
  }
  const BigInt b = p.leading();
  if (!b.fits_uint_p()) throw ResourceError("leading coefficient " + to_string(b) + " is too large");
  const auto power = static_cast<ExpVec::value_type>(b.get_ui());
  if (m == 1) return normalize(1, {ExpVec{power}});
  const auto next_basis = IntegerValuedPoly::basis(m);
  const IntegerValuedPoly q = p.shifted(b) - next_basis.shifted(b) + next_basis;
  std::vector<ExpVec> gens;
  ExpVec top(m);
  top[m - 1] = power + 1;
  gens.push_back(top);
  const auto inner = realizing_ideal(q, m - 1);
  for (const auto& g : inner.generators()) {
    auto entries = g.entries();
    entries.push_back(power);
    gens.emplace_back(std::move(entries));
  }
  return normalize(m, std::move(gens));
}

Ordinal psi(const IntegerValuedPoly& p, std::size_t m) {
  if (p == zero_ideal_samuel_poly(m)) return omega_pow(Ordinal(static_cast<unsigned long>(m)));
  if (p.is_zero()) return Ordinal();
  const auto c = require_valid(p, m);
  std::vector<Ordinal::Term> terms;
  for (std::size_t i = 0; i < m; ++i) {
    terms.push_back({Ordinal(static_cast<unsigned long>(i)), c.by_power[i]});
  }
  return Ordinal::from_terms(std::move(terms));
}

std::vector<std::size_t> canonical_decomposition(const IntegerValuedPoly& p, std::size_t m) {
  if (p == zero_ideal_samuel_poly(m)) {
    throw DomainError("the zero ideal has no canonical decomposition");
  }
  if (p.is_zero()) return {};
  const auto c = require_valid(p, m);
  BigInt total = 0;
  for (const auto& x : c.by_power) total += x;
  if (total > BigInt(1UL << 26)) {
    throw ResourceError("canonical decomposition has " + to_string(total) + " terms");
  }
  std::vector<std::size_t> a_seq;
  for (std::size_t i = m; i-- > 0;) {
    a_seq.insert(a_seq.end(), c.by_power[i].get_ui(), i);
  }
  return a_seq;
}

IntegerValuedPoly polynomial_from_decomposition(const std::vector<std::size_t>& a_seq) {
  IntegerValuedPoly sum;
  for (std::size_t i = 0; i < a_seq.size(); ++i) {
    // C(T + a_i - (i-1), a_i) with 1-based i: shift C(T+a, a) by -i (0-based).
    sum += IntegerValuedPoly::basis(a_seq[i]).shifted(-BigInt(static_cast<unsigned long>(i)));
  }
  return sum;
}

BigInt phi(const IntegerValuedPoly& p, std::size_t m) {
  if (p == zero_ideal_samuel_poly(m)) throw DomainError("phi is undefined for the zero ideal");
  if (p.is_zero()) return 0;
  const auto c = require_valid(p, m);
  BigInt total = 0;
  for (const auto& x : c.by_power) total += x;
  return total;
}

// ---------------------------------------------------------------------------
// n0 and lex-segments

namespace {

// From this degree on H(n+1) = H(n)^<n> is guaranteed: H agrees with the
// Hilbert polynomial P = Delta p_E past the threshold, and P grows maximally
// from the length of its own canonical decomposition on (P is the
// Hilbert-Samuel polynomial of an ideal in m-1 variables).
std::uint64_t stabilization_certificate(const HilbertCounter& counter) {
  const IntegerValuedPoly p = counter.samuel_poly();
  std::vector<BigInt> shifted_down;
  for (std::size_t i = 1; i < p.coeffs().size(); ++i) shifted_down.push_back(p.coeffs()[i]);
  const IntegerValuedPoly hilbert_poly(std::move(shifted_down));
  std::uint64_t bound = counter.threshold() + 1;
  if (!hilbert_poly.is_zero()) {
    const std::size_t m = counter.dim();
    const BigInt len = phi(hilbert_poly, m - 1);
    if (!len.fits_ulong_p()) throw ResourceError("n0 certificate bound too large");
    bound = std::max<std::uint64_t>(bound, len.get_ui());
  }
  return bound;
}

}  // namespace

std::uint64_t n0(const MonomialIdeal& e, const HilbertOptions& opts) {
  if (!e.is_proper_nonzero()) throw DomainError("n0 requires a proper nonzero ideal");
  const HilbertCounter counter(e, opts);
  const std::uint64_t certificate = stabilization_certificate(counter);
  const std::uint64_t window =
      std::max(counter.threshold() + e.dim() + opts.n0_margin, certificate);
  if (window > opts.n0_max_window) {
    throw ResourceError("n0 search window " + std::to_string(window) + " exceeds the limit " +
                        std::to_string(opts.n0_max_window));
  }
  std::uint64_t result = 1;
  BigInt current = counter.hilbert(1);
  for (std::uint64_t n = 1; n <= window; ++n) {
    BigInt next = counter.hilbert(n + 1);
    if (next != macaulay_next(current, static_cast<unsigned>(n))) result = n + 1;
    current = std::move(next);
  }
  return result;
}

bool is_lex_segment(const MonomialIdeal& e, std::uint64_t max_degree) {
  for (std::uint64_t n = 0; n <= max_degree; ++n) {
    bool inside = false;
    for (const auto& nu : monomials_of_degree(e.dim(), n)) {
      const bool member = e.contains(nu);
      if (inside && !member) return false;
      inside = inside || member;
    }
  }
  return true;
}

MonomialIdeal lex_segment_ideal(const MonomialIdeal& e, std::uint64_t max_degree,
                                const HilbertOptions& opts) {
  if (e.is_zero()) return e;
  const HilbertCounter counter(e, opts);
  const std::size_t m = e.dim();
  std::vector<ExpVec> gens;
  for (std::uint64_t n = 0; n <= max_degree; ++n) {
    auto layer = monomials_of_degree(m, n);
    const BigInt standard = counter.hilbert(n);
    const std::size_t keep = standard.get_ui();
    gens.insert(gens.end(), layer.begin() + static_cast<std::ptrdiff_t>(keep), layer.end());
  }
  MonomialIdeal result = normalize(m, std::move(gens));

  // The generated ideal must reproduce every layer up to max_degree, and its
  // Hilbert function must keep matching E until both have stabilized.
  const std::uint64_t check_to =
      std::max(max_degree, e.is_proper_nonzero() ? n0(e, opts) : std::uint64_t{0}) + 1;
  for (std::uint64_t n = 0; n <= check_to; ++n) {
    auto layer = monomials_of_degree(m, n);
    const std::size_t standard = static_cast<std::size_t>(
        std::count_if(layer.begin(), layer.end(), [&](const ExpVec& nu) { return !result.contains(nu); }));
    if (BigInt(static_cast<unsigned long>(standard)) != counter.hilbert(n)) {
      throw DomainError("lex-segment construction: degree bound " + std::to_string(max_degree) +
                        " is too small (Hilbert functions differ in degree " +
                        std::to_string(n) + ")");
    }
  }
  return result;
}

MonomialIdeal lex_segment_ideal(const MonomialIdeal& e, const HilbertOptions& opts) {
  if (!e.is_proper_nonzero()) return lex_segment_ideal(e, 0, opts);
  return lex_segment_ideal(e, n0(e, opts), opts);
}

Ordinal height(const MonomialIdeal& e, const HilbertOptions& opts) {
  if (e.is_zero()) return omega_pow(Ordinal(static_cast<unsigned long>(e.dim())));
  return psi(hilbert_samuel_poly(e, opts).poly, e.dim());
}

HilbertProfile hilbert_profile(const MonomialIdeal& e, const HilbertOptions& opts) {
  HilbertProfile out;
  out.dim = e.dim();
  const auto sp = hilbert_samuel_poly(e, opts);
  out.poly = sp.poly;
  out.threshold = sp.threshold;
  if (e.is_zero()) {
    out.psi = omega_pow(Ordinal(static_cast<unsigned long>(e.dim())));
    return out;
  }
  if (e.is_unit()) {
    MinimizingCoefficients zeros;
    zeros.by_power.assign(e.dim(), BigInt(0));
    out.coefficients = zeros;
    out.phi = BigInt(0);
    return out;
  }
  out.coefficients = minimizing_coefficients(out.poly, e.dim());
  out.psi = psi(out.poly, e.dim());
  out.phi = phi(out.poly, e.dim());
  out.a_sequence = canonical_decomposition(out.poly, e.dim());
  out.n0 = n0(e, opts);
  return out;
}

}  // namespace monord
