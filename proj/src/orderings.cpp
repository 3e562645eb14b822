#include "monord/orderings.hpp"

#include <algorithm>

#include "monord/errors.hpp"
#include "monord/hilbert.hpp"

namespace monord {

namespace {

void require_same_dim(const MonomialIdeal& e, const MonomialIdeal& f) {
  if (e.dim() != f.dim()) throw DimensionMismatch(e.dim(), f.dim());
}

void require_degree_compatible(const TermOrder& order) {
  if (!order.degree_compatible()) {
    throw DomainError("the Kleene-Brouwer ordering needs a term order of order type w; '" +
                      order.name() + "' is not degree-compatible");
  }
}

std::vector<ExpVec> sorted_generators(const MonomialIdeal& e, const TermOrder& order) {
  std::vector<ExpVec> gens = e.generators();
  std::sort(gens.begin(), gens.end(),
            [&](const ExpVec& a, const ExpVec& b) { return order.compare(a, b) < 0; });
  return gens;
}

void triangle_rec(const MonomialIdeal& e, const MonomialIdeal& f, CompareTrace& trace) {
  if (e.dim() == 1) {
    // Reverse inclusion on a chain; the zero ideal sits at the top.
    if (e == f) {
      trace.result = std::strong_ordering::equal;
    } else if (e.is_zero()) {
      trace.result = std::strong_ordering::greater;
    } else if (f.is_zero()) {
      trace.result = std::strong_ordering::less;
    } else {
      trace.result = e.generators().front()[0] < f.generators().front()[0]
                         ? std::strong_ordering::less
                         : std::strong_ordering::greater;
    }
    return;
  }
  // Past the largest last coordinate J every slice equals slice J, so the
  // first J + 1 slices determine both ideals.
  const auto last = std::max(e.max_last_exponent(), f.max_last_exponent());
  for (ExpVec::value_type j = 0; j <= last; ++j) {
    const auto se = slice(e, j);
    const auto sf = slice(f, j);
    if (se == sf) continue;
    trace.slice_path.push_back(j);
    triangle_rec(se, sf, trace);
    return;
  }
  trace.result = std::strong_ordering::equal;
}

}  // namespace

CompareTrace kb_trace(const MonomialIdeal& e, const MonomialIdeal& f, const TermOrder& order) {
  require_same_dim(e, f);
  require_degree_compatible(order);
  const auto a = sorted_generators(e, order);
  const auto b = sorted_generators(f, order);
  CompareTrace trace;
  const std::size_t common = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < common; ++i) {
    const auto c = order.compare(a[i], b[i]);
    if (c != 0) {
      trace.result = c;
      trace.generator_index = i;
      return trace;
    }
  }
  // One sequence is a prefix of the other: the longer one comes first.
  trace.result = b.size() <=> a.size();
  if (trace.result != 0) trace.generator_index = common;
  return trace;
}

std::strong_ordering kb_cmp(const MonomialIdeal& e, const MonomialIdeal& f,
                            const TermOrder& order) {
  return kb_trace(e, f, order).result;
}

CompareTrace triangle_trace(const MonomialIdeal& e, const MonomialIdeal& f) {
  require_same_dim(e, f);
  CompareTrace trace;
  triangle_rec(e, f, trace);
  return trace;
}

std::strong_ordering triangle_cmp(const MonomialIdeal& e, const MonomialIdeal& f) {
  return triangle_trace(e, f).result;
}

CompareTrace min_type_trace(const MonomialIdeal& e, const MonomialIdeal& f) {
  require_same_dim(e, f);
  const auto pe = hilbert_samuel_poly(e).poly;
  const auto pf = hilbert_samuel_poly(f).poly;
  if (const auto c = dominance_cmp(pe, pf); c != 0) {
    CompareTrace trace;
    trace.result = c;
    trace.decided_by_polynomial = true;
    return trace;
  }
  return triangle_trace(e, f);
}

std::strong_ordering min_type_cmp(const MonomialIdeal& e, const MonomialIdeal& f) {
  return min_type_trace(e, f).result;
}

IdealOrder IdealOrder::kb(TermOrder order) {
  require_degree_compatible(order);
  return IdealOrder(Kind::kb, std::move(order));
}

IdealOrder IdealOrder::parse(const std::string& name, TermOrder order) {
  if (name == "kb") return kb(std::move(order));
  if (name == "triangle") return triangle();
  if (name == "mintype" || name == "min_type") return min_type();
  throw DomainError("unknown ordering '" + name + "' (expected kb, triangle or mintype)");
}

std::string IdealOrder::name() const {
  switch (kind_) {
    case Kind::kb:
      return "kb";
    case Kind::triangle:
      return "triangle";
    case Kind::min_type:
      return "mintype";
  }
  return "?";
}

CompareTrace IdealOrder::trace(const MonomialIdeal& e, const MonomialIdeal& f) const {
  switch (kind_) {
    case Kind::kb:
      return kb_trace(e, f, order_);
    case Kind::triangle:
      return triangle_trace(e, f);
    case Kind::min_type:
      return min_type_trace(e, f);
  }
  return {};
}

std::strong_ordering IdealOrder::compare(const MonomialIdeal& e, const MonomialIdeal& f) const {
  return trace(e, f).result;
}

BoundsReport bounds_report(std::size_t m) {
  if (m == 0) throw DomainError("bounds_report needs m >= 1");
  const Ordinal one(1UL);
  const Ordinal w = Ordinal::omega();
  const Ordinal mm(static_cast<unsigned long>(m));
  BoundsReport r;
  r.dim = m;
  r.height = nat_sum(omega_pow(mm), one);
  r.kb_order_type = nat_sum(omega_pow(omega_pow(Ordinal(static_cast<unsigned long>(m - 1)))), one);
  r.type_lower = r.kb_order_type;
  r.type_upper = omega_pow(nat_pow(nat_sum(w, one), m));
  if (m == 2) r.triangle_order_type = ot_decreasing_sequences(nat_sum(w, one));
  return r;
}

}  // namespace monord
