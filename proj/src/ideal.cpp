#include "monord/ideal.hpp"

#include <algorithm>
#include <functional>

#include "monord/errors.hpp"

namespace monord {

namespace {

bool deglex_less(const ExpVec& a, const ExpVec& b) {
  return TermOrder::deglex().compare(a, b) < 0;
}

void require_same_dim(const MonomialIdeal& e, const MonomialIdeal& f) {
  if (e.dim() != f.dim()) throw DimensionMismatch(e.dim(), f.dim());
}

void require_dim(const MonomialIdeal& e, const ExpVec& nu) {
  if (e.dim() != nu.dim()) throw DimensionMismatch(e.dim(), nu.dim());
}

}  // namespace

MonomialIdeal MonomialIdeal::unit(std::size_t dim) {
  MonomialIdeal e(dim);
  e.gens_.emplace_back(dim);
  return e;
}

MonomialIdeal MonomialIdeal::from_generators(std::size_t dim, std::vector<ExpVec> raw) {
  for (const auto& g : raw) {
    if (g.dim() != dim) throw DimensionMismatch(dim, g.dim());
  }
  // After a deglex sort, a divisor always precedes its multiples.
  std::sort(raw.begin(), raw.end(), deglex_less);
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  MonomialIdeal e(dim);
  for (auto& g : raw) {
    const bool dominated = std::any_of(e.gens_.begin(), e.gens_.end(),
                                       [&](const ExpVec& h) { return divides(h, g); });
    if (!dominated) e.gens_.push_back(std::move(g));
  }
  return e;
}

bool MonomialIdeal::is_artinian() const {
  std::vector<bool> seen(dim_, false);
  for (const auto& g : gens_) {
    const auto s = g.support();
    if (s.empty()) return true;
    if (s.size() == 1) seen[s.front()] = true;
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

bool MonomialIdeal::contains(const ExpVec& nu) const {
  require_dim(*this, nu);
  return std::any_of(gens_.begin(), gens_.end(), [&](const ExpVec& g) { return divides(g, nu); });
}

ExpVec::value_type MonomialIdeal::max_last_exponent() const {
  ExpVec::value_type best = 0;
  for (const auto& g : gens_) best = std::max(best, g[dim_ - 1]);
  return best;
}

MonomialIdeal normalize(std::size_t dim, std::vector<ExpVec> raw) {
  return MonomialIdeal::from_generators(dim, std::move(raw));
}

bool contains_point(const MonomialIdeal& e, const ExpVec& nu) { return e.contains(nu); }

bool superset(const MonomialIdeal& e, const MonomialIdeal& f) {
  require_same_dim(e, f);
  return std::all_of(f.generators().begin(), f.generators().end(),
                     [&](const ExpVec& g) { return e.contains(g); });
}

MonomialIdeal sum(const MonomialIdeal& e, const MonomialIdeal& f) {
  require_same_dim(e, f);
  std::vector<ExpVec> gens = e.generators();
  gens.insert(gens.end(), f.generators().begin(), f.generators().end());
  return normalize(e.dim(), std::move(gens));
}

MonomialIdeal intersect(const MonomialIdeal& e, const MonomialIdeal& f) {
  require_same_dim(e, f);
  std::vector<ExpVec> gens;
  gens.reserve(e.generators().size() * f.generators().size());
  for (const auto& g : e.generators()) {
    for (const auto& h : f.generators()) gens.push_back(lcm(g, h));
  }
  return normalize(e.dim(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& e, const ExpVec& nu) {
  require_dim(e, nu);
  std::vector<ExpVec> gens;
  gens.reserve(e.generators().size());
  for (const auto& g : e.generators()) gens.push_back(colon(g, nu));
  return normalize(e.dim(), std::move(gens));
}

MonomialIdeal slice(const MonomialIdeal& e, ExpVec::value_type j) {
  const std::size_t m = e.dim();
  if (m < 2) throw DomainError("slice requires at least two variables");
  std::vector<ExpVec> gens;
  for (const auto& g : e.generators()) {
    if (g[m - 1] > j) continue;
    gens.emplace_back(std::vector<ExpVec::value_type>(g.begin(), g.end() - 1));
  }
  return normalize(m - 1, std::move(gens));
}

MonomialIdeal cone(const MonomialIdeal& e) {
  std::vector<ExpVec> gens;
  for (const auto& g : e.generators()) {
    auto entries = g.entries();
    entries.push_back(0);
    gens.emplace_back(std::move(entries));
  }
  return normalize(e.dim() + 1, std::move(gens));
}

MonomialIdeal direct_sum(const MonomialIdeal& e, const MonomialIdeal& f) {
  if (!e.is_proper_nonzero() || !f.is_proper_nonzero()) {
    throw DomainError("direct_sum requires proper nonzero ideals");
  }
  const std::size_t m = e.dim();
  const std::size_t n = f.dim();
  std::vector<ExpVec> gens;
  for (const auto& g : e.generators()) {
    auto entries = g.entries();
    entries.resize(m + n, 0);
    gens.emplace_back(std::move(entries));
  }
  for (const auto& g : f.generators()) {
    std::vector<ExpVec::value_type> entries(m, 0);
    entries.insert(entries.end(), g.begin(), g.end());
    gens.emplace_back(std::move(entries));
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      ExpVec cross(m + n);
      cross[i] = 1;
      cross[m + j] = 1;
      gens.push_back(std::move(cross));
    }
  }
  return normalize(m + n, std::move(gens));
}

MonomialIdeal irreducible_ideal(const ExpVec& nu) {
  std::vector<ExpVec> gens;
  for (std::size_t i = 0; i < nu.dim(); ++i) {
    if (nu[i] == 0) continue;
    ExpVec g(nu.dim());
    g[i] = nu[i];
    gens.push_back(std::move(g));
  }
  return normalize(nu.dim(), std::move(gens));
}

namespace {

// m^nu contains m^mu iff supp mu is inside supp nu and nu_i <= mu_i there.
bool irreducible_contains(const ExpVec& nu, const ExpVec& mu) {
  for (std::size_t i = 0; i < nu.dim(); ++i) {
    if (mu[i] == 0) continue;
    if (nu[i] == 0 || nu[i] > mu[i]) return false;
  }
  return true;
}

// (I, uv) = (I, u) cap (I, v) for coprime u, v; recurse until every generator
// is a pure power.
void split_components(const MonomialIdeal& e, std::vector<ExpVec>& out) {
  const auto& gens = e.generators();
  const auto mixed = std::find_if(gens.begin(), gens.end(),
                                  [](const ExpVec& g) { return !g.is_pure_power(); });
  if (mixed == gens.end()) {
    ExpVec nu(e.dim());
    for (const auto& g : gens) {
      const auto s = g.support();
      nu[s.front()] = g[s.front()];
    }
    out.push_back(std::move(nu));
    return;
  }
  const std::size_t i = mixed->support().front();
  ExpVec u(e.dim());
  u[i] = (*mixed)[i];
  ExpVec v = *mixed;
  v[i] = 0;
  split_components(sum(e, MonomialIdeal::from_generators(e.dim(), {u})), out);
  split_components(sum(e, MonomialIdeal::from_generators(e.dim(), {v})), out);
}

}  // namespace

std::vector<ExpVec> irreducible_decomposition(const MonomialIdeal& e) {
  if (e.is_zero()) throw DomainError("the zero ideal has no irreducible decomposition");
  if (e.is_unit()) throw DomainError("the unit ideal has no irreducible decomposition");
  std::vector<ExpVec> parts;
  split_components(e, parts);
  std::sort(parts.begin(), parts.end(), deglex_less);
  parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
  // Keep only inclusion-minimal components; the others are redundant.
  std::vector<ExpVec> result;
  for (const auto& nu : parts) {
    const bool redundant = std::any_of(parts.begin(), parts.end(), [&](const ExpVec& mu) {
      return !(mu == nu) && irreducible_contains(nu, mu);
    });
    if (!redundant) result.push_back(nu);
  }
  return result;
}

std::map<std::vector<std::size_t>, CommWord> components_by_support(const MonomialIdeal& e) {
  std::map<std::vector<std::size_t>, std::vector<ExpVec>> groups;
  for (const auto& nu : irreducible_decomposition(e)) {
    groups[nu.support()].push_back(nu.compressed());
  }
  std::map<std::vector<std::size_t>, CommWord> out;
  for (auto& [support, letters] : groups) {
    out.emplace(support, CommWord(support.size(), std::move(letters)));
  }
  return out;
}

std::vector<ExpVec> monomials_of_degree(std::size_t dim, std::uint64_t degree) {
  std::vector<ExpVec> out;
  if (dim == 0) {
    if (degree == 0) out.emplace_back(0);
    return out;
  }
  ExpVec cur(dim);
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t i, std::uint64_t left) {
    if (i + 1 == dim) {
      cur[i] = static_cast<ExpVec::value_type>(left);
      out.push_back(cur);
      return;
    }
    for (std::uint64_t x = 0; x <= left; ++x) {
      cur[i] = static_cast<ExpVec::value_type>(x);
      rec(i + 1, left - x);
    }
  };
  rec(0, degree);
  return out;
}

std::vector<ExpVec> standard_monomials(const MonomialIdeal& e, std::uint64_t max_degree) {
  std::vector<ExpVec> out;
  for (std::uint64_t n = 0; n <= max_degree; ++n) {
    for (auto& nu : monomials_of_degree(e.dim(), n)) {
      if (!e.contains(nu)) out.push_back(std::move(nu));
    }
  }
  return out;
}

}  // namespace monord
