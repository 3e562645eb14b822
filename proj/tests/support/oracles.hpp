// Brute-force reference implementations and random generators shared by the
// unit tests and the acceptance runner. Nothing here calls the library's
// counting or enumeration code; it works on raw exponent tuples.
#ifndef MONORD_TESTS_ORACLES_HPP
#define MONORD_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "monord/ideal.hpp"
#include "monord/ordinal.hpp"

namespace oracle {

using Point = std::vector<std::uint32_t>;
using Rng = std::mt19937_64;

inline std::uint64_t total(const Point& p) {
  std::uint64_t s = 0;
  for (auto x : p) s += x;
  return s;
}

inline bool below(const Point& a, const Point& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

inline bool member(const monord::MonomialIdeal& e, const Point& p) {
  for (const auto& g : e.generators()) {
    if (below(g.entries(), p)) return true;
  }
  return false;
}

// Every point of the box [0, side]^m, odometer order.
inline std::vector<Point> box(std::size_t m, std::uint32_t side) {
  std::vector<Point> out;
  Point cur(m, 0);
  for (;;) {
    out.push_back(cur);
    std::size_t i = 0;
    while (i < m && cur[i] == side) cur[i++] = 0;
    if (i == m) break;
    ++cur[i];
  }
  return out;
}

inline std::uint64_t count_hilbert(const monord::MonomialIdeal& e, std::uint64_t n) {
  std::uint64_t c = 0;
  for (const auto& p : box(e.dim(), static_cast<std::uint32_t>(n))) {
    if (total(p) == n && !member(e, p)) ++c;
  }
  return c;
}

inline std::uint64_t count_samuel(const monord::MonomialIdeal& e, std::uint64_t s) {
  std::uint64_t c = 0;
  for (const auto& p : box(e.dim(), static_cast<std::uint32_t>(s))) {
    if (total(p) <= s && !member(e, p)) ++c;
  }
  return c;
}

// Longest lex-decreasing sequence nu_0 > nu_1 > ... with |nu_i| <= f(i), by
// exhaustive search. `f` must become constant from index `flat` on.
inline std::uint64_t ell_dfs(std::size_t m, const std::function<std::uint64_t(std::size_t)>& f,
                             std::size_t flat) {
  std::uint64_t top = 0;
  for (std::size_t i = 0; i <= flat; ++i) top = std::max(top, f(i));
  auto pts = box(m, static_cast<std::uint32_t>(top));
  std::sort(pts.begin(), pts.end());  // increasing lex
  std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> memo;
  // Longest continuation after choosing pts[k] at index i.
  std::function<std::uint64_t(std::size_t, std::size_t)> after = [&](std::size_t k, std::size_t i) {
    const auto key = std::make_pair(k, std::min(i, flat + 1));
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::uint64_t best = 0;
    for (std::size_t r = 0; r < k; ++r) {
      if (total(pts[r]) <= f(i + 1)) best = std::max(best, 1 + after(r, i + 1));
    }
    memo[key] = best;
    return best;
  };
  std::uint64_t best = 0;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    if (total(pts[k]) <= f(0)) best = std::max(best, 1 + after(k, 0));
  }
  return best;
}

// Standard monomials of an Artinian ideal (finite complement).
inline std::vector<Point> staircase(const monord::MonomialIdeal& e) {
  std::uint32_t side = 0;
  for (const auto& g : e.generators()) {
    for (auto x : g.entries()) side = std::max(side, x);
  }
  std::vector<Point> out;
  for (const auto& p : box(e.dim(), side)) {
    if (!member(e, p)) out.push_back(p);
  }
  return out;
}

// Longest strictly increasing chain E = E_0 < E_1 < ... < E_k = unit of
// cofinite ideals, i.e. of down-sets inside the staircase of E, by dynamic
// programming over all subsets.
inline std::uint64_t longest_chain_above(const monord::MonomialIdeal& e) {
  const auto pts = staircase(e);
  const std::size_t n = pts.size();
  const std::uint32_t full = (1u << n) - 1;
  auto is_downset = [&](std::uint32_t mask) {
    for (std::size_t a = 0; a < n; ++a) {
      if (!(mask >> a & 1u)) continue;
      for (std::size_t b = 0; b < n; ++b) {
        if (below(pts[b], pts[a]) && !(mask >> b & 1u)) return false;
      }
    }
    return true;
  };
  std::vector<int> longest(full + 1, -1);  // steps from the down-set to the empty set
  std::vector<bool> down(full + 1);
  for (std::uint32_t mask = 0; mask <= full; ++mask) down[mask] = is_downset(mask);
  longest[0] = 0;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    if (!down[mask]) continue;
    for (std::uint32_t sub = (mask - 1) & mask;; sub = (sub - 1) & mask) {
      if (down[sub] && longest[sub] >= 0) longest[mask] = std::max(longest[mask], longest[sub] + 1);
      if (sub == 0) break;
    }
  }
  return static_cast<std::uint64_t>(longest[full]);
}

inline monord::MonomialIdeal make_ideal(std::size_t m, const std::vector<Point>& gens) {
  std::vector<monord::ExpVec> v;
  for (const auto& g : gens) v.emplace_back(g);
  return monord::normalize(m, std::move(v));
}

// 1..max_gens random generators with total degree <= max_deg.
inline monord::MonomialIdeal random_ideal(Rng& rng, std::size_t m, std::size_t max_gens,
                                          std::uint32_t max_deg) {
  std::uniform_int_distribution<std::size_t> ng(1, max_gens);
  std::uniform_int_distribution<std::uint32_t> deg(0, max_deg);
  std::uniform_int_distribution<std::size_t> coord(0, m - 1);
  std::vector<Point> gens(ng(rng));
  for (auto& g : gens) {
    g.assign(m, 0);
    const auto d = deg(rng);
    for (std::uint32_t k = 0; k < d; ++k) ++g[coord(rng)];
  }
  return make_ideal(m, gens);
}

// Proper nonzero random ideal with degrees in [1, max_deg].
inline monord::MonomialIdeal random_proper_ideal(Rng& rng, std::size_t m, std::size_t max_gens,
                                                 std::uint32_t max_deg) {
  for (;;) {
    auto e = random_ideal(rng, m, max_gens, max_deg);
    if (e.is_proper_nonzero()) return e;
  }
}

// Artinian ideal whose staircase is a random down-set of `colength` points.
inline monord::MonomialIdeal random_artinian(Rng& rng, std::size_t m, std::size_t colength) {
  std::set<Point> inside;
  auto addable = [&](const Point& p) {
    if (inside.count(p)) return false;
    for (std::size_t i = 0; i < m; ++i) {
      if (p[i] == 0) continue;
      Point q = p;
      --q[i];
      if (!inside.count(q)) return false;
    }
    return true;
  };
  auto corners = [&] {
    std::vector<Point> out;
    std::set<Point> seen;
    std::vector<Point> cands{Point(m, 0)};
    for (const auto& p : inside) {
      for (std::size_t i = 0; i < m; ++i) {
        Point q = p;
        ++q[i];
        cands.push_back(q);
      }
    }
    for (const auto& c : cands) {
      if (seen.insert(c).second && addable(c)) out.push_back(c);
    }
    return out;
  };
  while (inside.size() < colength) {
    auto c = corners();
    std::uniform_int_distribution<std::size_t> pick(0, c.size() - 1);
    inside.insert(c[pick(rng)]);
  }
  return make_ideal(m, corners());
}

// Every ideal generated inside [0, side]^m, from the up-closed subsets of the
// box. Includes the zero ideal.
inline std::vector<monord::MonomialIdeal> all_ideals_in_box(std::size_t m, std::uint32_t side) {
  const auto pts = box(m, side);
  const std::size_t n = pts.size();
  std::vector<monord::MonomialIdeal> out;
  // Recursive choice in decreasing-sum order keeps the up-closure check local.
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return total(pts[a]) > total(pts[b]); });
  std::vector<bool> in(n, false);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == n) {
      std::vector<Point> gens;
      for (std::size_t i = 0; i < n; ++i) {
        if (in[i]) gens.push_back(pts[i]);
      }
      out.push_back(make_ideal(m, gens));
      return;
    }
    const std::size_t idx = order[k];
    rec(k + 1);
    // Taking pts[idx] requires every box point above it to be taken.
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j) {
      if (j != idx && below(pts[idx], pts[j]) && !in[j]) ok = false;
    }
    if (ok) {
      in[idx] = true;
      rec(k + 1);
      in[idx] = false;
    }
  };
  rec(0);
  return out;
}

// Random ordinal below w^(w^w) with small coefficients.
inline monord::Ordinal random_ordinal(Rng& rng, int depth = 2) {
  std::uniform_int_distribution<int> nterms(0, 3);
  std::uniform_int_distribution<unsigned long> coeff(1, 5);
  std::vector<monord::Ordinal::Term> terms;
  const int k = nterms(rng);
  for (int i = 0; i < k; ++i) {
    monord::Ordinal exp;
    if (depth > 0) {
      exp = random_ordinal(rng, depth - 1);
    }
    terms.push_back({exp, monord::BigInt(coeff(rng))});
  }
  return monord::Ordinal::from_terms(std::move(terms));
}

}  // namespace oracle

#endif  // MONORD_TESTS_ORACLES_HPP
