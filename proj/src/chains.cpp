#include "monord/chains.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "monord/errors.hpp"

namespace monord {

struct BoundFn::Node {
  enum class Kind { affine, table, closure, h_composed };

  Kind kind = Kind::affine;
  // affine: p + i*q
  BigInt p = 0;
  BigInt q = 0;
  // table: monotone values, then tail
  std::vector<BigInt> values;
  BigInt tail = 0;
  // closure, evaluated through a prefix-maximum cache
  std::function<BigInt(std::uint64_t)> fn;
  std::string name;
  mutable std::mutex cache_mutex;
  mutable std::vector<BigInt> prefix_max;
  // h_composed
  std::size_t m = 0;
  std::optional<BoundFn> inner;

  BigInt eval(const BigInt& i) const;
  std::string key() const;
};

namespace {

constexpr std::uint64_t kClosureLimit = 50'000'000;

void require_natural(const BigInt& x, const char* what) {
  if (sgn(x) < 0) throw DomainError(std::string(what) + " must be nonnegative, got " + to_string(x));
}

}  // namespace

BigInt BoundFn::Node::eval(const BigInt& i) const {
  switch (kind) {
    case Kind::affine:
      return p + i * q;
    case Kind::table:
      if (i < BigInt(static_cast<unsigned long>(values.size()))) return values[i.get_ui()];
      return tail;
    case Kind::closure: {
      if (!i.fits_ulong_p() || i.get_ui() > kClosureLimit) {
        throw ResourceError("bound function evaluated at " + to_string(i) + ", beyond the " +
                            std::to_string(kClosureLimit) + " table limit");
      }
      const std::uint64_t n = i.get_ui();
      std::lock_guard lock(cache_mutex);
      while (prefix_max.size() <= n) {
        BigInt v = fn(prefix_max.size());
        require_natural(v, "bound function value");
        if (!prefix_max.empty() && v < prefix_max.back()) v = prefix_max.back();
        prefix_max.push_back(std::move(v));
      }
      return prefix_max[n];
    }
    case Kind::h_composed:
      return h_m((*inner)(i), m);
  }
  return 0;
}

std::string BoundFn::Node::key() const {
  switch (kind) {
    case Kind::affine:
      return "a(" + to_string(p) + "," + to_string(q) + ")";
    case Kind::table: {
      std::string s = "t(";
      for (const auto& v : values) s += to_string(v) + ",";
      return s + ";" + to_string(tail) + ")";
    }
    case Kind::closure:
      return "c(" + name + ")";
    case Kind::h_composed:
      return "h" + std::to_string(m) + "(" + inner->key() + ")";
  }
  return "?";
}

BoundFn BoundFn::affine(const BigInt& p, const BigInt& q) {
  require_natural(p, "affine bound offset");
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::affine;
  node->p = p;
  node->q = sgn(q) < 0 ? BigInt(0) : q;
  return BoundFn(std::move(node), 0, 0);
}

BoundFn BoundFn::table(std::vector<BigInt> values, const BigInt& tail) {
  BigInt running = 0;
  for (auto& v : values) {
    require_natural(v, "table entry");
    if (v < running) v = running;
    running = v;
  }
  require_natural(tail, "table tail");
  const BigInt t = std::max(tail, running);
  while (!values.empty() && values.back() == t) values.pop_back();
  if (values.empty()) return constant(t);
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::table;
  node->values = std::move(values);
  node->tail = t;
  return BoundFn(std::move(node), 0, 0);
}

BoundFn BoundFn::closure(std::function<BigInt(std::uint64_t)> fn, std::string name) {
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::closure;
  node->fn = std::move(fn);
  node->name = std::move(name);
  return BoundFn(std::move(node), 0, 0);
}

BoundFn BoundFn::h_composed(std::size_t m, const BoundFn& inner) {
  if (m == 0) throw DomainError("h_m needs m >= 1");
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::h_composed;
  node->m = m;
  node->inner = inner;
  return BoundFn(std::move(node), 0, 0);
}

BigInt BoundFn::operator()(const BigInt& i) const {
  if (sgn(i) < 0) throw DomainError("bound function argument must be nonnegative");
  return node_->eval(i + offset_) + add_;
}

BoundFn BoundFn::shifted(const BigInt& offset, const BigInt& add) const {
  require_natural(offset, "shift offset");
  const BigInt off = offset_ + offset;
  const BigInt ad = add_ + add;
  switch (node_->kind) {
    case Node::Kind::affine:
      return affine(node_->p + off * node_->q + ad, node_->q);
    case Node::Kind::table: {
      std::vector<BigInt> rest;
      if (off < BigInt(static_cast<unsigned long>(node_->values.size()))) {
        for (auto i = off.get_ui(); i < node_->values.size(); ++i) rest.push_back(node_->values[i] + ad);
      }
      return table(std::move(rest), node_->tail + ad);
    }
    case Node::Kind::closure:
    case Node::Kind::h_composed:
      break;
  }
  return BoundFn(node_, off, ad);
}

std::string BoundFn::key() const {
  std::string k = node_->key();
  if (sgn(offset_) != 0 || sgn(add_) != 0) k += "@" + to_string(offset_) + "+" + to_string(add_);
  return k;
}

BigInt h_m(const BigInt& s, std::size_t m) {
  require_natural(s, "h_m argument");
  if (m == 0) throw DomainError("h_m needs m >= 1");
  return s + binomial(s + BigInt(static_cast<unsigned long>(m)) - 1, m);
}

// ---------------------------------------------------------------------------
// ell and the extremal sequence

namespace {

class LengthSolver {
 public:
  explicit LengthSolver(ChainBudget budget) : budget_(budget.steps) {}

  BigInt ell(std::size_t m, const BoundFn& f) {
    if (m == 1) return f(0UL) + 1;
    auto key = std::make_pair(m, f.key());
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    ++depth_;
    const BigInt f0 = f(0UL);
    BigInt total = 1;
    BigInt pos = 1;
    for (BigInt i = 1; i <= f0; ++i) {
      charge();
      // f_i(j) = f(j + 1 + l_1 + ... + l_{i-1}) - f(0) + i
      const BigInt li = ell(m - 1, f.shifted(pos, i - f0));
      total += li;
      pos += li;
    }
    --depth_;
    memo_.emplace(std::move(key), total);
    return total;
  }

  // Appends up to `cap - out.size()` terms of a maximal sequence, each
  // prefixed by `prefix`; returns the number appended.
  std::size_t emit(std::size_t m, const BoundFn& f, std::vector<ExpVec::value_type>& prefix,
                   std::size_t cap, std::vector<ExpVec>& out) {
    const BigInt f0 = f(0UL);
    if (!f0.fits_uint_p()) throw ResourceError("sequence entry " + to_string(f0) + " is too large");
    const auto top = static_cast<ExpVec::value_type>(f0.get_ui());
    const std::size_t before = out.size();
    if (m == 1) {
      for (std::uint64_t k = 0; k <= top && out.size() < cap; ++k) {
        charge();
        auto entries = prefix;
        entries.push_back(static_cast<ExpVec::value_type>(top - k));
        out.emplace_back(std::move(entries));
      }
      return out.size() - before;
    }
    if (out.size() >= cap) return 0;
    charge();
    auto first = prefix;
    first.push_back(top);
    first.resize(prefix.size() + m, 0);
    out.emplace_back(std::move(first));
    BigInt pos = 1;
    for (ExpVec::value_type i = 1; i <= top && out.size() < cap; ++i) {
      prefix.push_back(top - i);
      ++depth_;
      const std::size_t n =
          emit(m - 1, f.shifted(pos, BigInt(static_cast<unsigned long>(i)) - f0), prefix, cap, out);
      --depth_;
      prefix.pop_back();
      pos += static_cast<unsigned long>(n);
    }
    return out.size() - before;
  }

 private:
  void charge() {
    if (budget_ == 0) throw BudgetExceeded(depth_);
    --budget_;
  }

  std::uint64_t budget_;
  std::size_t depth_ = 0;
  std::map<std::pair<std::size_t, std::string>, BigInt> memo_;
};

}  // namespace

BigInt ell(std::size_t m, const BoundFn& f, ChainBudget budget) {
  if (m == 0) throw DomainError("ell needs m >= 1");
  return LengthSolver(budget).ell(m, f);
}

std::vector<ExpVec> extremal_sequence(std::size_t m, const BoundFn& f, std::size_t cap,
                                      ChainBudget budget) {
  if (m == 0) throw DomainError("extremal_sequence needs m >= 1");
  std::vector<ExpVec> out;
  std::vector<ExpVec::value_type> prefix;
  LengthSolver(budget).emit(m, f, prefix, cap, out);
  return out;
}

BigInt t_m(const BoundFn& f, std::size_t m, ChainBudget budget) {
  return ell(m, BoundFn::h_composed(m, f), budget);
}

// ---------------------------------------------------------------------------
// Bad sequences

BadVerdict is_bad_sequence(const std::vector<MonomialIdeal>& ideals) {
  for (std::size_t j = 1; j < ideals.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (superset(ideals[i], ideals[j])) return {false, std::make_pair(i, j)};
    }
  }
  return {};
}

namespace {

constexpr std::size_t kCandidateLimit = 200'000;

// All ideals whose minimal generators have degree <= d, the zero ideal
// included.
std::vector<MonomialIdeal> ideals_generated_up_to(std::size_t m, std::uint64_t d) {
  std::vector<ExpVec> monos;
  for (std::uint64_t n = 0; n <= d; ++n) {
    for (auto& nu : monomials_of_degree(m, n)) monos.push_back(std::move(nu));
  }
  std::vector<MonomialIdeal> out;
  std::vector<ExpVec> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == monos.size()) {
      if (out.size() >= kCandidateLimit) {
        throw ResourceError("more than " + std::to_string(kCandidateLimit) +
                            " candidate ideals in the degree box");
      }
      out.push_back(MonomialIdeal::from_generators(m, chosen));
      return;
    }
    rec(k + 1);
    // Monomials come in increasing degree, so only earlier choices can divide.
    const bool free = std::none_of(chosen.begin(), chosen.end(),
                                   [&](const ExpVec& g) { return divides(g, monos[k]); });
    if (free) {
      chosen.push_back(monos[k]);
      rec(k + 1);
      chosen.pop_back();
    }
  };
  rec(0);
  return out;
}

class BadSearch {
 public:
  BadSearch(std::size_t m, const BoundFn& f, std::uint64_t cap) : m_(m), f_(f), cap_(cap) {}

  BadSearchResult run() {
    exhausted_ = true;
    dfs();
    return {best_, exhausted_, nodes_};
  }

 private:
  const std::vector<MonomialIdeal>& candidates(std::uint64_t d) {
    auto it = cache_.find(d);
    if (it == cache_.end()) it = cache_.emplace(d, ideals_generated_up_to(m_, d)).first;
    return it->second;
  }

  void dfs() {
    const BigInt bound = f_(static_cast<std::uint64_t>(current_.size()));
    if (!bound.fits_ulong_p()) throw ResourceError("degree bound too large");
    for (const auto& c : candidates(bound.get_ui())) {
      if (nodes_ >= cap_) {
        exhausted_ = false;
        return;
      }
      ++nodes_;
      const bool extends = std::none_of(current_.begin(), current_.end(),
                                        [&](const MonomialIdeal& e) { return superset(e, c); });
      if (!extends) continue;
      current_.push_back(c);
      if (current_.size() > best_.size()) best_ = current_;
      dfs();
      current_.pop_back();
      if (!exhausted_) return;
    }
  }

  std::size_t m_;
  BoundFn f_;
  std::uint64_t cap_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = true;
  std::map<std::uint64_t, std::vector<MonomialIdeal>> cache_;
  std::vector<MonomialIdeal> current_;
  std::vector<MonomialIdeal> best_;
};

}  // namespace

BadSearchResult max_bad_degree_growth(std::size_t m, const BoundFn& f, std::uint64_t cap) {
  if (m == 0 || m > 3) throw DomainError("max_bad_degree_growth supports 1 <= m <= 3");
  if (cap == 0) return {};
  return BadSearch(m, f, cap).run();
}

}  // namespace monord
