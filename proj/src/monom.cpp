#include "monord/monom.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>

#include "monord/bigint.hpp"
#include "monord/errors.hpp"

namespace monord {

ExpVec ExpVec::unit(std::size_t dim, std::size_t i) {
  ExpVec v(dim);
  v.e_.at(i) = 1;
  return v;
}

std::uint64_t ExpVec::degree() const {
  return std::accumulate(e_.begin(), e_.end(), std::uint64_t{0});
}

std::vector<std::size_t> ExpVec::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] > 0) s.push_back(i);
  }
  return s;
}

bool ExpVec::is_pure_power() const {
  return std::count_if(e_.begin(), e_.end(), [](value_type x) { return x > 0; }) <= 1;
}

bool ExpVec::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](value_type x) { return x == 0; });
}

ExpVec ExpVec::compressed() const {
  std::vector<value_type> out;
  for (auto x : e_) {
    if (x > 0) out.push_back(x);
  }
  return ExpVec(std::move(out));
}

std::string ExpVec::str() const {
  std::string out;
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(e_[i]);
  }
  return out;
}

std::string ExpVec::monomial_str() const {
  std::string out;
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += "x" + std::to_string(i + 1);
    if (e_[i] > 1) out += "^" + std::to_string(e_[i]);
  }
  return out.empty() ? "1" : out;
}

void require_same_dim(const ExpVec& a, const ExpVec& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch(a.dim(), b.dim());
}

ExpVec operator+(const ExpVec& a, const ExpVec& b) {
  require_same_dim(a, b);
  ExpVec r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i] + b[i];
  return r;
}

ExpVec lcm(const ExpVec& a, const ExpVec& b) {
  require_same_dim(a, b);
  ExpVec r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

ExpVec colon(const ExpVec& a, const ExpVec& b) {
  require_same_dim(a, b);
  ExpVec r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i] > b[i] ? a[i] - b[i] : 0;
  return r;
}

bool divides(const ExpVec& mu, const ExpVec& nu) {
  require_same_dim(mu, nu);
  for (std::size_t i = 0; i < mu.dim(); ++i) {
    if (mu[i] > nu[i]) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class ExpVecParser {
 public:
  ExpVecParser(std::string_view text, std::size_t dim, std::size_t line, std::size_t column)
      : text_(text), dim_(dim), line_(line), column_(column) {}

  ExpVec parse() {
    if (text_.find('x') != std::string_view::npos) return parse_monomial();
    return parse_tuple();
  }

 private:
  ExpVec parse_tuple() {
    std::vector<ExpVec::value_type> entries;
    skip_separators();
    while (pos_ < text_.size()) {
      entries.push_back(parse_number());
      skip_separators();
    }
    if (entries.size() != dim_) {
      fail("expected " + std::to_string(dim_) + " exponents, found " +
           std::to_string(entries.size()));
    }
    return ExpVec(std::move(entries));
  }

  ExpVec parse_monomial() {
    ExpVec v(dim_);
    skip_spaces();
    for (;;) {
      skip_spaces();
      if (peek() == 'x') {
        ++pos_;
        const std::size_t at = pos_;
        const auto index = parse_number();
        if (index == 0 || index > dim_) {
          pos_ = at;
          fail("variable index out of range 1.." + std::to_string(dim_));
        }
        ExpVec::value_type power = 1;
        skip_spaces();
        if (peek() == '^') {
          ++pos_;
          skip_spaces();
          power = parse_number();
        }
        v[index - 1] += power;
      } else if (peek() == '1') {
        ++pos_;
      } else {
        fail("expected a variable 'x<i>'");
      }
      skip_spaces();
      if (pos_ == text_.size()) break;
      if (peek() != '*') fail("expected '*'");
      ++pos_;
    }
    return v;
  }

  ExpVec::value_type parse_number() {
    const std::size_t start = pos_;
    std::uint64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > 0xffffffffULL) {
        pos_ = start;
        fail("exponent too large");
      }
      ++pos_;
    }
    if (start == pos_) fail("expected a natural number");
    return static_cast<ExpVec::value_type>(value);
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_spaces() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void skip_separators() {
    while (pos_ < text_.size() &&
           (std::isspace(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == ',')) {
      ++pos_;
    }
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, line_, column_ + pos_);
  }

  std::string_view text_;
  std::size_t dim_;
  std::size_t line_;
  std::size_t column_;
  std::size_t pos_ = 0;
};

}  // namespace

ExpVec parse_expvec(std::string_view text, std::size_t dim, std::size_t line, std::size_t column) {
  return ExpVecParser(text, dim, line, column).parse();
}

// ---------------------------------------------------------------------------
// Term orders

TermOrder TermOrder::matrix(std::vector<std::vector<long>> rows) {
  if (rows.empty()) throw DomainError("term order matrix has no rows");
  const std::size_t m = rows.front().size();
  if (m == 0) throw DomainError("term order matrix has no columns");
  for (const auto& r : rows) {
    if (r.size() != m) throw DomainError("term order matrix rows differ in length");
  }
  // A e_i >_lex 0: the first nonzero entry of every column is positive.
  for (std::size_t i = 0; i < m; ++i) {
    long first = 0;
    for (const auto& r : rows) {
      if (r[i] != 0) {
        first = r[i];
        break;
      }
    }
    if (first <= 0) {
      throw DomainError("term order matrix: unit vector e" + std::to_string(i + 1) +
                        " is not positive");
    }
  }
  // Rank m, so that A nu = A mu forces nu = mu (fraction-free elimination).
  std::vector<std::vector<BigInt>> a;
  for (const auto& r : rows) {
    std::vector<BigInt> row;
    for (long x : r) row.emplace_back(x);
    a.push_back(std::move(row));
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m && rank < a.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < a.size() && sgn(a[pivot][col]) == 0) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = rank + 1; r < a.size(); ++r) {
      if (sgn(a[r][col]) == 0) continue;
      const BigInt f = a[r][col];
      const BigInt p = a[rank][col];
      for (std::size_t c = col; c < m; ++c) a[r][c] = a[r][c] * p - a[rank][c] * f;
    }
    ++rank;
  }
  if (rank != m) throw DomainError("term order matrix does not have full column rank");
  return TermOrder(Kind::matrix, std::move(rows));
}

TermOrder TermOrder::parse_matrix(std::string_view text) {
  std::vector<std::vector<long>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::vector<long> row;
    std::string tok;
    while (fields >> tok) {
      try {
        std::size_t used = 0;
        long v = std::stol(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        row.push_back(v);
      } catch (const std::exception&) {
        throw ParseError("bad matrix entry '" + tok + "'", line_no, line.find(tok) + 1);
      }
    }
    if (row.empty()) continue;
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ParseError("expected " + std::to_string(rows.front().size()) + " entries, found " +
                           std::to_string(row.size()),
                       line_no, 1);
    }
    rows.push_back(std::move(row));
  }
  return matrix(std::move(rows));
}

bool TermOrder::degree_compatible() const {
  switch (kind_) {
    case Kind::deglex:
      return true;
    case Kind::lex:
      return false;
    case Kind::matrix:
      return std::all_of(rows_.front().begin(), rows_.front().end(), [](long x) { return x > 0; });
  }
  return false;
}

std::strong_ordering TermOrder::compare(const ExpVec& a, const ExpVec& b) const {
  require_same_dim(a, b);
  switch (kind_) {
    case Kind::deglex:
      if (auto c = a.degree() <=> b.degree(); c != 0) return c;
      [[fallthrough]];
    case Kind::lex:
      for (std::size_t i = 0; i < a.dim(); ++i) {
        if (auto c = a[i] <=> b[i]; c != 0) return c;
      }
      return std::strong_ordering::equal;
    case Kind::matrix:
      if (rows_.front().size() != a.dim()) throw DimensionMismatch(rows_.front().size(), a.dim());
      for (const auto& r : rows_) {
        __int128 x = 0;
        __int128 y = 0;
        for (std::size_t i = 0; i < a.dim(); ++i) {
          x += static_cast<__int128>(r[i]) * a[i];
          y += static_cast<__int128>(r[i]) * b[i];
        }
        if (x != y) return x < y ? std::strong_ordering::less : std::strong_ordering::greater;
      }
      return std::strong_ordering::equal;
  }
  return std::strong_ordering::equal;
}

std::string TermOrder::name() const {
  switch (kind_) {
    case Kind::lex:
      return "lex";
    case Kind::deglex:
      return "deglex";
    case Kind::matrix:
      return "matrix";
  }
  return "?";
}

std::strong_ordering term_cmp(const TermOrder& order, const ExpVec& a, const ExpVec& b) {
  return order.compare(a, b);
}

// ---------------------------------------------------------------------------
// Word orderings

bool higman_leq(std::span<const ExpVec> u, std::span<const ExpVec> v) {
  for (const auto& x : u) {
    for (const auto& y : v) require_same_dim(x, y);
  }
  // Matching each letter of u to the earliest admissible letter of v is
  // optimal: any embedding can be shifted left onto the greedy one.
  std::size_t j = 0;
  for (const auto& x : u) {
    while (j < v.size() && !divides(x, v[j])) ++j;
    if (j == v.size()) return false;
    ++j;
  }
  return true;
}

CommWord::CommWord(std::size_t dim, std::vector<ExpVec> letters)
    : dim_(dim), letters_(std::move(letters)) {
  for (const auto& x : letters_) {
    if (x.dim() != dim_) throw DimensionMismatch(dim_, x.dim());
  }
  std::sort(letters_.begin(), letters_.end());
}

namespace {

void require_same_alphabet(const CommWord& u, const CommWord& v) {
  if (u.dim() != v.dim()) throw DimensionMismatch(u.dim(), v.dim());
}

}  // namespace

bool comm_leq(const CommWord& u, const CommWord& v) {
  require_same_alphabet(u, v);
  if (u.size() > v.size()) return false;
  const auto& a = u.letters();
  const auto& b = v.letters();
  // Kuhn's augmenting paths: match_of[j] is the u-letter assigned to b[j].
  std::vector<long> match_of(b.size(), -1);
  std::vector<char> seen;
  std::function<bool(std::size_t)> augment = [&](std::size_t i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (seen[j] || !divides(a[i], b[j])) continue;
      seen[j] = 1;
      if (match_of[j] < 0 || augment(static_cast<std::size_t>(match_of[j]))) {
        match_of[j] = static_cast<long>(i);
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < a.size(); ++i) {
    seen.assign(b.size(), 0);
    if (!augment(i)) return false;
  }
  return true;
}

bool multiset_leq(const CommWord& u, const CommWord& v) {
  require_same_alphabet(u, v);
  if (u == v) return true;
  // Both letter lists are sorted, so the multiset difference is a merge.
  std::vector<ExpVec> only_u;
  std::vector<ExpVec> only_v;
  std::set_difference(u.letters().begin(), u.letters().end(), v.letters().begin(),
                      v.letters().end(), std::back_inserter(only_u));
  std::set_difference(v.letters().begin(), v.letters().end(), u.letters().begin(),
                      u.letters().end(), std::back_inserter(only_v));
  for (const auto& x : only_u) {
    if (std::none_of(only_v.begin(), only_v.end(), [&](const ExpVec& y) { return divides(x, y); })) {
      return false;
    }
  }
  return true;
}

}  // namespace monord
