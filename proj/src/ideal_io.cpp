#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "monord/errors.hpp"
#include "monord/ideal.hpp"

namespace monord {

namespace {

std::string_view trim(std::string_view s, std::size_t& offset) {
  offset = 0;
  while (offset < s.size() && std::isspace(static_cast<unsigned char>(s[offset]))) ++offset;
  s.remove_prefix(offset);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Maps a byte offset to 1-based (line, column).
std::pair<std::size_t, std::size_t> locate(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

MonomialIdeal parse_ideal_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    auto [line, col] = locate(text, err.byte == 0 ? 0 : err.byte - 1);
    throw ParseError("invalid JSON", line, col);
  }
  if (!doc.is_object() || !doc.contains("dim") || !doc["dim"].is_number_unsigned()) {
    throw ParseError("JSON ideal needs an unsigned \"dim\" field", 1, 1);
  }
  const auto dim = doc["dim"].get<std::size_t>();
  if (dim == 0) throw ParseError("dimension must be positive", 1, 1);
  std::vector<ExpVec> gens;
  if (doc.contains("gens")) {
    if (!doc["gens"].is_array()) throw ParseError("\"gens\" must be an array", 1, 1);
    for (const auto& g : doc["gens"]) {
      if (!g.is_array() || g.size() != dim) {
        throw ParseError("every generator must be an array of " + std::to_string(dim) +
                             " naturals",
                         1, 1);
      }
      std::vector<ExpVec::value_type> entries;
      for (const auto& x : g) {
        if (!x.is_number_unsigned()) throw ParseError("exponents must be naturals", 1, 1);
        entries.push_back(x.get<ExpVec::value_type>());
      }
      gens.emplace_back(std::move(entries));
    }
  }
  return normalize(dim, std::move(gens));
}

}  // namespace

MonomialIdeal parse_ideal(std::string_view text) {
  {
    std::size_t off = 0;
    auto body = trim(text, off);
    if (!body.empty() && body.front() == '{') return parse_ideal_json(text);
  }

  std::size_t dim = 0;
  bool have_dim = false;
  bool saw_zero = false;
  bool saw_unit = false;
  std::vector<ExpVec> gens;
  std::size_t line_no = 0;
  std::size_t start = 0;
  std::size_t zero_line = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    ++line_no;
    start = end + 1;

    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::size_t off = 0;
    std::string_view line = trim(raw, off);
    if (line.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (!have_dim) {
      if (line.substr(0, 3) != "dim" || line.size() == 3 ||
          !std::isspace(static_cast<unsigned char>(line[3]))) {
        throw ParseError("expected 'dim <m>' header", line_no, off + 1);
      }
      std::size_t pos = 3;
      while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
      const std::size_t num_start = pos;
      std::size_t value = 0;
      while (pos < line.size() && std::isdigit(static_cast<unsigned char>(line[pos]))) {
        value = value * 10 + static_cast<std::size_t>(line[pos] - '0');
        if (value > 1000000) throw ParseError("dimension too large", line_no, off + num_start + 1);
        ++pos;
      }
      if (pos == num_start || pos != line.size()) {
        throw ParseError("expected a natural number after 'dim'", line_no, off + num_start + 1);
      }
      if (value == 0) throw ParseError("dimension must be positive", line_no, off + num_start + 1);
      dim = value;
      have_dim = true;
    } else if (line == "zero") {
      saw_zero = true;
      zero_line = line_no;
    } else if (line == "unit") {
      saw_unit = true;
    } else {
      gens.push_back(parse_expvec(line, dim, line_no, off + 1));
    }
    if (end == text.size()) break;
  }
  if (!have_dim) throw ParseError("missing 'dim <m>' header", line_no == 0 ? 1 : line_no, 1);
  if (saw_zero && (saw_unit || !gens.empty())) {
    throw ParseError("'zero' cannot be combined with generators", zero_line, 1);
  }
  if (saw_unit) return MonomialIdeal::unit(dim);
  return normalize(dim, std::move(gens));
}

MonomialIdeal read_ideal_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_ideal(buf.str());
}

std::string format_ideal(const MonomialIdeal& e) {
  std::string out = "dim " + std::to_string(e.dim()) + "\n";
  if (e.is_zero()) return out + "zero\n";
  for (const auto& g : e.generators()) out += g.str() + "\n";
  return out;
}

std::string ideal_to_json(const MonomialIdeal& e) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : e.generators()) gens.push_back(g.entries());
  return nlohmann::json{{"dim", e.dim()}, {"gens", gens}}.dump();
}

}  // namespace monord
