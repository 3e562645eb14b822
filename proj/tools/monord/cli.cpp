#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "monord/chains.hpp"
#include "monord/errors.hpp"
#include "monord/hilbert.hpp"
#include "monord/ideal.hpp"
#include "monord/orderings.hpp"
#include "monord/ordinal.hpp"

namespace monord::cli {

namespace {

using nlohmann::json;

json big(const BigInt& x) {
  if (x.fits_slong_p()) return static_cast<std::int64_t>(x.get_si());
  return to_string(x);
}

json big_list(const std::vector<BigInt>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(big(x));
  return out;
}

json point(const ExpVec& nu) { return nu.entries(); }

std::string tuple(const std::vector<BigInt>& xs) {
  std::string s = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + to_string(xs[i]);
  return s + ")";
}

std::string ordering_word(std::strong_ordering c) {
  if (c < 0) return "less";
  if (c > 0) return "greater";
  return "equal";
}

TermOrder parse_term_order(const std::string& spec) {
  if (spec == "deglex") return TermOrder::deglex();
  if (spec == "lex") return TermOrder::lex();
  if (spec.rfind("matrix:", 0) == 0) {
    const std::string path = spec.substr(7);
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return TermOrder::parse_matrix(buf.str());
  }
  throw DomainError("unknown term order '" + spec + "' (expected deglex, lex or matrix:FILE)");
}

std::uint64_t budget_from(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("MONORD_BUDGET"); env && *env) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0') throw CLI::ValidationError("MONORD_BUDGET", "expected a natural number");
    return v;
  }
  return ChainBudget{}.steps;
}

// ---------------------------------------------------------------------------
// Per-ideal commands. Each writes its result for one ideal.

void do_normalize(const MonomialIdeal& e, bool as_json, std::ostream& out) {
  if (as_json) {
    out << ideal_to_json(e) << "\n";
  } else {
    out << format_ideal(e);
  }
}

void do_hilbert(const MonomialIdeal& e, bool as_json, std::ostream& out) {
  const auto prof = hilbert_profile(e);
  const HilbertCounter counter(e);
  std::vector<BigInt> hf;
  std::vector<BigInt> hs;
  for (std::uint64_t n = 0; n <= prof.threshold + e.dim(); ++n) {
    hf.push_back(counter.hilbert(n));
    hs.push_back(counter.samuel(n));
  }

  if (as_json) {
    json j;
    j["dim"] = e.dim();
    j["H"] = big_list(hf);
    j["h"] = big_list(hs);
    j["p"] = big_list(prof.poly.coeffs());
    j["p_text"] = prof.poly.str();
    j["threshold"] = prof.threshold;
    j["c"] = prof.coefficients ? big_list(prof.coefficients->descending()) : json(nullptr);
    j["psi"] = format(prof.psi);
    j["phi"] = prof.phi ? big(*prof.phi) : json(nullptr);
    j["a"] = prof.a_sequence;
    j["n0"] = prof.n0 ? json(*prof.n0) : json(nullptr);
    j["height"] = format(prof.psi);
    out << j.dump() << "\n";
    return;
  }
  out << "p(T) = " << prof.poly.str() << "\n";
  out << "threshold = " << prof.threshold << "\n";
  out << "H = " << tuple(hf) << "\n";
  out << "h = " << tuple(hs) << "\n";
  if (prof.coefficients) out << "c = " << tuple(prof.coefficients->descending()) << "\n";
  out << "psi = " << format(prof.psi) << "\n";
  if (prof.phi) out << "phi = " << to_string(*prof.phi) << "\n";
  if (!e.is_zero()) {
    out << "a = (";
    for (std::size_t i = 0; i < prof.a_sequence.size(); ++i) out << (i ? ", " : "") << prof.a_sequence[i];
    out << ")\n";
  }
  if (prof.n0) out << "n0 = " << *prof.n0 << "\n";
}

void do_decompose(const MonomialIdeal& e, bool as_json, std::ostream& out) {
  const auto parts = irreducible_decomposition(e);
  if (as_json) {
    json comps = json::array();
    for (const auto& nu : parts) comps.push_back(point(nu));
    json groups = json::array();
    for (const auto& [support, word] : components_by_support(e)) {
      std::vector<std::size_t> one_based;
      for (auto i : support) one_based.push_back(i + 1);
      json letters = json::array();
      for (const auto& l : word.letters()) letters.push_back(point(l));
      groups.push_back({{"support", one_based}, {"letters", letters}});
    }
    out << json{{"dim", e.dim()}, {"components", comps}, {"by_support", groups}}.dump() << "\n";
    return;
  }
  for (const auto& nu : parts) {
    out << "(";
    bool first = true;
    for (std::size_t i = 0; i < nu.dim(); ++i) {
      if (nu[i] == 0) continue;
      out << (first ? "" : ", ") << ExpVec::unit(nu.dim(), i).monomial_str();
      if (nu[i] > 1) out << "^" << nu[i];
      first = false;
    }
    out << ")\n";
  }
}

int report(const std::exception& e, int code, std::ostream& err) {
  err << "monord: " << e.what() << "\n";
  return code;
}

template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const CLI::Error& e) {
    return report(e, kUsage, err);
  } catch (const ResourceError& e) {
    return report(e, kResource, err);
  } catch (const Error& e) {
    return report(e, kData, err);
  }
}

// Runs `fn` on one file, or on every regular file of a directory in name
// order. Per-file failures are reported and the worst exit code returned.
int for_each_input(const std::string& file, const std::string& dir, std::ostream& out,
                   std::ostream& err,
                   const std::function<void(const MonomialIdeal&, std::ostream&)>& fn) {
  if (dir.empty()) {
    return guarded(err, [&] {
      fn(read_ideal_file(file), out);
      return int{kOk};
    });
  }
  std::vector<std::filesystem::path> paths;
  std::error_code ec;
  for (const auto& entry : std::filesystem::directory_iterator(dir, ec)) {
    if (entry.is_regular_file()) paths.push_back(entry.path());
  }
  if (ec) {
    err << "monord: cannot read directory '" << dir << "'\n";
    return kData;
  }
  std::sort(paths.begin(), paths.end());
  int worst = kOk;
  for (const auto& p : paths) {
    out << "== " << p.filename().string() << "\n";
    const int code = guarded(err, [&] {
      std::ostringstream buf;
      fn(read_ideal_file(p.string()), buf);
      out << buf.str();
      return int{kOk};
    });
    worst = std::max(worst, code);
  }
  return worst;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Monomial ideals: Hilbert-Samuel invariants, well-orderings and chain bounds",
               "monord"};
  app.require_subcommand(1);

  bool as_json = false;
  std::string file;
  std::string file_b;
  std::string each_dir;

  auto add_single = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", file, "Ideal file");
    sub->add_option("--each", each_dir, "Process every file in a directory")->check(CLI::ExistingDirectory);
    sub->add_flag("--json", as_json, "Machine-readable output");
    return sub;
  };

  auto* normalize_cmd = add_single("normalize", "Print the minimal generators");
  auto* hilbert_cmd = add_single("hilbert", "Hilbert-Samuel polynomial and derived invariants");
  auto* decompose_cmd = add_single("decompose", "Irreducible decomposition");
  auto* cone_cmd = add_single("cone", "The ideal in one more variable");
  auto* lexify_cmd = add_single("lexify", "Lex-segment ideal with the same Hilbert function");
  std::optional<std::uint64_t> lex_degree;
  lexify_cmd->add_option("--degree", lex_degree, "Largest degree layer to use (default n0)");

  auto* contains_cmd = app.add_subcommand("contains", "Membership of a monomial");
  std::string point_text;
  contains_cmd->add_option("file", file, "Ideal file")->required();
  contains_cmd->add_option("point", point_text, "Exponent tuple or monomial, e.g. \"2 0 1\" or x1^2*x3")
      ->required();

  auto* compare_cmd = app.add_subcommand("compare", "Compare two ideals in a well-ordering");
  std::string order_name = "kb";
  std::string term_order_spec = "deglex";
  compare_cmd->add_option("--order", order_name, "kb, triangle or mintype")
      ->check(CLI::IsMember({"kb", "triangle", "mintype"}));
  compare_cmd->add_option("--term-order", term_order_spec, "deglex, lex or matrix:FILE");
  compare_cmd->add_option("a", file, "First ideal file")->required();
  compare_cmd->add_option("b", file_b, "Second ideal file")->required();

  auto* directsum_cmd = app.add_subcommand("directsum", "Sum of two ideals in disjoint variables");
  directsum_cmd->add_option("a", file, "First ideal file")->required();
  directsum_cmd->add_option("b", file_b, "Second ideal file")->required();
  directsum_cmd->add_flag("--json", as_json, "Machine-readable output");

  auto* chain_cmd = app.add_subcommand("chainbound", "Exact chain-length bounds ell(m, f) and t_m(f)");
  std::size_t chain_m = 0;
  std::vector<std::string> affine;
  bool tm = false;
  std::optional<std::uint64_t> budget;
  std::optional<std::size_t> sequence_cap;
  chain_cmd->add_option("--m", chain_m, "Number of variables")->required()->check(CLI::PositiveNumber);
  chain_cmd->add_option("--affine", affine, "Bound f(i) = p + i*q given as p,q")
      ->required()
      ->delimiter(',')
      ->expected(2);
  chain_cmd->add_flag("--tm", tm, "Compute t_m(f) = ell(m, h_m o f)");
  chain_cmd->add_option("--budget", budget, "Recursion step budget (default MONORD_BUDGET)");
  chain_cmd->add_option("--sequence", sequence_cap, "Also print a maximal sequence, capped");

  auto* bounds_cmd = app.add_subcommand("bounds", "Ordinal bounds for ideals in m variables");
  std::size_t bounds_m = 0;
  bounds_cmd->add_option("m", bounds_m, "Number of variables")->required();
  bounds_cmd->add_flag("--json", as_json, "Machine-readable output");

  auto* ord_cmd = app.add_subcommand("ordinal-eval", "Ordinal arithmetic in Cantor normal form");
  std::string ord_a;
  std::optional<std::string> nat_sum_b, nat_prod_b, cmp_b;
  std::optional<unsigned long> nat_pow_n;
  bool ot = false;
  ord_cmd->add_option("alpha", ord_a, "Ordinal, e.g. \"w^2*3 + w + 5\"")->required();
  auto* o1 = ord_cmd->add_option("--nat-sum", nat_sum_b, "Natural sum with another ordinal");
  auto* o2 = ord_cmd->add_option("--nat-prod", nat_prod_b, "Natural product with another ordinal");
  auto* o3 = ord_cmd->add_option("--nat-pow", nat_pow_n, "Natural power");
  auto* o4 = ord_cmd->add_flag("--ot", ot, "Order type of the decreasing sequences");
  auto* o5 = ord_cmd->add_option("--cmp", cmp_b, "Compare with another ordinal");
  for (auto* a : {o1, o2, o3, o4, o5}) {
    for (auto* b : {o1, o2, o3, o4, o5}) {
      if (a != b) a->excludes(b);
    }
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "monord: " << e.what() << "\n";
    if (const auto* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front()) {
      err << sub->help();
    } else {
      err << app.help();
    }
    return kUsage;
  }

  auto* sub = app.get_subcommands().front();

  const bool single = sub == normalize_cmd || sub == hilbert_cmd || sub == decompose_cmd ||
                      sub == cone_cmd || sub == lexify_cmd;
  if (single) {
    if (file.empty() == each_dir.empty()) {
      err << "monord: give exactly one of an ideal file or --each DIR\n";
      return kUsage;
    }
    std::function<void(const MonomialIdeal&, std::ostream&)> fn;
    if (sub == normalize_cmd) {
      fn = [&](const MonomialIdeal& e, std::ostream& o) { do_normalize(e, as_json, o); };
    } else if (sub == hilbert_cmd) {
      fn = [&](const MonomialIdeal& e, std::ostream& o) { do_hilbert(e, as_json, o); };
    } else if (sub == decompose_cmd) {
      fn = [&](const MonomialIdeal& e, std::ostream& o) { do_decompose(e, as_json, o); };
    } else if (sub == cone_cmd) {
      fn = [&](const MonomialIdeal& e, std::ostream& o) { do_normalize(cone(e), as_json, o); };
    } else {
      fn = [&](const MonomialIdeal& e, std::ostream& o) {
        do_normalize(lex_degree ? lex_segment_ideal(e, *lex_degree) : lex_segment_ideal(e), as_json, o);
      };
    }
    return for_each_input(file, each_dir, out, err, fn);
  }

  return guarded(err, [&]() -> int {
    if (sub == contains_cmd) {
      const auto e = read_ideal_file(file);
      out << (e.contains(parse_expvec(point_text, e.dim())) ? "true" : "false") << "\n";
      return kOk;
    }
    if (sub == compare_cmd) {
      const auto order = IdealOrder::parse(order_name, parse_term_order(term_order_spec));
      const auto a = read_ideal_file(file);
      const auto b = read_ideal_file(file_b);
      const auto trace = order.trace(a, b);
      json j{{"order", order.name()}, {"result", ordering_word(trace.result)}};
      if (order.kind() == IdealOrder::Kind::kb) {
        j["term_order"] = order.term_order().name();
        j["generator_index"] = trace.generator_index ? json(*trace.generator_index) : json(nullptr);
      } else {
        if (order.kind() == IdealOrder::Kind::min_type) {
          j["decided_by"] = trace.decided_by_polynomial ? "polynomial" : "triangle";
        }
        if (!trace.decided_by_polynomial) j["slice_path"] = trace.slice_path;
      }
      out << j.dump() << "\n";
      if (trace.result < 0) return kLess;
      if (trace.result > 0) return kGreater;
      return kEqual;
    }
    if (sub == directsum_cmd) {
      do_normalize(direct_sum(read_ideal_file(file), read_ideal_file(file_b)), as_json, out);
      return kOk;
    }
    if (sub == chain_cmd) {
      const ChainBudget b{budget_from(budget)};
      const auto f = BoundFn::affine(parse_bigint(affine.at(0)), parse_bigint(affine.at(1)));
      try {
        const BigInt value = tm ? t_m(f, chain_m, b) : ell(chain_m, f, b);
        out << to_string(value) << "\n";
        if (sequence_cap) {
          const auto g = tm ? BoundFn::h_composed(chain_m, f) : f;
          for (const auto& nu : extremal_sequence(chain_m, g, *sequence_cap, b)) out << nu.str() << "\n";
        }
      } catch (const BudgetExceeded& e) {
        out << e.what() << "\n";
        return kResource;
      }
      return kOk;
    }
    if (sub == bounds_cmd) {
      const auto r = bounds_report(bounds_m);
      if (as_json) {
        json j{{"m", r.dim},
               {"height", format(r.height)},
               {"kb_order_type", format(r.kb_order_type)},
               {"type_lower", format(r.type_lower)},
               {"type_upper", format(r.type_upper)}};
        if (r.triangle_order_type) j["triangle_order_type"] = format(*r.triangle_order_type);
        out << j.dump() << "\n";
      } else {
        out << "height = " << format(r.height) << "\n";
        out << "kb = " << format(r.kb_order_type) << "\n";
        out << "lower = " << format(r.type_lower) << "\n";
        out << "upper = " << format(r.type_upper) << "\n";
        if (r.triangle_order_type) out << "triangle = " << format(*r.triangle_order_type) << "\n";
      }
      return kOk;
    }
    // ordinal-eval
    const Ordinal a = parse_ordinal(ord_a);
    if (cmp_b) {
      out << ordering_word(cmp(a, parse_ordinal(*cmp_b))) << "\n";
    } else if (nat_sum_b) {
      out << format(nat_sum(a, parse_ordinal(*nat_sum_b))) << "\n";
    } else if (nat_prod_b) {
      out << format(nat_prod(a, parse_ordinal(*nat_prod_b))) << "\n";
    } else if (nat_pow_n) {
      out << format(nat_pow(a, *nat_pow_n)) << "\n";
    } else if (ot) {
      out << format(ot_decreasing_sequences(a)) << "\n";
    } else {
      out << format(a) << "\n";
    }
    return kOk;
  });
}

}  // namespace monord::cli
