#include "tlgram/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <map>
#include <ostream>
#include <set>

#include "tlgram/combinatorics.hpp"
#include "tlgram/errors.hpp"
#include "tlgram/gram.hpp"
#include "tlgram/guards.hpp"
#include "tlgram/linalg.hpp"
#include "tlgram/skein.hpp"
#include "tlgram/temperley_lieb.hpp"

namespace tlgram::cli {
namespace {

using Json = nlohmann::ordered_json;

struct CommandSpec {
  std::string description;
  std::vector<std::string> positionals;  // names, in order, of n/k/j slots
  std::string default_format;
  std::set<std::string> formats;
};

const std::map<std::string, CommandSpec>& commands() {
  static const std::map<std::string, CommandSpec> specs = {
      {"enumerate", {"list the C(2n,n) basis diagrams in canonical order", {"n"}, "json", {"json", "csv", "text"}}},
      {"gram", {"print the Gram matrix G_n(a,d)", {"n"}, "csv", {"csv", "json"}}},
      {"det-verify", {"check det G_n against the Chebyshev product", {"n"}, "json", {"json", "text"}}},
      {"lemma2", {"check G_n(-a,d) = P G_n(a,d) P^-1 entrywise", {"n"}, "json", {"json", "text"}}},
      {"nullity-gram", {"nullity of G_n at a = (-1)^(k-1) T_k(d0)", {"n", "k"}, "json", {"json"}}},
      {"nullity-skein", {"nullity of F_{n,k} at a rational A", {"n", "k"}, "json", {"json"}}},
      {"jones-wenzl", {"print the Jones-Wenzl idempotent f_k", {"k"}, "text", {"text", "json"}}},
      {"counts", {"tilde-NC disk counts against C(2n,n)-C(2n,n-k-1) for n+k <= N", {"N"}, "csv", {"csv", "json"}}},
      {"bijection", {"subsets of n-j marks <-> diagrams cutting S at least j times", {"n", "j"}, "json", {"json"}}},
      {"telescoping", {"2 sum i C(2n,n-i) = n C(2n,n) for n = 1..N", {"N"}, "text", {"text", "json"}}},
  };
  return specs;
}

Json header(const RunConfig& c) {
  Json params = Json::object();
  const auto& spec = commands().at(c.command);
  for (const auto& name : spec.positionals) params[name] = name == "n" || name == "N" ? c.n : (name == "k" ? c.k : c.j);
  if (c.command == "det-verify") {
    params["mode"] = c.mode;
    if (c.mode == "modular") params["trials"] = c.trials;
  }
  if (c.command == "nullity-gram" || c.command == "nullity-skein") {
    if (c.sample) {
      params["sample"] = *c.sample;
    } else {
      params["samples"] = c.samples;
    }
  }
  params["seed"] = c.seed;
  Json h;
  h["tool"] = "tlgram";
  h["version"] = kVersion;
  h["command"] = c.command;
  h["parameters"] = params;
  return h;
}

std::string comment_header(const RunConfig& c) {
  std::string line = "# tlgram " + std::string(kVersion) + " " + c.command;
  const Json params = header(c)["parameters"];
  for (const auto& [key, value] : params.items()) line += " " + key + "=" + (value.is_string() ? value.get<std::string>() : value.dump());
  return line + "\n";
}

ExitCode status(bool pass) { return pass ? ExitCode::pass : ExitCode::verification_failed; }

ExitCode cmd_enumerate(const RunConfig& c, const std::string& format, std::ostream& out) {
  const auto basis = enumerate(c.n);
  if (format == "json") {
    Json j = header(c);
    j["count"] = basis.size();
    j["expected"] = binomial(2 * c.n, c.n).get_ui();
    Json arr = Json::array();
    for (std::size_t i = 0; i < basis.size(); ++i) {
      arr.push_back({{"index", i + 1}, {"text", basis[i].to_string()}, {"cut_crossings", basis[i].cut_crossings()},
                     {"chords", basis[i].to_json()}});
    }
    j["diagrams"] = arr;
    out << j.dump(2) << "\n";
  } else if (format == "csv") {
    out << comment_header(c) << "index,diagram,cut_crossings\n";
    for (std::size_t i = 0; i < basis.size(); ++i) {
      out << i + 1 << "," << csv_field(basis[i].to_string()) << "," << basis[i].cut_crossings() << "\n";
    }
  } else {
    out << comment_header(c);
    for (const auto& d : basis) out << d.to_string() << "\n";
  }
  return status(basis.size() == binomial(2 * c.n, c.n).get_ui());
}

ExitCode cmd_gram(const RunConfig& c, const std::string& format, std::ostream& out) {
  const GramMatrix g = gram_matrix(c.n);
  const std::size_t size = g.basis.size();
  if (format == "json") {
    Json j = header(c);
    Json basis = Json::array();
    for (const auto& b : g.basis) basis.push_back(b.to_string());
    Json rows = Json::array();
    for (std::size_t r = 0; r < size; ++r) {
      Json row = Json::array();
      for (std::size_t col = 0; col < size; ++col) row.push_back(g.entries(r, col).to_string());
      rows.push_back(row);
    }
    j["basis"] = basis;
    j["entries"] = rows;
    out << j.dump(2) << "\n";
  } else {
    out << comment_header(c) << "diagram";
    for (std::size_t col = 0; col < size; ++col) out << "," << col + 1;
    out << "\n";
    for (std::size_t r = 0; r < size; ++r) {
      out << csv_field(g.basis[r].to_string());
      for (std::size_t col = 0; col < size; ++col) out << "," << csv_field(g.entries(r, col).to_string());
      out << "\n";
    }
  }
  return ExitCode::pass;
}

ExitCode cmd_det_verify(const RunConfig& c, const std::string& format, std::ostream& out) {
  Json j = header(c);
  j["n"] = c.n;
  j["mode"] = c.mode;
  bool pass = false;
  if (c.mode == "symbolic") {
    const SymbolicReport r = verify_conjecture_symbolic(c.n);
    pass = r.pass;
    j["trials"] = 0;
    j["prime"] = nullptr;
    j["seed"] = c.seed;
    j["pass"] = r.pass;
    j["bound"] = 0.0;
    j["determinant"] = r.determinant.to_string();
    j["product"] = r.product.to_string();
    if (format == "text") {
      out << comment_header(c) << (pass ? "pass" : "FAIL") << "\n" << r.determinant.to_string() << "\n";
      return status(pass);
    }
  } else {
    const ModularReport r = verify_conjecture_modular(c.n, c.trials, c.seed);
    pass = r.pass;
    j["trials"] = r.trials;
    j["prime"] = r.prime;
    j["seed"] = r.seed;
    j["pass"] = r.pass;
    j["bound"] = r.failure_bound;
    j["degree_bound"] = identity_degree_bound(c.n);
    Json results = Json::array();
    for (const auto& t : r.results) {
      results.push_back({{"index", t.index}, {"alpha", t.alpha}, {"delta", t.delta},
                         {"determinant", t.determinant}, {"product", t.product}, {"pass", t.pass}});
    }
    j["results"] = results;
    if (format == "text") {
      out << comment_header(c);
      for (const auto& t : r.results) out << "trial " << t.index << (t.pass ? " pass" : " FAIL") << "\n";
      out << (pass ? "pass" : "FAIL") << " prime=" << r.prime << " bound=" << Json(r.failure_bound).dump() << "\n";
      return status(pass);
    }
  }
  out << j.dump(2) << "\n";
  return status(pass);
}

ExitCode cmd_lemma2(const RunConfig& c, const std::string& format, std::ostream& out) {
  const GramMatrix g = gram_matrix(c.n);
  const bool pass = verify_lemma2(g);
  if (format == "text") {
    out << comment_header(c) << (pass ? "pass" : "FAIL") << "\n";
  } else {
    Json j = header(c);
    j["n"] = c.n;
    j["signs"] = sign_matrix(g.basis);
    j["pass"] = pass;
    out << j.dump(2) << "\n";
  }
  return status(pass);
}

Json nullity_line(int n, int k, const Rational& sample, std::size_t cols, std::size_t nullity, std::size_t bound) {
  return {{"n", n}, {"k", k}, {"sample", sample.get_str()}, {"rank", cols - nullity},
          {"nullity", nullity}, {"bound", bound}, {"pass", nullity >= bound}};
}

ExitCode cmd_nullity(const RunConfig& c, bool skein, std::ostream& out) {
  require_range("n", c.n, 1, skein ? 4 : 5);
  require_range("k", c.k, 1, c.n);
  const GramMatrix g = gram_matrix(c.n);
  const std::size_t cols = g.basis.size();
  const std::size_t bound = binomial(2 * c.n, c.n - c.k).get_ui();
  Json j = header(c);
  Json lines = Json::array();
  bool pass = true;
  if (c.sample) {
    const Rational q = parse_rational(*c.sample);
    const std::size_t nullity = skein ? nullity_f(g, c.k, q) : specialization_nullity(g, c.k, q);
    lines.push_back(nullity_line(c.n, c.k, q, cols, nullity, bound));
    pass = nullity >= bound;
    j["attempts"] = 1;
  } else if (skein) {
    const SkeinNullitySampling s = sample_nullity_f(g, c.k, c.samples, c.seed);
    for (const auto& x : s.samples) lines.push_back(nullity_line(c.n, c.k, x.sample, cols, x.nullity, bound));
    pass = s.pass;
    j["attempts"] = s.attempts;
    j["consistent"] = s.consistent;
  } else {
    const NullitySampling s = sample_specialization_nullity(g, c.k, c.samples, c.seed);
    for (const auto& x : s.samples) lines.push_back(nullity_line(c.n, c.k, x.sample, cols, x.nullity, bound));
    pass = s.pass;
    j["attempts"] = s.attempts;
    j["consistent"] = s.consistent;
  }
  j["variable"] = skein ? "A" : "delta";
  j["bound"] = bound;
  j["pass"] = pass;
  j["samples"] = lines;
  out << j.dump(2) << "\n";
  return status(pass);
}

ExitCode cmd_jones_wenzl(const RunConfig& c, const std::string& format, std::ostream& out) {
  const TLElement f = jones_wenzl(c.k);
  const bool pass = markov_closure(f) == RationalFunction(delta_k(c.k));
  if (format == "json") {
    Json j = header(c);
    Json terms = Json::array();
    for (const auto& [d, coeff] : f.terms()) terms.push_back({{"diagram", d.to_string()}, {"coefficient", coeff.to_string()}});
    j["terms"] = terms;
    j["closure"] = markov_closure(f).to_string();
    out << j.dump(2) << "\n";
  } else {
    out << comment_header(c);
    for (const auto& [d, coeff] : f.terms()) out << "(" << d.to_string() << ", " << coeff.to_string() << ")\n";
  }
  return status(pass);
}

ExitCode cmd_counts(const RunConfig& c, const std::string& format, std::ostream& out) {
  require_range("N", c.n, 0, 8);
  bool pass = true;
  Json rows = Json::array();
  std::string csv = comment_header(c) + "n,k,count_tilde,formula,match\n";
  for (int n = 0; n <= c.n; ++n) {
    for (int k = 0; n + k <= c.n; ++k) {
      const std::uint64_t count = count_tilde(n, k);
      const BigInt formula = count_tilde_formula(n, k);
      const bool match = formula == count;
      pass = pass && match;
      rows.push_back({{"n", n}, {"k", k}, {"count_tilde", count}, {"formula", formula.get_ui()}, {"match", match}});
      csv += std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(count) + "," + formula.get_str() + "," +
             (match ? "true" : "false") + "\n";
    }
  }
  if (format == "json") {
    Json j = header(c);
    j["rows"] = rows;
    j["pass"] = pass;
    out << j.dump(2) << "\n";
  } else {
    out << csv;
  }
  return status(pass);
}

ExitCode cmd_bijection(const RunConfig& c, std::ostream& out) {
  require_range("n", c.n, 1, 6);
  require_range("j", c.j, 1, c.n);
  const int size = 2 * c.n;
  const int choose = c.n - c.j;
  Json pairs = Json::array();
  std::set<std::string> images;
  bool roundtrip = true;
  // Subsets in lexicographic order of their sorted mark lists.
  std::vector<int> marks(static_cast<std::size_t>(choose));
  std::function<void(int, int)> visit = [&](int next, int depth) {
    if (depth == choose) {
      const std::set<int> subset(marks.begin(), marks.end());
      const AnnularDiagram d = subset_to_diagram(c.n, subset, c.j);
      const bool ok = diagram_to_subset(d, c.j) == subset;
      roundtrip = roundtrip && ok;
      images.insert(d.to_string());
      pairs.push_back({{"subset", marks}, {"diagram", d.to_string()}, {"chords", d.to_json()},
                       {"cut_crossings", d.cut_crossings()}, {"roundtrip", ok}});
      return;
    }
    for (int m = next; m <= size; ++m) {
      marks[static_cast<std::size_t>(depth)] = m;
      visit(m + 1, depth + 1);
    }
  };
  visit(1, 0);
  const std::uint64_t stratum = count_atleast(c.n, c.j);
  const std::uint64_t expected = binomial(size, choose).get_ui();
  const bool pass = roundtrip && images.size() == pairs.size() && stratum == expected && images.size() == stratum;
  Json j = header(c);
  j["subsets"] = pairs.size();
  j["stratum_size"] = stratum;
  j["expected"] = expected;
  j["injective"] = images.size() == pairs.size();
  j["roundtrip"] = roundtrip;
  j["pass"] = pass;
  j["pairs"] = pairs;
  out << j.dump(2) << "\n";
  return status(pass);
}

ExitCode cmd_telescoping(const RunConfig& c, const std::string& format, std::ostream& out) {
  require_range("N", c.n, 1, 100000);
  bool pass = true;
  Json lines = Json::array();
  std::string text = comment_header(c);
  for (int n = 1; n <= c.n; ++n) {
    const TelescopingLine t = telescoping(n);
    pass = pass && t.pass;
    lines.push_back({{"n", n}, {"lhs", t.lhs.get_str()}, {"rhs", t.rhs.get_str()}, {"pass", t.pass}});
    text += "n=" + std::to_string(n) + " lhs=" + t.lhs.get_str() + " rhs=" + t.rhs.get_str() + (t.pass ? " pass" : " FAIL") + "\n";
  }
  if (format == "json") {
    Json j = header(c);
    j["lines"] = lines;
    j["pass"] = pass;
    out << j.dump(2) << "\n";
  } else {
    out << text;
  }
  return status(pass);
}

}  // namespace

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\r\n") == std::string::npos) return value;
  std::string quoted = "\"";
  for (char ch : value) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + "\"";
}

std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& help_out) {
  RunConfig c;
  CLI::App app{"Exact type-B Temperley-Lieb Gram determinant toolkit"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.add_option("--format", c.format, "output format: json, csv or text (per-command default)")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--mode", c.mode, "det-verify mode: symbolic (n <= 3) or modular (n <= 5)")
      ->check(CLI::IsMember({"symbolic", "modular"}));
  app.add_option("--trials", c.trials, "modular point evaluations, 1..1048576")->check(CLI::Range(1, 1 << 20));
  app.add_option("--samples", c.samples, "random rational samples for nullity commands, 1..64")->check(CLI::Range(1, 64));
  app.add_option("--sample", c.sample, "explicit rational sample p/q for nullity commands");
  app.add_option("--seed", c.seed, "64-bit seed for every random draw");
  app.add_option("--out", c.out, "write the report to this file instead of stdout");
  app.footer(std::string("Size guards can be lifted (unsupported) with ") + std::string(kGuardOverrideEnv) + "=1.");

  for (const auto& [name, spec] : commands()) {
    CLI::App* sub = app.add_subcommand(name, spec.description);
    sub->fallthrough();
    for (const auto& pos : spec.positionals) {
      int* slot = pos == "n" || pos == "N" ? &c.n : (pos == "k" ? &c.k : &c.j);
      auto* opt = sub->add_option(pos, *slot, pos);
      if (name == "counts") {
        c.n = 8;
        opt->description("largest n+k (default 8)");
      } else {
        opt->required();
      }
    }
    sub->callback([&c, name = name] { c.command = name; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    help_out << app.help();
    return std::nullopt;
  } catch (const CLI::CallForVersion&) {
    help_out << kVersion << "\n";
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
  return c;
}

ExitCode run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  auto it = commands().find(config.command);
  if (it == commands().end()) {
    err << "unknown command '" << config.command << "'\n";
    return ExitCode::usage;
  }
  const std::string format = config.format.empty() ? it->second.default_format : config.format;
  if (!it->second.formats.contains(format)) {
    err << "--format " << format << " is not supported by " << config.command << " (valid:";
    for (const auto& f : it->second.formats) err << " " << f;
    err << ")\n";
    return ExitCode::usage;
  }
  if (config.mode != "symbolic" && config.mode != "modular") {
    err << "--mode must be symbolic or modular\n";
    return ExitCode::usage;
  }
  try {
    const std::string& cmd = config.command;
    if (cmd == "enumerate") return cmd_enumerate(config, format, out);
    if (cmd == "gram") return cmd_gram(config, format, out);
    if (cmd == "det-verify") return cmd_det_verify(config, format, out);
    if (cmd == "lemma2") return cmd_lemma2(config, format, out);
    if (cmd == "nullity-gram") return cmd_nullity(config, false, out);
    if (cmd == "nullity-skein") return cmd_nullity(config, true, out);
    if (cmd == "jones-wenzl") return cmd_jones_wenzl(config, format, out);
    if (cmd == "counts") return cmd_counts(config, format, out);
    if (cmd == "bijection") return cmd_bijection(config, out);
    return cmd_telescoping(config, format, out);
  } catch (const GuardError& e) {
    err << config.command << ": " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << config.command << ": " << e.what() << "\n";
  } catch (const std::domain_error& e) {
    err << config.command << ": " << e.what() << "\n";
  }
  return ExitCode::usage;
}

}  // namespace tlgram::cli
