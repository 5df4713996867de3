#pragma once

// Command-line front end. `run` takes argv-style arguments and the two
// output streams, and returns the process exit code:
//   0  every reported result is exact
//   1  completed, but at least one result is a budget-limited bound
//   2  invalid input (unknown flag, k < 2, malformed weights, ...)
//   3  a verification check failed or an internal error occurred

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qsic/combinat.hpp"
#include "qsic/error.hpp"
#include "qsic/fraccolor.hpp"
#include "qsic/rational.hpp"
#include "qsic/rays.hpp"
#include "qsic/selfcheck.hpp"
#include "qsic/serialize.hpp"
#include "qsic/sicval.hpp"
#include "qsic/xgraph.hpp"

namespace qsic::cli {

enum class Command { gen, graph, alpha, chif, analyze, tables, verify };
enum class Format { json, csv, dot, text };

struct RunConfig {
  Command command = Command::gen;
  int k = 2;
  Format format = Format::text;
  Duration budget_alpha{60.0};
  Duration budget_chif{300.0};
  std::optional<std::string> weights;  // raw list, expanded once k is known
  std::optional<std::string> output_path;
  unsigned threads = 1;
  ChifMethod method = ChifMethod::column_generation;
  std::string which = "all";
  std::string suite = "all";
  int kmax = 9;
  bool extended = false;
  bool ab_coloring = false;
  std::size_t chif_max_n = 64;
  std::optional<std::string> graph_path;
};

namespace detail {

inline std::optional<Format> parse_format(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  if (s == "dot") return Format::dot;
  if (s == "text") return Format::text;
  return std::nullopt;
}

inline std::vector<Rational> parse_rational_list(const std::string& raw) {
  std::vector<Rational> out;
  std::stringstream ss(raw);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  require(!out.empty(), "empty weight list");
  for (const auto& w : out) require(sgn(w) >= 0, "weights must be nonnegative");
  return out;
}

/// Three values are class weights (I, II, III); n values are per-vertex.
inline std::vector<Rational> expand_weights(const std::string& raw, const RaySet& rs) {
  auto list = parse_rational_list(raw);
  if (list.size() == 3) return class_weights(rs, {list[0], list[1], list[2]});
  require(list.size() == rs.size(), "weights need 3 class values or " + std::to_string(rs.size()) + " per-ray values, got " +
                                        std::to_string(list.size()));
  return list;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

inline std::string join(const std::vector<int>& v, const char* sep = " ") {
  std::string s;
  for (std::size_t t = 0; t < v.size(); ++t) s += (t ? sep : "") + std::to_string(v[t]);
  return s;
}

// Exponents are written 1..k for display (q^k = q^0 = 1).
inline std::string display_exponent(int e, int k) { return std::to_string(e == 0 ? k : e); }

inline std::string component_text(const CycNum& c) { return c.to_string(); }

inline std::string ray_text(const Ray& r) {
  std::string s = std::string(to_string(r.cls)) + " (";
  for (std::size_t a = 0; a < 3; ++a) s += (a ? ", " : "") + component_text(r.components[a]);
  s += ")";
  if (r.cls == RayClass::II) s += "  i=" + display_exponent(r.exp_i, r.order);
  if (r.cls == RayClass::III) s += "  i=" + display_exponent(r.exp_i, r.order) + " j=" + display_exponent(r.exp_j, r.order);
  return s;
}

}  // namespace detail

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int execute(const RunConfig& cfg) {
    std::ostringstream buffer;
    int code = 0;
    switch (cfg.command) {
      case Command::gen: code = gen(cfg, buffer); break;
      case Command::graph: code = graph(cfg, buffer); break;
      case Command::alpha: code = alpha(cfg, buffer); break;
      case Command::chif: code = chif(cfg, buffer); break;
      case Command::analyze: code = analyze_cmd(cfg, buffer); break;
      case Command::tables: code = tables(cfg, buffer); break;
      case Command::verify: code = verify(cfg, buffer); break;
    }
    if (cfg.output_path) {
      std::ofstream f(*cfg.output_path, std::ios::binary);
      if (!f) fail(ErrorKind::invalid_parameter, "cannot open output file " + *cfg.output_path);
      f << buffer.str();
    } else {
      out_ << buffer.str();
    }
    return code;
  }

 private:
  static void require_format(Format f, std::initializer_list<Format> allowed, const char* command) {
    for (auto a : allowed)
      if (a == f) return;
    fail(ErrorKind::invalid_parameter, std::string("format not supported by '") + command + "'");
  }

  int gen(const RunConfig& cfg, std::ostream& os) {
    require_format(cfg.format, {Format::json, Format::csv, Format::text}, "gen");
    const RaySet rs = generate_set(cfg.k);
    if (cfg.format == Format::json) {
      os << to_json(rs).dump(2) << "\n";
    } else if (cfg.format == Format::csv) {
      os << "index,class,family,i,j,c0,c1,c2\n";
      for (std::size_t v = 0; v < rs.size(); ++v) {
        const Ray& r = rs[v];
        os << v << "," << to_string(r.cls) << "," << r.family << "," << r.exp_i << "," << r.exp_j;
        for (const auto& c : r.components) os << "," << detail::csv_field(c.to_string());
        os << "\n";
      }
    } else {
      os << "k = " << cfg.k << ", n = " << rs.size() << "\n";
      for (std::size_t v = 0; v < rs.size(); ++v) os << v << ": " << detail::ray_text(rs[v]) << "\n";
    }
    return 0;
  }

  ExclusivityGraph load_graph(const RunConfig& cfg) {
    if (!cfg.graph_path) return build_graph(generate_set(cfg.k), cfg.threads);
    std::ifstream f(*cfg.graph_path);
    if (!f) fail(ErrorKind::invalid_parameter, "cannot read graph file " + *cfg.graph_path);
    json j;
    try {
      f >> j;
    } catch (const json::exception& e) {
      fail(ErrorKind::invalid_parameter, std::string("malformed graph JSON: ") + e.what());
    }
    return graph_from_json(j);
  }

  int graph(const RunConfig& cfg, std::ostream& os) {
    const ExclusivityGraph g = load_graph(cfg);
    switch (cfg.format) {
      case Format::json: os << to_json(g).dump() << "\n"; break;
      case Format::dot: os << export_dot(g); break;
      case Format::csv:
        os << "u,v\n";
        for (auto [u, v] : g.edges()) os << u << "," << v << "\n";
        break;
      case Format::text: {
        os << "vertices " << g.size() << "\nedges " << g.edge_count() << "\n";
        os << "orthogonal bases " << orthogonal_bases(g).size() << "\n";
        if (!cfg.graph_path)
          for (const auto& c : structural_report(g).checks)
            os << "(" << c.item << ") " << (c.passed ? "pass" : "fail") << "  " << c.description
               << (c.passed ? "" : "  counterexample: " + detail::join(c.counterexample)) << "\n";
        break;
      }
    }
    return 0;
  }

  int alpha(const RunConfig& cfg, std::ostream& os) {
    require_format(cfg.format, {Format::json, Format::csv, Format::text}, "alpha");
    std::optional<std::vector<Rational>> weights;
    IndependenceResult r;
    ExclusivityGraph g;
    std::vector<int> warm;
    if (cfg.graph_path) {
      g = load_graph(cfg);
      if (cfg.weights) weights = detail::parse_rational_list(*cfg.weights);
    } else {
      const RaySet rs = generate_set(cfg.k);
      g = build_graph(rs, cfg.threads);
      if (cfg.weights) weights = detail::expand_weights(*cfg.weights, rs);
      else warm = construct_independent_set(cfg.k, rs, g);
    }
    r = max_independent_set(g, weights, cfg.budget_alpha, warm);
    if (cfg.format == Format::json) {
      json j = to_json(r);
      if (!cfg.graph_path) j["alpha_conjecture"] = to_json(alpha_formula(cfg.k));
      os << j.dump(2) << "\n";
    } else if (cfg.format == Format::csv) {
      os << "k,n,alpha,status,upper_bound\n";
      os << (cfg.graph_path ? 0 : cfg.k) << "," << g.size() << "," << to_string(r.value) << "," << to_string(r.status) << ","
         << to_string(r.upper_bound) << "\n";
    } else {
      os << "alpha = " << to_string(r.value) << " (" << to_string(r.status) << ")\n";
      if (!r.exact()) os << "upper bound = " << to_string(r.upper_bound) << "\n";
      os << "witness = " << detail::join(r.witness) << "\n";
    }
    return r.exact() ? 0 : 1;
  }

  int chif(const RunConfig& cfg, std::ostream& os) {
    require_format(cfg.format, {Format::json, Format::csv, Format::text}, "chif");
    const ExclusivityGraph g = load_graph(cfg);
    const FractionalColoring fc = fractional_chromatic(g, cfg.method, cfg.budget_chif);
    const bool certified = fc.exact() && verify_certificates(g, fc, cfg.budget_chif);
    if (fc.exact() && !certified) fail(ErrorKind::internal_error, "certificate re-verification failed");
    std::optional<AbColoring> ab;
    if (cfg.ab_coloring && fc.exact()) ab = extract_ab_coloring(fc);
    if (cfg.format == Format::json) {
      json j = to_json(fc);
      j["certified"] = certified;
      if (ab) j["ab_coloring"] = to_json(*ab);
      os << j.dump(2) << "\n";
    } else if (cfg.format == Format::csv) {
      os << "k,n,chi_f,status,lower,upper\n";
      os << (cfg.graph_path ? 0 : cfg.k) << "," << g.size() << "," << to_string(fc.value) << "," << to_string(fc.status) << ","
         << to_string(fc.lower) << "," << to_string(fc.upper) << "\n";
    } else {
      if (fc.exact())
        os << "chi_f = " << to_string(fc.value) << " (exact, certificates verified)\n";
      else
        os << "chi_f in [" << to_string(fc.lower) << ", " << to_string(fc.upper) << "] (budget exhausted)\n";
      os << "rh criterion: " << to_string(rh_criterion(fc)) << "\n";
      for (const auto& ws : fc.primal) os << "  " << to_string(ws.weight) << " x {" << detail::join(ws.set) << "}\n";
      if (ab) os << "a:b coloring " << ab->a << ":" << ab->b << "\n";
    }
    return fc.exact() ? 0 : 1;
  }

  int analyze_cmd(const RunConfig& cfg, std::ostream& os) {
    require_format(cfg.format, {Format::json, Format::text}, "analyze");
    AnalyzeOptions opt;
    opt.alpha_budget = cfg.budget_alpha;
    opt.chif_budget = cfg.budget_chif;
    opt.chif_method = cfg.method;
    opt.chif_max_vertices = cfg.chif_max_n;
    opt.threads = cfg.threads;
    if (cfg.weights) {
      auto list = detail::parse_rational_list(*cfg.weights);
      require(list.size() == 3, "analyze takes class weights (three values)");
      opt.class_weights = std::array<Rational, 3>{list[0], list[1], list[2]};
    }
    const SicReport rep = analyze(cfg.k, opt);
    if (cfg.format == Format::json) {
      os << to_json(rep).dump(2) << "\n";
    } else {
      os << "k = " << rep.k << ", n = " << rep.n << ", edges = " << rep.edges << "\n";
      os << "alpha = " << to_string(rep.alpha.value) << " (" << to_string(rep.alpha.status)
         << "), closed form " << to_string(rep.alpha_conjecture) << ", n/3 = "
         << to_string(Rational(Rational(static_cast<long>(rep.n)) / Rational(3))) << "\n";
      if (rep.chif && rep.chif->exact())
        os << "chi_f = " << to_string(rep.chif->value) << "\n";
      else
        os << "chi_f in [" << to_string(rep.chif_lower) << ", " << to_string(rep.chif_upper) << "]\n";
      if (rep.quantum_value) os << "sum of projectors = " << to_string(*rep.quantum_value) << " * Identity\n";
      os << "rh criterion: " << to_string(rep.rh_verdict) << "\n";
      os << "inequality criterion: " << to_string(rep.ineq_verdict) << "\n";
      if (rep.weighted) {
        const auto& w = *rep.weighted;
        os << "weighted (" << to_string(rep.weighted_class_weights[0]) << "," << to_string(rep.weighted_class_weights[1])
           << "," << to_string(rep.weighted_class_weights[2]) << "): classical " << to_string(w.classical.value)
           << ", quantum " << (w.quantum_exact ? to_string(*w.quantum_exact) : std::to_string(w.quantum_numeric))
           << (w.violated ? ", violated" : ", not violated");
        if (w.violation_ratio) os << ", ratio " << to_string(*w.violation_ratio);
        os << "\n";
      }
      os << "verdict: " << to_string(rep.verdict) << "\n";
      for (const auto& note : rep.notes) os << "note: " << note << "\n";
    }
    bool exact = rep.alpha.exact() && (!rep.chif || rep.chif->exact()) && (!rep.weighted || rep.weighted->classical.exact());
    return exact ? 0 : 1;
  }

  int tables(const RunConfig& cfg, std::ostream& os) {
    require_format(cfg.format, {Format::json, Format::csv, Format::text}, "tables");
    require(cfg.which == "1" || cfg.which == "2" || cfg.which == "all", "--which must be 1, 2 or all");
    TableOptions opt;
    opt.alpha_budget = cfg.extended ? Duration(3600.0) : cfg.budget_alpha;
    opt.chif_budget = cfg.extended ? Duration(3600.0) : cfg.budget_chif;
    opt.chif_method = cfg.method;
    opt.threads = cfg.threads;
    const bool first = cfg.which != "2", second = cfg.which != "1";
    const Tables t = reproduce_tables(opt, first, second);
    if (cfg.format == Format::json) {
      os << to_json(t).dump(2) << "\n";
    } else if (cfg.format == Format::csv) {
      if (first) {
        os << "k,n,chi_f,status\n";
        for (const auto& r : t.table1) {
          os << r.k << "," << r.n << ",";
          if (r.chif.exact()) os << to_string(r.chif.value);
          else os << "[" << to_string(r.chif.lower) << ";" << to_string(r.chif.upper) << "]";
          os << "," << to_string(r.chif.status) << "\n";
        }
      }
      if (first && second) os << "\n";
      if (second) {
        os << "k,n,alpha,n/3,status\n";
        for (const auto& r : t.table2)
          os << r.k << "," << r.n << "," << to_string(r.alpha.value) << "," << to_string(r.n_over_3) << ","
             << to_string(r.alpha.status) << "\n";
      }
    } else {
      if (first) {
        os << "fractional chromatic number\n" << std::setw(4) << "k" << std::setw(6) << "n" << "  chi_f\n";
        for (const auto& r : t.table1)
          os << std::setw(4) << r.k << std::setw(6) << r.n << "  "
             << (r.chif.exact() ? to_string(r.chif.value)
                                : "[" + to_string(r.chif.lower) + ", " + to_string(r.chif.upper) + "]")
             << (r.certified ? "" : "  (not certified)") << "\n";
      }
      if (first && second) os << "\n";
      if (second) {
        os << "independence number\n" << std::setw(4) << "k" << std::setw(6) << "n" << std::setw(8) << "alpha"
           << std::setw(8) << "n/3" << "\n";
        for (const auto& r : t.table2)
          os << std::setw(4) << r.k << std::setw(6) << r.n << std::setw(8)
             << (to_string(r.alpha.value) + (r.alpha.exact() ? "" : "+")) << std::setw(8) << to_string(r.n_over_3) << "\n";
      }
    }
    bool exact = true;
    for (const auto& r : t.table1) exact = exact && r.chif.exact();
    for (const auto& r : t.table2) exact = exact && r.alpha.exact();
    return exact ? 0 : 1;
  }

  int verify(const RunConfig& cfg, std::ostream& os) {
    require_format(cfg.format, {Format::json, Format::text}, "verify");
    SelfCheck sc(cfg.kmax, cfg.budget_alpha, cfg.budget_chif);
    const auto results = sc.run(cfg.suite);
    bool ok = true;
    json arr = json::array();
    for (const auto& r : results) {
      ok = ok && r.passed;
      if (cfg.format == Format::json)
        arr.push_back({{"suite", r.suite}, {"check", r.name}, {"passed", r.passed}, {"detail", r.detail}});
      else
        os << (r.passed ? "PASS " : "FAIL ") << r.suite << ": " << r.name << (r.passed ? "" : "  [" + r.detail + "]") << "\n";
    }
    if (cfg.format == Format::json) os << arr.dump(2) << "\n";
    return ok ? 0 : 3;
  }

  std::ostream& out_;
  std::ostream& err_;
};

inline unsigned default_threads() {
  if (const char* env = std::getenv("QSIC_THREADS")) {
    try {
      int t = std::stoi(env);
      if (t >= 1) return static_cast<unsigned>(t);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

/// Parses `args` (without the program name) and runs the command.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact contextuality analysis of the qutrit root-of-unity ray family", "qsic"};
  app.require_subcommand(1, 1);
  RunConfig cfg;
  cfg.threads = default_threads();
  std::string format;
  double budget_alpha = 60.0, budget_chif = 300.0;
  std::string method = "colgen";

  auto add_common = [&](CLI::App* sub, bool with_k) {
    if (with_k) sub->add_option("--k", cfg.k, "root-of-unity order (k >= 2)");
    sub->add_option("--format", format, "output format");
    sub->add_option("--output", cfg.output_path, "write output to this file");
    sub->add_option("--threads", cfg.threads, "worker threads (default: $QSIC_THREADS or 1)");
    sub->add_option("--budget-alpha", budget_alpha, "independence-number budget in seconds");
    sub->add_option("--budget-chif", budget_chif, "fractional-chromatic budget in seconds");
  };
  auto* gen = app.add_subcommand("gen", "list the rays for one k");
  add_common(gen, true);
  auto* graph = app.add_subcommand("graph", "exclusivity graph export");
  add_common(graph, true);
  graph->add_option("--graph", cfg.graph_path, "read a JSON adjacency file instead of generating");
  auto* alpha = app.add_subcommand("alpha", "exact (weighted) independence number");
  add_common(alpha, true);
  alpha->add_option("--weights", cfg.weights, "class weights 'w1,w2,w3' or one rational per ray");
  alpha->add_option("--graph", cfg.graph_path, "read a JSON adjacency file instead of generating");
  auto* chif = app.add_subcommand("chif", "exact fractional chromatic number with certificates");
  add_common(chif, true);
  chif->add_option("--method", method, "enumerate | colgen");
  chif->add_flag("--ab", cfg.ab_coloring, "also extract an a:b-coloring");
  chif->add_option("--graph", cfg.graph_path, "read a JSON adjacency file instead of generating");
  auto* analyze = app.add_subcommand("analyze", "full contextuality report for one k");
  add_common(analyze, true);
  analyze->add_option("--weights", cfg.weights, "class weights 'w1,w2,w3' for an extra weighted inequality");
  analyze->add_option("--method", method, "enumerate | colgen");
  analyze->add_option("--chif-max-n", cfg.chif_max_n, "skip chi_f above this vertex count");
  auto* tables = app.add_subcommand("tables", "reproduce the chi_f and alpha tables");
  add_common(tables, false);
  tables->add_option("--which", cfg.which, "1 | 2 | all");
  tables->add_option("--method", method, "enumerate | colgen");
  tables->add_flag("--extended", cfg.extended, "raise budgets to one hour per cell");
  auto* verify = app.add_subcommand("verify", "run the self-verification suites");
  add_common(verify, false);
  verify->add_option("--suite", cfg.suite, "all | cyclo | rays | graph | combinat | fraccolor | sicval");
  verify->add_option("--kmax", cfg.kmax, "largest k exercised");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  const std::pair<CLI::App*, Command> table[] = {{gen, Command::gen},         {graph, Command::graph},
                                                 {alpha, Command::alpha},     {chif, Command::chif},
                                                 {analyze, Command::analyze}, {tables, Command::tables},
                                                 {verify, Command::verify}};
  for (auto [sub, command] : table)
    if (sub->parsed()) cfg.command = command;

  try {
    if (format.empty()) {
      cfg.format = cfg.command == Command::graph ? Format::json : Format::text;
      if (cfg.command == Command::tables) cfg.format = Format::csv;
    } else {
      auto f = detail::parse_format(format);
      require(f.has_value(), "unknown format '" + format + "'");
      cfg.format = *f;
    }
    require(method == "enumerate" || method == "colgen", "--method must be enumerate or colgen");
    cfg.method = method == "enumerate" ? ChifMethod::enumerate : ChifMethod::column_generation;
    require(budget_alpha > 0 && budget_chif > 0, "budgets must be positive");
    cfg.budget_alpha = Duration(budget_alpha);
    cfg.budget_chif = Duration(budget_chif);
    require(cfg.threads >= 1, "--threads must be >= 1");
    const bool uses_k = cfg.command != Command::tables && cfg.command != Command::verify && !cfg.graph_path;
    if (uses_k) require(cfg.k >= 2, "k must be >= 2, got " + std::to_string(cfg.k));
    if (uses_k) require(ray_count(cfg.k) <= VertexSet::capacity, "k too large for the graph capacity");
    Runner runner(out, err);
    return runner.execute(cfg);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::invalid_parameter ? 2 : 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace qsic::cli
