#pragma once

// Command-line front end. Kept in a header so tests can drive it without a subprocess.

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "epglab/epg.hpp"
#include "epglab/error.hpp"
#include "epglab/finite_group.hpp"
#include "epglab/group_structure.hpp"
#include "epglab/json_io.hpp"
#include "epglab/labeling.hpp"
#include "epglab/oracle.hpp"
#include "epglab/path_cover.hpp"
#include "epglab/theorem_suite.hpp"
#include "epglab/theorems.hpp"

namespace epglab {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitLimit = 3;

struct CliConfig {
  std::string command;  // "group info", "graph", "lambda", "verify"
  std::string spec;
  std::string format;
  std::string method = "auto";
  std::string suite = "all";
  bool complement = false;
  bool power = false;
  int timeout_seconds = 60;
  int max_order = 16;
  std::uint64_t seed = 0;
};

namespace cli_detail {

inline Json class_counts_json(const CyclicClassPartition& cls) {
  Json j = Json::object();
  for (const auto& [d, c] : cls.count) j[std::to_string(d)] = c;
  return j;
}

inline int group_info(const CliConfig& cfg, std::ostream& out) {
  const FiniteGroup g = build_group(cfg.spec);
  const CyclicClassPartition cls = cyclic_classes(g);
  const MaximalCyclicFamily fam = maximal_cyclic_subgroups(g);
  const StructureReport rep = classify_structure(g);
  const auto dom = dominating_vertices(enhanced_power_graph(g));
  if (cfg.format == "json") {
    Json j;
    j["group"] = g.name();
    j["order"] = g.order();
    j["exponent"] = cls.exponent;
    j["maximal_cyclic"] = fam.size();
    j["m"] = fam.m;
    j["C"] = class_counts_json(cls);
    j["dom_size"] = dom.size();
    j["form"] = to_string(rep.form);
    j["nilpotent"] = rep.is_nilpotent;
    j["abelian"] = rep.is_abelian;
    j["simple"] = rep.is_simple;
    j["notes"] = rep.notes;
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  out << "group     " << g.name() << '\n'
      << "order     " << g.order() << '\n'
      << "exponent  " << cls.exponent << '\n'
      << "|M(G)|    " << fam.size() << '\n'
      << "m         ";
  for (std::size_t i = 0; i < fam.m.size(); ++i) out << (i ? " " : "") << fam.m[i];
  out << '\n' << "C_d       ";
  bool first = true;
  for (const auto& [d, c] : cls.count) {
    out << (first ? "" : " ") << "C_" << d << "=" << c;
    first = false;
  }
  out << '\n'
      << "Dom size  " << dom.size() << '\n'
      << "form      " << to_string(rep.form) << '\n'
      << "nilpotent " << (rep.is_nilpotent ? "yes" : "no") << '\n'
      << "simple    " << (rep.is_simple ? "yes" : "no") << '\n';
  for (const auto& n : rep.notes) out << "note      " << n << '\n';
  return kExitOk;
}

inline int graph_export(const CliConfig& cfg, std::ostream& out) {
  const FiniteGroup g = build_group(cfg.spec);
  Graph gr = cfg.power ? power_graph(g) : enhanced_power_graph(g);
  if (cfg.complement) gr = complement(gr);
  if (cfg.format == "json")
    out << graph_to_json(gr).dump(2) << '\n';
  else
    out << to_dot(gr, cfg.power ? "power_graph" : "enhanced_power_graph");
  return kExitOk;
}

inline LambdaCertificate oracle_certificate(const Graph& g) {
  const int delta = [&] {
    int d = 0;
    for (int v = 0; v < g.size(); ++v) d = std::max(d, g.degree(v));
    return d;
  }();
  // Every graph admits span <= delta^2 + 2 delta.
  const OracleResult r = lambda_bruteforce(g, delta * delta + 2 * delta);
  LambdaCertificate c;
  c.method = Method::Oracle;
  c.value = c.lower = c.upper = r.value;
  c.notes.push_back("exhaustive depth-first assignment");
  return c;
}

inline LambdaCertificate compute_lambda(const CliConfig& cfg, const FiniteGroup& G) {
  const Graph g = enhanced_power_graph(G);
  SolverOptions so;
  so.time_budget_seconds = cfg.timeout_seconds;
  const std::string& m = cfg.method;
  if (m == "exact") return lambda_exact(g, so);
  if (m == "oracle") return oracle_certificate(g);
  if (m == "pathcover") {
    if (g.size() > kExactSubsetLimit)
      throw LimitError("pathcover method is limited to " + std::to_string(kExactSubsetLimit) + " vertices");
    return lambda_via_path_cover(g);
  }
  if (m == "theorem") {
    auto c = lambda_closed_form(G);
    if (!c) throw NotApplicableError("no closed form applies to " + G.name());
    return *c;
  }
  // auto: cheapest certified route first.
  std::vector<std::string> trail;
  if (auto c = lambda_closed_form(G)) {
    if (c->is_exact()) return *c;
    for (const auto& n : c->notes) trail.push_back(n);
  } else {
    trail.push_back("no closed form applies");
  }
  if (g.size() <= kExactSubsetLimit) {
    auto c = lambda_via_path_cover(g);
    if (c.is_exact()) {
      c.notes.insert(c.notes.begin(), trail.begin(), trail.end());
      return c;
    }
  }
  auto c = lambda_exact(g, so);
  c.notes.insert(c.notes.begin(), trail.begin(), trail.end());
  return c;
}

inline int lambda_command(const CliConfig& cfg, std::ostream& out) {
  const FiniteGroup G = build_group(cfg.spec);
  const LambdaCertificate c = compute_lambda(cfg, G);
  if (cfg.format == "text") {
    out << "group   " << G.name() << '\n';
    if (c.is_exact())
      out << "lambda  " << c.value << '\n';
    else
      out << "lambda  unknown, " << c.lower << " <= lambda <= " << c.upper << '\n';
    out << "method  " << to_string(c.method) << '\n';
    if (c.cover) out << "cover   " << c.cover->size() << " paths\n";
    for (const auto& n : c.notes) out << "note    " << n << '\n';
  } else {
    Json j = certificate_to_json(c);
    j["group"] = G.name();
    j["order"] = G.order();
    out << j.dump(2) << '\n';
  }
  return c.is_exact() ? kExitOk : kExitLimit;
}

inline SuiteSelection parse_selection(const std::string& s) {
  if (s == "all") return SuiteSelection::All;
  if (s == "pclass") return SuiteSelection::PClass;
  if (s == "maximal") return SuiteSelection::Maximal;
  if (s == "dominating") return SuiteSelection::Dominating;
  if (s == "georges") return SuiteSelection::Georges;
  throw InputError("unknown suite '" + s + "'");
}

inline int verify_command(const CliConfig& cfg, std::ostream& out) {
  SuiteOptions so;
  so.selection = parse_selection(cfg.suite);
  so.seed = cfg.seed;
  so.time_budget_seconds = cfg.timeout_seconds;
  CorpusOptions co;
  co.max_order = cfg.max_order;
  const TheoremReport rep =
      so.selection == SuiteSelection::Georges ? verify_theorem_suite({}, so) : verify_theorem_suite(build_corpus(co), so);
  if (cfg.format == "json") {
    out << report_to_json(rep).dump(2) << '\n';
  } else {
    for (const auto& c : rep.checks)
      if (!c.pass) out << "FAIL " << c.check << " [" << c.group << "] " << c.witness << '\n';
    for (const auto& n : rep.notes) out << "note " << n << '\n';
    out << rep.checks.size() - rep.failures() << "/" << rep.checks.size() << " checks passed (seed " << rep.seed
        << ")\n";
  }
  return rep.all_passed() ? kExitOk : kExitCheckFailed;
}

}  // namespace cli_detail

/// Parses args (args[0] is the program name), runs one command and returns its exit code.
/// Output is buffered and written at the end so a failing command emits nothing partial.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"Enhanced power graphs of finite groups and their lambda numbers", "epglab"};
  app.require_subcommand(1);

  auto* group = app.add_subcommand("group", "Group inspection");
  group->require_subcommand(1);
  auto* info = group->add_subcommand("info", "Order, exponent, maximal cyclic subgroups, C_d, Dom, form");
  info->add_option("spec", cfg.spec, "Group spec, e.g. \"Z3 x Z3\"")->required();
  info->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* graph = app.add_subcommand("graph", "Export the enhanced power graph");
  graph->add_option("spec", cfg.spec, "Group spec")->required();
  graph->add_flag("--complement", cfg.complement, "Export the complement");
  graph->add_flag("--power", cfg.power, "Use the power graph instead");
  graph->add_option("--format", cfg.format, "dot or json")->check(CLI::IsMember({"dot", "json"}));

  auto* lambda = app.add_subcommand("lambda", "Lambda number of the enhanced power graph");
  lambda->add_option("spec", cfg.spec, "Group spec")->required();
  lambda->add_option("--method", cfg.method, "auto, exact, theorem, pathcover or oracle")
      ->check(CLI::IsMember({"auto", "exact", "theorem", "pathcover", "oracle"}));
  lambda->add_option("--timeout", cfg.timeout_seconds, "Seconds for the exact solver")->check(CLI::PositiveNumber);
  lambda->add_option("--format", cfg.format, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto* verify = app.add_subcommand("verify", "Run the structural and lambda checks over the corpus");
  verify->add_option("suite", cfg.suite, "all, pclass, maximal, dominating or georges")
      ->check(CLI::IsMember({"all", "pclass", "maximal", "dominating", "georges"}));
  verify->add_option("--max-order", cfg.max_order, "Largest product order in the corpus")->check(CLI::PositiveNumber);
  verify->add_option("--seed", cfg.seed, "Seed for the random graph suite");
  verify->add_option("--timeout", cfg.timeout_seconds, "Seconds per exact solve")->check(CLI::PositiveNumber);
  verify->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  // CLI11 takes the arguments without the program name, in reverse order.
  if (!args.empty()) args.erase(args.begin());
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "epglab: " << e.what() << '\n';
    return kExitInput;
  }

  std::ostringstream buf;
  try {
    int code = kExitOk;
    if (*info) {
      if (cfg.format.empty()) cfg.format = "text";
      code = cli_detail::group_info(cfg, buf);
    } else if (*graph) {
      if (cfg.format.empty()) cfg.format = "dot";
      code = cli_detail::graph_export(cfg, buf);
    } else if (*lambda) {
      if (cfg.format.empty()) cfg.format = "json";
      code = cli_detail::lambda_command(cfg, buf);
    } else if (*verify) {
      if (cfg.format.empty()) cfg.format = "text";
      code = cli_detail::verify_command(cfg, buf);
    }
    out << buf.str();
    return code;
  } catch (const InputError& e) {
    err << "epglab: invalid input: " << e.what() << '\n';
    return kExitInput;
  } catch (const NotApplicableError& e) {
    err << "epglab: not applicable: " << e.what() << '\n';
    return kExitInput;
  } catch (const LimitError& e) {
    err << "epglab: limit: " << e.what() << '\n';
    return kExitLimit;
  } catch (const VerificationError& e) {
    err << "epglab: verification failed: " << e.what() << '\n';
    return kExitCheckFailed;
  }
}

inline int run_cli(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  return run_cli(std::vector<std::string>(argv, argv + argc), out, err);
}

}  // namespace epglab
