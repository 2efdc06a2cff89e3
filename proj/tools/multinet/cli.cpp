#include "multinet/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <optional>
#include <sstream>

#include "multinet/connectives.hpp"
#include "multinet/dot.hpp"
#include "multinet/dsl.hpp"
#include "multinet/errors.hpp"
#include "multinet/expansion.hpp"
#include "multinet/json_io.hpp"
#include "multinet/program.hpp"

namespace multinet::cli {
namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json read_json(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

MStructure load_structure(const std::string& path, const Limits& limits) {
  try {
    return structure_from_json(read_json(path), limits);
  } catch (const DomainError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream ss(s);
  while (std::getline(ss, cur, sep)) {
    auto b = cur.find_first_not_of(" \t");
    auto e = cur.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(cur.substr(b, e - b + 1));
  }
  return out;
}

json ids(const std::vector<VertexId>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(v.str());
  return a;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

int cmd_check(const std::string& file, bool witness, const Limits& limits, std::ostream& out) {
  MStructure S = load_structure(file, limits);
  auto failing = first_failing_test(S, limits);
  auto comp = component_witness(S, limits);
  bool correct = !failing.has_value();
  json r{{"correct", correct},
         {"net", correct && S.inputs().empty() && !S.outputs().empty()},
         {"component", !comp.has_value()},
         {"transitory", !comp && is_transitory(S, limits)},
         {"inputs", ids(S.inputs())},
         {"outputs", ids(S.outputs())}};
  if (failing) {
    r["witness"] = json{{"switching", switching_to_json(S, *failing)},
                        {"components", to_json(connected_components(test(S, *failing)))}};
    if (witness) r["witness"]["test"] = to_json(test(S, *failing));
  }
  if (comp) {
    json w{{"kind", comp->kind == ComponentWitness::Kind::cycle ? "cycle" : "stranded"},
           {"switching", switching_to_json(S, comp->switching)},
           {"stranded", ids(comp->stranded)}};
    r["component_witness"] = w;
  }
  emit(out, r);
  return correct ? ok : property_failed;
}

int cmd_behavior(const std::string& file, const std::string& restrict_to, const Limits& limits, std::ostream& out) {
  MStructure S = load_structure(file, limits);
  PartitionSet B = behavior(S, limits);
  json r{{"border", ids(S.border())}, {"behavior", to_json(B)}};
  if (!restrict_to.empty()) {
    std::vector<ElemId> Y;
    for (const auto& s : split(restrict_to, ',')) Y.emplace_back(s);
    r["restricted"] = to_json(restrict(B, Y));
  }
  emit(out, r);
  return ok;
}

int cmd_tests(const std::string& file, std::size_t limit, const Limits& limits, std::ostream& out) {
  MStructure S = load_structure(file, limits);
  json tests = json::array();
  std::size_t seen = 0;
  bool truncated = false;
  for_each_test(S, [&](const Switching& sigma, const TestView&) {
    if (limit > 0 && seen == limit) {
      truncated = true;
      return false;
    }
    ++seen;
    json choice = json::array();
    for (auto c : sigma.choice) choice.push_back(c);
    tests.push_back(json{{"choice", choice},
                         {"test", to_json(test(S, sigma))},
                         {"behavior", to_json(test_behavior(S, sigma))}});
    return true;
  }, limits, limit == 0);
  emit(out, json{{"switchings", switching_count(S)}, {"tests", tests}, {"truncated", truncated}});
  return ok;
}

int cmd_expand(const std::string& host_file, const std::string& guest_file, const std::string& glue_text,
               const std::string& format, bool unicode, const Limits& limits, std::ostream& out) {
  auto host = std::make_shared<const MStructure>(load_structure(host_file, limits));
  auto guest = std::make_shared<const MStructure>(load_structure(guest_file, limits));
  std::vector<Glue> glue;
  for (const auto& pair : split(glue_text, ',')) {
    auto eq = pair.find('=');
    if (eq == std::string::npos) throw UsageError("--glue expects hostIn=guestOut pairs");
    glue.push_back({VertexId(pair.substr(0, eq)), VertexId(pair.substr(eq + 1))});
  }
  std::optional<ExpansionSite> site;
  try {
    site.emplace(host, guest, glue);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  ExpansionVerdict v = check_expansion(*site, limits);
  Composite c = compose(*host, *guest, site->interface());
  if (format == "dot") {
    out << to_dot(c.structure, "composite", unicode);
    return v.expands ? ok : property_failed;
  }
  json r{{"expands", v.expands},
         {"failed_condition", v.expands ? json(nullptr) : json(std::string(1, v.failed))},
         {"composite", to_json(c.structure)}};
  if (!v.expands) r["detail"] = v.detail;
  emit(out, r);
  return v.expands ? ok : property_failed;
}

int cmd_run(const std::string& file, const std::string& goal_text, const RunOptions& opts, const std::string& format,
            bool unicode, const Limits& limits, std::ostream& out) {
  Program prog = parse_program(read_file(file), limits);
  std::vector<std::string> goal = goal_text.empty() ? prog.goal : split(goal_text, ',');
  if (goal.empty()) throw UsageError("no goal: pass --goal or put '?- ...' in the program");
  Engine engine(prog, limits);
  RunResult r = run(engine, seed_state(goal), opts);
  if (format == "dot") {
    for (std::size_t k = 0; k < r.solutions.size(); ++k) {
      out << to_dot(*r.solutions[k].state.structure, "solution" + std::to_string(k + 1), unicode);
    }
  } else {
    json sols = json::array();
    for (const auto& s : r.solutions) {
      sols.push_back(json{{"component", s.component},
                          {"transitory", s.transitory},
                          {"net", s.net},
                          {"state", to_json(s.state)}});
    }
    json methods = json::array();
    for (const auto& [name, m] : prog.methods) methods.push_back(format_method(m, unicode));
    emit(out, json{{"goal", goal},
                   {"methods", methods},
                   {"found", !r.solutions.empty()},
                   {"bound", r.bound_hit},
                   {"explored", r.explored},
                   {"solutions", sols}});
  }
  return r.solutions.empty() ? property_failed : ok;
}

int cmd_connective(const std::string& family, std::size_t u, std::size_t v, bool dual, bool nonprime,
                   const Limits& limits, std::ostream& out) {
  bool is_dual = dual || family == "Gdual";
  if (family != "G" && family != "Gdual") throw UsageError("connective family must be G or Gdual");
  try {
    emit(out, to_json(girard_type(u, v, is_dual ? Polarity::dual : Polarity::primal, limits, nonprime)));
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  return ok;
}

int cmd_probe(const std::string& target_file, std::size_t n, bool unicode, const Limits& limits, std::ostream& out) {
  json j = read_json(target_file);
  const json& beh = j.is_object() ? j.at("behavior") : j;
  auto ground = LinkType::formal_ports(n, 1);
  PartitionSet target;
  try {
    target = partition_set_from_json(beh, &ground);
  } catch (const DomainError& e) {
    throw UsageError(target_file + ": " + e.what());
  }
  ProbeResult r = nondecomposability_probe(target, n, limits);
  emit(out, json{{"found", r.match.has_value()},
                 {"formula", r.match ? json(r.match->to_string(unicode)) : json(nullptr)},
                 {"labeled_trees", r.labeled_trees},
                 {"structures", r.structures}});
  return ok;
}

int cmd_export(const std::string& file, const std::string& format, bool unicode, const Limits& limits,
               std::ostream& out) {
  MStructure S = load_structure(file, limits);
  if (format == "dot") {
    out << to_dot(S, "structure", unicode);
  } else {
    emit(out, to_json(S));
  }
  return ok;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"multinet: multiplicative structures, expansion and program search"};
  app.require_subcommand(1);
  app.fallthrough();
  std::uint64_t bound = 0;
  app.add_option("--bound-switchings", bound, "Maximum switchings enumerated per structure");

  std::string file;
  std::string format = "json";
  bool witness = false;
  bool unicode = false;
  app.add_flag("--unicode", unicode, "Render connectives as ⊗ and ⅋");

  auto* check = app.add_subcommand("check", "Correctness, net, component and transitory verdicts");
  check->add_option("file", file, "Structure JSON")->required();
  check->add_flag("--witness", witness, "Also print the failing test hypergraph");

  std::string restrict_to;
  auto* beh = app.add_subcommand("behavior", "Behavior of a structure");
  beh->add_option("file", file, "Structure JSON")->required();
  beh->add_option("--restrict", restrict_to, "Comma-separated border vertices to restrict to");

  std::size_t limit = 0;
  auto* tests = app.add_subcommand("tests", "List the tests of a structure");
  tests->add_option("file", file, "Structure JSON")->required();
  tests->add_option("--limit", limit, "Stop after this many tests (0 = all, bounded)");

  std::string host;
  std::string guest;
  std::string glue;
  auto* expand_cmd = app.add_subcommand("expand", "Check and perform an expansion");
  expand_cmd->add_option("--host", host, "Host structure JSON")->required();
  expand_cmd->add_option("--guest", guest, "Guest structure JSON")->required();
  expand_cmd->add_option("--glue", glue, "hostIn=guestOut,...")->required();
  expand_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));

  std::string goal;
  std::size_t depth = 6;
  bool all = false;
  bool sequential = false;
  bool no_verify = false;
  std::string strategy = "dfs";
  std::size_t max_states = 100000;
  auto* run_cmd = app.add_subcommand("run", "Search for input-free states of a program");
  run_cmd->add_option("file", file, "Program text")->required();
  run_cmd->add_option("--goal,--seed-goal", goal, "Comma-separated goal atoms (overrides '?-')");
  run_cmd->add_option("--depth", depth, "Maximum number of steps");
  run_cmd->add_flag("--all", all, "Collect every solution within the bound");
  run_cmd->add_option("--strategy", strategy)->check(CLI::IsMember({"dfs", "bfs"}));
  run_cmd->add_flag("--sequential", sequential, "One method application per step");
  run_cmd->add_flag("--no-verify", no_verify, "Skip re-checking states along the search");
  run_cmd->add_option("--max-states", max_states, "Maximum number of visited states");
  run_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));

  std::string family;
  std::size_t u = 0;
  std::size_t v = 0;
  bool dual = false;
  bool nonprime = false;
  auto* conn = app.add_subcommand("connective", "Emit a Girard link type");
  conn->add_option("family", family, "G or Gdual")->required();
  conn->add_option("u", u)->required();
  conn->add_option("v", v)->required();
  conn->add_flag("--dual", dual, "Dual polarity");
  conn->add_flag("--nonprime", nonprime, "Allow non-prime parameters (unsupported territory)");

  std::string target;
  std::size_t inputs = 0;
  auto* probe = app.add_subcommand("probe", "Search formula trees for a target behavior");
  probe->add_option("--target", target, "Behavior JSON (partition set or link type)")->required();
  probe->add_option("--inputs", inputs, "Number of inputs")->required();

  auto* exp = app.add_subcommand("export", "Re-emit a structure as JSON or DOT");
  exp->add_option("file", file, "Structure JSON")->required();
  exp->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? ok : usage;
  }

  Limits limits = Limits::from_env();
  if (bound > 0) limits.max_switchings = bound;

  try {
    if (*check) return cmd_check(file, witness, limits, out);
    if (*beh) return cmd_behavior(file, restrict_to, limits, out);
    if (*tests) return cmd_tests(file, limit, limits, out);
    if (*expand_cmd) return cmd_expand(host, guest, glue, format, unicode, limits, out);
    if (*run_cmd) {
      RunOptions opts;
      opts.max_depth = depth;
      opts.all = all;
      opts.strategy = strategy == "bfs" ? Strategy::bfs : Strategy::dfs;
      opts.concurrent = !sequential;
      opts.verify = !no_verify;
      opts.max_states = max_states;
      return cmd_run(file, goal, opts, format, unicode, limits, out);
    }
    if (*conn) return cmd_connective(family, u, v, dual, nonprime, limits, out);
    if (*probe) return cmd_probe(target, inputs, unicode, limits, out);
    if (*exp) return cmd_export(file, format, unicode, limits, out);
  } catch (const UsageError& e) {
    err << "multinet: " << e.what() << "\n";
    return usage;
  } catch (const ParseError& e) {
    err << "multinet: " << file << ":" << e.what() << "\n";
    return usage;
  } catch (const Error& e) {
    err << "multinet: " << e.what() << "\n";
    return usage;
  }
  return usage;
}

}  // namespace multinet::cli
