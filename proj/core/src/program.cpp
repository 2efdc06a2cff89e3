#include "multinet/program.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <stdexcept>
#include <unordered_set>

#include "multinet/errors.hpp"

namespace multinet {

Signature Program::signature() const {
  Signature s;
  for (const auto& [name, t] : bindings) s.add(t);
  return s;
}

namespace {

VertexId numbered(const char* stem, std::size_t k) { return VertexId(stem + std::to_string(k)); }

}  // namespace

MStructure compile_method(const Method& m) {
  if (m.head.empty()) throw CompileError("method " + m.name + " has an empty head");
  Hypergraph g;
  Signature sig;
  std::vector<VertexId> free_ends;
  for (std::size_t k = 1; k <= m.head.size(); ++k) {
    VertexId h = numbered("h", k);
    VertexId x = numbered("x", k);
    g.add_vertex(h, m.head[k - 1]);
    g.add_vertex(x);
    g.add_edge("ax", {}, {x, h});
    free_ends.push_back(x);
  }

  std::vector<VertexId> clause_outs;
  for (std::size_t c = 1; c <= m.body.size(); ++c) {
    const Clause& cl = m.body[c - 1];
    if (cl.atoms.empty()) throw CompileError("method " + m.name + " has an empty clause");
    std::vector<VertexId> atoms;
    for (std::size_t j = 1; j <= cl.atoms.size(); ++j) {
      VertexId a("a" + std::to_string(c) + "_" + std::to_string(j));
      g.add_vertex(a, cl.atoms[j - 1]);
      atoms.push_back(a);
    }
    VertexId out = numbered("c", c);
    if (cl.girard_type) {
      const LinkType& t = *cl.girard_type;
      if (t.n_out() != 1 || t.n_in() != atoms.size()) {
        throw CompileError("method " + m.name + ": " + cl.girard + " takes " + std::to_string(t.n_in()) +
                           " atoms, got " + std::to_string(atoms.size()));
      }
      sig.add(t);
      g.add_edge(t.name(), atoms, {out});
    } else if (atoms.size() == 1) {
      out = atoms.front();
    } else {
      g.add_edge("par_" + std::to_string(atoms.size()), atoms, {out});
    }
    clause_outs.push_back(out);
  }

  if (m.synchronizer_type) {
    const LinkType& t = *m.synchronizer_type;
    const std::size_t n = m.head.size();
    if (m.body.size() != n || t.n_in() != 2 * n || t.n_out() != 1) {
      throw CompileError("method " + m.name + ": synchronizer " + m.synchronizer + " needs " +
                         std::to_string(t.n_in() / 2) + " heads and as many clauses");
    }
    std::vector<VertexId> ports;
    for (std::size_t k = 0; k < n; ++k) {
      ports.push_back(clause_outs[k]);
      ports.push_back(free_ends[k]);
    }
    sig.add(t);
    g.add_edge(t.name(), ports, {VertexId("s")});
    g.add_edge("par_bullet_1", {VertexId("s")}, {});
    return MStructure(std::move(g), std::move(sig));
  }

  VertexId header = free_ends.front();
  if (free_ends.size() > 1) {
    header = VertexId("hd");
    g.add_edge("tensor_" + std::to_string(free_ends.size()), free_ends, {header});
  }
  if (m.is_fact()) {
    g.add_edge("par_bullet_1", {header}, {});
    return MStructure(std::move(g), std::move(sig));
  }
  VertexId body = clause_outs.front();
  if (clause_outs.size() > 1) {
    body = VertexId("bd");
    g.add_edge("tensor_" + std::to_string(clause_outs.size()), clause_outs, {body});
  }
  g.add_edge("tensor_bullet_2", {body, header}, {});
  return MStructure(std::move(g), std::move(sig));
}

ExecutionState seed_state(const std::vector<std::string>& goal) {
  Hypergraph g;
  std::map<std::string, std::size_t> seen;
  for (const auto& atom : goal) {
    if (atom.empty()) throw DomainError("goal atom must be non-empty");
    std::size_t n = ++seen[atom];
    g.add_vertex(VertexId(n == 1 ? atom : atom + "#" + std::to_string(n)), atom);
  }
  ExecutionState s;
  s.structure = std::make_shared<const MStructure>(std::move(g));
  return s;
}

namespace {

std::unordered_map<ElemId, ElemId> prefix_map(const MStructure& S, const std::string& prefix) {
  std::unordered_map<ElemId, ElemId> m;
  for (const auto& v : S.graph().vertices()) m.emplace(v.id, VertexId(prefix + v.id.str()));
  return m;
}

MStructure renamed(const MStructure& S, const std::unordered_map<ElemId, ElemId>& map) {
  Hypergraph g;
  for (const auto& v : S.graph().vertices()) g.add_vertex(map.at(v.id), v.label);
  for (const auto& e : S.graph().edges()) {
    Hyperedge r{{}, {}, e.type};
    for (const auto& v : e.inputs) r.inputs.push_back(map.at(v));
    for (const auto& v : e.outputs) r.outputs.push_back(map.at(v));
    g.add_edge(std::move(r));
  }
  return MStructure(std::move(g), S.signature());
}

std::string copy_prefix(const std::string& method, std::size_t serial) {
  return method + std::to_string(serial) + ".";
}

}  // namespace

Engine::Engine(Program program, Limits limits) : program_(std::move(program)), limits_(limits) {
  for (const auto& [name, m] : program_.methods) {
    auto s = std::make_shared<const MStructure>(compile_method(m));
    behaviors_.emplace(name, behavior(*s, limits_));
    compiled_.emplace(name, std::move(s));
  }
}

const MStructure& Engine::compiled(const std::string& method) const {
  auto it = compiled_.find(method);
  if (it == compiled_.end()) throw DomainError("unknown method " + method);
  return *it->second;
}

const PartitionSet& Engine::compiled_behavior(const std::string& method) const {
  auto it = behaviors_.find(method);
  if (it == behaviors_.end()) throw DomainError("unknown method " + method);
  return it->second;
}

std::vector<Site> Engine::sites_for(const ExecutionState& state, const std::string& method,
                                    const PartitionSet& state_behavior, std::size_t& serial) const {
  const MStructure& tmpl = compiled(method);
  const MStructure& S = *state.structure;
  std::vector<VertexId> outs = tmpl.outputs();
  std::vector<VertexId> ins = S.inputs();
  std::vector<std::vector<VertexId>> matches;
  std::vector<VertexId> current;
  std::unordered_set<VertexId> used;
  std::function<void(std::size_t)> assign = [&](std::size_t k) {
    if (k == outs.size()) {
      matches.push_back(current);
      return;
    }
    const std::string& want = tmpl.graph().label(outs[k]);
    for (const auto& v : ins) {
      if (used.contains(v) || S.graph().label(v) != want) continue;
      used.insert(v);
      current.push_back(v);
      assign(k + 1);
      current.pop_back();
      used.erase(v);
    }
  };
  if (!outs.empty()) assign(0);

  std::vector<Site> sites;
  for (const auto& match : matches) {
    std::size_t n = ++serial;
    auto map = prefix_map(tmpl, copy_prefix(method, n));
    auto copy = std::make_shared<const MStructure>(renamed(tmpl, map));
    std::vector<Glue> glue;
    for (std::size_t k = 0; k < outs.size(); ++k) glue.push_back({match[k], map.at(outs[k])});
    ExpansionSite site(state.structure, copy, glue);
    if (!check_expansion(site, state_behavior, rename(compiled_behavior(method), map)).expands) continue;
    sites.push_back({method, n, std::move(copy), std::move(glue)});
  }
  return sites;
}

std::vector<Site> Engine::applicable_sites(const ExecutionState& state, const std::string& method) const {
  std::size_t serial = state.fresh;
  return sites_for(state, method, behavior(*state.structure, limits_), serial);
}

std::vector<Site> Engine::applicable_sites(const ExecutionState& state) const {
  if (state.input_free()) return {};
  PartitionSet beh = behavior(*state.structure, limits_);
  std::size_t serial = state.fresh;
  std::vector<Site> all;
  for (const auto& [name, m] : program_.methods) {
    auto more = sites_for(state, name, beh, serial);
    all.insert(all.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
  }
  return all;
}

ExecutionState Engine::apply(const ExecutionState& state, const std::vector<Site>& sites) const {
  if (sites.empty()) throw DomainError("apply: no site given");
  std::unordered_set<VertexId> taken;
  MStructure guest;
  std::vector<Glue> glue;
  std::vector<Partition> guest_members{Partition()};
  std::size_t fresh = state.fresh;
  for (const auto& site : sites) {
    for (const auto& g : site.glue) {
      if (!taken.insert(g.host_input).second) throw DomainError("apply: sites overlap on " + g.host_input.str());
      glue.push_back(g);
    }
    guest = disjoint_union(guest, *site.copy).structure;
    auto map = prefix_map(compiled(site.method), copy_prefix(site.method, site.serial));
    PartitionSet beh = rename(compiled_behavior(site.method), map);
    std::vector<Partition> next;
    for (const auto& p : guest_members) {
      for (const auto& q : beh) next.push_back(join_disjoint(p, q));
    }
    guest_members = std::move(next);
    fresh = std::max(fresh, site.serial);
  }
  PartitionSet guest_behavior(guest.border(), std::move(guest_members));
  ExpansionSite site(state.structure, std::make_shared<const MStructure>(guest), glue);
  ExpansionVerdict v = check_expansion(site, behavior(*state.structure, limits_), guest_behavior);
  if (!v.expands) throw ExpansionError(v.failed, "condition (" + std::string(1, v.failed) + ") fails: " + v.detail);
  Composite c = compose(*state.structure, guest, site.interface());

  ExecutionState next;
  next.structure = std::make_shared<const MStructure>(std::move(c.structure));
  next.trace = state.trace;
  next.steps = state.steps + 1;
  next.fresh = fresh;
  for (const auto& s : sites) next.trace.push_back({s.method, s.glue, next.steps});
  return next;
}

namespace {

bool disjoint(const Site& a, const Site& b) {
  for (const auto& x : a.glue) {
    for (const auto& y : b.glue) {
      if (x.host_input == y.host_input) return false;
    }
  }
  return true;
}

// Steps to try from a state: every non-empty set of pairwise disjoint sites
// (larger sets first) when concurrent, single sites otherwise.
std::vector<std::vector<Site>> candidate_steps(const std::vector<Site>& sites, bool concurrent) {
  std::vector<std::vector<Site>> steps;
  if (!concurrent) {
    for (const auto& s : sites) steps.push_back({s});
    return steps;
  }
  constexpr std::size_t kMaxSteps = 4096;
  std::vector<std::size_t> chosen;
  std::vector<std::vector<std::size_t>> sets;
  std::function<void(std::size_t)> grow = [&](std::size_t from) {
    if (sets.size() >= kMaxSteps) return;
    if (!chosen.empty()) sets.push_back(chosen);
    for (std::size_t k = from; k < sites.size(); ++k) {
      bool ok = std::all_of(chosen.begin(), chosen.end(), [&](std::size_t j) { return disjoint(sites[j], sites[k]); });
      if (!ok) continue;
      chosen.push_back(k);
      grow(k + 1);
      chosen.pop_back();
    }
  };
  grow(0);
  std::stable_sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });
  for (const auto& set : sets) {
    std::vector<Site> step;
    for (std::size_t k : set) step.push_back(sites[k]);
    steps.push_back(std::move(step));
  }
  return steps;
}

struct Search {
  const Engine& engine;
  const RunOptions& options;
  RunResult result;
  bool stop = false;
  bool methods_transitory = true;

  void verify(const ExecutionState& s, bool parent_transitory, bool& transitory) {
    transitory = false;
    if (!options.verify) return;
    if (!is_component(*s.structure)) {
      throw std::logic_error("search reached a state that is not a component");
    }
    transitory = is_transitory(*s.structure);
    if (parent_transitory && methods_transitory && !transitory) {
      throw std::logic_error("expansion of transitory components lost transitoriness");
    }
  }

  void record(const ExecutionState& s) {
    Solution sol{s, true, true, false};
    if (options.verify) {
      sol.component = is_component(*s.structure);
      sol.transitory = is_transitory(*s.structure);
    }
    sol.net = is_net(*s.structure);
    if (options.all) {
      for (const auto& other : result.solutions) {
        if (find_isomorphism(other.state.structure->graph(), s.structure->graph())) return;
      }
    }
    result.solutions.push_back(std::move(sol));
    if (!options.all) stop = true;
  }

  // Returns the expansions of `s`, or records it as a solution.
  std::vector<ExecutionState> visit(const ExecutionState& s, std::size_t depth) {
    ++result.explored;
    if (s.input_free()) {
      record(s);
      return {};
    }
    auto sites = engine.applicable_sites(s);
    if (sites.empty()) return {};
    if (depth >= options.max_depth || result.explored >= options.max_states) {
      result.bound_hit = true;
      return {};
    }
    std::vector<ExecutionState> out;
    for (const auto& step : candidate_steps(sites, options.concurrent)) {
      try {
        out.push_back(engine.apply(s, step));
      } catch (const ExpansionError&) {
        // the sites are fine alone but not together
      }
    }
    return out;
  }

  void dfs(const ExecutionState& s, std::size_t depth, bool transitory) {
    for (auto& next : visit(s, depth)) {
      if (stop) return;
      bool t = false;
      verify(next, transitory, t);
      dfs(next, depth + 1, t);
    }
  }

  void bfs(const ExecutionState& seed, bool transitory) {
    std::deque<std::tuple<ExecutionState, std::size_t, bool>> queue;
    queue.emplace_back(seed, 0, transitory);
    while (!queue.empty() && !stop) {
      auto [s, depth, t] = std::move(queue.front());
      queue.pop_front();
      for (auto& next : visit(s, depth)) {
        bool nt = false;
        verify(next, t, nt);
        queue.emplace_back(std::move(next), depth + 1, nt);
      }
    }
  }
};

}  // namespace

RunResult run(const Engine& engine, const ExecutionState& seed, const RunOptions& options) {
  Search search{engine, options, {}, false, true};
  for (const auto& [name, m] : engine.program().methods) {
    if (options.verify && !is_transitory(engine.compiled(name))) search.methods_transitory = false;
  }
  bool seed_transitory = options.verify && is_transitory(*seed.structure);
  if (options.strategy == Strategy::dfs) {
    search.dfs(seed, 0, seed_transitory);
  } else {
    search.bfs(seed, seed_transitory);
  }
  return search.result;
}

PartitionSet realizable_connections(const ExecutionState& state, const Limits& limits) {
  const MStructure& S = *state.structure;
  std::map<std::string, std::size_t> uses;
  for (const auto& v : S.border()) ++uses[S.graph().label(v)];
  std::unordered_map<ElemId, ElemId> names;
  for (const auto& v : S.border()) {
    const std::string& l = S.graph().label(v);
    if (!l.empty() && uses[l] == 1) names.emplace(v, ElemId(l));
  }
  // a label may coincide with another vertex's id; fall back to ids then
  std::unordered_set<ElemId> targets;
  for (const auto& v : S.border()) {
    auto it = names.find(v);
    if (!targets.insert(it == names.end() ? v : it->second).second) return behavior(S, limits);
  }
  return rename(behavior(S, limits), names);
}

}  // namespace multinet
