#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "multinet/expansion.hpp"
#include "multinet/mstructure.hpp"

namespace multinet {

/// One body item: a disjunction of atoms, or the atoms fed to a bound
/// Girard link used as a generalized body.
struct Clause {
  std::vector<std::string> atoms;
  std::string girard;                // binding name, empty for a plain disjunction
  std::optional<LinkType> girard_type;
};

struct Method {
  std::string name;
  std::vector<std::string> head;
  std::vector<Clause> body;          // empty for a fact
  std::string synchronizer;          // binding name, empty for the standard one
  std::optional<LinkType> synchronizer_type;
  std::size_t line = 0;

  bool is_fact() const noexcept { return body.empty(); }
};

struct Program {
  std::map<std::string, Method> methods;
  std::map<std::string, LinkType> bindings;
  std::vector<std::string> goal;

  Signature signature() const;
};

/// Structure of a method: head atoms are outputs (labelled), body atoms are
/// inputs (labelled).
///  header:  ax per head atom; with several heads their free ends meet in a tensor_k
///  clause:  a par_m over its atoms (the atom itself when m = 1), or the bound G link
///  body:    a tensor_n over the clauses (the clause itself when n = 1)
///  sync:    tensor_bullet_2(body, header); a fact discards its header with par_bullet_1.
/// With a bound Gdual_u_2 synchronizer, clause k and the free end of head k
/// feed ports 2k-1 and 2k of the link, whose output goes to par_bullet_1.
/// Throws CompileError on arity mismatches.
MStructure compile_method(const Method& m);

struct Application {
  std::string method;
  std::vector<Glue> glue;  // state input -> method output (fresh copy id)
  std::size_t step = 0;
};

struct ExecutionState {
  std::shared_ptr<const MStructure> structure;
  std::vector<Application> trace;
  std::size_t steps = 0;
  std::size_t fresh = 0;  // counter for fresh copy prefixes

  bool input_free() const { return structure->inputs().empty(); }
};

/// Edgeless structure with one labelled vertex per goal atom.
ExecutionState seed_state(const std::vector<std::string>& goal);

/// A candidate application: a fresh copy of a compiled method and its glue.
struct Site {
  std::string method;
  std::size_t serial = 0;  // copy vertices are named "<method><serial>.<id>"
  std::shared_ptr<const MStructure> copy;
  std::vector<Glue> glue;
};

class Engine {
 public:
  explicit Engine(Program program, Limits limits = {});

  const Program& program() const noexcept { return program_; }
  const MStructure& compiled(const std::string& method) const;
  const PartitionSet& compiled_behavior(const std::string& method) const;

  /// Injective label-respecting matches of all outputs of the method onto
  /// state inputs that pass the expansion check, in canonical order.
  std::vector<Site> applicable_sites(const ExecutionState& state, const std::string& method) const;
  std::vector<Site> applicable_sites(const ExecutionState& state) const;

  /// Applies sites with pairwise disjoint state inputs as one step. Throws
  /// ExpansionError if the combined guest does not expand the state.
  ExecutionState apply(const ExecutionState& state, const std::vector<Site>& sites) const;
  ExecutionState apply(const ExecutionState& state, const Site& site) const { return apply(state, std::vector{site}); }

 private:
  Program program_;
  Limits limits_;
  std::map<std::string, std::shared_ptr<const MStructure>> compiled_;
  std::map<std::string, PartitionSet> behaviors_;

  std::vector<Site> sites_for(const ExecutionState& state, const std::string& method, const PartitionSet& state_behavior,
                              std::size_t& serial) const;
};

enum class Strategy { dfs, bfs };

struct RunOptions {
  std::size_t max_depth = 6;
  bool all = false;
  Strategy strategy = Strategy::dfs;
  bool concurrent = true;   // a step may apply several input-disjoint sites
  std::size_t max_states = 100000;
  bool verify = true;       // re-check component status of every visited state
};

struct Solution {
  ExecutionState state;
  bool component = true;
  bool transitory = true;
  bool net = false;
};

struct RunResult {
  std::vector<Solution> solutions;
  bool bound_hit = false;   // some branch was cut by max_depth or max_states
  std::size_t explored = 0;
};

/// Bounded search for input-free states. Solutions are deduplicated up to
/// isomorphism. Throws std::logic_error if verification finds a state that
/// is not a component.
RunResult run(const Engine& engine, const ExecutionState& seed, const RunOptions& options = {});

/// Behavior of the state with border vertices named by their atom label
/// (by id when the label is missing or shared).
PartitionSet realizable_connections(const ExecutionState& state, const Limits& limits = {});

}  // namespace multinet
