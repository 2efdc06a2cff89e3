#include "multinet/mstructure.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <unordered_set>

#include "multinet/errors.hpp"
#include "multinet/instrument.hpp"
#include "union_find.hpp"

namespace multinet {

LinkType::LinkType(std::string name, std::size_t n_in, std::size_t n_out, PartitionSet behavior)
    : name_(std::move(name)), n_in_(n_in), n_out_(n_out), behavior_(std::move(behavior)) {
  if (behavior_.empty()) throw DomainError("link type " + name_ + " has an empty behavior");
  if (behavior_.ground() != make_ground(formal_ports(n_in, n_out))) {
    throw DomainError("link type " + name_ + ": behavior is not over its formal ports");
  }
}

std::vector<ElemId> LinkType::formal_ports(std::size_t n_in, std::size_t n_out) {
  std::vector<ElemId> out;
  for (std::size_t k = 1; k <= n_in; ++k) out.push_back(input_port(k));
  for (std::size_t k = 1; k <= n_out; ++k) out.push_back(output_port(k));
  return out;
}

namespace {

std::vector<ElemId> inputs_of(std::size_t n) {
  std::vector<ElemId> out;
  for (std::size_t k = 1; k <= n; ++k) out.push_back(LinkType::input_port(k));
  return out;
}

LinkType tensor_n(const std::string& name, std::size_t n) {
  Block all = inputs_of(n);
  all.push_back(LinkType::output_port(1));
  return LinkType(name, n, 1, PartitionSet::of({Partition({all})}));
}

LinkType par_n(const std::string& name, std::size_t n) {
  std::vector<Partition> members;
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<Block> blocks;
    for (std::size_t j = 1; j <= n; ++j) {
      if (j == k) {
        blocks.push_back({LinkType::input_port(j), LinkType::output_port(1)});
      } else {
        blocks.push_back({LinkType::input_port(j)});
      }
    }
    members.emplace_back(std::move(blocks));
  }
  return LinkType(name, n, 1, PartitionSet::of(std::move(members)));
}

// Zero-output families: behaviors over the n inputs only.
LinkType tensor_bullet_n(const std::string& name, std::size_t n) {
  return LinkType(name, n, 0, PartitionSet::of({Partition({inputs_of(n)})}));
}

LinkType par_bullet_n(const std::string& name, std::size_t n) {
  return LinkType(name, n, 0, PartitionSet::of({Partition::discrete(inputs_of(n))}));
}

std::optional<std::size_t> arity_suffix(const std::string& name, const std::string& prefix) {
  if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0) return std::nullopt;
  std::size_t n = 0;
  const char* first = name.data() + prefix.size();
  const char* last = name.data() + name.size();
  auto [ptr, ec] = std::from_chars(first, last, n);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  if (n == 0) throw DomainError("link family " + name + " needs arity >= 1");
  return n;
}

}  // namespace

std::optional<LinkType> builtin_type(const std::string& name) {
  if (name == "ax") return LinkType(name, 0, 2, PartitionSet::of({Partition::parse("[(o1,o2)]")}));
  if (name == "tensor") return tensor_n(name, 2);
  if (name == "par") return par_n(name, 2);
  if (name == "cut") return tensor_bullet_n(name, 2);
  // longest prefixes first so "tensor_bullet_3" is not read as tensor_<junk>
  if (auto n = arity_suffix(name, "tensor_bullet_")) return tensor_bullet_n(name, *n);
  if (auto n = arity_suffix(name, "par_bullet_")) return par_bullet_n(name, *n);
  if (auto n = arity_suffix(name, "tensor_")) return tensor_n(name, *n);
  if (auto n = arity_suffix(name, "par_")) return par_n(name, *n);
  return std::nullopt;
}

void Signature::add(LinkType t) {
  auto it = types_.find(t.name());
  if (it != types_.end()) {
    if (it->second == t) return;
    throw DomainError("conflicting definitions of link type " + t.name());
  }
  std::string name = t.name();
  types_.emplace(std::move(name), std::move(t));
}

std::optional<LinkType> Signature::resolve(const std::string& name) const {
  auto it = types_.find(name);
  if (it != types_.end()) return it->second;
  return builtin_type(name);
}

Signature builtin_types(const std::vector<std::size_t>& arities) {
  Signature s;
  for (const char* base : {"ax", "tensor", "par", "cut"}) s.add(*builtin_type(base));
  for (std::size_t n : arities) {
    for (const char* fam : {"tensor_", "par_", "tensor_bullet_", "par_bullet_"}) {
      s.add(*builtin_type(fam + std::to_string(n)));
    }
  }
  return s;
}

Signature merge(const Signature& a, const Signature& b) {
  Signature out = a;
  for (const auto& [name, t] : b.custom()) out.add(t);
  return out;
}

MStructure::MStructure() : signature_(std::make_shared<Signature>()) {}

MStructure::MStructure(Hypergraph graph, Signature signature)
    : graph_(std::move(graph)), signature_(std::make_shared<Signature>(std::move(signature))) {
  if (!is_linear(graph_)) throw DomainError("multiplicative structure must be a linear hypergraph");
  std::map<std::string, std::shared_ptr<const LinkType>> cache;
  for (const auto& e : graph_.edges()) {
    auto it = cache.find(e.type);
    if (it == cache.end()) {
      auto t = signature_->resolve(e.type);
      if (!t) throw DomainError("unknown link type " + e.type);
      it = cache.emplace(e.type, std::make_shared<const LinkType>(std::move(*t))).first;
    }
    const LinkType& t = *it->second;
    if (e.inputs.size() != t.n_in() || e.outputs.size() != t.n_out()) {
      throw DomainError("edge of type " + e.type + " has " + std::to_string(e.inputs.size()) + " inputs and " +
                        std::to_string(e.outputs.size()) + " outputs, expected " + std::to_string(t.n_in()) +
                        " and " + std::to_string(t.n_out()));
    }
    types_.push_back(it->second);
  }
  inputs_ = graph_inputs(graph_);
  outputs_ = graph_outputs(graph_);
  border_ = multinet::border(graph_);
}

bool MStructure::is_border(const VertexId& v) const { return std::binary_search(border_.begin(), border_.end(), v); }
bool MStructure::is_input(const VertexId& v) const { return std::binary_search(inputs_.begin(), inputs_.end(), v); }
bool MStructure::is_output(const VertexId& v) const {
  return std::binary_search(outputs_.begin(), outputs_.end(), v);
}

namespace {

std::unordered_map<ElemId, ElemId> port_map(const Hyperedge& e) {
  std::unordered_map<ElemId, ElemId> m;
  for (std::size_t k = 0; k < e.inputs.size(); ++k) m.emplace(LinkType::input_port(k + 1), e.inputs[k]);
  for (std::size_t k = 0; k < e.outputs.size(); ++k) m.emplace(LinkType::output_port(k + 1), e.outputs[k]);
  return m;
}

}  // namespace

Partition MStructure::instantiate(std::size_t edge, std::size_t choice) const {
  if (edge >= types_.size()) throw DomainError("edge index out of range");
  const auto& members = types_[edge]->behavior().members();
  if (choice >= members.size()) throw DomainError("switching choice out of range");
  return rename(members[choice], port_map(graph_.edges()[edge]));
}

Composite disjoint_union(const MStructure& a, const MStructure& b) {
  Renamed r = disjoint_union(a.graph(), b.graph());
  return {MStructure(std::move(r.graph), merge(a.signature(), b.signature())), std::move(r.h_renaming)};
}

Composite compose(const MStructure& a, const MStructure& b, const Interface& X) {
  Renamed r = compose(a.graph(), b.graph(), X);
  return {MStructure(std::move(r.graph), merge(a.signature(), b.signature())), std::move(r.h_renaming)};
}

namespace {

// Per edge, per behavior member: the blocks as vertex indices.
using CompiledBlocks = std::vector<std::vector<std::vector<std::size_t>>>;

std::vector<CompiledBlocks> compile_links(const MStructure& S) {
  std::vector<CompiledBlocks> out;
  const Hypergraph& g = S.graph();
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    const Hyperedge& e = g.edges()[k];
    auto ports = port_map(e);
    CompiledBlocks options;
    for (const auto& p : S.link_type(k).behavior()) {
      std::vector<std::vector<std::size_t>> blocks;
      for (const auto& b : p.blocks()) {
        std::vector<std::size_t> ids;
        for (const auto& port : b) ids.push_back(g.vertex_index(ports.at(port)));
        blocks.push_back(std::move(ids));
      }
      options.push_back(std::move(blocks));
    }
    out.push_back(std::move(options));
  }
  return out;
}

void fill_view(const std::vector<CompiledBlocks>& links, const Switching& sigma, std::size_t n, detail::UnionFind& uf,
               TestView& view) {
  uf.reset(n);
  view.acyclic = true;
  for (std::size_t k = 0; k < links.size(); ++k) {
    for (const auto& block : links[k][sigma.choice[k]]) {
      for (std::size_t i = 1; i < block.size(); ++i) {
        if (!uf.unite(block[0], block[i])) view.acyclic = false;
      }
    }
  }
  view.component.resize(n);
  for (std::size_t i = 0; i < n; ++i) view.component[i] = uf.find(i);
}

void require_cover(const MStructure& S, const Switching& sigma) {
  if (sigma.choice.size() != S.graph().edge_count()) {
    throw DomainError("switching covers " + std::to_string(sigma.choice.size()) + " of " +
                      std::to_string(S.graph().edge_count()) + " links");
  }
  for (std::size_t k = 0; k < sigma.choice.size(); ++k) {
    if (sigma.choice[k] >= S.link_type(k).behavior().size()) throw DomainError("switching choice out of range");
  }
}

Partition border_partition(const MStructure& S, const TestView& view) {
  std::map<std::size_t, Block> groups;
  for (const auto& v : S.border()) groups[view.component[S.graph().vertex_index(v)]].push_back(v);
  std::vector<Block> blocks;
  for (auto& [root, b] : groups) blocks.push_back(std::move(b));
  return Partition(std::move(blocks));
}

}  // namespace

std::uint64_t switching_count(const MStructure& S) {
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < S.graph().edge_count(); ++k) {
    std::uint64_t m = S.link_type(k).behavior().size();
    if (total > std::numeric_limits<std::uint64_t>::max() / m) return std::numeric_limits<std::uint64_t>::max();
    total *= m;
  }
  return total;
}

void for_each_test(const MStructure& S, const std::function<bool(const Switching&, const TestView&)>& fn,
                   const Limits& limits, bool bounded) {
  instrument::count_switching_enumeration();
  std::uint64_t count = switching_count(S);
  if (bounded && count > limits.max_switchings) {
    throw ResourceError("structure has " + std::to_string(count) + " switchings, above the bound of " +
                        std::to_string(limits.max_switchings));
  }
  auto links = compile_links(S);
  const std::size_t n = S.graph().vertex_count();
  Switching sigma{std::vector<std::size_t>(links.size(), 0)};
  detail::UnionFind uf;
  TestView view;
  while (true) {
    instrument::count_test_visited();
    fill_view(links, sigma, n, uf, view);
    if (!fn(sigma, view)) return;
    std::size_t k = links.size();
    while (k > 0) {
      --k;
      if (++sigma.choice[k] < links[k].size()) break;
      sigma.choice[k] = 0;
      if (k == 0) return;
    }
    if (links.empty()) return;
  }
}

std::vector<Switching> enumerate_switchings(const MStructure& S, const Limits& limits) {
  std::vector<Switching> out;
  for_each_test(S, [&](const Switching& s, const TestView&) {
    out.push_back(s);
    return true;
  }, limits);
  return out;
}

std::vector<Partition> switching_partitions(const MStructure& S, const Switching& sigma) {
  require_cover(S, sigma);
  std::vector<Partition> out;
  for (std::size_t k = 0; k < sigma.choice.size(); ++k) out.push_back(S.instantiate(k, sigma.choice[k]));
  return out;
}

UndirectedHypergraph test(const MStructure& S, const Switching& sigma) {
  UndirectedHypergraph U;
  U.vertices = S.graph().vertex_ids();
  for (const auto& p : switching_partitions(S, sigma)) {
    for (const auto& b : p.blocks()) U.uedges.push_back(b);
  }
  return U;
}

Partition test_behavior(const MStructure& S, const Switching& sigma) {
  require_cover(S, sigma);
  auto links = compile_links(S);
  detail::UnionFind uf;
  TestView view;
  fill_view(links, sigma, S.graph().vertex_count(), uf, view);
  return border_partition(S, view);
}

PartitionSet behavior(const MStructure& S, const Limits& limits) {
  std::vector<Partition> members;
  for_each_test(S, [&](const Switching&, const TestView& view) {
    members.push_back(border_partition(S, view));
    return true;
  }, limits);
  return PartitionSet(S.border(), std::move(members));
}

namespace {

bool is_tree_view(const TestView& view) {
  if (!view.acyclic || view.component.empty()) return false;
  return std::all_of(view.component.begin(), view.component.end(),
                     [&](std::size_t c) { return c == view.component[0]; });
}

}  // namespace

std::optional<Switching> first_failing_test(const MStructure& S, const Limits& limits) {
  std::optional<Switching> witness;
  for_each_test(S, [&](const Switching& s, const TestView& view) {
    if (is_tree_view(view)) return true;
    witness = s;
    return false;
  }, limits);
  return witness;
}

bool is_correct(const MStructure& S, const Limits& limits) { return !first_failing_test(S, limits).has_value(); }

bool is_net(const MStructure& S, const Limits& limits) {
  return S.inputs().empty() && !S.outputs().empty() && is_correct(S, limits);
}

std::optional<ComponentWitness> component_witness(const MStructure& S, const Limits& limits) {
  std::vector<bool> on_border(S.graph().vertex_count(), false);
  for (const auto& v : S.border()) on_border[S.graph().vertex_index(v)] = true;
  std::optional<ComponentWitness> witness;
  std::vector<bool> reaches;
  for_each_test(S, [&](const Switching& s, const TestView& view) {
    if (!view.acyclic) {
      witness = ComponentWitness{s, ComponentWitness::Kind::cycle, {}};
      return false;
    }
    reaches.assign(view.component.size(), false);
    for (std::size_t i = 0; i < view.component.size(); ++i) {
      if (on_border[i]) reaches[view.component[i]] = true;
    }
    std::vector<VertexId> stranded;
    for (std::size_t i = 0; i < view.component.size(); ++i) {
      if (!reaches[view.component[i]]) stranded.push_back(S.graph().vertices()[i].id);
    }
    if (stranded.empty()) return true;
    std::sort(stranded.begin(), stranded.end());
    witness = ComponentWitness{s, ComponentWitness::Kind::stranded, std::move(stranded)};
    return false;
  }, limits);
  return witness;
}

bool is_component(const MStructure& S, const Limits& limits) { return !component_witness(S, limits).has_value(); }

bool is_transitory(const MStructure& S, const Limits& limits) {
  if (!is_component(S, limits)) return false;
  const Hypergraph& g = S.graph();
  std::vector<std::size_t> pending;
  for (const auto& v : S.inputs()) pending.push_back(g.vertex_index(v));
  std::vector<bool> is_out(g.vertex_count(), false);
  for (const auto& v : S.outputs()) is_out[g.vertex_index(v)] = true;
  std::vector<bool> has_out;
  for_each_test(S, [&](const Switching&, const TestView& view) {
    if (pending.empty()) return false;
    has_out.assign(view.component.size(), false);
    for (std::size_t i = 0; i < view.component.size(); ++i) {
      if (is_out[i]) has_out[view.component[i]] = true;
    }
    std::erase_if(pending, [&](std::size_t i) { return has_out[view.component[i]]; });
    return !pending.empty();
  }, limits);
  return pending.empty();
}

namespace {

// Plain multigraph walk, deliberately independent of the union-find path above.
bool spanning_tree(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  if (n == 0 || edges.size() != n - 1) return false;
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w : adj[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

}  // namespace

bool dr_check_mll(const MStructure& S) {
  const Hypergraph& g = S.graph();
  std::vector<std::size_t> pars;
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    const std::string& t = g.edges()[k].type;
    if ((t != "ax" && t != "tensor" && t != "par") || S.signature().custom().contains(t)) {
      throw DomainError("dr_check_mll: link type " + t + " is not an MLL link");
    }
    if (t == "par") pars.push_back(k);
  }
  if (g.vertex_count() == 0 || !S.inputs().empty() || S.outputs().empty()) return false;
  if (pars.size() >= 63) throw ResourceError("dr_check_mll: too many par links");
  auto idx = [&](const VertexId& v) { return g.vertex_index(v); };
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pars.size()); ++mask) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::size_t par_seen = 0;
    for (std::size_t k = 0; k < g.edge_count(); ++k) {
      const Hyperedge& e = g.edges()[k];
      if (e.type == "ax") {
        edges.emplace_back(idx(e.outputs[0]), idx(e.outputs[1]));
      } else if (e.type == "tensor") {
        edges.emplace_back(idx(e.inputs[0]), idx(e.outputs[0]));
        edges.emplace_back(idx(e.inputs[1]), idx(e.outputs[0]));
      } else {
        std::size_t premise = (mask >> par_seen++) & 1U;
        edges.emplace_back(idx(e.inputs[premise]), idx(e.outputs[0]));
      }
    }
    if (!spanning_tree(g.vertex_count(), edges)) return false;
  }
  return true;
}

}  // namespace multinet
