#include "multinet/hypergraph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_set>

#include "multinet/errors.hpp"
#include "union_find.hpp"

namespace multinet {

std::vector<VertexId> Hyperedge::border() const {
  std::vector<VertexId> out = inputs;
  out.insert(out.end(), outputs.begin(), outputs.end());
  return out;
}

void Hypergraph::add_vertex(const VertexId& id, std::string label) {
  if (id.empty()) throw DomainError("vertex id must be non-empty");
  if (index_.contains(id)) throw DomainError("duplicate vertex " + id.str());
  index_.emplace(id, vertices_.size());
  vertices_.push_back({id, std::move(label)});
}

std::size_t Hypergraph::add_edge(Hyperedge e) {
  for (const auto& v : e.border()) {
    if (!index_.contains(v)) add_vertex(v);
  }
  edges_.push_back(std::move(e));
  return edges_.size() - 1;
}

std::size_t Hypergraph::add_edge(std::string type, std::vector<VertexId> inputs, std::vector<VertexId> outputs) {
  return add_edge(Hyperedge{std::move(inputs), std::move(outputs), std::move(type)});
}

std::size_t Hypergraph::vertex_index(const VertexId& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw DomainError("unknown vertex " + id.str());
  return it->second;
}

void Hypergraph::set_label(const VertexId& id, std::string label) {
  vertices_[vertex_index(id)].label = std::move(label);
}

std::vector<VertexId> Hypergraph::vertex_ids() const {
  std::vector<VertexId> out;
  out.reserve(vertices_.size());
  for (const auto& v : vertices_) out.push_back(v.id);
  return out;
}

namespace {

std::vector<VertexId> vertices_missing_from(const Hypergraph& G, bool outputs_side) {
  std::unordered_set<VertexId> seen;
  for (const auto& e : G.edges()) {
    for (const auto& v : outputs_side ? e.outputs : e.inputs) seen.insert(v);
  }
  std::vector<VertexId> out;
  for (const auto& v : G.vertices()) {
    if (!seen.contains(v.id)) out.push_back(v.id);
  }
  std::sort(out.begin(), out.end());
  return out;
}

VertexId fresh_name(const VertexId& base, const std::unordered_set<VertexId>& taken) {
  for (std::size_t k = 2;; ++k) {
    VertexId candidate(base.str() + "#" + std::to_string(k));
    if (!taken.contains(candidate)) return candidate;
  }
}

}  // namespace

std::vector<VertexId> graph_inputs(const Hypergraph& G) { return vertices_missing_from(G, true); }
std::vector<VertexId> graph_outputs(const Hypergraph& G) { return vertices_missing_from(G, false); }

std::vector<VertexId> border(const Hypergraph& G) {
  std::vector<VertexId> in = graph_inputs(G);
  std::vector<VertexId> out = graph_outputs(G);
  std::vector<VertexId> all;
  std::set_union(in.begin(), in.end(), out.begin(), out.end(), std::back_inserter(all));
  return all;
}

bool is_linear(const Hypergraph& G) {
  std::unordered_set<VertexId> as_input;
  std::unordered_set<VertexId> as_output;
  for (const auto& e : G.edges()) {
    std::unordered_set<VertexId> local;
    for (const auto& v : e.border()) {
      if (!G.has_vertex(v)) return false;
      if (!local.insert(v).second) return false;
    }
    for (const auto& v : e.inputs) {
      if (!as_input.insert(v).second) return false;
    }
    for (const auto& v : e.outputs) {
      if (!as_output.insert(v).second) return false;
    }
  }
  return true;
}

bool is_dag(const Hypergraph& G) {
  // edge h precedes edge h' when an output of h is an input of h'
  std::unordered_map<VertexId, std::vector<std::size_t>> consumers;
  for (std::size_t k = 0; k < G.edge_count(); ++k) {
    for (const auto& v : G.edges()[k].inputs) consumers[v].push_back(k);
  }
  std::vector<std::vector<std::size_t>> succ(G.edge_count());
  std::vector<std::size_t> indegree(G.edge_count(), 0);
  for (std::size_t k = 0; k < G.edge_count(); ++k) {
    for (const auto& v : G.edges()[k].outputs) {
      auto it = consumers.find(v);
      if (it == consumers.end()) continue;
      for (std::size_t t : it->second) {
        succ[k].push_back(t);
        ++indegree[t];
      }
    }
  }
  std::deque<std::size_t> ready;
  for (std::size_t k = 0; k < indegree.size(); ++k) {
    if (indegree[k] == 0) ready.push_back(k);
  }
  std::size_t removed = 0;
  while (!ready.empty()) {
    std::size_t k = ready.front();
    ready.pop_front();
    ++removed;
    for (std::size_t t : succ[k]) {
      if (--indegree[t] == 0) ready.push_back(t);
    }
  }
  return removed == G.edge_count();
}

UndirectedHypergraph undirected_shadow(const Hypergraph& G) {
  UndirectedHypergraph U;
  U.vertices = G.vertex_ids();
  for (const auto& e : G.edges()) {
    auto b = e.border();
    if (!b.empty()) U.uedges.push_back(std::move(b));
  }
  return U;
}

namespace {

struct Indexed {
  std::unordered_map<VertexId, std::size_t> index;
  detail::UnionFind uf;
  bool acyclic = true;
};

Indexed analyse(const UndirectedHypergraph& U) {
  Indexed r;
  for (std::size_t i = 0; i < U.vertices.size(); ++i) r.index.emplace(U.vertices[i], i);
  r.uf.reset(U.vertices.size());
  for (const auto& ue : U.uedges) {
    // a uedge joins its members through one hub; a failed join closes a cycle
    for (std::size_t i = 1; i < ue.size(); ++i) {
      auto a = r.index.find(ue[0]);
      auto b = r.index.find(ue[i]);
      if (a == r.index.end() || b == r.index.end()) {
        throw DomainError("uedge member is not a vertex of the hypergraph");
      }
      if (!r.uf.unite(a->second, b->second)) r.acyclic = false;
    }
  }
  return r;
}

}  // namespace

Partition connected_components(const UndirectedHypergraph& U) {
  Indexed r = analyse(U);
  std::map<std::size_t, Block> groups;
  for (std::size_t i = 0; i < U.vertices.size(); ++i) groups[r.uf.find(i)].push_back(U.vertices[i]);
  std::vector<Block> blocks;
  for (auto& [root, b] : groups) blocks.push_back(std::move(b));
  return Partition(std::move(blocks));
}

std::size_t component_count(const UndirectedHypergraph& U) { return analyse(U).uf.sets(); }

bool is_forest(const UndirectedHypergraph& U) { return analyse(U).acyclic; }

bool is_tree(const UndirectedHypergraph& U) {
  Indexed r = analyse(U);
  return r.acyclic && !U.vertices.empty() && r.uf.sets() == 1;
}

namespace {

Renamed merge(const Hypergraph& G, const Hypergraph& H, const std::unordered_map<VertexId, VertexId>& glued) {
  Renamed out;
  out.graph = G;
  std::unordered_set<VertexId> taken;
  for (const auto& v : G.vertices()) taken.insert(v.id);
  for (const auto& v : H.vertices()) taken.insert(v.id);
  for (const auto& v : H.vertices()) {
    auto g = glued.find(v.id);
    if (g != glued.end()) {
      out.h_renaming.emplace(v.id, g->second);
      if (out.graph.label(g->second).empty() && !v.label.empty()) out.graph.set_label(g->second, v.label);
      continue;
    }
    VertexId id = v.id;
    if (G.has_vertex(id)) {
      id = fresh_name(v.id, taken);
      taken.insert(id);
    }
    out.h_renaming.emplace(v.id, id);
    out.graph.add_vertex(id, v.label);
  }
  for (const auto& e : H.edges()) {
    Hyperedge r{{}, {}, e.type};
    for (const auto& v : e.inputs) r.inputs.push_back(out.h_renaming.at(v));
    for (const auto& v : e.outputs) r.outputs.push_back(out.h_renaming.at(v));
    out.graph.add_edge(std::move(r));
  }
  return out;
}

}  // namespace

Renamed disjoint_union(const Hypergraph& G, const Hypergraph& H) { return merge(G, H, {}); }

Renamed compose(const Hypergraph& G, const Hypergraph& H, const Interface& X) {
  if (X.pairs.empty()) throw DomainError("compose: empty interface");
  std::unordered_map<VertexId, VertexId> glued;
  std::unordered_set<VertexId> g_side;
  for (const auto& [g, h] : X.pairs) {
    if (!G.has_vertex(g)) throw DomainError("compose: " + g.str() + " is not a vertex of the left graph");
    if (!H.has_vertex(h)) throw DomainError("compose: " + h.str() + " is not a vertex of the right graph");
    if (!g_side.insert(g).second || !glued.emplace(h, g).second) {
      throw DomainError("compose: interface is not injective");
    }
  }
  Renamed out = merge(G, H, glued);
  if (!is_linear(out.graph)) throw CompositionError("compose: gluing breaks linearity");
  return out;
}

namespace {

struct IsoSearch {
  const Hypergraph& G;
  const Hypergraph& H;
  std::vector<std::size_t> order;  // G edges, connectivity first
  std::vector<bool> used;
  std::unordered_map<VertexId, VertexId> fwd;
  std::unordered_map<VertexId, VertexId> bwd;

  bool bind(const VertexId& g, const VertexId& h, std::vector<VertexId>& added) {
    auto f = fwd.find(g);
    if (f != fwd.end()) return f->second == h;
    if (bwd.contains(h)) return false;
    if (G.label(g) != H.label(h)) return false;
    fwd.emplace(g, h);
    bwd.emplace(h, g);
    added.push_back(g);
    return true;
  }

  void unbind(const std::vector<VertexId>& added) {
    for (const auto& g : added) {
      bwd.erase(fwd.at(g));
      fwd.erase(g);
    }
  }

  bool try_edge(const Hyperedge& a, const Hyperedge& b, std::vector<VertexId>& added) {
    if (a.type != b.type || a.inputs.size() != b.inputs.size() || a.outputs.size() != b.outputs.size()) return false;
    for (std::size_t i = 0; i < a.inputs.size(); ++i) {
      if (!bind(a.inputs[i], b.inputs[i], added)) return false;
    }
    for (std::size_t i = 0; i < a.outputs.size(); ++i) {
      if (!bind(a.outputs[i], b.outputs[i], added)) return false;
    }
    return true;
  }

  bool search(std::size_t depth) {
    if (depth == order.size()) return true;
    const Hyperedge& a = G.edges()[order[depth]];
    for (std::size_t k = 0; k < H.edge_count(); ++k) {
      if (used[k]) continue;
      std::vector<VertexId> added;
      if (try_edge(a, H.edges()[k], added)) {
        used[k] = true;
        if (search(depth + 1)) return true;
        used[k] = false;
      }
      unbind(added);
    }
    return false;
  }
};

std::vector<std::size_t> connectivity_order(const Hypergraph& G) {
  std::unordered_map<VertexId, std::vector<std::size_t>> touching;
  for (std::size_t k = 0; k < G.edge_count(); ++k) {
    for (const auto& v : G.edges()[k].border()) touching[v].push_back(k);
  }
  std::vector<bool> seen(G.edge_count(), false);
  std::vector<std::size_t> order;
  for (std::size_t start = 0; start < G.edge_count(); ++start) {
    if (seen[start]) continue;
    std::deque<std::size_t> queue{start};
    seen[start] = true;
    while (!queue.empty()) {
      std::size_t k = queue.front();
      queue.pop_front();
      order.push_back(k);
      for (const auto& v : G.edges()[k].border()) {
        for (std::size_t t : touching[v]) {
          if (!seen[t]) {
            seen[t] = true;
            queue.push_back(t);
          }
        }
      }
    }
  }
  return order;
}

}  // namespace

std::optional<std::unordered_map<VertexId, VertexId>> find_isomorphism(const Hypergraph& G, const Hypergraph& H) {
  if (G.vertex_count() != H.vertex_count() || G.edge_count() != H.edge_count()) return std::nullopt;
  IsoSearch s{G, H, connectivity_order(G), std::vector<bool>(H.edge_count(), false), {}, {}};
  if (!s.search(0)) return std::nullopt;
  // remaining vertices touch no edge: pair them up by label
  std::multimap<std::string, VertexId> free_h;
  for (const auto& v : H.vertices()) {
    if (!s.bwd.contains(v.id)) free_h.emplace(v.label, v.id);
  }
  for (const auto& v : G.vertices()) {
    if (s.fwd.contains(v.id)) continue;
    auto it = free_h.find(v.label);
    if (it == free_h.end()) return std::nullopt;
    s.fwd.emplace(v.id, it->second);
    free_h.erase(it);
  }
  return s.fwd;
}

}  // namespace multinet
