#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "multinet/elem.hpp"
#include "multinet/partition.hpp"

namespace multinet {

struct Vertex {
  VertexId id;
  std::string label;  // atom name; empty when unlabeled
};

struct Hyperedge {
  std::vector<VertexId> inputs;
  std::vector<VertexId> outputs;
  std::string type;  // payload: a link type name in multiplicative structures

  /// inputs followed by outputs
  std::vector<VertexId> border() const;
};

/// Directed hypergraph. Linearity is not enforced here (see is_linear);
/// MStructure enforces it.
class Hypergraph {
 public:
  /// Throws DomainError if the id is already present.
  void add_vertex(const VertexId& id, std::string label = {});
  /// Adds any missing border vertex unlabeled. Returns the edge index.
  std::size_t add_edge(Hyperedge e);
  std::size_t add_edge(std::string type, std::vector<VertexId> inputs, std::vector<VertexId> outputs);

  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  const std::vector<Hyperedge>& edges() const noexcept { return edges_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  bool has_vertex(const VertexId& id) const { return index_.contains(id); }
  /// Throws DomainError for unknown ids.
  std::size_t vertex_index(const VertexId& id) const;
  const std::string& label(const VertexId& id) const { return vertices_[vertex_index(id)].label; }
  void set_label(const VertexId& id, std::string label);

  std::vector<VertexId> vertex_ids() const;

 private:
  std::vector<Vertex> vertices_;
  std::vector<Hyperedge> edges_;
  std::unordered_map<VertexId, std::size_t> index_;
};

struct UndirectedHypergraph {
  std::vector<VertexId> vertices;
  std::vector<std::vector<VertexId>> uedges;
};

struct Interface {
  std::vector<std::pair<VertexId, VertexId>> pairs;  // (vertex of G, vertex of H)
};

struct Renamed {
  Hypergraph graph;
  std::unordered_map<VertexId, VertexId> h_renaming;  // every H vertex -> its id in `graph`
};

// Results are sorted by the natural order on ids.
std::vector<VertexId> graph_inputs(const Hypergraph& G);
std::vector<VertexId> graph_outputs(const Hypergraph& G);
std::vector<VertexId> border(const Hypergraph& G);

bool is_linear(const Hypergraph& G);
bool is_dag(const Hypergraph& G);

UndirectedHypergraph undirected_shadow(const Hypergraph& G);
Partition connected_components(const UndirectedHypergraph& U);
std::size_t component_count(const UndirectedHypergraph& U);
bool is_forest(const UndirectedHypergraph& U);
/// Connected forest; the empty hypergraph is not a tree.
bool is_tree(const UndirectedHypergraph& U);

/// H's vertices are renamed "<id>#k" (smallest free k >= 2) when they clash with G.
Renamed disjoint_union(const Hypergraph& G, const Hypergraph& H);

/// Identifies each G-vertex of X with its H-vertex; the G id survives and
/// keeps its label unless it has none. Throws DomainError for a malformed
/// interface and CompositionError when the result is not linear.
Renamed compose(const Hypergraph& G, const Hypergraph& H, const Interface& X);

/// Vertex bijection G -> H preserving edge types, port positions and labels.
std::optional<std::unordered_map<VertexId, VertexId>> find_isomorphism(const Hypergraph& G, const Hypergraph& H);

}  // namespace multinet
