#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "multinet/hypergraph.hpp"
#include "multinet/limits.hpp"
#include "multinet/partition.hpp"

namespace multinet {

/// ⟨n_in, n_out, behavior⟩ with the behavior written over the formal ports
/// i1..i<n_in>, o1..o<n_out>.
class LinkType {
 public:
  /// Throws DomainError if the behavior is empty or not over the formal ports.
  LinkType(std::string name, std::size_t n_in, std::size_t n_out, PartitionSet behavior);

  static std::vector<ElemId> formal_ports(std::size_t n_in, std::size_t n_out);
  static ElemId input_port(std::size_t k) { return ElemId("i" + std::to_string(k)); }   // 1-based
  static ElemId output_port(std::size_t k) { return ElemId("o" + std::to_string(k)); }  // 1-based

  const std::string& name() const noexcept { return name_; }
  std::size_t n_in() const noexcept { return n_in_; }
  std::size_t n_out() const noexcept { return n_out_; }
  const PartitionSet& behavior() const noexcept { return behavior_; }

  friend bool operator==(const LinkType& a, const LinkType& b) {
    return a.name_ == b.name_ && a.n_in_ == b.n_in_ && a.n_out_ == b.n_out_ && a.behavior_ == b.behavior_;
  }

 private:
  std::string name_;
  std::size_t n_in_;
  std::size_t n_out_;
  PartitionSet behavior_;
};

/// Resolves builtin names: ax, tensor, par, cut, tensor_N, par_N,
/// tensor_bullet_N, par_bullet_N (N >= 1). Returns nullopt for other names;
/// throws DomainError for N = 0.
std::optional<LinkType> builtin_type(const std::string& name);

/// Named link types. Builtin names resolve without being registered.
class Signature {
 public:
  /// Throws DomainError on a second, different definition of a name.
  void add(LinkType t);
  /// Custom entry if present, else builtin; nullopt when unknown.
  std::optional<LinkType> resolve(const std::string& name) const;
  const std::map<std::string, LinkType>& custom() const noexcept { return types_; }

 private:
  std::map<std::string, LinkType> types_;
};

/// ax, tensor, par, cut and the n-ary families for each requested arity.
Signature builtin_types(const std::vector<std::size_t>& arities = {1, 2, 3, 4});
Signature merge(const Signature& a, const Signature& b);

/// Linear hypergraph whose edges are labelled by link types.
class MStructure {
 public:
  MStructure();
  /// Throws DomainError if the graph is not linear, an edge type is unknown
  /// or an edge's arities disagree with its type.
  explicit MStructure(Hypergraph graph, Signature signature = {});

  const Hypergraph& graph() const noexcept { return graph_; }
  const Signature& signature() const noexcept { return *signature_; }
  const LinkType& link_type(std::size_t edge) const { return *types_[edge]; }

  const std::vector<VertexId>& inputs() const noexcept { return inputs_; }
  const std::vector<VertexId>& outputs() const noexcept { return outputs_; }
  const std::vector<VertexId>& border() const noexcept { return border_; }
  bool is_border(const VertexId& v) const;
  bool is_input(const VertexId& v) const;
  bool is_output(const VertexId& v) const;

  /// Edge `edge`'s behavior member `choice` placed on its actual vertices.
  Partition instantiate(std::size_t edge, std::size_t choice) const;

 private:
  Hypergraph graph_;
  std::shared_ptr<const Signature> signature_;
  std::vector<std::shared_ptr<const LinkType>> types_;
  std::vector<VertexId> inputs_;
  std::vector<VertexId> outputs_;
  std::vector<VertexId> border_;
};

struct Composite {
  MStructure structure;
  std::unordered_map<VertexId, VertexId> guest_renaming;
};

Composite disjoint_union(const MStructure& a, const MStructure& b);
/// Glues (a-vertex, b-vertex) pairs; signatures are merged.
Composite compose(const MStructure& a, const MStructure& b, const Interface& X);

/// choice[k] indexes the canonical behavior list of edge k.
struct Switching {
  std::vector<std::size_t> choice;
  friend bool operator==(const Switching&, const Switching&) = default;
};

/// Connectivity of one test, indexed like graph().vertices().
struct TestView {
  bool acyclic = true;
  std::vector<std::size_t> component;  // representative vertex index per vertex
};

/// Product of behavior sizes, saturating at UINT64_MAX.
std::uint64_t switching_count(const MStructure& S);

/// Visits every switching in odometer order (first edge most significant).
/// Stops early when `fn` returns false. Throws ResourceError beyond
/// limits.max_switchings unless `bounded` is false.
void for_each_test(const MStructure& S, const std::function<bool(const Switching&, const TestView&)>& fn,
                   const Limits& limits = {}, bool bounded = true);

std::vector<Switching> enumerate_switchings(const MStructure& S, const Limits& limits = {});
/// One partition per edge, on the actual vertices.
std::vector<Partition> switching_partitions(const MStructure& S, const Switching& sigma);

UndirectedHypergraph test(const MStructure& S, const Switching& sigma);
Partition test_behavior(const MStructure& S, const Switching& sigma);
PartitionSet behavior(const MStructure& S, const Limits& limits = {});

bool is_correct(const MStructure& S, const Limits& limits = {});
std::optional<Switching> first_failing_test(const MStructure& S, const Limits& limits = {});
bool is_net(const MStructure& S, const Limits& limits = {});
bool is_component(const MStructure& S, const Limits& limits = {});
bool is_transitory(const MStructure& S, const Limits& limits = {});

struct ComponentWitness {
  enum class Kind { cycle, stranded };
  Switching switching;
  Kind kind;
  /// For `stranded`: vertices whose test component misses the border.
  std::vector<VertexId> stranded;
};

/// First test violating the component conditions, if any.
std::optional<ComponentWitness> component_witness(const MStructure& S, const Limits& limits = {});

/// Classic switching check for structures over {ax, tensor, par}: every
/// choice of one premise per par yields a spanning tree. Throws DomainError
/// for other link types.
bool dr_check_mll(const MStructure& S);

}  // namespace multinet
