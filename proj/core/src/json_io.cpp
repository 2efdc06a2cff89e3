#include "multinet/json_io.hpp"

#include "multinet/connectives.hpp"
#include "multinet/errors.hpp"

namespace multinet {

using nlohmann::json;

namespace {

template <typename F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw DomainError(std::string(what) + ": " + e.what());
  }
}

json ids(const std::vector<VertexId>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(v.str());
  return a;
}

std::vector<VertexId> ids_from(const json& j) {
  std::vector<VertexId> out;
  for (const auto& e : j) out.emplace_back(e.get<std::string>());
  return out;
}

}  // namespace

json to_json(const Partition& p) {
  json a = json::array();
  for (const auto& b : p.blocks()) a.push_back(ids(b));
  return a;
}

json to_json(const PartitionSet& P) {
  json a = json::array();
  for (const auto& p : P) a.push_back(to_json(p));
  return a;
}

Partition partition_from_json(const json& j) {
  return guarded("partition", [&] {
    if (!j.is_array()) throw DomainError("partition: expected an array of blocks");
    std::vector<Block> blocks;
    for (const auto& b : j) blocks.push_back(ids_from(b));
    return Partition(std::move(blocks));
  });
}

PartitionSet partition_set_from_json(const json& j, const std::vector<ElemId>* ground) {
  return guarded("partition set", [&] {
    if (!j.is_array()) throw DomainError("partition set: expected an array");
    std::vector<Partition> members;
    for (const auto& p : j) members.push_back(partition_from_json(p));
    if (ground != nullptr) return PartitionSet(*ground, std::move(members));
    return PartitionSet::of(std::move(members));
  });
}

json to_json(const LinkType& t) {
  return json{{"name", t.name()}, {"in", t.n_in()}, {"out", t.n_out()}, {"behavior", to_json(t.behavior())}};
}

LinkType link_type_from_json(const json& j) {
  return guarded("link type", [&] {
    auto n_in = j.at("in").get<std::size_t>();
    auto n_out = j.at("out").get<std::size_t>();
    auto ports = LinkType::formal_ports(n_in, n_out);
    return LinkType(j.at("name").get<std::string>(), n_in, n_out, partition_set_from_json(j.at("behavior"), &ports));
  });
}

json to_json(const MStructure& S) {
  json vertices = json::array();
  for (const auto& v : S.graph().vertices()) {
    json o{{"id", v.id.str()}};
    if (!v.label.empty()) o["label"] = v.label;
    vertices.push_back(std::move(o));
  }
  json edges = json::array();
  for (const auto& e : S.graph().edges()) {
    edges.push_back(json{{"type", e.type}, {"inputs", ids(e.inputs)}, {"outputs", ids(e.outputs)}});
  }
  json sig = json::array();
  for (const auto& [name, t] : S.signature().custom()) {
    auto builtin = builtin_type(name);
    if (!builtin || !(*builtin == t)) sig.push_back(to_json(t));
  }
  json out{{"vertices", vertices}, {"edges", edges}};
  if (!sig.empty()) out["signature"] = sig;
  return out;
}

MStructure structure_from_json(const json& j, const Limits& limits) {
  return guarded("structure", [&] {
    if (!j.is_object()) throw DomainError("structure: expected an object");
    Signature sig;
    if (j.contains("signature")) {
      for (const auto& t : j.at("signature")) sig.add(link_type_from_json(t));
    }
    Hypergraph g;
    if (j.contains("vertices")) {
      for (const auto& v : j.at("vertices")) {
        g.add_vertex(VertexId(v.at("id").get<std::string>()), v.value("label", std::string()));
      }
    }
    if (j.contains("edges")) {
      for (const auto& e : j.at("edges")) {
        std::string type = e.at("type").get<std::string>();
        if (!sig.resolve(type)) {
          if (auto t = girard_type_named(type, limits)) sig.add(std::move(*t));
        }
        g.add_edge(std::move(type), ids_from(e.value("inputs", json::array())),
                   ids_from(e.value("outputs", json::array())));
      }
    }
    return MStructure(std::move(g), std::move(sig));
  });
}

json switching_to_json(const MStructure& S, const Switching& sigma) {
  json a = json::array();
  auto parts = switching_partitions(S, sigma);
  for (std::size_t k = 0; k < parts.size(); ++k) {
    a.push_back(json{{"edge", k}, {"type", S.graph().edges()[k].type}, {"partition", to_json(parts[k])}});
  }
  return a;
}

json to_json(const UndirectedHypergraph& U) {
  json e = json::array();
  for (const auto& ue : U.uedges) e.push_back(ids(ue));
  return json{{"vertices", ids(U.vertices)}, {"uedges", e}};
}

json to_json(const ExecutionState& state) {
  json trace = json::array();
  for (const auto& a : state.trace) {
    json glue = json::array();
    for (const auto& g : a.glue) glue.push_back(json{{"state_input", g.host_input.str()}, {"method_output", g.guest_output.str()}});
    trace.push_back(json{{"step", a.step}, {"method", a.method}, {"glue", glue}});
  }
  return json{{"steps", state.steps}, {"trace", trace}, {"structure", to_json(*state.structure)}};
}

}  // namespace multinet
