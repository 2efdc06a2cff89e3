#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace oracle {

using multinet::Block;
using multinet::ElemId;
using multinet::MStructure;
using multinet::Partition;
using multinet::PartitionSet;

std::vector<std::uint64_t> bell_numbers(std::size_t n_max) {
  std::vector<std::uint64_t> out{1};
  std::vector<std::uint64_t> row{1};
  for (std::size_t n = 1; n <= n_max; ++n) {
    std::vector<std::uint64_t> next{row.back()};
    for (auto x : row) next.push_back(next.back() + x);
    out.push_back(row.back());
    row = next;
  }
  out.resize(n_max + 1);
  return out;
}

namespace {

// nodes: ("L", block index) / ("R", block index); one edge per element
std::pair<bool, std::size_t> graph_shape(const Partition& p, const Partition& q) {
  std::size_t np = p.block_count();
  std::size_t n = np + q.block_count();
  std::vector<std::vector<std::size_t>> adj(n);
  std::size_t edges = 0;
  for (const auto& e : p.ground()) {
    std::size_t a = *p.block_of(e);
    std::size_t b = np + *q.block_of(e);
    adj[a].push_back(b);
    adj[b].push_back(a);
    ++edges;
  }
  std::vector<bool> seen(n, false);
  std::size_t comps = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++comps;
    std::queue<std::size_t> bfs;
    bfs.push(s);
    seen[s] = true;
    while (!bfs.empty()) {
      auto v = bfs.front();
      bfs.pop();
      for (auto w : adj[v]) {
        if (!seen[w]) {
          seen[w] = true;
          bfs.push(w);
        }
      }
    }
  }
  // a multigraph is a forest iff |E| = |V| - components
  return {edges == n - comps, comps};
}

}  // namespace

bool weakly_orthogonal(const Partition& p, const Partition& q) { return graph_shape(p, q).first; }

bool orthogonal(const Partition& p, const Partition& q) {
  auto [acyclic, comps] = graph_shape(p, q);
  return acyclic && comps == 1;
}

std::vector<Partition> all_partitions(const std::vector<ElemId>& ground) {
  std::vector<std::vector<Block>> acc{{}};
  for (const auto& e : ground) {
    std::vector<std::vector<Block>> next;
    for (const auto& blocks : acc) {
      for (std::size_t k = 0; k < blocks.size(); ++k) {
        auto copy = blocks;
        copy[k].push_back(e);
        next.push_back(std::move(copy));
      }
      auto copy = blocks;
      copy.push_back({e});
      next.push_back(std::move(copy));
    }
    acc = std::move(next);
  }
  std::vector<Partition> out;
  for (auto& b : acc) out.emplace_back(std::move(b));
  return out;
}

std::vector<std::string> inputs(const MStructure& S) {
  std::set<std::string> produced;
  for (const auto& e : S.graph().edges()) {
    for (const auto& v : e.outputs) produced.insert(v.str());
  }
  std::vector<std::string> out;
  for (const auto& v : S.graph().vertices()) {
    if (!produced.count(v.id.str())) out.push_back(v.id.str());
  }
  return out;
}

std::vector<std::string> outputs(const MStructure& S) {
  std::set<std::string> consumed;
  for (const auto& e : S.graph().edges()) {
    for (const auto& v : e.inputs) consumed.insert(v.str());
  }
  std::vector<std::string> out;
  for (const auto& v : S.graph().vertices()) {
    if (!consumed.count(v.id.str())) out.push_back(v.id.str());
  }
  return out;
}

std::vector<std::string> border(const MStructure& S) {
  std::set<std::string> b;
  for (const auto& v : inputs(S)) b.insert(v);
  for (const auto& v : outputs(S)) b.insert(v);
  return {b.begin(), b.end()};
}

namespace {

void expand(const MStructure& S, std::size_t k, Test& cur, std::vector<Test>& out) {
  if (k == S.graph().edge_count()) {
    out.push_back(cur);
    return;
  }
  const auto& e = S.graph().edges()[k];
  const auto& type = S.link_type(k);
  for (const auto& p : type.behavior()) {
    std::size_t added = 0;
    for (const auto& b : p.blocks()) {
      std::vector<std::string> ue;
      for (const auto& port : b) {
        const std::string& name = port.str();
        std::size_t idx = std::stoul(name.substr(1)) - 1;
        ue.push_back(name[0] == 'i' ? e.inputs[idx].str() : e.outputs[idx].str());
      }
      cur.uedges.push_back(std::move(ue));
      ++added;
    }
    expand(S, k + 1, cur, out);
    cur.uedges.resize(cur.uedges.size() - added);
  }
}

}  // namespace

std::vector<Test> tests(const MStructure& S) {
  std::vector<Test> out;
  Test cur;
  expand(S, 0, cur, out);
  return out;
}

TestShape analyse(const MStructure& S, const Test& t) {
  // bipartite expansion: vertex nodes then one node per uedge
  std::map<std::string, std::size_t> idx;
  for (const auto& v : S.graph().vertices()) idx.emplace(v.id.str(), idx.size());
  std::size_t nv = idx.size();
  std::size_t n = nv + t.uedges.size();
  std::vector<std::vector<std::size_t>> adj(n);
  std::size_t arcs = 0;
  for (std::size_t k = 0; k < t.uedges.size(); ++k) {
    for (const auto& v : t.uedges[k]) {
      adj[nv + k].push_back(idx.at(v));
      adj[idx.at(v)].push_back(nv + k);
      ++arcs;
    }
  }
  std::vector<std::size_t> comp(n, SIZE_MAX);
  std::size_t comps = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] != SIZE_MAX) continue;
    std::queue<std::size_t> bfs;
    bfs.push(s);
    comp[s] = comps;
    while (!bfs.empty()) {
      auto v = bfs.front();
      bfs.pop();
      for (auto w : adj[v]) {
        if (comp[w] == SIZE_MAX) {
          comp[w] = comps;
          bfs.push(w);
        }
      }
    }
    ++comps;
  }
  TestShape shape;
  shape.acyclic = arcs == n - comps;
  std::set<std::size_t> vertex_comps;
  for (std::size_t i = 0; i < nv; ++i) vertex_comps.insert(comp[i]);
  shape.components = vertex_comps.size();
  std::map<std::size_t, std::vector<std::string>> groups;
  std::set<std::size_t> touched;
  for (const auto& b : border(S)) {
    groups[comp[idx.at(b)]].push_back(b);
    touched.insert(comp[idx.at(b)]);
  }
  for (auto& [c, g] : groups) shape.component_of_border.push_back(g);
  for (const auto& [name, i] : idx) {
    if (!touched.count(comp[i])) shape.stranded.push_back(name);
  }
  return shape;
}

PartitionSet behavior(const MStructure& S) {
  std::vector<ElemId> ground;
  for (const auto& b : border(S)) ground.emplace_back(b);
  std::vector<Partition> members;
  for (const auto& t : tests(S)) {
    std::vector<Block> blocks;
    for (const auto& g : analyse(S, t).component_of_border) blocks.emplace_back(g.begin(), g.end());
    members.emplace_back(std::move(blocks));
  }
  return PartitionSet(ground, std::move(members));
}

bool is_correct(const MStructure& S) {
  if (S.graph().vertex_count() == 0) return false;
  for (const auto& t : tests(S)) {
    auto shape = analyse(S, t);
    if (!shape.acyclic || shape.components != 1) return false;
  }
  return true;
}

bool is_component(const MStructure& S) {
  for (const auto& t : tests(S)) {
    auto shape = analyse(S, t);
    if (!shape.acyclic || !shape.stranded.empty()) return false;
  }
  return true;
}

bool is_transitory(const MStructure& S) {
  if (!oracle::is_component(S)) return false;
  auto outs = outputs(S);
  std::set<std::string> out_set(outs.begin(), outs.end());
  auto all_tests = tests(S);
  for (const auto& i : inputs(S)) {
    bool found = false;
    for (const auto& t : all_tests) {
      for (const auto& block : analyse(S, t).component_of_border) {
        bool has_i = std::find(block.begin(), block.end(), i) != block.end();
        bool has_o = std::any_of(block.begin(), block.end(), [&](const std::string& v) { return out_set.count(v) > 0; });
        if (has_i && has_o) found = true;
      }
      if (found) break;
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace oracle
