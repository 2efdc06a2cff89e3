// One line per acceptance criterion; exit status is the number of failures.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "corpus.hpp"
#include "fixtures.hpp"
#include "multinet/connectives.hpp"
#include "multinet/expansion.hpp"
#include "multinet/instrument.hpp"
#include "multinet/program.hpp"
#include "oracles.hpp"

using namespace multinet;

namespace {

struct Verdict {
  bool pass;
  std::string detail;
};

int failures = 0;

void report(int n, const char* title, const std::function<Verdict()>& body) {
  Verdict v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v = {false, std::string("exception: ") + e.what()};
  }
  if (!v.pass) ++failures;
  std::cout << "criterion " << (n < 10 ? " " : "") << n << "  " << (v.pass ? "PASS" : "FAIL") << "  " << title
            << ": " << v.detail << std::endl;
}

std::vector<ElemId> elems(std::initializer_list<const char*> xs) {
  std::vector<ElemId> out;
  for (auto x : xs) out.emplace_back(x);
  return out;
}

std::vector<VertexId> V(std::initializer_list<const char*> xs) { return elems(xs); }

PartitionSet on_ports(const char* text, std::size_t n) { return PartitionSet::parse(text, LinkType::formal_ports(n, 1)); }

// i_k -> k, restricted to the inputs
PartitionSet input_partitions(const PartitionSet& B, std::size_t n) {
  std::unordered_map<ElemId, ElemId> m;
  for (std::size_t k = 1; k <= n; ++k) m.emplace(LinkType::input_port(k), ElemId(std::to_string(k)));
  return rename(restrict(B, LinkType::formal_ports(n, 0)), m);
}

std::string secs(std::chrono::steady_clock::time_point t0) {
  std::ostringstream s;
  s.precision(2);
  s << std::fixed << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() << " s";
  return s.str();
}

// ---------------------------------------------------------------------------

Verdict orthogonality_golden() {
  auto p = Partition::parse("[(1,2),(3)]");
  const char* qs[] = {"[(1,2,3)]", "[(1,3),(2)]", "[(1),(2,3)]", "[(1),(2),(3)]"};
  // expected: not-orth, orth, orth, weak-only
  const bool orth[] = {false, true, true, false};
  const bool weak[] = {false, true, true, true};
  std::ostringstream d;
  bool ok = true;
  for (int k = 0; k < 4; ++k) {
    auto q = Partition::parse(qs[k]);
    bool o = orthogonal(p, q);
    bool w = weakly_orthogonal(p, q);
    ok = ok && o == orth[k] && w == weak[k];
    d << "q" << k + 1 << (o ? "=orth" : w ? "=weak-only" : "=not-orth") << (k < 3 ? ", " : "");
  }
  return {ok, d.str()};
}

Verdict dr_equivalence() {
  auto t0 = std::chrono::steady_clock::now();
  std::size_t n = 0, agree = 0, nets = 0;
  for (const auto& S : corpus::mll_structures(4)) {
    ++n;
    bool a = is_net(S);
    nets += a;
    agree += a == dr_check_mll(S);
  }
  auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::ostringstream d;
  d << agree << "/" << n << " structures agree (" << nets << " nets) in " << secs(t0);
  return {agree == n && n > 0 && elapsed < 30.0, d.str()};
}

Verdict module_triple() {
  auto s1 = fixtures::structure("modex_s1");
  auto s2 = fixtures::structure("modex_s2");
  auto s3 = fixtures::structure("modex_s3");
  bool one = is_net(s1);
  bool two = is_component(s2) && !is_transitory(s2) && !is_net(s2);
  auto w = component_witness(s3);
  bool three = !is_component(s3) && w && w->kind == ComponentWitness::Kind::stranded && w->stranded == V({"a2", "a3"});
  std::ostringstream d;
  d << "S1 net=" << one << ", S2 component/not transitory/not net=" << two << ", S3 stranded=";
  if (w) {
    for (const auto& v : w->stranded) d << v.str() << " ";
  }
  return {one && two && three, d.str()};
}

struct CorpusStats {
  std::size_t triples = 0;
  std::size_t agree = 0;
  std::size_t expanding = 0;
  std::size_t trans_pairs = 0;
  std::size_t trans_counterexamples = 0;
  std::size_t enumerations = 0;
  std::size_t over_budget = 0;
};

CorpusStats run_corpus() {
  CorpusStats st;
  auto triples = corpus::random_triples(10000, 3, 2, 20240611u);
  auto exhaustive = corpus::exhaustive_triples(2);
  triples.insert(triples.end(), exhaustive.begin(), exhaustive.end());
  std::map<const MStructure*, PartitionSet> cache;
  auto beh = [&](const std::shared_ptr<const MStructure>& s) -> const PartitionSet& {
    auto it = cache.find(s.get());
    if (it == cache.end()) it = cache.emplace(s.get(), behavior(*s)).first;
    return it->second;
  };
  for (const auto& t : triples) {
    ExpansionSite site(t.host, t.guest, t.glue);
    const auto& B1 = beh(t.host);
    const auto& B2 = beh(t.guest);
    auto before = instrument::snapshot();
    bool characterized = check_expansion(site, B1, B2).expands;
    auto delta = instrument::snapshot() - before;
    st.enumerations += delta.switching_enumerations;
    if (delta.orthogonality_tests > B1.size() * B2.size()) ++st.over_budget;
    bool direct = expands_direct(site);
    ++st.triples;
    st.agree += direct == characterized;
    if (!direct) continue;
    ++st.expanding;
    if (is_transitory(*t.host) && is_transitory(*t.guest)) {
      ++st.trans_pairs;
      if (!is_transitory(expand(site).structure)) ++st.trans_counterexamples;
    }
  }
  return st;
}

Verdict girard_figure() {
  auto G = girard_type(2, 2, Polarity::primal).behavior();
  auto D = girard_type(2, 2, Polarity::dual).behavior();
  auto G_fig = on_ports("{[(o1,i1,i3),(i2),(i4)],[(o1,i2,i4),(i1),(i3)]}", 4);
  auto D_fig = on_ports("{[(o1,i1,i2),(i3,i4)],[(o1,i3,i4),(i1,i2)],[(o1,i1,i4),(i2,i3)],[(o1,i2,i3),(i1,i4)]}", 4);
  auto fam = cyclic_union_intersection(2, 2);
  // bottom row: the intersection of the CNF trees and the union of the DNF trees
  bool rows = fam.intersection.to_string() == G_fig.to_string() && fam.union_.to_string() == D_fig.to_string();
  std::ostringstream d;
  d << "G=" << G.to_string() << " dual has " << D.size() << " members, rows " << (rows ? "match" : "differ");
  return {G == G_fig && D == D_fig && rows, d.str()};
}

Verdict nondecomposability() {
  auto pg = nondecomposability_probe(girard_type(2, 2, Polarity::primal).behavior(), 4);
  auto pd = nondecomposability_probe(girard_type(2, 2, Polarity::dual).behavior(), 4);
  auto f = Formula::tensor(Formula::atom(1), Formula::par(Formula::atom(2), Formula::atom(3)));
  auto self = nondecomposability_probe(behavior(formula_structure(f)), 3);
  std::ostringstream d;
  d << "G: " << (pg.match ? "match" : "none") << " in " << pg.labeled_trees << " trees, dual: "
    << (pd.match ? "match" : "none") << " in " << pd.labeled_trees << " trees, a*(b|c): "
    << (self.match ? self.match->to_string() : "none");
  return {!pg.match && !pd.match && pg.labeled_trees == 120 && pd.labeled_trees == 120 && self.match.has_value(),
          d.str()};
}

Verdict synthetic_partitions() {
  using F = Formula;
  auto a = F::atom(1), b = F::atom(2), c = F::atom(3), d4 = F::atom(4);
  F f = F::tensor(a, F::par(b, c));
  F g = F::tensor(F::par(a, b), F::par(c, d4));
  F h = F::par(a, F::tensor(b, c));
  auto nums = [](std::size_t n) {
    std::vector<ElemId> out;
    for (std::size_t k = 1; k <= n; ++k) out.emplace_back(std::to_string(k));
    return out;
  };
  // premise splits of each synthetic rule: the behavior of the dual tree
  auto pf = input_partitions(behavior(formula_structure(f.dual())), 3);
  auto pg = input_partitions(behavior(formula_structure(g.dual())), 4);
  auto ph = input_partitions(behavior(formula_structure(h.dual())), 3);
  bool ok = pf == PartitionSet::parse("{[(1),(2,3)]}", nums(3)) && pg.contains(Partition::parse("[(1,2),(3,4)]")) &&
            ph == PartitionSet::parse("{[(1,2),(3)],[(1,3),(2)]}", nums(3));
  // the tree's own behavior gives the orthogonal view
  auto own_f = input_partitions(behavior(formula_structure(f)), 3);
  ok = ok && sets_orthogonal(pf, own_f, OrthMode::strong);
  std::ostringstream d;
  d << "F " << pf.to_string() << ", G " << pg.to_string() << ", H " << ph.to_string();
  return {ok, d.str()};
}

// connected-component partition of a vertex set under pairwise edges
Partition components_of(const std::vector<std::string>& vertices,
                        const std::vector<std::pair<std::string, std::string>>& edges) {
  std::map<std::string, std::string> parent;
  for (const auto& v : vertices) parent[v] = v;
  std::function<std::string(const std::string&)> find = [&](const std::string& v) {
    return parent[v] == v ? v : parent[v] = find(parent[v]);
  };
  for (const auto& [x, y] : edges) parent[find(x)] = find(y);
  std::map<std::string, Block> blocks;
  for (const auto& v : vertices) blocks[find(v)].emplace_back(v);
  std::vector<Block> out;
  for (auto& [r, b] : blocks) out.push_back(std::move(b));
  return Partition(std::move(out));
}

Verdict extest() {
  auto S = fixtures::structure("extest_kappa");
  auto switchings = enumerate_switchings(S);
  // drawn edges, grouped by the link that contributes them; k is the kappa
  // output, t the tensor output, o the par output
  using Edges = std::vector<std::pair<std::string, std::string>>;
  struct Drawn {
    Edges edges;
    std::multiset<std::set<std::string>> links;
  };
  Drawn left{{{"a", "k"}, {"b", "k"}, {"d", "t"}, {"e", "t"}, {"k", "o"}}, {{"a", "b", "k"}, {"d", "e", "t"}, {"k", "o"}}};
  Drawn right{{{"a", "k"}, {"c", "k"}, {"d", "t"}, {"e", "t"}, {"t", "o"}}, {{"a", "c", "k"}, {"d", "e", "t"}, {"t", "o"}}};
  std::vector<std::string> all{"a", "b", "c", "d", "e", "k", "t", "o"};
  auto matches = [&](const Drawn& fig) {
    for (const auto& sigma : switchings) {
      auto U = test(S, sigma);
      std::multiset<std::set<std::string>> nontrivial;
      for (const auto& e : U.uedges) {
        if (e.size() < 2) continue;
        std::set<std::string> s;
        for (const auto& v : e) s.insert(v.str());
        nontrivial.insert(s);
      }
      if (nontrivial != fig.links) continue;
      return connected_components(U) == components_of(all, fig.edges);
    }
    return false;
  };
  bool l = matches(left), r = matches(right);
  std::ostringstream d;
  d << switchings.size() << " switchings, left test " << (l ? "reproduced" : "missing") << ", right test "
    << (r ? "reproduced" : "missing");
  return {switchings.size() == 4 && l && r, d.str()};
}

MStructure alloc_alternative(const char* first, const char* second) {
  Hypergraph g;
  g.add_edge("tensor", {VertexId(first), VertexId("y1")}, V({"t1"}));
  g.add_edge("tensor", {VertexId(second), VertexId("y2")}, V({"t2"}));
  g.add_edge("par_bullet_2", V({"t1", "t2"}), {});
  g.add_edge("ax", {}, V({"y1", "c1"}));
  g.add_edge("ax", {}, V({"y2", "c2"}));
  return MStructure(std::move(g));
}

MStructure choice_alternative(const char* p1a, const char* p1b, const char* p2a, const char* p2b) {
  Hypergraph g;
  g.add_edge("par", {VertexId(p1a), VertexId(p1b)}, V({"p1"}));
  g.add_edge("par", {VertexId(p2a), VertexId(p2b)}, V({"p2"}));
  g.add_edge("tensor", V({"p1", "p2"}), V({"t"}));
  g.add_edge("tensor_bullet_2", V({"t", "y"}), {});
  g.add_edge("ax", {}, V({"y", "c"}));
  return MStructure(std::move(g));
}

Verdict union_intersection() {
  auto alloc = behavior(fixtures::structure("concurrent_resources"));
  auto u = set_union(behavior(alloc_alternative("r1", "r2")), behavior(alloc_alternative("r2", "r1")));
  auto choice = behavior(fixtures::structure("dependent_choice"));
  auto i = set_intersection(behavior(choice_alternative("r1", "r2", "r3", "r4")),
                            behavior(choice_alternative("r1", "r4", "r2", "r3")));
  std::ostringstream d;
  d << "allocation " << alloc.to_string() << (alloc == u ? " = " : " != ") << "union; choice " << choice.to_string()
    << (choice == i ? " = " : " != ") << "intersection";
  return {alloc == u && choice == i, d.str()};
}

// the program's composite after F, G, H and both facts, drawn by hand
MStructure expected_run_result() {
  Hypergraph g;
  auto atom = [&](const char* id, const char* label) { g.add_vertex(VertexId(id), label); };
  atom("a", "a");
  atom("fb", "b");
  atom("fc", "c");
  atom("gb1", "b1");
  atom("gb2", "b2");
  atom("hc1", "c1");
  // F
  g.add_edge("ax", {}, V({"fx", "a"}));
  g.add_edge("tensor_2", V({"fb", "fc"}), V({"fbd"}));
  g.add_edge("tensor_bullet_2", V({"fbd", "fx"}), {});
  // G
  g.add_edge("ax", {}, V({"gx", "fb"}));
  g.add_edge("par_2", V({"gb1", "gb2"}), V({"gc"}));
  g.add_edge("tensor_bullet_2", V({"gc", "gx"}), {});
  // H
  g.add_edge("ax", {}, V({"hx", "fc"}));
  g.add_edge("tensor_bullet_2", V({"hc1", "hx"}), {});
  // closing fact for b1, b2
  g.add_edge("ax", {}, V({"bx1", "gb1"}));
  g.add_edge("ax", {}, V({"bx2", "gb2"}));
  g.add_edge("tensor_2", V({"bx1", "bx2"}), V({"bhd"}));
  g.add_edge("par_bullet_1", V({"bhd"}), {});
  // closing fact for c1
  g.add_edge("ax", {}, V({"cx", "hc1"}));
  g.add_edge("par_bullet_1", V({"cx"}), {});
  return MStructure(std::move(g));
}

Verdict end_to_end() {
  Engine engine(fixtures::program("concurrent"));
  RunOptions opt;
  opt.max_depth = 4;
  auto seed = seed_state({"a"});
  auto r = run(engine, seed, opt);
  if (r.solutions.empty()) return {false, "no input-free state within depth 4"};
  const auto& sol = r.solutions.front();

  // replay the trace step by step and re-check every intermediate state
  ExecutionState cur = seed;
  bool all_components = oracle::is_component(*cur.structure);
  std::size_t states = 1;
  for (std::size_t step = 1; step <= sol.state.steps; ++step) {
    std::vector<Site> chosen;
    for (const auto& app : sol.state.trace) {
      if (app.step != step) continue;
      std::set<std::string> inputs;
      for (const auto& g : app.glue) inputs.insert(g.host_input.str());
      for (const auto& site : engine.applicable_sites(cur)) {
        if (site.method != app.method) continue;
        std::set<std::string> s;
        for (const auto& g : site.glue) s.insert(g.host_input.str());
        if (s == inputs) {
          chosen.push_back(site);
          break;
        }
      }
    }
    if (chosen.empty()) return {false, "trace step " + std::to_string(step) + " cannot be replayed"};
    cur = engine.apply(cur, chosen);
    all_components = all_components && oracle::is_component(*cur.structure) && is_component(*cur.structure);
    ++states;
  }
  bool same = find_isomorphism(cur.structure->graph(), sol.state.structure->graph()).has_value();
  bool iso = find_isomorphism(sol.state.structure->graph(), expected_run_result().graph()).has_value();
  std::ostringstream d;
  d << "solution at depth " << sol.state.steps << " after " << r.explored << " states, " << states
    << " replayed states all components=" << all_components << ", isomorphic to hand-built composite=" << iso;
  return {sol.state.input_free() && sol.state.steps <= 4 && all_components && same && iso, d.str()};
}

Verdict bell() {
  const std::uint64_t expected[] = {1, 2, 5, 15, 52, 203, 877, 4140};
  std::vector<ElemId> ground;
  std::ostringstream d;
  bool ok = true;
  for (std::size_t n = 1; n <= 8; ++n) {
    ground.emplace_back("e" + std::to_string(n));
    auto count = enumerate_partitions(ground).size();
    ok = ok && count == expected[n - 1] && count == oracle::bell_numbers(8)[n];
    d << count << (n < 8 ? "," : "");
  }
  return {ok, d.str()};
}

}  // namespace

int main() {
  report(1, "orthogonality golden pairs", orthogonality_golden);
  report(2, "classic switching oracle on MLL structures up to 4 links", dr_equivalence);
  report(3, "module example S1/S2/S3", module_triple);

  CorpusStats st;
  auto t0 = std::chrono::steady_clock::now();
  std::string corpus_error;
  try {
    st = run_corpus();
  } catch (const std::exception& e) {
    corpus_error = e.what();
  }
  std::string took = secs(t0);
  report(4, "direct vs characterized expansion", [&]() -> Verdict {
    if (!corpus_error.empty()) return {false, corpus_error};
    std::ostringstream d;
    d << st.agree << "/" << st.triples << " triples agree, " << st.expanding << " expand, " << took;
    return {st.triples >= 10000 && st.agree == st.triples, d.str()};
  });
  report(5, "transitory composition", [&]() -> Verdict {
    if (!corpus_error.empty()) return {false, corpus_error};
    std::ostringstream d;
    d << st.trans_counterexamples << " counterexamples among " << st.trans_pairs << " expanding transitory pairs";
    return {st.trans_pairs > 0 && st.trans_counterexamples == 0, d.str()};
  });
  report(6, "characterized check cost", [&]() -> Verdict {
    if (!corpus_error.empty()) return {false, corpus_error};
    std::ostringstream d;
    d << st.enumerations << " switching enumerations, " << st.over_budget << " sites over |B1|*|B2| orthogonality tests";
    return {st.enumerations == 0 && st.over_budget == 0, d.str()};
  });
  report(7, "basic connectives and their cyclic families", girard_figure);
  report(8, "no formula tree on 4 leaves for G or its dual", nondecomposability);
  report(9, "synthetic rule partitions", synthetic_partitions);
  report(10, "kappa structure switchings and drawn tests", extest);
  report(11, "allocation union and dependent choice intersection", union_intersection);
  report(12, "program run for the concurrent example", end_to_end);
  report(13, "Bell numbers", bell);
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
  return failures;
}
