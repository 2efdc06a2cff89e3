#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "multinet/connectives.hpp"
#include "multinet/errors.hpp"
#include "oracles.hpp"

using namespace multinet;
using fixtures::P;

namespace {

std::vector<ElemId> numbers(std::size_t n) {
  std::vector<ElemId> out;
  for (std::size_t k = 1; k <= n; ++k) out.emplace_back(std::to_string(k));
  return out;
}

std::vector<ElemId> link_ports(std::size_t n) { return LinkType::formal_ports(n, 1); }

std::vector<ElemId> input_ports(std::size_t n) { return LinkType::formal_ports(n, 0); }

PartitionSet on_ports(const char* text, std::size_t n) { return PartitionSet::parse(text, link_ports(n)); }

// i_k -> k
PartitionSet inputs_as_numbers(const PartitionSet& B, std::size_t n) {
  std::unordered_map<ElemId, ElemId> m;
  for (std::size_t k = 1; k <= n; ++k) m.emplace(LinkType::input_port(k), ElemId(std::to_string(k)));
  return rename(restrict(B, input_ports(n)), m);
}

}  // namespace

TEST_CASE("primality") {
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(4));
}

TEST_CASE("basic partitions") {
  CHECK(basic_partitions(2, 2) == PartitionSet::parse("{[(1,2),(3,4)],[(1,4),(2,3)]}", numbers(4)));
  auto b23 = basic_partitions(2, 3);
  CHECK(b23.size() == 3);
  for (const auto& p : b23) {
    CHECK(p.block_count() == 2);
    for (const auto& block : p.blocks()) {
      CHECK(block.size() == 3);
      // cyclic interval: exactly one element whose successor mod 6 is outside the block
      std::size_t ends = 0;
      for (const auto& e : block) {
        auto next = ElemId(std::to_string(std::stoul(e.str()) % 6 + 1));
        if (std::find(block.begin(), block.end(), next) == block.end()) ++ends;
      }
      CHECK(ends == 1);
      CHECK(restrict(p, block) == Partition({block}));
    }
  }
  CHECK_THROWS_AS(basic_partitions(4, 2), DomainError);
  CHECK_THROWS_AS(basic_partitions(1, 2), DomainError);
  CHECK(basic_partitions(4, 2, true).size() == 2);
}

TEST_CASE("psbp is the orthogonal set of the basic partitions") {
  auto sbp = basic_partitions(2, 2);
  auto perp = psbp(2, 2);
  CHECK(perp.contains(P("[(1,3),(2),(4)]")));
  CHECK(perp.contains(P("[(2,4),(1),(3)]")));
  CHECK(sets_orthogonal(perp, sbp, OrthMode::strong));
  std::vector<Partition> expected;
  for (const auto& q : oracle::all_partitions(numbers(4))) {
    if (std::all_of(sbp.begin(), sbp.end(), [&](const Partition& p) { return oracle::orthogonal(p, q); }))
      expected.push_back(q);
  }
  CHECK(perp == PartitionSet(numbers(4), expected));
}

TEST_CASE("Girard link behaviors") {
  auto G = girard_type(2, 2, Polarity::primal);
  CHECK(G.name() == "G_2_2");
  CHECK(G.n_in() == 4);
  CHECK(G.n_out() == 1);
  CHECK(G.behavior() == on_ports("{[(o1,i1,i3),(i2),(i4)],[(o1,i2,i4),(i1),(i3)]}", 4));
  auto D = girard_type(2, 2, Polarity::dual);
  CHECK(D.name() == "Gdual_2_2");
  CHECK(D.behavior() ==
        on_ports("{[(o1,i1,i2),(i3,i4)],[(o1,i3,i4),(i1,i2)],[(o1,i1,i4),(i2,i3)],[(o1,i2,i3),(i1,i4)]}", 4));
  CHECK(gsbp_dual(2, 2).size() == 4);
  for (const auto& p : inputs_as_numbers(G.behavior(), 4)) CHECK(psbp(2, 2).contains(p));
  CHECK(girard_type_named("Gdual_2_2")->behavior() == D.behavior());
  CHECK_FALSE(girard_type_named("G_x_2").has_value());
}

TEST_CASE("primal families are orthogonal to the basic partitions") {
  for (auto [u, v] : {std::pair<std::size_t, std::size_t>{2, 2}, {2, 3}}) {
    auto G = girard_type(u, v, Polarity::primal);
    CHECK(sets_orthogonal(inputs_as_numbers(G.behavior(), u * v), basic_partitions(u, v), OrthMode::strong));
    for (const auto& p : G.behavior()) {
      // one block holding the output, everything else singletons
      std::size_t big = 0;
      for (const auto& b : p.blocks()) big += b.size() > 1;
      CHECK(big == 1);
      CHECK(p.blocks()[*p.block_of(LinkType::output_port(1))].size() > 1);
    }
  }
}

TEST_CASE("normal-form structures") {
  std::vector<std::size_t> id{1, 2, 3, 4};
  auto cnf = behavior(cnf_structure(id, 2, 2));
  CHECK(cnf == on_ports("{[(o1,i1,i3),(i2),(i4)],[(o1,i2,i4),(i1),(i3)],[(o1,i1,i4),(i2),(i3)],"
                        "[(o1,i2,i3),(i1),(i4)]}",
                        4));
  auto cnf_rot = behavior(cnf_structure({4, 1, 2, 3}, 2, 2));
  CHECK(cnf_rot == on_ports("{[(o1,i1,i3),(i2),(i4)],[(o1,i2,i4),(i1),(i3)],[(o1,i1,i2),(i3),(i4)],"
                            "[(o1,i3,i4),(i1),(i2)]}",
                            4));
  CHECK(behavior(dnf_structure(id, 2, 2)) == on_ports("{[(o1,i1,i2),(i3,i4)],[(o1,i3,i4),(i1,i2)]}", 4));
  CHECK(behavior(dnf_structure({4, 1, 2, 3}, 2, 2)) == on_ports("{[(o1,i1,i4),(i2,i3)],[(o1,i2,i3),(i1,i4)]}", 4));
  for (const auto& perm : cyclic_permutations(4)) {
    auto S = cnf_structure(perm, 2, 2);
    auto B = behavior(S);
    CHECK(B == oracle::behavior(S));
    for (const auto& p : B) CHECK(p.block_count() == 3);
  }
  CHECK_THROWS_AS(cnf_structure({1, 1, 2, 3}, 2, 2), DomainError);
  CHECK_THROWS_AS(dnf_structure({1, 2, 3}, 2, 2), DomainError);
}

TEST_CASE("cyclic union and intersection") {
  CHECK(cyclic_permutations(4).size() == 4);
  auto fam = cyclic_union_intersection(2, 2);
  CHECK(fam.rotations == 4);
  CHECK(fam.intersection == girard_type(2, 2, Polarity::primal).behavior());
  CHECK(fam.union_ == girard_type(2, 2, Polarity::dual).behavior());
}

TEST_CASE("formula structures") {
  auto f = Formula::tensor(Formula::atom(1), Formula::par(Formula::atom(2), Formula::atom(3)));
  CHECK(f.to_string() == "(1 * (2 | 3))");
  CHECK(f.leaves() == 3);
  auto S = formula_structure(f);
  CHECK(is_transitory(S));
  CHECK(inputs_as_numbers(behavior(S), 3) == PartitionSet::parse("{[(1,2),(3)],[(1,3),(2)]}", numbers(3)));
  auto g = Formula::tensor(Formula::par(Formula::atom(1), Formula::atom(2)),
                           Formula::par(Formula::atom(3), Formula::atom(4)));
  CHECK(inputs_as_numbers(behavior(formula_structure(g)), 4).contains(P("[(1,3),(2),(4)]")));
  CHECK(behavior(formula_structure(Formula::atom(1))).to_string() == "{[(i1,o1)]}");
  CHECK(f.dual().to_string() == "(1 | (2 * 3))");
}

TEST_CASE("non-decomposability probe at four leaves") {
  auto G = girard_type(2, 2, Polarity::primal).behavior();
  auto r = nondecomposability_probe(G, 4);
  CHECK_FALSE(r.match.has_value());
  CHECK(r.labeled_trees == 120);
  CHECK(r.structures == 960);
  CHECK_FALSE(nondecomposability_probe(girard_type(2, 2, Polarity::dual).behavior(), 4).match.has_value());
  auto f = Formula::tensor(Formula::atom(1), Formula::par(Formula::atom(2), Formula::atom(3)));
  auto hit = nondecomposability_probe(behavior(formula_structure(f)), 3);
  REQUIRE(hit.match.has_value());
  CHECK(behavior(formula_structure(*hit.match)) == behavior(formula_structure(f)));
  CHECK_THROWS_AS(nondecomposability_probe(G, 6), ResourceError);
  CHECK_THROWS_AS(nondecomposability_probe(G, 0), DomainError);
}
