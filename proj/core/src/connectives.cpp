#include "multinet/connectives.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "multinet/errors.hpp"

namespace multinet {

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

void check_params(std::size_t u, std::size_t v, bool allow_nonprime) {
  if (u < 1 || v < 1) throw DomainError("Girard parameters must be positive");
  if (!allow_nonprime && (!is_prime(u) || !is_prime(v))) {
    throw DomainError("Girard parameters must be prime (got " + std::to_string(u) + ", " + std::to_string(v) + ")");
  }
}

std::vector<ElemId> numbers(std::size_t n) {
  std::vector<ElemId> out;
  for (std::size_t k = 1; k <= n; ++k) out.emplace_back(std::to_string(k));
  return out;
}

// k -> "ik", plus the output element
std::unordered_map<ElemId, ElemId> to_ports(std::size_t n) {
  std::unordered_map<ElemId, ElemId> m;
  for (std::size_t k = 1; k <= n; ++k) m.emplace(ElemId(std::to_string(k)), LinkType::input_port(k));
  return m;
}

Partition with_output_in(const Partition& p, std::size_t block) {
  std::vector<Block> blocks = p.blocks();
  blocks[block].push_back(LinkType::output_port(1));
  return Partition(std::move(blocks));
}

}  // namespace

PartitionSet basic_partitions(std::size_t u, std::size_t v, bool allow_nonprime) {
  check_params(u, v, allow_nonprime);
  const std::size_t n = u * v;
  std::vector<Partition> members;
  for (std::size_t shift = 0; shift < v; ++shift) {
    std::vector<Block> blocks(u);
    for (std::size_t k = 0; k < u; ++k) {
      for (std::size_t t = 0; t < v; ++t) blocks[k].emplace_back(std::to_string((shift + k * v + t) % n + 1));
    }
    members.emplace_back(std::move(blocks));
  }
  return PartitionSet(numbers(n), std::move(members));
}

PartitionSet psbp(std::size_t u, std::size_t v, const Limits& limits, bool allow_nonprime) {
  return orthogonal_set(basic_partitions(u, v, allow_nonprime), limits);
}

PartitionSet gsbp(std::size_t u, std::size_t v, const Limits& limits, bool allow_nonprime) {
  const std::size_t n = u * v;
  auto ports = to_ports(n);
  std::vector<Partition> members;
  for (const auto& q : psbp(u, v, limits, allow_nonprime)) {
    std::vector<std::size_t> wide;
    for (std::size_t b = 0; b < q.block_count(); ++b) {
      if (q.blocks()[b].size() > 1) wide.push_back(b);
    }
    if (wide.size() != 1) continue;
    members.push_back(with_output_in(rename(q, ports), wide.front()));
  }
  return PartitionSet(LinkType::formal_ports(n, 1), std::move(members));
}

PartitionSet gsbp_dual(std::size_t u, std::size_t v, bool allow_nonprime) {
  const std::size_t n = u * v;
  auto ports = to_ports(n);
  std::vector<Partition> members;
  for (const auto& p : basic_partitions(u, v, allow_nonprime)) {
    Partition named = rename(p, ports);
    for (std::size_t b = 0; b < named.block_count(); ++b) members.push_back(with_output_in(named, b));
  }
  return PartitionSet(LinkType::formal_ports(n, 1), std::move(members));
}

LinkType girard_type(std::size_t u, std::size_t v, Polarity polarity, const Limits& limits, bool allow_nonprime) {
  std::string suffix = std::to_string(u) + "_" + std::to_string(v);
  if (polarity == Polarity::primal) {
    return LinkType("G_" + suffix, u * v, 1, gsbp(u, v, limits, allow_nonprime));
  }
  return LinkType("Gdual_" + suffix, u * v, 1, gsbp_dual(u, v, allow_nonprime));
}

std::optional<LinkType> girard_type_named(const std::string& name, const Limits& limits) {
  Polarity pol;
  std::string rest;
  if (name.rfind("Gdual_", 0) == 0) {
    pol = Polarity::dual;
    rest = name.substr(6);
  } else if (name.rfind("G_", 0) == 0) {
    pol = Polarity::primal;
    rest = name.substr(2);
  } else {
    return std::nullopt;
  }
  auto sep = rest.find('_');
  if (sep == std::string::npos) return std::nullopt;
  std::size_t u = 0;
  std::size_t v = 0;
  auto r1 = std::from_chars(rest.data(), rest.data() + sep, u);
  auto r2 = std::from_chars(rest.data() + sep + 1, rest.data() + rest.size(), v);
  if (r1.ec != std::errc() || r1.ptr != rest.data() + sep || r2.ec != std::errc() ||
      r2.ptr != rest.data() + rest.size()) {
    return std::nullopt;
  }
  return girard_type(u, v, pol, limits);
}

Formula Formula::atom(std::size_t k) {
  Formula f;
  f.kind_ = Kind::atom;
  f.atom_ = k;
  return f;
}

Formula Formula::tensor(Formula a, Formula b) {
  Formula f;
  f.kind_ = Kind::tensor;
  f.left_ = std::make_shared<const Formula>(std::move(a));
  f.right_ = std::make_shared<const Formula>(std::move(b));
  return f;
}

Formula Formula::par(Formula a, Formula b) {
  Formula f = tensor(std::move(a), std::move(b));
  f.kind_ = Kind::par;
  return f;
}

Formula Formula::dual() const {
  switch (kind_) {
    case Kind::atom:
      return *this;
    case Kind::tensor:
      return par(left_->dual(), right_->dual());
    case Kind::par:
      return tensor(left_->dual(), right_->dual());
  }
  return *this;
}

std::size_t Formula::leaves() const { return kind_ == Kind::atom ? 1 : left_->leaves() + right_->leaves(); }

std::string Formula::to_string(bool unicode) const {
  if (kind_ == Kind::atom) return std::to_string(atom_);
  const char* op = kind_ == Kind::tensor ? (unicode ? " ⊗ " : " * ") : (unicode ? " ⅋ " : " | ");
  return "(" + left_->to_string(unicode) + op + right_->to_string(unicode) + ")";
}

namespace {

VertexId build_formula(const Formula& f, Hypergraph& g, std::size_t& fresh, bool root) {
  if (f.kind() == Formula::Kind::atom) return LinkType::input_port(f.atom_index());
  VertexId a = build_formula(f.left(), g, fresh, false);
  VertexId b = build_formula(f.right(), g, fresh, false);
  VertexId out = root ? LinkType::output_port(1) : VertexId("n" + std::to_string(++fresh));
  g.add_edge(f.kind() == Formula::Kind::tensor ? "tensor" : "par", {a, b}, {out});
  return out;
}

void check_perm(const std::vector<std::size_t>& perm, std::size_t n) {
  if (perm.size() != n) throw DomainError("permutation has the wrong length");
  std::vector<bool> seen(n + 1, false);
  for (std::size_t k : perm) {
    if (k < 1 || k > n || seen[k]) throw DomainError("not a permutation of 1.." + std::to_string(n));
    seen[k] = true;
  }
}

MStructure normal_form(const std::vector<std::size_t>& perm, std::size_t u, std::size_t v, const std::string& inner,
                       const std::string& outer) {
  const std::size_t n = u * v;
  check_perm(perm, n);
  Hypergraph g;
  for (std::size_t k = 1; k <= n; ++k) g.add_vertex(LinkType::input_port(k));
  std::vector<VertexId> groups;
  for (std::size_t c = 0; c < u; ++c) {
    std::vector<VertexId> members;
    for (std::size_t t = 0; t < v; ++t) members.push_back(LinkType::input_port(perm[c * v + t]));
    VertexId out("n" + std::to_string(c + 1));
    g.add_edge(inner + "_" + std::to_string(v), std::move(members), {out});
    groups.push_back(out);
  }
  g.add_edge(outer + "_" + std::to_string(u), std::move(groups), {LinkType::output_port(1)});
  return MStructure(std::move(g));
}

}  // namespace

MStructure formula_structure(const Formula& f) {
  Hypergraph g;
  std::size_t fresh = 0;
  if (f.kind() == Formula::Kind::atom) {
    // a bare atom is a wire from its input to the output
    g.add_edge("tensor_1", {LinkType::input_port(f.atom_index())}, {LinkType::output_port(1)});
  } else {
    build_formula(f, g, fresh, true);
  }
  return MStructure(std::move(g));
}

MStructure cnf_structure(const std::vector<std::size_t>& perm, std::size_t u, std::size_t v) {
  return normal_form(perm, u, v, "par", "tensor");
}

MStructure dnf_structure(const std::vector<std::size_t>& perm, std::size_t u, std::size_t v) {
  return normal_form(perm, u, v, "tensor", "par");
}

std::vector<std::vector<std::size_t>> cyclic_permutations(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::size_t> perm(n);
    for (std::size_t k = 0; k < n; ++k) perm[k] = (k + s) % n + 1;
    out.push_back(std::move(perm));
  }
  return out;
}

CyclicFamilies cyclic_union_intersection(std::size_t u, std::size_t v, const Limits& limits) {
  const std::size_t n = u * v;
  CyclicFamilies r;
  bool first = true;
  for (const auto& perm : cyclic_permutations(n)) {
    PartitionSet cnf = behavior(cnf_structure(perm, u, v), limits);
    PartitionSet dnf = behavior(dnf_structure(perm, u, v), limits);
    if (first) {
      r.intersection = cnf;
      r.union_ = dnf;
      first = false;
    } else {
      r.intersection = set_intersection(r.intersection, cnf);
      r.union_ = set_union(r.union_, dnf);
    }
    ++r.rotations;
  }
  return r;
}

namespace {

// Tree shapes with leaves numbered 1..n left to right, every node a tensor.
std::vector<Formula> shapes(std::size_t first, std::size_t n) {
  if (n == 1) return {Formula::atom(first)};
  std::vector<Formula> out;
  for (std::size_t left = 1; left < n; ++left) {
    for (const auto& l : shapes(first, left)) {
      for (const auto& r : shapes(first + left, n - left)) out.push_back(Formula::tensor(l, r));
    }
  }
  return out;
}

Formula relabel(const Formula& shape, const std::vector<std::size_t>& perm, unsigned mask, unsigned& bit) {
  if (shape.kind() == Formula::Kind::atom) return Formula::atom(perm[shape.atom_index() - 1]);
  Formula l = relabel(shape.left(), perm, mask, bit);
  Formula r = relabel(shape.right(), perm, mask, bit);
  bool is_par = ((mask >> bit++) & 1U) != 0;
  return is_par ? Formula::par(std::move(l), std::move(r)) : Formula::tensor(std::move(l), std::move(r));
}

}  // namespace

ProbeResult nondecomposability_probe(const PartitionSet& target, std::size_t n_inputs, const Limits& limits) {
  if (n_inputs == 0) throw DomainError("probe needs at least one input");
  if (n_inputs > 5) throw ResourceError("probe is limited to 5 inputs");
  ProbeResult r;
  std::vector<std::size_t> perm(n_inputs);
  const unsigned ops = 1U << (n_inputs - 1);
  for (const auto& shape : shapes(1, n_inputs)) {
    std::iota(perm.begin(), perm.end(), std::size_t{1});
    do {
      ++r.labeled_trees;
      for (unsigned mask = 0; mask < ops; ++mask) {
        unsigned bit = 0;
        Formula f = relabel(shape, perm, mask, bit);
        ++r.structures;
        if (!r.match && behavior(formula_structure(f), limits) == target) r.match = f;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return r;
}

}  // namespace multinet
