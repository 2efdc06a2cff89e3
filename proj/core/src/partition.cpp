#include "multinet/partition.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "multinet/errors.hpp"
#include "multinet/instrument.hpp"
#include "union_find.hpp"

namespace multinet {
namespace {

std::string render(const std::vector<ElemId>& elems) {
  std::string out;
  for (const auto& e : elems) {
    if (!out.empty()) out += ", ";
    out += e.str();
  }
  return out;
}

void require_same_ground(const std::vector<ElemId>& a, const std::vector<ElemId>& b, const char* op) {
  if (a != b) {
    throw DomainError(std::string(op) + ": ground sets differ ({" + render(a) + "} vs {" + render(b) + "})");
  }
}

bool is_name_char(char c) {
  return c != '[' && c != ']' && c != '(' && c != ')' && c != ',' && c != '{' && c != '}' &&
         std::isspace(static_cast<unsigned char>(c)) == 0;
}

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])) != 0) ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) {
      throw DomainError("partition syntax: expected '" + std::string(1, c) + "' at offset " + std::to_string(pos));
    }
  }
  ElemId name() {
    skip();
    std::size_t start = pos;
    while (pos < text.size() && is_name_char(text[pos])) ++pos;
    if (start == pos) throw DomainError("partition syntax: expected element at offset " + std::to_string(start));
    return ElemId(text.substr(start, pos - start));
  }
  bool at_end() {
    skip();
    return pos == text.size();
  }
};

Partition parse_partition(Cursor& c) {
  std::vector<Block> blocks;
  c.expect('[');
  if (!c.eat(']')) {
    do {
      Block b;
      c.expect('(');
      do {
        b.push_back(c.name());
      } while (c.eat(','));
      c.expect(')');
      blocks.push_back(std::move(b));
    } while (c.eat(','));
    c.expect(']');
  }
  return Partition(std::move(blocks));
}

}  // namespace

Partition::Partition(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
  for (auto& b : blocks_) {
    if (b.empty()) throw DomainError("partition has an empty block");
    std::sort(b.begin(), b.end());
  }
  std::sort(blocks_.begin(), blocks_.end(), [](const Block& a, const Block& b) { return a.front() < b.front(); });
  std::vector<std::pair<ElemId, std::size_t>> tagged;
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    for (const auto& e : blocks_[k]) tagged.emplace_back(e, k);
  }
  std::sort(tagged.begin(), tagged.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  ground_.reserve(tagged.size());
  block_index_.reserve(tagged.size());
  for (std::size_t i = 0; i < tagged.size(); ++i) {
    if (i > 0 && tagged[i].first == tagged[i - 1].first) {
      throw DomainError("partition blocks overlap on element " + tagged[i].first.str());
    }
    ground_.push_back(tagged[i].first);
    block_index_.push_back(tagged[i].second);
  }
}

Partition Partition::discrete(std::span<const ElemId> ground) {
  std::vector<Block> blocks;
  for (const auto& e : ground) blocks.push_back({e});
  return Partition(std::move(blocks));
}

Partition Partition::single_block(std::span<const ElemId> ground) {
  if (ground.empty()) return Partition();
  return Partition({Block(ground.begin(), ground.end())});
}

Partition Partition::parse(std::string_view text) {
  Cursor c{text};
  Partition p = parse_partition(c);
  if (!c.at_end()) throw DomainError("partition syntax: trailing input at offset " + std::to_string(c.pos));
  return p;
}

std::optional<std::size_t> Partition::position(const ElemId& e) const {
  auto it = std::lower_bound(ground_.begin(), ground_.end(), e);
  if (it == ground_.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - ground_.begin());
}

std::optional<std::size_t> Partition::block_of(const ElemId& e) const {
  auto pos = position(e);
  if (!pos) return std::nullopt;
  return block_index_[*pos];
}

bool Partition::same_block(const ElemId& a, const ElemId& b) const {
  auto ba = block_of(a);
  auto bb = block_of(b);
  return ba && bb && *ba == *bb;
}

std::string Partition::to_string() const {
  std::string out = "[";
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    if (k > 0) out += ",";
    out += "(";
    for (std::size_t i = 0; i < blocks_[k].size(); ++i) {
      if (i > 0) out += ",";
      out += blocks_[k][i].str();
    }
    out += ")";
  }
  return out + "]";
}

PartitionSet::PartitionSet(std::vector<ElemId> ground) : ground_(make_ground(std::move(ground))) {}

PartitionSet::PartitionSet(std::vector<ElemId> ground, std::vector<Partition> members)
    : ground_(make_ground(std::move(ground))) {
  for (auto& m : members) {
    require_same_ground(ground_, m.ground(), "PartitionSet");
  }
  members_ = std::move(members);
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

PartitionSet PartitionSet::of(std::vector<Partition> members) {
  if (members.empty()) return PartitionSet();
  std::vector<ElemId> ground = members.front().ground();
  return PartitionSet(std::move(ground), std::move(members));
}

PartitionSet PartitionSet::parse(std::string_view text, std::vector<ElemId> ground) {
  Cursor c{text};
  std::vector<Partition> members;
  c.expect('{');
  if (!c.eat('}')) {
    do {
      members.push_back(parse_partition(c));
    } while (c.eat(','));
    c.expect('}');
  }
  if (!c.at_end()) throw DomainError("partition set syntax: trailing input at offset " + std::to_string(c.pos));
  return PartitionSet(std::move(ground), std::move(members));
}

bool PartitionSet::contains(const Partition& p) const {
  return std::binary_search(members_.begin(), members_.end(), p);
}

void PartitionSet::insert(Partition p) {
  require_same_ground(ground_, p.ground(), "PartitionSet::insert");
  auto it = std::lower_bound(members_.begin(), members_.end(), p);
  if (it == members_.end() || *it != p) members_.insert(it, std::move(p));
}

std::string PartitionSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i > 0) out += ",";
    out += members_[i].to_string();
  }
  return out + "}";
}

std::vector<ElemId> make_ground(std::vector<ElemId> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  return elems;
}

Partition restrict(const Partition& p, std::span<const ElemId> Y) {
  if (Y.empty()) throw DomainError("restrict: empty target set");
  std::vector<Block> blocks(p.block_count());
  for (const auto& y : Y) {
    auto b = p.block_of(y);
    if (!b) throw DomainError("restrict: element " + y.str() + " is not in the ground set");
    blocks[*b].push_back(y);
  }
  std::erase_if(blocks, [](const Block& b) { return b.empty(); });
  for (auto& b : blocks) {
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
  }
  return Partition(std::move(blocks));
}

PartitionSet restrict(const PartitionSet& P, std::span<const ElemId> Y) {
  std::vector<Partition> out;
  out.reserve(P.size());
  for (const auto& p : P) out.push_back(restrict(p, Y));
  return PartitionSet(std::vector<ElemId>(Y.begin(), Y.end()), std::move(out));
}

IncidenceGraph incidence_graph(const Partition& p, const Partition& q) {
  require_same_ground(p.ground(), q.ground(), "incidence_graph");
  IncidenceGraph g;
  g.left_count = p.block_count();
  g.right_count = q.block_count();
  for (std::size_t i = 0; i < p.size(); ++i) {
    g.edges.emplace_back(p.block_at(i), q.block_at(i));
    g.edge_elements.push_back(p.ground()[i]);
  }
  return g;
}

bool weakly_orthogonal(const Partition& p, const Partition& q) {
  require_same_ground(p.ground(), q.ground(), "weakly_orthogonal");
  instrument::count_orthogonality_test();
  std::size_t left = p.block_count();
  detail::UnionFind uf(left + q.block_count());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!uf.unite(p.block_at(i), left + q.block_at(i))) return false;
  }
  return true;
}

bool orthogonal(const Partition& p, const Partition& q) {
  // acyclic with n edges is a tree exactly when it has n + 1 nodes
  return weakly_orthogonal(p, q) && p.block_count() + q.block_count() == p.size() + 1;
}

bool sets_orthogonal(const PartitionSet& P, const PartitionSet& Q, OrthMode mode) {
  require_same_ground(P.ground(), Q.ground(), "sets_orthogonal");
  for (const auto& p : P) {
    for (const auto& q : Q) {
      bool ok = mode == OrthMode::weak ? weakly_orthogonal(p, q) : orthogonal(p, q);
      if (!ok) return false;
    }
  }
  return true;
}

PartitionEnumerator::PartitionEnumerator(std::vector<ElemId> ground, const Limits& limits)
    : ground_(make_ground(std::move(ground))) {
  if (ground_.size() > limits.max_ground) {
    throw ResourceError("partition enumeration over " + std::to_string(ground_.size()) +
                        " elements exceeds the bound of " + std::to_string(limits.max_ground));
  }
  rgs_.assign(ground_.size(), 0);
  max_prefix_.assign(ground_.size(), 0);
}

bool PartitionEnumerator::advance() {
  // restricted growth string step: rgs[i] may grow up to 1 + max(rgs[0..i-1])
  const std::size_t n = rgs_.size();
  for (std::size_t i = n; i-- > 1;) {
    if (rgs_[i] <= max_prefix_[i - 1]) {
      ++rgs_[i];
      for (std::size_t j = i; j < n; ++j) {
        if (j > i) rgs_[j] = 0;
        max_prefix_[j] = std::max(max_prefix_[j - 1], rgs_[j]);
      }
      return true;
    }
  }
  return false;
}

bool PartitionEnumerator::next(Partition& out) {
  if (done_) return false;
  if (started_ && !advance()) {
    done_ = true;
    return false;
  }
  started_ = true;
  std::vector<Block> blocks;
  for (std::size_t i = 0; i < ground_.size(); ++i) {
    if (rgs_[i] >= blocks.size()) blocks.resize(rgs_[i] + 1);
    blocks[rgs_[i]].push_back(ground_[i]);
  }
  out = Partition(std::move(blocks));
  return true;
}

void for_each_partition(std::span<const ElemId> ground, const std::function<void(const Partition&)>& fn,
                        const Limits& limits) {
  PartitionEnumerator en(std::vector<ElemId>(ground.begin(), ground.end()), limits);
  Partition p;
  while (en.next(p)) fn(p);
}

std::vector<Partition> enumerate_partitions(std::span<const ElemId> ground, const Limits& limits) {
  std::vector<Partition> out;
  for_each_partition(ground, [&](const Partition& p) { out.push_back(p); }, limits);
  return out;
}

PartitionSet orthogonal_set(const PartitionSet& P, const Limits& limits) {
  std::vector<Partition> out;
  for_each_partition(
      P.ground(),
      [&](const Partition& q) {
        for (const auto& p : P) {
          if (!orthogonal(p, q)) return;
        }
        out.push_back(q);
      },
      limits);
  return PartitionSet(P.ground(), std::move(out));
}

bool biorthogonal_pair(const PartitionSet& P, const PartitionSet& Q, const Limits& limits) {
  if (!sets_orthogonal(P, Q, OrthMode::strong)) return false;
  return sets_orthogonal(orthogonal_set(P, limits), orthogonal_set(Q, limits), OrthMode::strong);
}

Partition join_disjoint(const Partition& p, const Partition& q) {
  std::vector<Block> blocks = p.blocks();
  blocks.insert(blocks.end(), q.blocks().begin(), q.blocks().end());
  return Partition(std::move(blocks));
}

Partition rename(const Partition& p, const std::unordered_map<ElemId, ElemId>& map) {
  std::vector<Block> blocks = p.blocks();
  for (auto& b : blocks) {
    for (auto& e : b) {
      auto it = map.find(e);
      if (it != map.end()) e = it->second;
    }
  }
  return Partition(std::move(blocks));
}

PartitionSet rename(const PartitionSet& P, const std::unordered_map<ElemId, ElemId>& map) {
  std::vector<ElemId> ground = P.ground();
  for (auto& e : ground) {
    auto it = map.find(e);
    if (it != map.end()) e = it->second;
  }
  std::vector<Partition> members;
  for (const auto& p : P) members.push_back(rename(p, map));
  return PartitionSet(std::move(ground), std::move(members));
}

PartitionSet set_union(const PartitionSet& a, const PartitionSet& b) {
  require_same_ground(a.ground(), b.ground(), "set_union");
  std::vector<Partition> members = a.members();
  members.insert(members.end(), b.members().begin(), b.members().end());
  return PartitionSet(a.ground(), std::move(members));
}

PartitionSet set_intersection(const PartitionSet& a, const PartitionSet& b) {
  require_same_ground(a.ground(), b.ground(), "set_intersection");
  std::vector<Partition> members;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(members));
  return PartitionSet(a.ground(), std::move(members));
}

}  // namespace multinet
