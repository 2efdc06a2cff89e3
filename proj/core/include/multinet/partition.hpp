#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "multinet/elem.hpp"
#include "multinet/limits.hpp"

namespace multinet {

using Block = std::vector<ElemId>;

/// A partition of a finite ground set, kept in canonical form: elements
/// sorted inside each block, blocks sorted by least element.
class Partition {
 public:
  /// The unique partition of the empty set.
  Partition() = default;

  /// Throws DomainError on empty or overlapping blocks.
  explicit Partition(std::vector<Block> blocks);

  static Partition discrete(std::span<const ElemId> ground);
  static Partition single_block(std::span<const ElemId> ground);

  /// Reads "[(1,3),(2)]". Whitespace is ignored; element names are any run
  /// of characters other than brackets, parentheses, commas and spaces.
  static Partition parse(std::string_view text);

  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  const std::vector<ElemId>& ground() const noexcept { return ground_; }
  std::size_t size() const noexcept { return ground_.size(); }
  std::size_t block_count() const noexcept { return blocks_.size(); }

  /// Position of `e` in ground(), if present.
  std::optional<std::size_t> position(const ElemId& e) const;
  /// Index into blocks() of the block holding `e`.
  std::optional<std::size_t> block_of(const ElemId& e) const;
  /// Block index for the element at ground position `pos`.
  std::size_t block_at(std::size_t pos) const { return block_index_[pos]; }
  bool same_block(const ElemId& a, const ElemId& b) const;
  bool contains(const ElemId& e) const { return position(e).has_value(); }

  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.blocks_ == b.blocks_; }
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.blocks_ <=> b.blocks_; }

 private:
  std::vector<Block> blocks_;
  std::vector<ElemId> ground_;
  std::vector<std::size_t> block_index_;  // aligned with ground_
};

/// A canonical (sorted, duplicate-free) set of partitions sharing one ground.
class PartitionSet {
 public:
  PartitionSet() = default;
  explicit PartitionSet(std::vector<ElemId> ground);
  /// Throws DomainError if a member's ground differs from `ground`.
  PartitionSet(std::vector<ElemId> ground, std::vector<Partition> members);

  /// Ground taken from the first member; all members must agree.
  static PartitionSet of(std::vector<Partition> members);
  /// Reads "{[(1,2)],[(1),(2)]}" over the given ground.
  static PartitionSet parse(std::string_view text, std::vector<ElemId> ground);

  const std::vector<ElemId>& ground() const noexcept { return ground_; }
  const std::vector<Partition>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(const Partition& p) const;

  void insert(Partition p);

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  std::string to_string() const;

  friend bool operator==(const PartitionSet& a, const PartitionSet& b) {
    return a.ground_ == b.ground_ && a.members_ == b.members_;
  }

 private:
  std::vector<ElemId> ground_;
  std::vector<Partition> members_;
};

/// Bipartite multigraph G(p,q): node k < left_count is block k of p, node
/// left_count + k is block k of q; one edge per ground element.
struct IncidenceGraph {
  std::size_t left_count = 0;
  std::size_t right_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // (left block, right block)
  std::vector<ElemId> edge_elements;                       // parallel to edges
};

enum class OrthMode { weak, strong };

/// Sorts and deduplicates, so the result can be used as a ground set.
std::vector<ElemId> make_ground(std::vector<ElemId> elems);

Partition restrict(const Partition& p, std::span<const ElemId> Y);
/// Member-wise restriction; duplicates collapse.
PartitionSet restrict(const PartitionSet& P, std::span<const ElemId> Y);

IncidenceGraph incidence_graph(const Partition& p, const Partition& q);
bool weakly_orthogonal(const Partition& p, const Partition& q);
bool orthogonal(const Partition& p, const Partition& q);
bool sets_orthogonal(const PartitionSet& P, const PartitionSet& Q, OrthMode mode);

/// Streams partitions of `ground` in restricted-growth-string order.
class PartitionEnumerator {
 public:
  explicit PartitionEnumerator(std::vector<ElemId> ground, const Limits& limits = {});
  /// Writes the next partition into `out`; false once exhausted.
  bool next(Partition& out);

 private:
  bool advance();

  std::vector<ElemId> ground_;
  std::vector<std::size_t> rgs_;
  std::vector<std::size_t> max_prefix_;
  bool started_ = false;
  bool done_ = false;
};

void for_each_partition(std::span<const ElemId> ground, const std::function<void(const Partition&)>& fn,
                        const Limits& limits = {});
std::vector<Partition> enumerate_partitions(std::span<const ElemId> ground, const Limits& limits = {});

PartitionSet orthogonal_set(const PartitionSet& P, const Limits& limits = {});
bool biorthogonal_pair(const PartitionSet& P, const PartitionSet& Q, const Limits& limits = {});

/// Partition over the union of two disjoint grounds, keeping both block structures.
Partition join_disjoint(const Partition& p, const Partition& q);
/// Applies an injective renaming; unmapped elements keep their name.
Partition rename(const Partition& p, const std::unordered_map<ElemId, ElemId>& map);
PartitionSet rename(const PartitionSet& P, const std::unordered_map<ElemId, ElemId>& map);

PartitionSet set_union(const PartitionSet& a, const PartitionSet& b);
PartitionSet set_intersection(const PartitionSet& a, const PartitionSet& b);

}  // namespace multinet
