#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "multinet/mstructure.hpp"

namespace multinet {

enum class Polarity { primal, dual };

bool is_prime(std::size_t n);

/// Partitions of {1..uv} into u cyclic intervals of length v, one per shift.
/// Throws DomainError unless u, v >= 2 are prime (or allow_nonprime is set).
PartitionSet basic_partitions(std::size_t u, std::size_t v, bool allow_nonprime = false);
PartitionSet psbp(std::size_t u, std::size_t v, const Limits& limits = {}, bool allow_nonprime = false);

/// Behavior of G_{u,v} over ports i1..in, o1: each member of psbp(u,v) with a
/// single non-singleton block, the output joined to that block.
PartitionSet gsbp(std::size_t u, std::size_t v, const Limits& limits = {}, bool allow_nonprime = false);
/// Behavior of the dual: each basic partition with the output joined to each block in turn.
PartitionSet gsbp_dual(std::size_t u, std::size_t v, bool allow_nonprime = false);

/// Link type "G_u_v" (primal) or "Gdual_u_v" with uv inputs and one output.
LinkType girard_type(std::size_t u, std::size_t v, Polarity polarity, const Limits& limits = {},
                     bool allow_nonprime = false);
/// Resolves "G_u_v" / "Gdual_u_v"; nullopt for other names.
std::optional<LinkType> girard_type_named(const std::string& name, const Limits& limits = {});

/// Binary formula trees over numbered atoms.
class Formula {
 public:
  enum class Kind { atom, tensor, par };

  static Formula atom(std::size_t k);
  static Formula tensor(Formula a, Formula b);
  static Formula par(Formula a, Formula b);

  Kind kind() const noexcept { return kind_; }
  std::size_t atom_index() const noexcept { return atom_; }
  const Formula& left() const { return *left_; }
  const Formula& right() const { return *right_; }

  /// De Morgan dual: swaps tensor and par (atoms keep their index).
  Formula dual() const;
  std::size_t leaves() const;
  /// "(1 * (2 | 3))", or with ⊗ and ⅋ when `unicode` is set.
  std::string to_string(bool unicode = false) const;

 private:
  Kind kind_ = Kind::atom;
  std::size_t atom_ = 0;
  std::shared_ptr<const Formula> left_;
  std::shared_ptr<const Formula> right_;
};

/// Atom k becomes input vertex "ik", the root becomes output "o1"; binary
/// tensor/par links, internal vertices "n1", "n2", ...
MStructure formula_structure(const Formula& f);

/// Formula trees for (a_{τ1} ⅋ .. ⅋ a_{τv}) ⊗ .. (CNF) and the tensor/par
/// swapped DNF, with n-ary links. perm is 1-based, perm[k-1] = τ(k).
MStructure cnf_structure(const std::vector<std::size_t>& perm, std::size_t u, std::size_t v);
MStructure dnf_structure(const std::vector<std::size_t>& perm, std::size_t u, std::size_t v);

/// The n rotations k -> k + s (mod n), s = 0..n-1.
std::vector<std::vector<std::size_t>> cyclic_permutations(std::size_t n);

struct CyclicFamilies {
  PartitionSet intersection;  // of CNF behaviors over all rotations
  PartitionSet union_;        // of DNF behaviors over all rotations
  std::size_t rotations = 0;
};

CyclicFamilies cyclic_union_intersection(std::size_t u, std::size_t v, const Limits& limits = {});

struct ProbeResult {
  std::optional<Formula> match;
  std::size_t labeled_trees = 0;  // shapes x leaf orders
  std::size_t structures = 0;     // labeled trees x operator assignments
};

/// Exhaustive search over binary formula trees on n_inputs leaves for one
/// whose structure has behavior `target` (over i1..in, o1). Throws
/// ResourceError for n_inputs > 5.
ProbeResult nondecomposability_probe(const PartitionSet& target, std::size_t n_inputs, const Limits& limits = {});

}  // namespace multinet
