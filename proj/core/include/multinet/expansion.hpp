#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "multinet/mstructure.hpp"

namespace multinet {

/// Identifies an input of the host with an output of the guest.
struct Glue {
  VertexId host_input;
  VertexId guest_output;
  friend bool operator==(const Glue&, const Glue&) = default;
};

class ExpansionSite {
 public:
  /// Throws DomainError unless `glue` is non-empty, injective on both sides,
  /// and pairs host inputs with guest outputs.
  ExpansionSite(std::shared_ptr<const MStructure> host, std::shared_ptr<const MStructure> guest,
                std::vector<Glue> glue);

  const MStructure& host() const noexcept { return *host_; }
  const MStructure& guest() const noexcept { return *guest_; }
  const std::shared_ptr<const MStructure>& host_ptr() const noexcept { return host_; }
  const std::shared_ptr<const MStructure>& guest_ptr() const noexcept { return guest_; }
  const std::vector<Glue>& glue() const noexcept { return glue_; }

  Interface interface() const;
  std::vector<VertexId> host_side() const;   // sorted
  std::vector<VertexId> guest_side() const;  // sorted

 private:
  std::shared_ptr<const MStructure> host_;
  std::shared_ptr<const MStructure> guest_;
  std::vector<Glue> glue_;
};

struct ExpansionVerdict {
  bool expands = true;
  char failed = '\0';  // 'a', 'b' or 'c' when !expands
  std::string detail;
};

/// Composes and checks the composite is a component (enumerates its tests).
bool expands_direct(const ExpansionSite& site, const Limits& limits = {});

/// Decides expansion from the behaviors of host and guest alone:
///  (a) the composite border is non-empty;
///  (b) restrictions of the behaviors to X are weakly orthogonal;
///  (c) for every pair (p, q), every class of the blocks of p and q glued
///      along X contains a vertex of the composite border.
/// Host and guest are assumed to be components.
ExpansionVerdict check_expansion(const ExpansionSite& site, const Limits& limits = {});
ExpansionVerdict check_expansion(const ExpansionSite& site, const PartitionSet& host_behavior,
                                 const PartitionSet& guest_behavior);
bool expands_characterized(const ExpansionSite& site, const Limits& limits = {});

/// Per-x reading of condition (c): each x is joined to a non-X border vertex
/// in every host test, or in every guest test. Kept for comparison only;
/// it rejects some valid expansions.
bool literal_condition_c(const ExpansionSite& site, const Limits& limits = {});

/// Vertices of X that stay on the composite border (isolated on either side).
std::vector<VertexId> glued_border(const ExpansionSite& site);

/// Throws ExpansionError naming the failed condition.
Composite expand(const ExpansionSite& site, const Limits& limits = {});

/// When host and guest are transitory components and the guest expands the
/// host, returns whether the composite is transitory; nullopt otherwise.
std::optional<bool> transitory_preserved(const ExpansionSite& site, const Limits& limits = {});

}  // namespace multinet
