#pragma once

#include <cstddef>
#include <cstdint>

namespace multinet {

/// Enumeration bounds shared by the brute-force routines.
struct Limits {
  /// Largest ground set handed to partition enumeration (Bell(10) = 115975).
  std::size_t max_ground = 10;
  /// Largest number of switchings enumerated for one structure.
  std::uint64_t max_switchings = std::uint64_t{1} << 20;

  /// Defaults, with MULTINET_BOUND (switchings) and MULTINET_MAX_GROUND
  /// applied when set to a positive integer.
  static Limits from_env();
};

}  // namespace multinet
