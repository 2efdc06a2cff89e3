#pragma once

#include <cstdint>

// Process-wide operation counters. Used by tests to check cost claims, e.g.
// that the characterized expansion check never enumerates the composite.
namespace multinet::instrument {

struct Snapshot {
  std::uint64_t orthogonality_tests = 0;
  std::uint64_t switching_enumerations = 0;
  std::uint64_t tests_visited = 0;
  std::uint64_t glued_pair_checks = 0;

  Snapshot operator-(const Snapshot& earlier) const {
    return {orthogonality_tests - earlier.orthogonality_tests,
            switching_enumerations - earlier.switching_enumerations,
            tests_visited - earlier.tests_visited,
            glued_pair_checks - earlier.glued_pair_checks};
  }
};

Snapshot snapshot() noexcept;

void count_orthogonality_test() noexcept;
void count_switching_enumeration() noexcept;
void count_test_visited() noexcept;
void count_glued_pair_check() noexcept;

}  // namespace multinet::instrument
