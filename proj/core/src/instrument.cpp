#include "multinet/instrument.hpp"

#include <atomic>

namespace multinet::instrument {
namespace {

std::atomic<std::uint64_t> g_orthogonality{0};
std::atomic<std::uint64_t> g_enumerations{0};
std::atomic<std::uint64_t> g_tests{0};
std::atomic<std::uint64_t> g_glued{0};

}  // namespace

Snapshot snapshot() noexcept {
  return {g_orthogonality.load(std::memory_order_relaxed), g_enumerations.load(std::memory_order_relaxed),
          g_tests.load(std::memory_order_relaxed), g_glued.load(std::memory_order_relaxed)};
}

void count_orthogonality_test() noexcept { g_orthogonality.fetch_add(1, std::memory_order_relaxed); }
void count_switching_enumeration() noexcept { g_enumerations.fetch_add(1, std::memory_order_relaxed); }
void count_test_visited() noexcept { g_tests.fetch_add(1, std::memory_order_relaxed); }
void count_glued_pair_check() noexcept { g_glued.fetch_add(1, std::memory_order_relaxed); }

}  // namespace multinet::instrument
