#include "multinet/limits.hpp"

#include <cstdlib>
#include <string>

namespace multinet {
namespace {

std::uint64_t env_value(const char* name, std::uint64_t fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  try {
    std::size_t used = 0;
    unsigned long long v = std::stoull(raw, &used);
    if (used != std::string(raw).size() || v == 0) return fallback;
    return v;
  } catch (const std::exception&) {
    return fallback;
  }
}

}  // namespace

Limits Limits::from_env() {
  Limits l;
  l.max_switchings = env_value("MULTINET_BOUND", l.max_switchings);
  l.max_ground = static_cast<std::size_t>(env_value("MULTINET_MAX_GROUND", l.max_ground));
  return l;
}

}  // namespace multinet
