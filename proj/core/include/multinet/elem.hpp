#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace multinet {

/// Compares two identifiers treating maximal digit runs as numbers, so that
/// "i2" < "i10" and "1" < "10". Ties on numeric value fall back to plain
/// lexicographic order, which keeps the order strong.
std::strong_ordering natural_compare(std::string_view a, std::string_view b) noexcept;

/// Opaque identifier used for partition elements, link ports and vertices.
class ElemId {
 public:
  ElemId() = default;
  ElemId(std::string name) : name_(std::move(name)) {}  // NOLINT: implicit by intent
  ElemId(const char* name) : name_(name) {}             // NOLINT
  ElemId(std::string_view name) : name_(name) {}        // NOLINT

  const std::string& str() const noexcept { return name_; }
  bool empty() const noexcept { return name_.empty(); }

  friend bool operator==(const ElemId& a, const ElemId& b) noexcept { return a.name_ == b.name_; }
  friend std::strong_ordering operator<=>(const ElemId& a, const ElemId& b) noexcept {
    return natural_compare(a.name_, b.name_);
  }
  friend std::ostream& operator<<(std::ostream& os, const ElemId& e) { return os << e.name_; }

 private:
  std::string name_;
};

using VertexId = ElemId;

}  // namespace multinet

template <>
struct std::hash<multinet::ElemId> {
  std::size_t operator()(const multinet::ElemId& e) const noexcept {
    return std::hash<std::string>{}(e.str());
  }
};
