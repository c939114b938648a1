#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "rdom/graph.hpp"

namespace rdom {

/// Color subset carried by a vertex under a 2-rainbow function.
enum class Label : std::uint8_t { None = 0, One = 1, Two = 2, Both = 3 };

constexpr int label_weight(Label l) {
  return l == Label::Both ? 2 : (l == Label::None ? 0 : 1);
}
constexpr bool has_color(Label l, int color) {
  return (static_cast<unsigned>(l) >> (color - 1)) & 1U;
}

class RainbowAssignment {
 public:
  RainbowAssignment() = default;
  explicit RainbowAssignment(int order) : labels_(static_cast<std::size_t>(order), Label::None) {}
  explicit RainbowAssignment(std::vector<Label> labels) : labels_(std::move(labels)) {}
  RainbowAssignment(std::initializer_list<Label> labels) : labels_(labels) {}

  int size() const { return static_cast<int>(labels_.size()); }
  Label operator[](int v) const { return labels_[static_cast<std::size_t>(v)]; }
  Label& operator[](int v) { return labels_[static_cast<std::size_t>(v)]; }
  const std::vector<Label>& labels() const { return labels_; }

  int weight() const;
  int count(Label l) const;
  VertexSet vertices_with(Label l) const;
  /// Vertices whose label contains the given color (1 or 2).
  VertexSet vertices_with_color(int color) const;

  auto operator<=>(const RainbowAssignment&) const = default;

 private:
  std::vector<Label> labels_;
};

class RomanAssignment {
 public:
  RomanAssignment() = default;
  explicit RomanAssignment(int order) : values_(static_cast<std::size_t>(order), 0) {}
  /// Throws DomainError on a value outside {0, 1, 2}.
  explicit RomanAssignment(std::vector<int> values);
  RomanAssignment(std::initializer_list<int> values)
      : RomanAssignment(std::vector<int>(values)) {}

  int size() const { return static_cast<int>(values_.size()); }
  int operator[](int v) const { return values_[static_cast<std::size_t>(v)]; }
  /// Throws DomainError on a value outside {0, 1, 2}.
  void set(int v, int value);
  const std::vector<int>& values() const { return values_; }

  int weight() const;
  VertexSet vertices_with(int value) const;

  auto operator<=>(const RomanAssignment&) const = default;

 private:
  std::vector<int> values_;
};

/// Comma-separated tokens from {".", "1", "2", "12"}.
std::string format_assignment(const RainbowAssignment& f);
/// Comma-separated tokens from {"0", "1", "2"}.
std::string format_assignment(const RomanAssignment& g);

RainbowAssignment parse_rainbow_assignment(std::string_view text);
RomanAssignment parse_roman_assignment(std::string_view text);

}  // namespace rdom
