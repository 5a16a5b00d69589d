#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oscform/ruled.hpp"

namespace oscform {

enum class VarietyKind { kParameterization, kImplicit, kScroll };

std::string to_string(VarietyKind kind);

/// A parsed `key: value` variety description. Expression fields hold the
/// canonical printed form of each parsed expression.
struct VarietyFile {
  VarietyKind kind = VarietyKind::kParameterization;
  std::string label;
  std::vector<std::string> params;     // parameterization
  std::vector<std::string> fiber;      // parameterization, optional
  std::vector<std::string> coords;     // parameterization
  std::vector<std::string> vars;       // implicit
  std::vector<std::string> equations;  // implicit
  std::optional<std::vector<std::size_t>> free;  // implicit, optional
  std::optional<Point> point;
  std::vector<unsigned> degrees;       // scroll

  Parameterization parameterization() const;
  ImplicitVariety implicit() const;
  ScrollSpec scroll_spec() const;
  /// Set for scrolls and for charts with a `fiber:` line.
  std::optional<RuledParameterization> ruled() const;

  friend bool operator==(const VarietyFile&, const VarietyFile&) = default;
};

/// Throws ParseError (with line and column) on malformed text and
/// ConsistencyError when the fields contradict each other.
VarietyFile parse_variety(std::string_view text);

/// Inverse of parse_variety on canonical files.
std::string print_variety(const VarietyFile& file);

}  // namespace oscform
