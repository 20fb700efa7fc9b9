#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "calogero/core.hpp"

namespace calogero {

/// Contents of a state file: either a phase-space point or an action-angle point.
using State = std::variant<PhaseSpacePoint, ActionAnglePoint>;

/// Thrown for text that is not well-formed JSON. line and column are 1-based.
class MalformedInput : public ValidationError {
 public:
  MalformedInput(const std::string& what, std::size_t line, std::size_t column)
      : ValidationError(what), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Parses {"n", "g", "q", "p"} or {"n", "g", "lambda", "phi"}. Exactly one of
/// the two array pairs must be present and both arrays must have length n.
State parse_state(std::string_view text);

/// Serializes with keys in schema order and doubles in shortest round-trip form.
std::string dump_state(const State& state);

}  // namespace calogero
