// SPDX-License-Identifier: Apache-2.0
//
// The structured document format shared by every input and output. See
// docs/format.md for the schema. Integers are written as decimal strings;
// readers accept JSON numbers as well.

#pragma once

#include "toricdec/decomposition.hpp"
#include "toricdec/engine.hpp"
#include "toricdec/fan.hpp"
#include "toricdec/grading.hpp"
#include "toricdec/report.hpp"

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace toricdec {

inline constexpr const char* kFormatVersion = "1";

/// Malformed input. `where()` is a JSON pointer into the offending document.
class InputError : public std::runtime_error {
 public:
  InputError(std::string where, const std::string& message)
      : std::runtime_error(where.empty() ? message : where + ": " + message), where_(std::move(where)) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

std::shared_ptr<const Fan> parse_fan(const std::string& text);
std::string fan_to_document(const Fan& fan);

/// Accepts a grading document or a fan document.
GradingSetup parse_setup(const std::string& text);

struct MatrixDocument {
  std::size_t nvars = 0;
  MonomialGrid entries;
  std::optional<MonomialMatrix> matrix;  // when both shift lists are given
};
MatrixDocument parse_matrix(const std::string& text);

struct ComponentDocument {
  std::string label;
  VarSet prime;
  ModuleExpr module;
};

struct ModuleDocument {
  GradingSetup setup;
  ModuleExpr module;
  std::optional<ModuleExpr> target;  // the submodule being decomposed
  std::vector<ComponentDocument> components;
  std::optional<IntVector> degree;
};
ModuleDocument parse_module(const std::string& text);

std::string report_to_document(const DecompositionReport& report);
DecompositionReport parse_report(const std::string& text);

std::string piece_to_document(const GradedPiece& piece);

std::string read_file(const std::string& path);

}  // namespace toricdec
