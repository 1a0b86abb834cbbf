// SPDX-License-Identifier: Apache-2.0
//
// Verdicts and reports. Every verdict is certified on a finite degree box
// only; nothing here claims a global statement.

#pragma once

#include "toricdec/integer_matrix.hpp"
#include "toricdec/monomial_ideal.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace toricdec {

enum class VerdictStatus { Verified, Failed, Inconclusive };

std::string to_string(VerdictStatus status);
VerdictStatus verdict_status_from_string(const std::string& s);

struct Verdict {
  std::string check;
  VerdictStatus status = VerdictStatus::Verified;
  IntVector degree;     // failure degree, empty if none
  std::string witness;  // failure witness or certificate summary
  std::string detail;

  static Verdict verified(std::string check, std::string detail = {});
  static Verdict failed(std::string check, IntVector degree, std::string witness, std::string detail = {});
  static Verdict inconclusive(std::string check, std::string detail = {});

  bool ok() const { return status == VerdictStatus::Verified; }
  /// "verified-in-box", "failed(<degree>, <witness>)" or "inconclusive".
  std::string label() const;
  bool operator==(const Verdict& rhs) const = default;
};

/// Failed beats inconclusive beats verified.
VerdictStatus combine(const std::vector<Verdict>& verdicts);
/// Exit code of the command line tool for a status: 0, 1 or 2.
int exit_code(VerdictStatus status);

struct ComponentSummary {
  std::string label;
  VarSet prime;
  bool relevant = true;
  bool kept = true;
  std::string note;
  bool operator==(const ComponentSummary& rhs) const = default;
};

struct DegreeRow {
  IntVector degree;
  std::vector<std::int64_t> values;
  bool operator==(const DegreeRow& rhs) const = default;
};

struct DecompositionReport {
  std::string title;
  std::string target;
  std::int64_t box = 0;
  std::int64_t k_max = 0;
  std::vector<ComponentSummary> components;
  std::vector<std::string> columns;
  std::vector<DegreeRow> table;
  std::vector<Verdict> verdicts;

  VerdictStatus overall() const { return combine(verdicts); }
  bool operator==(const DecompositionReport& rhs) const = default;
};

/// Human-readable rendering.
std::string to_table(const DecompositionReport& report);

}  // namespace toricdec
