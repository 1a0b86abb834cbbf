// SPDX-License-Identifier: Apache-2.0

#include "toricdec/report.hpp"

#include "toricdec/fan.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace toricdec {

std::string to_string(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::Verified: return "verified";
    case VerdictStatus::Failed: return "failed";
    case VerdictStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

VerdictStatus verdict_status_from_string(const std::string& s) {
  if (s == "verified") return VerdictStatus::Verified;
  if (s == "failed") return VerdictStatus::Failed;
  if (s == "inconclusive") return VerdictStatus::Inconclusive;
  throw std::invalid_argument("unknown verdict status '" + s + "'");
}

Verdict Verdict::verified(std::string check, std::string detail) {
  return {std::move(check), VerdictStatus::Verified, {}, {}, std::move(detail)};
}

Verdict Verdict::failed(std::string check, IntVector degree, std::string witness, std::string detail) {
  return {std::move(check), VerdictStatus::Failed, std::move(degree), std::move(witness), std::move(detail)};
}

Verdict Verdict::inconclusive(std::string check, std::string detail) {
  return {std::move(check), VerdictStatus::Inconclusive, {}, {}, std::move(detail)};
}

std::string Verdict::label() const {
  switch (status) {
    case VerdictStatus::Verified: return "verified-in-box";
    case VerdictStatus::Inconclusive: return "inconclusive";
    case VerdictStatus::Failed:
      return "failed(" + (degree.empty() ? std::string("-") : to_string(degree)) + ", " + witness + ")";
  }
  return "?";
}

VerdictStatus combine(const std::vector<Verdict>& verdicts) {
  VerdictStatus out = VerdictStatus::Verified;
  for (const auto& v : verdicts) {
    if (v.status == VerdictStatus::Failed) return VerdictStatus::Failed;
    if (v.status == VerdictStatus::Inconclusive) out = VerdictStatus::Inconclusive;
  }
  return out;
}

int exit_code(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::Verified: return 0;
    case VerdictStatus::Failed: return 1;
    case VerdictStatus::Inconclusive: return 2;
  }
  return 2;
}

std::string to_table(const DecompositionReport& r) {
  std::ostringstream os;
  os << r.title << '\n';
  if (!r.target.empty()) os << "target: " << r.target << '\n';
  os << "box: total degree <= " << r.box << ", k_max " << r.k_max << '\n';
  if (!r.components.empty()) {
    os << "components:\n";
    for (const auto& c : r.components) {
      os << "  " << c.label << "  prime " << varset_string(c.prime) << (c.relevant ? "  relevant" : "  irrelevant")
         << (c.kept ? "  kept" : "  dropped");
      if (!c.note.empty()) os << "  (" << c.note << ")";
      os << '\n';
    }
  }
  if (!r.columns.empty() && !r.table.empty()) {
    std::size_t width = 6;
    for (const auto& row : r.table) width = std::max(width, to_string(row.degree).size());
    os << std::left << std::setw(static_cast<int>(width + 2)) << "degree";
    for (const auto& c : r.columns) os << std::setw(static_cast<int>(std::max<std::size_t>(c.size(), 4) + 2)) << c;
    os << '\n';
    for (const auto& row : r.table) {
      os << std::setw(static_cast<int>(width + 2)) << to_string(row.degree);
      for (std::size_t i = 0; i < row.values.size() && i < r.columns.size(); ++i)
        os << std::setw(static_cast<int>(std::max<std::size_t>(r.columns[i].size(), 4) + 2)) << row.values[i];
      os << '\n';
    }
  }
  os << "checks:\n";
  for (const auto& v : r.verdicts) {
    os << "  [" << v.label() << "] " << v.check;
    if (!v.detail.empty()) os << ": " << v.detail;
    os << '\n';
  }
  os << "overall: " << to_string(r.overall()) << '\n';
  return os.str();
}

}  // namespace toricdec
