#pragma once

#include <string>
#include <utility>
#include <vector>

namespace preriesz {

/// One verified step of a certificate. `data` holds exchange-format payloads
/// (matrices, sequences, scalars) in insertion order.
struct ReportStep {
  std::string name;
  bool passed = true;
  std::string detail;
  std::vector<std::pair<std::string, std::string>> data;
};

/// Plain certificate document; rendering lives in the CLI layer.
struct Report {
  std::string title;
  std::vector<ReportStep> steps;
  std::string verdict;

  bool all_passed() const {
    for (const auto& s : steps) {
      if (!s.passed) return false;
    }
    return true;
  }
};

}  // namespace preriesz
