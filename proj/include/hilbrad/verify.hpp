#pragma once

// End-to-end reproduction of the published computations, checked against the
// transcribed reference ideals and graphs.

#include <string>
#include <vector>

#include "hilbrad/enumerate.hpp"
#include "json.hpp"

namespace hilbrad {

struct VerifyItem {
  std::string name;  // lemma3.enum, lemma5.enum, lex.n4, ...
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// Runs, in order: lemma3.enum, lemma5.enum, lex.n4, lex.n5,
/// reeves.classification, lemma7.sections, graph.H4, graph.H5.
std::vector<VerifyItem> verify_paper(const EnumerationOptions& options = {});

nlohmann::json verify_report_json(const std::vector<VerifyItem>& items);

}  // namespace hilbrad
