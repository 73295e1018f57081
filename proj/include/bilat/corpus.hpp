#pragma once

// Bundled acceptance suite: one criterion per entry, deterministic output.

#include <iosfwd>
#include <string>
#include <vector>

#include "bilat/cutelim.hpp"
#include "bilat/hilbert.hpp"
#include "bilat/oracle.hpp"
#include "bilat/translate.hpp"

namespace bilat::corpus {

struct CriterionResult {
  int number = 0;
  std::string title;
  bool passed = false;
  double seconds = 0.0;
  std::string detail;  // first failure, empty when passed
};

// The transcribed derivation trees and the system each one lives in.
const std::vector<std::pair<std::string, DisplaySystem>>& paper_manifest();

std::vector<CriterionResult> run_all(const std::string& corpus_dir);

// One line per criterion; returns 0 when everything passed, 1 otherwise.
int report(std::ostream& os, const std::vector<CriterionResult>& results);

}  // namespace bilat::corpus
