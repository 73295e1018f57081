#pragma once

// Axiom-schema matcher and step checker for the Hilbert calculi BL and CBL.

#include <map>
#include <vector>

#include "bilat/algebra.hpp"
#include "bilat/formula.hpp"

namespace bilat {

enum class HilbertSystem { BL, CBL };

// Patterns use atoms A, B, C as metavariables.
struct Schema {
  std::string id;
  FormulaPtr lhs, rhs;
  bool cbl_only = false;
};

struct HilbertRule {
  std::string id;
  // premises and conclusion over metavariables
  std::vector<std::pair<FormulaPtr, FormulaPtr>> premises;
  std::pair<FormulaPtr, FormulaPtr> conclusion;
};

// The printed otimes/oplus distributivity axiom reads
// A * (B + C) |- (A * B) | (A + C); the corrected table replaces it with
// A * (B + C) |- (A * B) + (A * C). Both are selectable.
const std::vector<Schema>& schema_table(HilbertSystem sys, bool printed_axioms = false);
const std::vector<HilbertRule>& hilbert_rules();

using Subst = std::map<std::string, FormulaPtr>;

bool match_formula(const FormulaPtr& pattern, const FormulaPtr& f, Subst& subst);
FormulaPtr substitute(const FormulaPtr& pattern, const Subst& subst);

std::vector<std::pair<std::string, Subst>> match_axiom(const FormulaPtr& lhs,
                                                       const FormulaPtr& rhs,
                                                       HilbertSystem sys,
                                                       bool printed_axioms = false);

struct HilbertStep {
  FormulaPtr lhs, rhs;
  bool is_axiom = false;
  std::string id;
  std::vector<int> from;  // 1-based indices of earlier steps
};

using HilbertProof = std::vector<HilbertStep>;

// JSON-lines, one step per line:
//   {"seq": "A |- B", "by": {"axiom": id}} or
//   {"seq": "A |- B", "by": {"rule": id, "from": [i, j]}}
HilbertProof parse_hilbert_proof(const std::string& text);
std::string print_hilbert_proof(const HilbertProof& proof);

Verdict check_hilbert(const HilbertProof& proof, HilbertSystem sys,
                      bool printed_axioms = false);

}  // namespace bilat
