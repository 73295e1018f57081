#pragma once

// Brute-force semantic engine: structural terms read as logical terms,
// rule-to-quasi-inequality compilation, exhaustive soundness sweeps,
// validity queries, and the conservativity cross-check.

#include "bilat/display.hpp"
#include "bilat/search.hpp"
#include "bilat/translate.hpp"

namespace bilat {

enum class Position { Precedent, Succedent };

// Structural connectives become their logical counterparts; the position
// only matters for error reporting symmetry, the table itself is
// position-uniform.
MTFormulaPtr structure_to_term(const StructurePtr& s, Position pos);

// Terms use one element variable per structure/formula metavariable, named
// after it (lowercased, sort-suffixed).
struct Inequality {
  MTFormulaPtr lhs, rhs;
  Sort sort;
};

struct QuasiInequality {
  std::string rule_key;
  std::vector<Inequality> premises;  // conjoined antecedent
  Inequality conclusion;
};

QuasiInequality rule_to_qi(const RuleSpec& rule);

struct OracleVerdict {
  bool ok = true;
  std::string detail;         // counter-assignment description on failure
  MtValuation countermodel;
};

OracleVerdict check_rule_soundness(const RuleSpec& rule, const FiniteHBL& H);

// Valid iff lhs-term <= rhs-term under every valuation into every catalog
// entry. Rules mentioning sim require the entry to carry sim tables; entries
// without them are skipped for such sequents.
OracleVerdict mt_valid(const Sequent& s, const std::vector<FiniteHBL>& catalog);

struct ConservativityRow {
  std::string sequent;        // printed single-type sequent
  bool hilbert = false;       // bundled Hilbert script available and checked
  bool display_proved = false;
  bool single_valid = false;  // F_t-consequence on all catalog bilattices
  bool multi_valid = false;   // translated sequent valid on all catalog HBLs
  bool violation = false;
};

// hilbert_known: printed sequents for which a checked Hilbert script is
// bundled; membership is reported, absence is not a refutation.
std::vector<ConservativityRow> conservativity_report(
    const std::vector<std::pair<FormulaPtr, FormulaPtr>>& corpus,
    const std::set<std::string>& hilbert_known, HilbertSystem sys,
    SearchBudget budget = {});

}  // namespace bilat
