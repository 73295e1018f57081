#pragma once

// Rule tables and proof checker for the multi-type display calculi
// D.BL and D.CBL, plus backward rule application for proof search.

#include <map>
#include <vector>

#include "bilat/mt.hpp"

namespace bilat {

enum class DisplaySystem { DBL, DCBL };

// Patterns over structures. Formula-level nodes stand for an operational
// formula occupying a structural position (an Of leaf).
struct Pat;
using PatPtr = std::shared_ptr<const Pat>;

struct Pat {
  enum Kind {
    SVar,   // structure metavariable (X, Y, Z, W)
    FVar,   // formula metavariable (A, B)
    AVar,   // atomic-formula metavariable (Id only)
    FOne, FZero, FMeet, FJoin, FP, FN, FSim,
    SOne, SZero, SCap, SCup, SRSup, SLSub, SSN, SSP, SStar,
  };
  Kind kind;
  Sort sort;
  std::string name;  // SVar/FVar/AVar
  PatPtr a, b;
};

struct SeqPat {
  PatPtr lhs, rhs;
  Sort sort;
};

struct RuleSpec {
  std::string name;  // script-facing rule id, shared across directions/sorts
  std::string key;   // unique per directed entry
  std::vector<SeqPat> premises;
  SeqPat conclusion;
  bool cbl_only = false;
  bool convenience = false;  // stored converse of a printed one-directional rule
};

const std::vector<RuleSpec>& rule_table(DisplaySystem sys);

struct Bindings {
  std::map<std::string, StructurePtr> s;
  std::map<std::string, MTFormulaPtr> f;
};

bool match_pat(const PatPtr& pat, const StructurePtr& st, Bindings& b);
StructurePtr instantiate(const PatPtr& pat, const Bindings& b);

struct DisplayVerdict {
  bool accepted = true;
  std::string locus;       // path of premise indices from the root, e.g. "0.1"
  std::string rule_id;
  std::string diagnostic;  // UnknownRule | SystemViolation | PatternMismatch detail
};

DisplayVerdict check_proof(const ProofTreePtr& tree, DisplaySystem sys);

// All premise-lists obtainable by reading some directed entry of the rule
// backward from the goal. Entries whose premises mention metavariables not
// bound by the conclusion (Cut) yield nothing.
std::vector<std::vector<Sequent>> apply_backward(const std::string& rule,
                                                 const Sequent& goal, DisplaySystem sys);

bool uses_cut(const ProofTreePtr& tree);

}  // namespace bilat
