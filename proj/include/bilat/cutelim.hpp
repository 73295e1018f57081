#pragma once

// Principal-cut reduction steps and a leftmost-innermost reduction driver.

#include <stdexcept>

#include "bilat/search.hpp"

namespace bilat {

struct NotPrincipal : std::runtime_error {
  explicit NotPrincipal(const std::string& locus)
      : std::runtime_error("cut at '" + locus + "' is not principal on both sides"),
        locus(locus) {}
  std::string locus;
};

struct UnknownShape : std::runtime_error {
  explicit UnknownShape(const std::string& locus)
      : std::runtime_error("no reduction for the cut formula at '" + locus + "'"),
        locus(locus) {}
  std::string locus;
};

struct FuelExhausted : std::runtime_error {
  FuelExhausted() : std::runtime_error("rewrite fuel exhausted") {}
};

// Replaces the principal cut at the given locus (path of premise indices,
// "" for the root) by its reduction. New cuts are on strict subformulas.
ProofTreePtr reduce_principal(const ProofTreePtr& tree, const std::string& locus);

// Complexities of all cut formulas in the tree, sorted descending.
std::vector<int> cut_ranks(const ProofTreePtr& tree);

struct ElimResult {
  ProofTreePtr tree;
  bool stuck = false;
  std::string stuck_locus;
  long rewrites = 0;
};

// Principal reductions only; stops Stuck at the first non-principal cut.
// When `trace` is given, it receives cut_ranks after every rewrite,
// starting with the input tree.
ElimResult eliminate(const ProofTreePtr& tree, long fuel,
                     std::vector<std::vector<int>>* trace = nullptr);

// The reductions for sim, n, and p leave a displayed cut whose premises end
// in display moves; that cut is outside the principal fragment. This variant
// discharges such residues by bounded cut-free search and splices the found
// proof (always checker-verified by the caller's tests, never trusted).
ElimResult eliminate_with_search(const ProofTreePtr& tree, long fuel, DisplaySystem sys,
                                 SearchBudget budget = {},
                                 std::vector<std::vector<int>>* trace = nullptr);

}  // namespace bilat
