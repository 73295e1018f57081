#pragma once

// Bounded, cut-free backward proof search in D.BL and D.CBL.

#include "bilat/display.hpp"

namespace bilat {

struct SearchBudget {
  int max_depth = 12;
  long max_nodes = 2000000;
};

struct SearchResult {
  ProofTreePtr tree;  // null means Exhausted
  long nodes = 0;
  bool exhausted() const { return tree == nullptr; }
};

SearchResult prove(const Sequent& goal, DisplaySystem sys, SearchBudget budget = {});

}  // namespace bilat
