#pragma once

// The t1/t2 translation from the single-type language into the two-sorted
// language, and the induced sequent translation.

#include <stdexcept>

#include "bilat/formula.hpp"
#include "bilat/hilbert.hpp"
#include "bilat/mt.hpp"

namespace bilat {

struct ConflInBLMode : std::runtime_error {
  ConflInBLMode() : std::runtime_error("conflation formula translated in BL mode") {}
};

// Atoms p translate to the sorted atoms p1 and p2.
MTFormulaPtr t1(const FormulaPtr& f, HilbertSystem sys = HilbertSystem::CBL);
MTFormulaPtr t2(const FormulaPtr& f, HilbertSystem sys = HilbertSystem::CBL);

// A |- B becomes (seq t1(A) t1(B)), sort 1.
Sequent translate_sequent(const FormulaPtr& lhs, const FormulaPtr& rhs,
                          HilbertSystem sys = HilbertSystem::CBL);

}  // namespace bilat
