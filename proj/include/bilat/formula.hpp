#pragma once

// Single-type formula language: atoms, truth constants t/f/top/bot,
// negation, conflation, and the four lattice connectives.

#include <memory>
#include <set>
#include <string>

#include "bilat/common.hpp"

namespace bilat {

enum class FKind { Atom, TruthConst, Neg, Confl, Bin };
enum class BinOp { And, Or, Tens, Plus };
enum class TruthConst { T, F, Top, Bot };

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  FKind kind;
  std::string name;      // Atom
  TruthConst tc{};       // TruthConst
  BinOp op{};            // Bin
  FormulaPtr a, b;       // Neg/Confl use a; Bin uses a,b
};

FormulaPtr atom(const std::string& name);
FormulaPtr truth(TruthConst tc);
FormulaPtr neg(FormulaPtr a);
FormulaPtr confl(FormulaPtr a);
FormulaPtr bin(BinOp op, FormulaPtr a, FormulaPtr b);

inline FormulaPtr land(FormulaPtr a, FormulaPtr b) { return bin(BinOp::And, a, b); }
inline FormulaPtr lor(FormulaPtr a, FormulaPtr b) { return bin(BinOp::Or, a, b); }
inline FormulaPtr tens(FormulaPtr a, FormulaPtr b) { return bin(BinOp::Tens, a, b); }
inline FormulaPtr plus(FormulaPtr a, FormulaPtr b) { return bin(BinOp::Plus, a, b); }

bool equal(const FormulaPtr& a, const FormulaPtr& b);

// Number of connective nodes; atoms and constants count 0.
int complexity(const FormulaPtr& f);

bool uses_conflation(const FormulaPtr& f);
void collect_atoms(const FormulaPtr& f, std::set<std::string>& out);

FormulaPtr parse_formula(const std::string& text);
std::string pretty_print(const FormulaPtr& f);

// "A |- B" in the same surface syntax.
std::pair<FormulaPtr, FormulaPtr> parse_formula_sequent(const std::string& text);
std::string print_formula_sequent(const FormulaPtr& lhs, const FormulaPtr& rhs);

}  // namespace bilat
