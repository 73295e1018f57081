#pragma once

// Two-sorted operational and structural term languages, sequents, and
// rule-labeled proof trees, with an S-expression surface syntax.

#include <memory>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "bilat/common.hpp"

namespace bilat {

// Operational terms. Meet/Join/One/Zero/Sim carry the sort of their index;
// P takes a sort-2 argument and produces sort 1, N the other way around.
// ResSup/ResSub are the residuals of meet and join; they are produced by the
// oracle's structural reading, not by the operational surface syntax.
enum class MKind { Atom, One, Zero, Meet, Join, P, N, Sim, ResSup, ResSub };

struct MTFormula;
using MTFormulaPtr = std::shared_ptr<const MTFormula>;

struct MTFormula {
  MKind kind;
  Sort sort;
  std::string name;  // Atom
  MTFormulaPtr a, b;
};

MTFormulaPtr mt_atom(const std::string& name, Sort sort);
MTFormulaPtr mt_one(Sort sort);
MTFormulaPtr mt_zero(Sort sort);
MTFormulaPtr mt_meet(MTFormulaPtr a, MTFormulaPtr b);
MTFormulaPtr mt_join(MTFormulaPtr a, MTFormulaPtr b);
MTFormulaPtr mt_p(MTFormulaPtr a);  // sort 2 -> sort 1
MTFormulaPtr mt_n(MTFormulaPtr a);  // sort 1 -> sort 2
MTFormulaPtr mt_sim(MTFormulaPtr a);
MTFormulaPtr mt_rsup(MTFormulaPtr a, MTFormulaPtr b);
MTFormulaPtr mt_rsub(MTFormulaPtr a, MTFormulaPtr b);

bool equal(const MTFormulaPtr& a, const MTFormulaPtr& b);
int complexity(const MTFormulaPtr& f);
bool uses_sim(const MTFormulaPtr& f);
void collect_atoms(const MTFormulaPtr& f, std::set<std::pair<std::string, Sort>>& out);

// Structural terms. Every operational term embeds as an Of leaf.
enum class SKind { Of, HatOne, CheckZero, HatCap, CheckCup, CheckRSup, HatLSub, SN, SP, Star };

struct Structure;
using StructurePtr = std::shared_ptr<const Structure>;

struct Structure {
  SKind kind;
  Sort sort;
  MTFormulaPtr formula;  // Of
  StructurePtr a, b;
};

StructurePtr st_of(MTFormulaPtr f);
StructurePtr st_one(Sort sort);
StructurePtr st_zero(Sort sort);
StructurePtr st_cap(StructurePtr a, StructurePtr b);
StructurePtr st_cup(StructurePtr a, StructurePtr b);
StructurePtr st_rsup(StructurePtr a, StructurePtr b);
StructurePtr st_lsub(StructurePtr a, StructurePtr b);
StructurePtr st_n(StructurePtr a);  // sort 1 -> sort 2
StructurePtr st_p(StructurePtr a);  // sort 2 -> sort 1
StructurePtr st_star(StructurePtr a);

bool equal(const StructurePtr& a, const StructurePtr& b);
bool uses_star(const StructurePtr& s);
void collect_atoms(const StructurePtr& s, std::set<std::pair<std::string, Sort>>& out);

struct Sequent {
  StructurePtr lhs, rhs;
  Sort sort;
};

Sequent make_sequent(StructurePtr lhs, StructurePtr rhs);
bool equal(const Sequent& a, const Sequent& b);

struct ProofTree;
using ProofTreePtr = std::shared_ptr<const ProofTree>;

struct ProofTree {
  std::string rule_id;
  Sequent conclusion;
  std::vector<ProofTreePtr> premises;
};

ProofTreePtr make_proof(std::string rule_id, Sequent conclusion,
                        std::vector<ProofTreePtr> premises = {});

// S-expression surface.
using MtValue = std::variant<MTFormulaPtr, StructurePtr, Sequent, ProofTreePtr>;

MtValue parse_mt(const std::string& text);
MTFormulaPtr parse_mt_formula(const std::string& text);
StructurePtr parse_mt_structure(const std::string& text);
Sequent parse_mt_sequent(const std::string& text);
ProofTreePtr parse_mt_proof(const std::string& text);

std::string pretty_print(const MTFormulaPtr& f);
std::string pretty_print(const StructurePtr& s);
std::string pretty_print(const Sequent& s);
std::string pretty_print(const ProofTreePtr& p, int indent = 0);

}  // namespace bilat
