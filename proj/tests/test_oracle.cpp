#include "doctest.h"

#include "bilat/oracle.hpp"

using namespace bilat;

namespace {

const RuleSpec& find_entry(DisplaySystem sys, const std::string& key) {
  for (const RuleSpec& r : rule_table(sys))
    if (r.key == key) return r;
  throw std::logic_error("no such rule entry: " + key);
}

}  // namespace

TEST_CASE("structural symbols read as logical symbols") {
  StructurePtr cap = parse_mt_structure("(Scap1 x1 y1)");
  CHECK(equal(structure_to_term(cap, Position::Precedent),
              parse_mt_formula("(meet1 x1 y1)")));

  StructurePtr sp = parse_mt_structure("(SP x2)");
  CHECK(equal(structure_to_term(sp, Position::Succedent), parse_mt_formula("(p x2)")));

  StructurePtr star = parse_mt_structure("(Sstar2 x2)");
  CHECK(equal(structure_to_term(star, Position::Precedent),
              parse_mt_formula("(sim2 x2)")));

  StructurePtr res = parse_mt_structure("(SrresR1 y1 z1)");
  CHECK(equal(structure_to_term(res, Position::Succedent),
              parse_mt_formula("(rsup1 y1 z1)")));
}

TEST_CASE("rule_to_qi on the printed quasi-inequalities") {
  QuasiInequality adj = rule_to_qi(find_entry(DisplaySystem::DBL, "adj-P-fwd"));
  REQUIRE(adj.premises.size() == 1);
  CHECK(equal(adj.premises[0].lhs, parse_mt_formula("(p x2)")));
  CHECK(equal(adj.premises[0].rhs, parse_mt_formula("y1")));
  CHECK(adj.premises[0].sort == Sort::S1);
  CHECK(equal(adj.conclusion.lhs, parse_mt_formula("x2")));
  CHECK(equal(adj.conclusion.rhs, parse_mt_formula("(n y1)")));
  CHECK(adj.conclusion.sort == Sort::S2);

  QuasiInequality cont = rule_to_qi(find_entry(DisplaySystem::DCBL, "cont-fwd-1"));
  REQUIRE(cont.premises.size() == 1);
  CHECK(equal(cont.premises[0].lhs, parse_mt_formula("x1")));
  CHECK(equal(cont.premises[0].rhs, parse_mt_formula("y1")));
  CHECK(equal(cont.conclusion.lhs, parse_mt_formula("(sim1 y1)")));
  CHECK(equal(cont.conclusion.rhs, parse_mt_formula("(sim1 x1)")));

  QuasiInequality w = rule_to_qi(find_entry(DisplaySystem::DBL, "W-l-1"));
  CHECK(equal(w.premises[0].lhs, parse_mt_formula("x1")));
  CHECK(equal(w.premises[0].rhs, parse_mt_formula("z1")));
  CHECK(equal(w.conclusion.lhs, parse_mt_formula("(meet1 x1 y1)")));
  CHECK(equal(w.conclusion.rhs, parse_mt_formula("z1")));
}

TEST_CASE("every rule is sound on every catalog HBL") {
  std::vector<FiniteHBL> hbls = catalog_hbls();
  for (const FiniteHBL& H : hbls) {
    for (const RuleSpec& r : rule_table(DisplaySystem::DCBL)) {
      OracleVerdict v = check_rule_soundness(r, H);
      CHECK_MESSAGE(v.ok, v.detail);
    }
  }
}

TEST_CASE("a corrupted adj rule gets a countermodel") {
  RuleSpec bad = find_entry(DisplaySystem::DBL, "adj-P-bwd");
  std::swap(bad.premises[0].lhs, bad.premises[0].rhs);
  FiniteHBL four_plus = catalog_hbls()[0];
  OracleVerdict v = check_rule_soundness(bad, four_plus);
  CHECK_FALSE(v.ok);
  CHECK_FALSE(v.countermodel.empty());
}

TEST_CASE("mt_valid") {
  std::vector<FiniteHBL> hbls = catalog_hbls();
  FormulaPtr p = atom("p"), q = atom("q");

  CHECK(mt_valid(translate_sequent(p, lor(p, q)), hbls).ok);

  OracleVerdict v = mt_valid(translate_sequent(p, q), hbls);
  CHECK_FALSE(v.ok);
  CHECK(v.detail.find("four") != std::string::npos);

  CHECK(mt_valid(parse_mt_sequent("(seq one1 one1)"), hbls).ok);
}

TEST_CASE("multi-type validity agrees with single-type consequence") {
  std::vector<FiniteBilattice> algebras = catalog_bilattices();
  std::vector<FiniteHBL> hbls = catalog_hbls();
  std::vector<FormulaPtr> fs = {atom("p"),
                                atom("q"),
                                truth(TruthConst::T),
                                truth(TruthConst::F),
                                neg(atom("p")),
                                confl(atom("p")),
                                land(atom("p"), atom("q")),
                                lor(atom("p"), atom("q")),
                                tens(atom("p"), atom("q")),
                                plus(atom("p"), atom("q")),
                                neg(land(atom("p"), atom("q"))),
                                confl(neg(atom("p")))};
  for (const FormulaPtr& a : fs)
    for (const FormulaPtr& b : fs) {
      bool single = true;
      for (const FiniteBilattice& alg : algebras)
        single = single && consequence(alg, a, b).valid;
      bool multi = mt_valid(translate_sequent(a, b), hbls).ok;
      std::string msg = print_formula_sequent(a, b);
      CHECK_MESSAGE(single == multi, msg);
    }
}

TEST_CASE("conservativity report") {
  std::vector<std::pair<FormulaPtr, FormulaPtr>> corpus;
  auto add = [&](const char* s) { corpus.push_back(parse_formula_sequent(s)); };
  add("f |- p");
  add("p & !p |- q");
  add("!!p |- p");
  std::set<std::string> known = {"f |- p", "!!p |- p"};
  auto rows = conservativity_report(corpus, known, HilbertSystem::CBL, {8, 200000});
  REQUIRE(rows.size() == 3);

  CHECK(rows[0].hilbert);
  CHECK(rows[0].display_proved);
  CHECK(rows[0].single_valid);
  CHECK(rows[0].multi_valid);

  CHECK_FALSE(rows[1].single_valid);
  CHECK_FALSE(rows[1].multi_valid);
  CHECK_FALSE(rows[1].display_proved);

  CHECK(rows[2].hilbert);
  CHECK(rows[2].display_proved);
  CHECK(rows[2].single_valid);
  CHECK(rows[2].multi_valid);

  for (const ConservativityRow& r : rows) CHECK_FALSE(r.violation);
}
