#include "doctest.h"

#include "bilat/formula.hpp"
#include "bilat/mt.hpp"

using namespace bilat;

TEST_CASE("formula parser grammar clauses") {
  FormulaPtr f = parse_formula("!(p & q)");
  REQUIRE(f->kind == FKind::Neg);
  CHECK(f->a->kind == FKind::Bin);
  CHECK(f->a->op == BinOp::And);
  CHECK(equal(f, neg(land(atom("p"), atom("q")))));

  FormulaPtr g = parse_formula("t * f");
  CHECK(equal(g, tens(truth(TruthConst::T), truth(TruthConst::F))));

  CHECK_THROWS_AS(parse_formula("p & q * r"), MixedTierError);
  CHECK_THROWS_AS(parse_formula("p | q + r"), MixedTierError);
  CHECK_NOTHROW(parse_formula("p & (q * r)"));
  CHECK_NOTHROW(parse_formula("p & q & r"));
  CHECK_THROWS_AS(parse_formula("p &"), SyntaxError);
  CHECK_THROWS_AS(parse_formula("p q"), SyntaxError);
}

TEST_CASE("formula precedence and associativity") {
  CHECK(equal(parse_formula("p | q & r"), lor(atom("p"), land(atom("q"), atom("r")))));
  CHECK(equal(parse_formula("p & q & r"), land(land(atom("p"), atom("q")), atom("r"))));
  CHECK(equal(parse_formula("!p & -q"), land(neg(atom("p")), confl(atom("q")))));
  CHECK(equal(parse_formula("!-p"), neg(confl(atom("p")))));
}

TEST_CASE("formula printer round-trips") {
  CHECK(pretty_print(neg(land(atom("p"), atom("q")))) == "!(p & q)");
  const char* inputs[] = {
      "!(p & q)", "t * f", "p & (q * r)", "(p | q) + r", "p & q & r",
      "p & (q & r)", "!-p | --q", "top & bot", "!(p | q) * -(p + q)",
  };
  for (const char* s : inputs) {
    FormulaPtr f = parse_formula(s);
    CHECK(equal(parse_formula(pretty_print(f)), f));
  }
}

TEST_CASE("printer never mixes tiers unparenthesized") {
  const char* inputs[] = {"p & (q * r)", "(p * q) & r", "p | (q + r)", "(p + q) | (r & s)"};
  for (const char* s : inputs) {
    FormulaPtr f = parse_formula(s);
    CHECK_NOTHROW(parse_formula(pretty_print(f)));
  }
}

TEST_CASE("formula sequents") {
  auto [lhs, rhs] = parse_formula_sequent("p & q |- p");
  CHECK(equal(lhs, land(atom("p"), atom("q"))));
  CHECK(equal(rhs, atom("p")));
  CHECK(print_formula_sequent(lhs, rhs) == "p & q |- p");
}

TEST_CASE("complexity counts connective nodes") {
  CHECK(complexity(atom("p")) == 0);
  CHECK(complexity(parse_formula("!(p & q)")) == 2);
  CHECK(complexity(parse_mt_formula("(p (sim2 (n a1)))")) == 3);
}

TEST_CASE("mt parser grammar clauses") {
  MTFormulaPtr f = parse_mt_formula("(p (meet2 a2 b2))");
  REQUIRE(f->kind == MKind::P);
  CHECK(f->sort == Sort::S1);
  CHECK(f->a->kind == MKind::Meet);
  CHECK(f->a->sort == Sort::S2);

  Sequent s = parse_mt_sequent("(seq (SN a1) b2)");
  CHECK(s.sort == Sort::S2);
  CHECK(s.lhs->kind == SKind::SN);
  CHECK(s.rhs->kind == SKind::Of);

  CHECK_THROWS_AS(parse_mt("(meet1 a1 b2)"), SortError);
  CHECK_THROWS_AS(parse_mt("(n a2)"), SortError);
  CHECK_THROWS_AS(parse_mt("(p a1)"), SortError);
  CHECK_THROWS_AS(parse_mt("(seq a1 b2)"), SortError);
  CHECK_THROWS_AS(parse_mt("(SN a2)"), SortError);
  CHECK_THROWS_AS(parse_mt("(Scap1 a1 a2)"), SortError);
  CHECK_THROWS_AS(parse_mt("(meet1 a1)"), SyntaxError);
  CHECK_THROWS_AS(parse_mt("(frob a1 b1)"), SyntaxError);
  CHECK_THROWS_AS(parse_mt("q"), SyntaxError);
}

TEST_CASE("mt constructors enforce sorts") {
  CHECK_THROWS_AS(mt_meet(mt_atom("a1", Sort::S1), mt_atom("b2", Sort::S2)), SortError);
  CHECK_THROWS_AS(mt_n(mt_atom("a2", Sort::S2)), SortError);
  CHECK_THROWS_AS(mt_p(mt_atom("a1", Sort::S1)), SortError);
  CHECK_THROWS_AS(st_n(st_of(mt_atom("a2", Sort::S2))), SortError);
  CHECK_THROWS_AS(st_cap(st_one(Sort::S1), st_one(Sort::S2)), SortError);
  CHECK_THROWS_AS(make_sequent(st_one(Sort::S1), st_zero(Sort::S2)), SortError);
}

TEST_CASE("mt printer round-trips") {
  CHECK(pretty_print(mt_p(mt_n(mt_atom("a1", Sort::S1)))) == "(p (n a1))");
  Sequent s = make_sequent(st_of(mt_atom("a1", Sort::S1)), st_of(mt_atom("a1", Sort::S1)));
  CHECK(pretty_print(s) == "(seq a1 a1)");
  const char* inputs[] = {
      "(p (meet2 a2 b2))",
      "(join1 one1 (p zero2))",
      "(sim2 (n (sim1 a1)))",
      "(seq (Scap1 a1 (SP (SN b1))) (SrresR1 b1 c1))",
      "(seq (Sstar2 (SN a1)) (Scup2 Szero2 b2))",
      "(seq Sone1 one1)",
  };
  for (const char* in : inputs) {
    MtValue v = parse_mt(in);
    std::string printed;
    if (auto* f = std::get_if<MTFormulaPtr>(&v)) {
      printed = pretty_print(*f);
      CHECK(equal(parse_mt_formula(printed), *f));
    } else if (auto* st = std::get_if<StructurePtr>(&v)) {
      printed = pretty_print(*st);
      CHECK(equal(parse_mt_structure(printed), *st));
    } else if (auto* sq = std::get_if<Sequent>(&v)) {
      printed = pretty_print(*sq);
      CHECK(equal(parse_mt_sequent(printed), *sq));
    }
  }
}

TEST_CASE("proof scripts parse and round-trip") {
  const char* script =
      "(by meet-l (seq (meet1 a1 b1) a1)\n"
      "  (by W-l (seq (Scap1 a1 b1) a1)\n"
      "    (by id (seq a1 a1))))";
  ProofTreePtr p = parse_mt_proof(script);
  CHECK(p->rule_id == "meet-l");
  REQUIRE(p->premises.size() == 1);
  CHECK(p->premises[0]->rule_id == "W-l");
  ProofTreePtr again = parse_mt_proof(pretty_print(p));
  CHECK(again->rule_id == p->rule_id);
  CHECK(equal(again->conclusion, p->conclusion));
  CHECK(equal(again->premises[0]->premises[0]->conclusion,
              p->premises[0]->premises[0]->conclusion));
}
