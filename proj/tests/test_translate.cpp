#include "doctest.h"

#include "bilat/translate.hpp"

using namespace bilat;

namespace {

std::vector<FormulaPtr> sample_formulas() {
  std::vector<FormulaPtr> seeds = {atom("p"), atom("q"), truth(TruthConst::T),
                                   truth(TruthConst::F), truth(TruthConst::Top),
                                   truth(TruthConst::Bot)};
  std::vector<FormulaPtr> out = seeds;
  for (const FormulaPtr& s : seeds) {
    out.push_back(neg(s));
    out.push_back(confl(s));
  }
  std::vector<FormulaPtr> bases = {atom("p"), atom("q"), neg(atom("p"))};
  std::vector<FormulaPtr> bins;
  for (BinOp op : {BinOp::And, BinOp::Or, BinOp::Tens, BinOp::Plus})
    for (const FormulaPtr& a : bases)
      for (const FormulaPtr& b : bases) bins.push_back(bin(op, a, b));
  for (const FormulaPtr& f : bins) {
    out.push_back(f);
    out.push_back(neg(f));
    out.push_back(confl(f));
  }
  return out;
}

}  // namespace

TEST_CASE("translation clauses from the table") {
  CHECK(equal(t1(neg(atom("p"))), mt_p(mt_atom("p2", Sort::S2))));
  CHECK(equal(t2(neg(atom("p"))), mt_n(mt_atom("p1", Sort::S1))));

  FormulaPtr conj = land(atom("p"), atom("q"));
  CHECK(equal(t1(conj), mt_meet(mt_atom("p1", Sort::S1), mt_atom("q1", Sort::S1))));
  CHECK(equal(t2(conj), mt_join(mt_atom("p2", Sort::S2), mt_atom("q2", Sort::S2))));

  CHECK(equal(t1(truth(TruthConst::T)), mt_one(Sort::S1)));
  CHECK(equal(t2(truth(TruthConst::T)), mt_zero(Sort::S2)));
  CHECK(equal(t1(truth(TruthConst::F)), mt_zero(Sort::S1)));
  CHECK(equal(t2(truth(TruthConst::F)), mt_one(Sort::S2)));
  CHECK(equal(t1(truth(TruthConst::Top)), mt_one(Sort::S1)));
  CHECK(equal(t2(truth(TruthConst::Top)), mt_one(Sort::S2)));

  CHECK(equal(t1(tens(atom("p"), atom("q"))),
              mt_meet(mt_atom("p1", Sort::S1), mt_atom("q1", Sort::S1))));
  CHECK(equal(t2(tens(atom("p"), atom("q"))),
              mt_meet(mt_atom("p2", Sort::S2), mt_atom("q2", Sort::S2))));

  CHECK(equal(t1(confl(atom("p"))), mt_p(mt_sim(mt_atom("p2", Sort::S2)))));
  CHECK(equal(t2(confl(atom("p"))), mt_n(mt_sim(mt_atom("p1", Sort::S1)))));
}

TEST_CASE("translate_sequent") {
  auto [l1, r1] = parse_formula_sequent("f |- p");
  Sequent s1 = translate_sequent(l1, r1);
  CHECK(equal(s1, parse_mt_sequent("(seq zero1 p1)")));

  auto [l2, r2] = parse_formula_sequent("!!p |- p");
  CHECK(equal(translate_sequent(l2, r2), parse_mt_sequent("(seq (p (n p1)) p1)")));

  auto [l3, r3] = parse_formula_sequent("p |- p");
  CHECK(equal(translate_sequent(l3, r3), parse_mt_sequent("(seq p1 p1)")));
}

TEST_CASE("conflation is rejected in BL mode") {
  CHECK_THROWS_AS(t1(confl(atom("p")), HilbertSystem::BL), ConflInBLMode);
  CHECK_THROWS_AS(t2(land(atom("p"), confl(atom("q"))), HilbertSystem::BL), ConflInBLMode);
  CHECK_NOTHROW(t1(neg(atom("p")), HilbertSystem::BL));
}

TEST_CASE("sort correctness and size bound") {
  for (const FormulaPtr& f : sample_formulas()) {
    MTFormulaPtr a = t1(f);
    MTFormulaPtr b = t2(f);
    CHECK(a->sort == Sort::S1);
    CHECK(b->sort == Sort::S2);
    CHECK(complexity(a) <= 2 * complexity(f) + 1);
    CHECK(complexity(b) <= 2 * complexity(f) + 1);
  }
}

TEST_CASE("semantic commutation with the regular-element decomposition") {
  for (const FiniteBilattice& B : catalog_bilattices()) {
    FiniteHBL H = b_plus(B);
    std::vector<int> regs = regular_elements(B);
    std::vector<int> back(B.size(), -1);
    for (int i = 0; i < static_cast<int>(regs.size()); i++) back[regs[i]] = i;

    for (const FormulaPtr& f : sample_formulas()) {
      for (int vp = 0; vp < B.size(); vp++)
        for (int vq = 0; vq < B.size(); vq++) {
          Valuation v{{"p", vp}, {"q", vq}};
          MtValuation mv;
          for (const auto& [name, val] : v) {
            mv[{name + "1", Sort::S1}] = back[reg(B, val)];
            mv[{name + "2", Sort::S2}] = back[reg(B, B.neg[val])];
          }
          int direct = eval(B, v, f);
          CHECK(eval_mt(H, mv, t1(f)) == back[reg(B, direct)]);
          CHECK(eval_mt(H, mv, t2(f)) == back[reg(B, B.neg[direct])]);
        }
    }
  }
}
