#include "bilat/translate.hpp"

namespace bilat {

namespace {

MTFormulaPtr trans(const FormulaPtr& f, Sort target, HilbertSystem sys) {
  bool one = target == Sort::S1;
  switch (f->kind) {
    case FKind::Atom: return mt_atom(f->name + (one ? "1" : "2"), target);
    case FKind::TruthConst:
      switch (f->tc) {
        case TruthConst::T: return one ? mt_one(Sort::S1) : mt_zero(Sort::S2);
        case TruthConst::F: return one ? mt_zero(Sort::S1) : mt_one(Sort::S2);
        case TruthConst::Top: return mt_one(target);
        case TruthConst::Bot: return mt_zero(target);
      }
      break;
    case FKind::Neg:
      return one ? mt_p(trans(f->a, Sort::S2, sys)) : mt_n(trans(f->a, Sort::S1, sys));
    case FKind::Confl:
      if (sys == HilbertSystem::BL) throw ConflInBLMode();
      return one ? mt_p(mt_sim(trans(f->a, Sort::S2, sys)))
                 : mt_n(mt_sim(trans(f->a, Sort::S1, sys)));
    case FKind::Bin: {
      MTFormulaPtr a = trans(f->a, target, sys);
      MTFormulaPtr b = trans(f->b, target, sys);
      switch (f->op) {
        case BinOp::And: return one ? mt_meet(a, b) : mt_join(a, b);
        case BinOp::Or: return one ? mt_join(a, b) : mt_meet(a, b);
        case BinOp::Tens: return mt_meet(a, b);
        case BinOp::Plus: return mt_join(a, b);
      }
      break;
    }
  }
  throw std::logic_error("unreachable translation case");
}

}  // namespace

MTFormulaPtr t1(const FormulaPtr& f, HilbertSystem sys) { return trans(f, Sort::S1, sys); }
MTFormulaPtr t2(const FormulaPtr& f, HilbertSystem sys) { return trans(f, Sort::S2, sys); }

Sequent translate_sequent(const FormulaPtr& lhs, const FormulaPtr& rhs, HilbertSystem sys) {
  return make_sequent(st_of(t1(lhs, sys)), st_of(t1(rhs, sys)));
}

}  // namespace bilat
