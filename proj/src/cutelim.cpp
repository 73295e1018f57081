#include "bilat/cutelim.hpp"

#include <algorithm>
#include <functional>

namespace bilat {

namespace {

ProofTreePtr node(const std::string& rule, StructurePtr lhs, StructurePtr rhs,
                  std::vector<ProofTreePtr> kids) {
  return make_proof(rule, make_sequent(std::move(lhs), std::move(rhs)), std::move(kids));
}

// The cut formula of a cut node: the shared Of leaf between the premises.
MTFormulaPtr cut_formula(const ProofTreePtr& cut) {
  const StructurePtr& mid = cut->premises[0]->conclusion.rhs;
  if (mid->kind != SKind::Of) return nullptr;
  return mid->formula;
}

ProofTreePtr reduce_at(const ProofTreePtr& cut, const std::string& locus) {
  if (cut->rule_id != "cut" || cut->premises.size() != 2) throw NotPrincipal(locus);
  MTFormulaPtr f = cut_formula(cut);
  if (!f) throw NotPrincipal(locus);
  const ProofTreePtr& left = cut->premises[0];
  const ProofTreePtr& right = cut->premises[1];
  StructurePtr X = cut->conclusion.lhs;
  StructurePtr Y = cut->conclusion.rhs;

  switch (f->kind) {
    case MKind::Atom:
      if (left->rule_id == "id") return right;
      if (right->rule_id == "id") return left;
      throw NotPrincipal(locus);

    case MKind::One:
      // left: the 1-axiom; right: 1-left over its structural premise
      if (left->rule_id != "one" || !left->premises.empty() || right->rule_id != "one" ||
          right->premises.empty())
        throw NotPrincipal(locus);
      return right->premises[0];

    case MKind::Zero:
      if (left->rule_id != "zero" || left->premises.empty() || right->rule_id != "zero" ||
          !right->premises.empty())
        throw NotPrincipal(locus);
      return left->premises[0];

    case MKind::Meet: {
      if (left->rule_id != "meet" || left->premises.size() != 2 ||
          right->rule_id != "meet" || right->premises.size() != 1)
        throw NotPrincipal(locus);
      ProofTreePtr pa = left->premises[0];   // X1 |- A
      ProofTreePtr pb = left->premises[1];   // X2 |- B
      ProofTreePtr pc = right->premises[0];  // A cap B |- Y
      if (pc->conclusion.lhs->kind != SKind::HatCap) throw NotPrincipal(locus);
      StructurePtr X1 = pa->conclusion.lhs;
      StructurePtr X2 = pb->conclusion.lhs;
      StructurePtr A = st_of(f->a), B = st_of(f->b);
      ProofTreePtr t = node("res", A, st_rsup(B, Y), {pc});
      t = node("cut", X1, st_rsup(B, Y), {pa, t});
      t = node("res", st_cap(X1, B), Y, {t});
      t = node("E", st_cap(B, X1), Y, {t});
      t = node("res", B, st_rsup(X1, Y), {t});
      t = node("cut", X2, st_rsup(X1, Y), {pb, t});
      t = node("res", st_cap(X2, X1), Y, {t});
      return node("E", st_cap(X1, X2), Y, {t});
    }

    case MKind::Join: {
      if (left->rule_id != "join" || left->premises.size() != 1 ||
          right->rule_id != "join" || right->premises.size() != 2)
        throw NotPrincipal(locus);
      ProofTreePtr pc = left->premises[0];   // X |- A cup B
      if (pc->conclusion.rhs->kind != SKind::CheckCup) throw NotPrincipal(locus);
      ProofTreePtr pa = right->premises[0];  // A |- Y1
      ProofTreePtr pb = right->premises[1];  // B |- Y2
      StructurePtr Y1 = pa->conclusion.rhs;
      StructurePtr Y2 = pb->conclusion.rhs;
      StructurePtr A = st_of(f->a), B = st_of(f->b);
      ProofTreePtr t = node("res", st_lsub(X, A), B, {pc});
      t = node("cut", st_lsub(X, A), Y2, {t, pb});
      t = node("res", X, st_cup(A, Y2), {t});
      t = node("E", X, st_cup(Y2, A), {t});
      t = node("res", st_lsub(X, Y2), A, {t});
      t = node("cut", st_lsub(X, Y2), Y1, {t, pa});
      t = node("res", X, st_cup(Y2, Y1), {t});
      return node("E", X, st_cup(Y1, Y2), {t});
    }

    case MKind::Sim: {
      if (left->rule_id != "sim" || right->rule_id != "sim" || left->premises.empty() ||
          right->premises.empty())
        throw NotPrincipal(locus);
      ProofTreePtr p1 = left->premises[0];   // X |- *A
      ProofTreePtr p2 = right->premises[0];  // *A |- Y
      if (p1->conclusion.rhs->kind != SKind::Star ||
          p2->conclusion.lhs->kind != SKind::Star)
        throw NotPrincipal(locus);
      StructurePtr A = st_of(f->a);
      ProofTreePtr t1 = node("adjstar", st_star(Y), A, {p2});
      ProofTreePtr t2 = node("adjstar", A, st_star(X), {p1});
      ProofTreePtr t = node("cut", st_star(Y), st_star(X), {t1, t2});
      return node("cont", X, Y, {t});
    }

    case MKind::N: {
      if (left->rule_id != "n" || right->rule_id != "n" || left->premises.empty() ||
          right->premises.empty())
        throw NotPrincipal(locus);
      ProofTreePtr p1 = left->premises[0];   // X2 |- N A1
      ProofTreePtr p2 = right->premises[0];  // N A1 |- Y2
      if (p1->conclusion.rhs->kind != SKind::SN || p2->conclusion.lhs->kind != SKind::SN)
        throw NotPrincipal(locus);
      StructurePtr A = st_of(f->a);
      ProofTreePtr t1 = node("adj", st_p(X), A, {p1});
      ProofTreePtr t2 = node("adj", A, st_p(Y), {p2});
      ProofTreePtr t = node("cut", st_p(X), st_p(Y), {t1, t2});
      return node("P", X, Y, {t});
    }

    case MKind::P: {
      if (left->rule_id != "p" || right->rule_id != "p" || left->premises.empty() ||
          right->premises.empty())
        throw NotPrincipal(locus);
      ProofTreePtr p1 = left->premises[0];   // X1 |- P A2
      ProofTreePtr p2 = right->premises[0];  // P A2 |- Y1
      if (p1->conclusion.rhs->kind != SKind::SP || p2->conclusion.lhs->kind != SKind::SP)
        throw NotPrincipal(locus);
      StructurePtr A = st_of(f->a);
      ProofTreePtr t1 = node("adj", st_n(X), A, {p1});
      ProofTreePtr t2 = node("adj", A, st_n(Y), {p2});
      ProofTreePtr t = node("cut", st_n(X), st_n(Y), {t1, t2});
      return node("N", X, Y, {t});
    }

    case MKind::ResSup:
    case MKind::ResSub: throw UnknownShape(locus);
  }
  throw UnknownShape(locus);
}

ProofTreePtr rebuild(const ProofTreePtr& tree, const std::string& locus,
                     const std::function<ProofTreePtr(const ProofTreePtr&)>& f) {
  if (locus.empty()) return f(tree);
  std::size_t dot = locus.find('.');
  int idx = std::stoi(locus.substr(0, dot));
  std::string rest = dot == std::string::npos ? "" : locus.substr(dot + 1);
  std::vector<ProofTreePtr> kids = tree->premises;
  kids.at(idx) = rebuild(kids.at(idx), rest, f);
  return make_proof(tree->rule_id, tree->conclusion, std::move(kids));
}

// Leftmost-innermost cut: post-order, premises first.
bool find_cut(const ProofTreePtr& tree, const std::string& path, std::string& out) {
  for (std::size_t i = 0; i < tree->premises.size(); i++) {
    std::string sub = path.empty() ? std::to_string(i) : path + "." + std::to_string(i);
    if (find_cut(tree->premises[i], sub, out)) return true;
  }
  if (tree->rule_id == "cut") {
    out = path;
    return true;
  }
  return false;
}

}  // namespace

ProofTreePtr reduce_principal(const ProofTreePtr& tree, const std::string& locus) {
  return rebuild(tree, locus,
                 [&](const ProofTreePtr& n) { return reduce_at(n, locus); });
}

std::vector<int> cut_ranks(const ProofTreePtr& tree) {
  std::vector<int> out;
  std::function<void(const ProofTreePtr&)> go = [&](const ProofTreePtr& t) {
    if (t->rule_id == "cut" && t->premises.size() == 2) {
      MTFormulaPtr f = cut_formula(t);
      out.push_back(f ? complexity(f) : 0);
    }
    for (const ProofTreePtr& p : t->premises) go(p);
  };
  go(tree);
  std::sort(out.rbegin(), out.rend());
  return out;
}

namespace {

template <typename Discharge>
ElimResult drive(const ProofTreePtr& tree, long fuel, Discharge&& discharge,
                 std::vector<std::vector<int>>* trace) {
  ElimResult out;
  out.tree = tree;
  if (trace) trace->push_back(cut_ranks(tree));
  std::string locus;
  while (find_cut(out.tree, "", locus)) {
    if (out.rewrites >= fuel) throw FuelExhausted();
    try {
      out.tree = reduce_principal(out.tree, locus);
    } catch (const std::runtime_error&) {
      ProofTreePtr sub;
      out.tree = rebuild(out.tree, locus, [&](const ProofTreePtr& n) {
        sub = discharge(n->conclusion);
        return sub ? sub : n;
      });
      if (!sub) {
        out.stuck = true;
        out.stuck_locus = locus;
        return out;
      }
    }
    out.rewrites++;
    if (trace) trace->push_back(cut_ranks(out.tree));
  }
  return out;
}

}  // namespace

ElimResult eliminate(const ProofTreePtr& tree, long fuel,
                     std::vector<std::vector<int>>* trace) {
  return drive(tree, fuel, [](const Sequent&) { return ProofTreePtr{}; }, trace);
}

ElimResult eliminate_with_search(const ProofTreePtr& tree, long fuel, DisplaySystem sys,
                                 SearchBudget budget,
                                 std::vector<std::vector<int>>* trace) {
  return drive(
      tree, fuel, [&](const Sequent& goal) { return prove(goal, sys, budget).tree; },
      trace);
}

}  // namespace bilat
