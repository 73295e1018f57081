#include "bilat/oracle.hpp"

#include <cctype>
#include <functional>

namespace bilat {

namespace {

MTFormulaPtr var_term(const std::string& name, Sort sort) {
  std::string nm;
  for (char c : name) nm += static_cast<char>(std::tolower(c));
  nm += sort == Sort::S1 ? "1" : "2";
  return mt_atom(nm, sort);
}

MTFormulaPtr pat_to_term(const PatPtr& p) {
  switch (p->kind) {
    case Pat::SVar:
    case Pat::FVar:
    case Pat::AVar: return var_term(p->name, p->sort);
    case Pat::FOne:
    case Pat::SOne: return mt_one(p->sort);
    case Pat::FZero:
    case Pat::SZero: return mt_zero(p->sort);
    case Pat::FMeet:
    case Pat::SCap: return mt_meet(pat_to_term(p->a), pat_to_term(p->b));
    case Pat::FJoin:
    case Pat::SCup: return mt_join(pat_to_term(p->a), pat_to_term(p->b));
    case Pat::SRSup: return mt_rsup(pat_to_term(p->a), pat_to_term(p->b));
    case Pat::SLSub: return mt_rsub(pat_to_term(p->a), pat_to_term(p->b));
    case Pat::FP:
    case Pat::SSP: return mt_p(pat_to_term(p->a));
    case Pat::FN:
    case Pat::SSN: return mt_n(pat_to_term(p->a));
    case Pat::FSim:
    case Pat::SStar: return mt_sim(pat_to_term(p->a));
  }
  throw std::logic_error("unreachable pattern kind");
}

bool holds(const FiniteHBL& H, const MtValuation& v, const Inequality& q) {
  int a = eval_mt(H, v, q.lhs);
  int b = eval_mt(H, v, q.rhs);
  return q.sort == Sort::S1 ? H.L1.leq[a][b] : H.L2.leq[a][b];
}

std::string describe(const MtValuation& v, const FiniteHBL& H) {
  std::string out;
  for (const auto& [key, val] : v) {
    const FiniteLattice& L = key.second == Sort::S1 ? H.L1 : H.L2;
    if (!out.empty()) out += ", ";
    out += key.first + "=" + L.names[val];
  }
  return out;
}

// Enumerates all assignments of the atoms occurring in the given terms.
template <typename Fn>
bool sweep(const FiniteHBL& H, const std::vector<MTFormulaPtr>& terms, Fn&& body) {
  std::set<std::pair<std::string, Sort>> atoms;
  for (const MTFormulaPtr& t : terms) collect_atoms(t, atoms);
  std::vector<std::pair<std::string, Sort>> vars(atoms.begin(), atoms.end());
  MtValuation v;
  std::function<bool(std::size_t)> go = [&](std::size_t i) {
    if (i == vars.size()) return body(v);
    int n = vars[i].second == Sort::S1 ? H.L1.size() : H.L2.size();
    for (int x = 0; x < n; x++) {
      v[vars[i]] = x;
      if (!go(i + 1)) return false;
    }
    return true;
  };
  return go(0);
}

bool mentions_sim(const MTFormulaPtr& t) { return uses_sim(t); }

}  // namespace

MTFormulaPtr structure_to_term(const StructurePtr& s, Position pos) {
  switch (s->kind) {
    case SKind::Of: return s->formula;
    case SKind::HatOne: return mt_one(s->sort);
    case SKind::CheckZero: return mt_zero(s->sort);
    case SKind::HatCap:
      return mt_meet(structure_to_term(s->a, pos), structure_to_term(s->b, pos));
    case SKind::CheckCup:
      return mt_join(structure_to_term(s->a, pos), structure_to_term(s->b, pos));
    case SKind::CheckRSup:
      return mt_rsup(structure_to_term(s->a, pos), structure_to_term(s->b, pos));
    case SKind::HatLSub:
      return mt_rsub(structure_to_term(s->a, pos), structure_to_term(s->b, pos));
    case SKind::SN: return mt_n(structure_to_term(s->a, pos));
    case SKind::SP: return mt_p(structure_to_term(s->a, pos));
    case SKind::Star: return mt_sim(structure_to_term(s->a, pos));
  }
  throw std::logic_error("unreachable structure kind");
}

QuasiInequality rule_to_qi(const RuleSpec& rule) {
  QuasiInequality qi;
  qi.rule_key = rule.key;
  for (const SeqPat& p : rule.premises)
    qi.premises.push_back({pat_to_term(p.lhs), pat_to_term(p.rhs), p.sort});
  qi.conclusion = {pat_to_term(rule.conclusion.lhs), pat_to_term(rule.conclusion.rhs),
                   rule.conclusion.sort};
  return qi;
}

OracleVerdict check_rule_soundness(const RuleSpec& rule, const FiniteHBL& H) {
  QuasiInequality qi = rule_to_qi(rule);
  std::vector<MTFormulaPtr> terms{qi.conclusion.lhs, qi.conclusion.rhs};
  for (const Inequality& q : qi.premises) {
    terms.push_back(q.lhs);
    terms.push_back(q.rhs);
  }
  for (const MTFormulaPtr& t : terms)
    if (mentions_sim(t) && !H.sim1) return {true, "skipped: no sim tables in " + H.name, {}};

  OracleVerdict out;
  sweep(H, terms, [&](const MtValuation& v) {
    for (const Inequality& q : qi.premises)
      if (!holds(H, v, q)) return true;
    if (holds(H, v, qi.conclusion)) return true;
    out.ok = false;
    out.countermodel = v;
    out.detail = qi.rule_key + " fails on " + H.name + " at " + describe(v, H);
    return false;
  });
  return out;
}

OracleVerdict mt_valid(const Sequent& s, const std::vector<FiniteHBL>& catalog) {
  MTFormulaPtr lhs = structure_to_term(s.lhs, Position::Precedent);
  MTFormulaPtr rhs = structure_to_term(s.rhs, Position::Succedent);
  bool needs_sim = mentions_sim(lhs) || mentions_sim(rhs);
  Inequality q{lhs, rhs, s.sort};

  OracleVerdict out;
  for (const FiniteHBL& H : catalog) {
    if (needs_sim && !H.sim1) continue;
    sweep(H, {lhs, rhs}, [&](const MtValuation& v) {
      if (holds(H, v, q)) return true;
      out.ok = false;
      out.countermodel = v;
      out.detail = "refuted on " + H.name + " at " + describe(v, H);
      return false;
    });
    if (!out.ok) break;
  }
  return out;
}

std::vector<ConservativityRow> conservativity_report(
    const std::vector<std::pair<FormulaPtr, FormulaPtr>>& corpus,
    const std::set<std::string>& hilbert_known, HilbertSystem sys, SearchBudget budget) {
  std::vector<FiniteBilattice> algebras = catalog_bilattices();
  std::vector<FiniteHBL> hbls = catalog_hbls();
  DisplaySystem dsys = sys == HilbertSystem::BL ? DisplaySystem::DBL : DisplaySystem::DCBL;

  std::vector<ConservativityRow> rows;
  for (const auto& [A, B] : corpus) {
    ConservativityRow row;
    row.sequent = print_formula_sequent(A, B);
    row.hilbert = hilbert_known.count(row.sequent) > 0;

    row.single_valid = true;
    for (const FiniteBilattice& alg : algebras)
      row.single_valid = row.single_valid && consequence(alg, A, B).valid;

    Sequent t = translate_sequent(A, B, sys);
    row.multi_valid = mt_valid(t, hbls).ok;
    row.display_proved = !prove(t, dsys, budget).exhausted();

    row.violation = (row.hilbert && !row.single_valid) ||
                    (row.display_proved && !(row.multi_valid && row.single_valid)) ||
                    (row.multi_valid != row.single_valid);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace bilat
