#include "bilat/display.hpp"

namespace bilat {

namespace {

PatPtr mk(Pat::Kind k, Sort s, std::string name = {}, PatPtr a = nullptr, PatPtr b = nullptr) {
  auto p = std::make_shared<Pat>();
  p->kind = k;
  p->sort = s;
  p->name = std::move(name);
  p->a = std::move(a);
  p->b = std::move(b);
  return p;
}

PatPtr sv(const std::string& n, Sort s) { return mk(Pat::SVar, s, n); }
PatPtr fv(const std::string& n, Sort s) { return mk(Pat::FVar, s, n); }
PatPtr av(const std::string& n, Sort s) { return mk(Pat::AVar, s, n); }
PatPtr fone(Sort s) { return mk(Pat::FOne, s); }
PatPtr fzero(Sort s) { return mk(Pat::FZero, s); }
PatPtr fmeet(PatPtr a, PatPtr b) {
  Sort s = a->sort;
  return mk(Pat::FMeet, s, {}, std::move(a), std::move(b));
}
PatPtr fjoin(PatPtr a, PatPtr b) {
  Sort s = a->sort;
  return mk(Pat::FJoin, s, {}, std::move(a), std::move(b));
}
PatPtr fp(PatPtr a) { return mk(Pat::FP, Sort::S1, {}, std::move(a)); }
PatPtr fn(PatPtr a) { return mk(Pat::FN, Sort::S2, {}, std::move(a)); }
PatPtr fsim(PatPtr a) {
  Sort s = a->sort;
  return mk(Pat::FSim, s, {}, std::move(a));
}
PatPtr sone(Sort s) { return mk(Pat::SOne, s); }
PatPtr szero(Sort s) { return mk(Pat::SZero, s); }
PatPtr cap(PatPtr a, PatPtr b) {
  Sort s = a->sort;
  return mk(Pat::SCap, s, {}, std::move(a), std::move(b));
}
PatPtr cup(PatPtr a, PatPtr b) {
  Sort s = a->sort;
  return mk(Pat::SCup, s, {}, std::move(a), std::move(b));
}
PatPtr rsup(PatPtr a, PatPtr b) {
  Sort s = a->sort;
  return mk(Pat::SRSup, s, {}, std::move(a), std::move(b));
}
PatPtr lsub(PatPtr a, PatPtr b) {
  Sort s = a->sort;
  return mk(Pat::SLSub, s, {}, std::move(a), std::move(b));
}
PatPtr sN(PatPtr a) { return mk(Pat::SSN, Sort::S2, {}, std::move(a)); }
PatPtr sP(PatPtr a) { return mk(Pat::SSP, Sort::S1, {}, std::move(a)); }
PatPtr sstar(PatPtr a) {
  Sort s = a->sort;
  return mk(Pat::SStar, s, {}, std::move(a));
}

SeqPat seq(PatPtr l, PatPtr r) {
  Sort s = l->sort;
  return {std::move(l), std::move(r), s};
}

std::string sfx(Sort s) { return s == Sort::S1 ? "-1" : "-2"; }

std::vector<RuleSpec> build_dbl() {
  std::vector<RuleSpec> t;
  auto add = [&](const std::string& name, const std::string& key, SeqPat concl,
                 std::vector<SeqPat> prems, bool convenience = false) {
    t.push_back({name, key, std::move(prems), std::move(concl), false, convenience});
  };

  for (Sort s : {Sort::S1, Sort::S2}) {
    auto X = [&] { return sv("X", s); };
    auto Y = [&] { return sv("Y", s); };
    auto Z = [&] { return sv("Z", s); };
    auto W = [&] { return sv("W", s); };
    auto A = [&] { return fv("A", s); };
    auto B = [&] { return fv("B", s); };

    // display rules: res
    add("res", "res-cap-fwd" + sfx(s), seq(X(), rsup(Y(), Z())), {seq(cap(X(), Y()), Z())});
    add("res", "res-cap-bwd" + sfx(s), seq(cap(X(), Y()), Z()), {seq(X(), rsup(Y(), Z()))});
    add("res", "res-cup-fwd" + sfx(s), seq(lsub(X(), Y()), Z()), {seq(X(), cup(Y(), Z()))});
    add("res", "res-cup-bwd" + sfx(s), seq(X(), cup(Y(), Z())), {seq(lsub(X(), Y()), Z())});

    // identity and cut
    add("id", "id" + sfx(s), seq(av("pv", s), av("pv", s)), {});
    add("cut", "cut" + sfx(s), seq(X(), Y()), {seq(X(), A()), seq(A(), Y())});

    // structural rules
    add("hatone", "hatone" + sfx(s), seq(X(), Y()), {seq(cap(X(), sone(s)), Y())});
    add("checkzero", "checkzero" + sfx(s), seq(X(), Y()), {seq(X(), cup(Y(), szero(s)))});
    add("E", "E-l" + sfx(s), seq(cap(Y(), X()), Z()), {seq(cap(X(), Y()), Z())});
    add("E", "E-r" + sfx(s), seq(X(), cup(Z(), Y())), {seq(X(), cup(Y(), Z()))});
    add("A", "A-l" + sfx(s), seq(cap(X(), cap(Y(), Z())), W()),
        {seq(cap(cap(X(), Y()), Z()), W())});
    add("A", "A-l-conv" + sfx(s), seq(cap(cap(X(), Y()), Z()), W()),
        {seq(cap(X(), cap(Y(), Z())), W())}, true);
    add("A", "A-r" + sfx(s), seq(X(), cup(Y(), cup(Z(), W()))),
        {seq(X(), cup(cup(Y(), Z()), W()))});
    add("A", "A-r-conv" + sfx(s), seq(X(), cup(cup(Y(), Z()), W())),
        {seq(X(), cup(Y(), cup(Z(), W())))}, true);
    add("W", "W-l" + sfx(s), seq(cap(X(), Y()), Z()), {seq(X(), Z())});
    add("W", "W-r" + sfx(s), seq(X(), cup(Y(), Z())), {seq(X(), Y())});
    add("C", "C-l" + sfx(s), seq(X(), Z()), {seq(cap(X(), X()), Z())});
    add("C", "C-r" + sfx(s), seq(X(), Y()), {seq(X(), cup(Y(), Y()))});

    // operational rules
    add("one", "one-ax" + sfx(s), seq(sone(s), fone(s)), {});
    add("one", "one-l" + sfx(s), seq(fone(s), X()), {seq(sone(s), X())});
    add("zero", "zero-ax" + sfx(s), seq(fzero(s), szero(s)), {});
    add("zero", "zero-r" + sfx(s), seq(X(), fzero(s)), {seq(X(), szero(s))});
    add("meet", "meet-l" + sfx(s), seq(fmeet(A(), B()), X()), {seq(cap(A(), B()), X())});
    add("meet", "meet-r" + sfx(s), seq(cap(X(), Y()), fmeet(A(), B())),
        {seq(X(), A()), seq(Y(), B())});
    add("join", "join-l" + sfx(s), seq(fjoin(A(), B()), cup(X(), Y())),
        {seq(A(), X()), seq(B(), Y())});
    add("join", "join-r" + sfx(s), seq(X(), fjoin(A(), B())), {seq(X(), cup(A(), B()))});
  }

  auto X1 = [] { return sv("X", Sort::S1); };
  auto Y1 = [] { return sv("Y", Sort::S1); };
  auto X2 = [] { return sv("X", Sort::S2); };
  auto Y2 = [] { return sv("Y", Sort::S2); };
  auto A1 = [] { return fv("A", Sort::S1); };
  auto A2 = [] { return fv("A", Sort::S2); };

  // multi-type display rules: adj
  add("adj", "adj-P-fwd", seq(X2(), sN(Y1())), {seq(sP(X2()), Y1())});
  add("adj", "adj-P-bwd", seq(sP(X2()), Y1()), {seq(X2(), sN(Y1()))});
  add("adj", "adj-N-fwd", seq(X1(), sP(Y2())), {seq(sN(X1()), Y2())});
  add("adj", "adj-N-bwd", seq(sN(X1()), Y2()), {seq(X1(), sP(Y2()))});

  // multi-type structural rules
  add("N", "N-fwd", seq(sN(X1()), sN(Y1())), {seq(X1(), Y1())});
  add("N", "N-bwd", seq(X1(), Y1()), {seq(sN(X1()), sN(Y1()))});
  add("P", "P-fwd", seq(sP(X2()), sP(Y2())), {seq(X2(), Y2())});
  add("P", "P-bwd", seq(X2(), Y2()), {seq(sP(X2()), sP(Y2()))});
  add("Pzero2", "Pzero2", seq(sP(szero(Sort::S2)), X1()), {seq(szero(Sort::S1), X1())});
  add("Pone2", "Pone2", seq(X1(), sP(sone(Sort::S2))), {seq(X1(), sone(Sort::S1))});

  // multi-type operational rules
  add("n", "n-l", seq(fn(A1()), X2()), {seq(sN(A1()), X2())});
  add("n", "n-r", seq(X2(), fn(A1())), {seq(X2(), sN(A1()))});
  add("p", "p-l", seq(fp(A2()), X1()), {seq(sP(A2()), X1())});
  add("p", "p-r", seq(X1(), fp(A2())), {seq(X1(), sP(A2()))});

  return t;
}

std::vector<RuleSpec> build_dcbl() {
  std::vector<RuleSpec> t = build_dbl();
  auto add = [&](const std::string& name, const std::string& key, SeqPat concl,
                 std::vector<SeqPat> prems) {
    t.push_back({name, key, std::move(prems), std::move(concl), true, false});
  };

  for (Sort s : {Sort::S1, Sort::S2}) {
    auto X = [&] { return sv("X", s); };
    auto Y = [&] { return sv("Y", s); };
    auto A = [&] { return fv("A", s); };

    add("adjstar", "adjstar-l-fwd" + sfx(s), seq(sstar(Y()), X()), {seq(sstar(X()), Y())});
    add("adjstar", "adjstar-l-bwd" + sfx(s), seq(sstar(X()), Y()), {seq(sstar(Y()), X())});
    add("adjstar", "adjstar-r-fwd" + sfx(s), seq(Y(), sstar(X())), {seq(X(), sstar(Y()))});
    add("adjstar", "adjstar-r-bwd" + sfx(s), seq(X(), sstar(Y())), {seq(Y(), sstar(X()))});
    add("cont", "cont-fwd" + sfx(s), seq(sstar(Y()), sstar(X())), {seq(X(), Y())});
    add("cont", "cont-bwd" + sfx(s), seq(X(), Y()), {seq(sstar(Y()), sstar(X()))});
    add("sim", "sim-l" + sfx(s), seq(fsim(A()), X()), {seq(sstar(A()), X())});
    add("sim", "sim-r" + sfx(s), seq(X(), fsim(A())), {seq(X(), sstar(A()))});
  }

  auto X1 = [] { return sv("X", Sort::S1); };
  auto Y1 = [] { return sv("Y", Sort::S1); };
  auto X2 = [] { return sv("X", Sort::S2); };
  auto Y2 = [] { return sv("Y", Sort::S2); };

  add("star2N", "star2N-l", seq(sstar(sN(X1())), Y2()), {seq(sN(sstar(X1())), Y2())});
  add("star2N", "star2N-r", seq(X2(), sstar(sN(Y1()))), {seq(X2(), sN(sstar(Y1())))});

  return t;
}

bool match_fpat(const PatPtr& pat, const MTFormulaPtr& f, Bindings& b) {
  if (f->sort != pat->sort) return false;
  switch (pat->kind) {
    case Pat::FVar: {
      auto it = b.f.find(pat->name);
      if (it != b.f.end()) return equal(it->second, f);
      b.f[pat->name] = f;
      return true;
    }
    case Pat::AVar: {
      if (f->kind != MKind::Atom) return false;
      auto it = b.f.find(pat->name);
      if (it != b.f.end()) return equal(it->second, f);
      b.f[pat->name] = f;
      return true;
    }
    case Pat::FOne: return f->kind == MKind::One;
    case Pat::FZero: return f->kind == MKind::Zero;
    case Pat::FMeet:
      return f->kind == MKind::Meet && match_fpat(pat->a, f->a, b) &&
             match_fpat(pat->b, f->b, b);
    case Pat::FJoin:
      return f->kind == MKind::Join && match_fpat(pat->a, f->a, b) &&
             match_fpat(pat->b, f->b, b);
    case Pat::FP: return f->kind == MKind::P && match_fpat(pat->a, f->a, b);
    case Pat::FN: return f->kind == MKind::N && match_fpat(pat->a, f->a, b);
    case Pat::FSim: return f->kind == MKind::Sim && match_fpat(pat->a, f->a, b);
    default: return false;
  }
}

MTFormulaPtr instantiate_fpat(const PatPtr& pat, const Bindings& b) {
  switch (pat->kind) {
    case Pat::FVar:
    case Pat::AVar: return b.f.at(pat->name);
    case Pat::FOne: return mt_one(pat->sort);
    case Pat::FZero: return mt_zero(pat->sort);
    case Pat::FMeet: return mt_meet(instantiate_fpat(pat->a, b), instantiate_fpat(pat->b, b));
    case Pat::FJoin: return mt_join(instantiate_fpat(pat->a, b), instantiate_fpat(pat->b, b));
    case Pat::FP: return mt_p(instantiate_fpat(pat->a, b));
    case Pat::FN: return mt_n(instantiate_fpat(pat->a, b));
    case Pat::FSim: return mt_sim(instantiate_fpat(pat->a, b));
    default: throw std::logic_error("not a formula pattern");
  }
}

void collect_vars(const PatPtr& pat, std::set<std::string>& svars,
                  std::set<std::string>& fvars) {
  if (!pat) return;
  if (pat->kind == Pat::SVar)
    svars.insert(pat->name);
  else if (pat->kind == Pat::FVar || pat->kind == Pat::AVar)
    fvars.insert(pat->name);
  collect_vars(pat->a, svars, fvars);
  collect_vars(pat->b, svars, fvars);
}

}  // namespace

const std::vector<RuleSpec>& rule_table(DisplaySystem sys) {
  static const std::vector<RuleSpec> dbl = build_dbl();
  static const std::vector<RuleSpec> dcbl = build_dcbl();
  return sys == DisplaySystem::DBL ? dbl : dcbl;
}

bool match_pat(const PatPtr& pat, const StructurePtr& st, Bindings& b) {
  if (st->sort != pat->sort) return false;
  switch (pat->kind) {
    case Pat::SVar: {
      auto it = b.s.find(pat->name);
      if (it != b.s.end()) return equal(it->second, st);
      b.s[pat->name] = st;
      return true;
    }
    case Pat::SOne: return st->kind == SKind::HatOne;
    case Pat::SZero: return st->kind == SKind::CheckZero;
    case Pat::SCap:
      return st->kind == SKind::HatCap && match_pat(pat->a, st->a, b) &&
             match_pat(pat->b, st->b, b);
    case Pat::SCup:
      return st->kind == SKind::CheckCup && match_pat(pat->a, st->a, b) &&
             match_pat(pat->b, st->b, b);
    case Pat::SRSup:
      return st->kind == SKind::CheckRSup && match_pat(pat->a, st->a, b) &&
             match_pat(pat->b, st->b, b);
    case Pat::SLSub:
      return st->kind == SKind::HatLSub && match_pat(pat->a, st->a, b) &&
             match_pat(pat->b, st->b, b);
    case Pat::SSN: return st->kind == SKind::SN && match_pat(pat->a, st->a, b);
    case Pat::SSP: return st->kind == SKind::SP && match_pat(pat->a, st->a, b);
    case Pat::SStar: return st->kind == SKind::Star && match_pat(pat->a, st->a, b);
    default:
      // formula-level pattern: the structure must be an Of leaf
      return st->kind == SKind::Of && match_fpat(pat, st->formula, b);
  }
}

StructurePtr instantiate(const PatPtr& pat, const Bindings& b) {
  switch (pat->kind) {
    case Pat::SVar: return b.s.at(pat->name);
    case Pat::SOne: return st_one(pat->sort);
    case Pat::SZero: return st_zero(pat->sort);
    case Pat::SCap: return st_cap(instantiate(pat->a, b), instantiate(pat->b, b));
    case Pat::SCup: return st_cup(instantiate(pat->a, b), instantiate(pat->b, b));
    case Pat::SRSup: return st_rsup(instantiate(pat->a, b), instantiate(pat->b, b));
    case Pat::SLSub: return st_lsub(instantiate(pat->a, b), instantiate(pat->b, b));
    case Pat::SSN: return st_n(instantiate(pat->a, b));
    case Pat::SSP: return st_p(instantiate(pat->a, b));
    case Pat::SStar: return st_star(instantiate(pat->a, b));
    default: return st_of(instantiate_fpat(pat, b));
  }
}

namespace {

DisplayVerdict check_node(const ProofTreePtr& node, DisplaySystem sys,
                          const std::string& path) {
  const std::vector<RuleSpec>& table = rule_table(sys);
  std::vector<const RuleSpec*> candidates;
  for (const RuleSpec& r : table)
    if (r.name == node->rule_id) candidates.push_back(&r);
  if (candidates.empty()) {
    for (const RuleSpec& r : rule_table(DisplaySystem::DCBL))
      if (r.name == node->rule_id)
        return {false, path, node->rule_id,
                "SystemViolation: rule '" + node->rule_id + "' belongs to D.CBL"};
    return {false, path, node->rule_id, "UnknownRule: '" + node->rule_id + "'"};
  }
  bool any_shape = false;
  for (const RuleSpec* r : candidates) {
    if (r->premises.size() != node->premises.size()) continue;
    if (r->conclusion.sort != node->conclusion.sort) continue;
    Bindings b;
    if (!match_pat(r->conclusion.lhs, node->conclusion.lhs, b)) continue;
    if (!match_pat(r->conclusion.rhs, node->conclusion.rhs, b)) continue;
    bool prems_ok = true;
    for (std::size_t i = 0; i < r->premises.size() && prems_ok; i++) {
      const Sequent& got = node->premises[i]->conclusion;
      prems_ok = got.sort == r->premises[i].sort &&
                 match_pat(r->premises[i].lhs, got.lhs, b) &&
                 match_pat(r->premises[i].rhs, got.rhs, b);
    }
    if (!prems_ok) {
      any_shape = true;
      continue;
    }
    for (std::size_t i = 0; i < node->premises.size(); i++) {
      DisplayVerdict sub = check_node(node->premises[i], sys,
                                      path.empty() ? std::to_string(i)
                                                   : path + "." + std::to_string(i));
      if (!sub.accepted) return sub;
    }
    return {true, "", "", ""};
  }
  std::string why = any_shape ? "premises do not fit any '" + node->rule_id + "' entry"
                              : "conclusion does not instantiate any '" + node->rule_id +
                                    "' entry";
  return {false, path, node->rule_id, "PatternMismatch: " + why + " at " +
                                          pretty_print(node->conclusion)};
}

}  // namespace

DisplayVerdict check_proof(const ProofTreePtr& tree, DisplaySystem sys) {
  return check_node(tree, sys, "");
}

std::vector<std::vector<Sequent>> apply_backward(const std::string& rule,
                                                 const Sequent& goal, DisplaySystem sys) {
  std::vector<std::vector<Sequent>> out;
  for (const RuleSpec& r : rule_table(sys)) {
    if (r.name != rule) continue;
    if (r.conclusion.sort != goal.sort) continue;
    Bindings b;
    if (!match_pat(r.conclusion.lhs, goal.lhs, b)) continue;
    if (!match_pat(r.conclusion.rhs, goal.rhs, b)) continue;
    std::set<std::string> svars, fvars, csvars, cfvars;
    for (const SeqPat& p : r.premises) {
      collect_vars(p.lhs, svars, fvars);
      collect_vars(p.rhs, svars, fvars);
    }
    collect_vars(r.conclusion.lhs, csvars, cfvars);
    collect_vars(r.conclusion.rhs, csvars, cfvars);
    bool determined = true;
    for (const std::string& v : svars) determined = determined && csvars.count(v);
    for (const std::string& v : fvars) determined = determined && cfvars.count(v);
    if (!determined) continue;
    std::vector<Sequent> prems;
    for (const SeqPat& p : r.premises)
      prems.push_back(make_sequent(instantiate(p.lhs, b), instantiate(p.rhs, b)));
    out.push_back(std::move(prems));
  }
  return out;
}

bool uses_cut(const ProofTreePtr& tree) {
  if (tree->rule_id == "cut") return true;
  for (const auto& p : tree->premises)
    if (uses_cut(p)) return true;
  return false;
}

}  // namespace bilat
