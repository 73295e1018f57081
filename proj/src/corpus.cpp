#include "bilat/corpus.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <set>
#include <ostream>
#include <sstream>

namespace bilat::corpus {

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

using Clock = std::chrono::steady_clock;

template <typename Body>
CriterionResult timed(int number, const std::string& title, Body&& body) {
  CriterionResult r;
  r.number = number;
  r.title = title;
  Clock::time_point start = Clock::now();
  try {
    r.detail = body();
    r.passed = r.detail.empty();
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = e.what();
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

const FiniteBilattice& four() {
  static const std::vector<FiniteBilattice> cat = catalog_bilattices();
  return cat[0];
}

std::string reconstruction_facts() {
  const FiniteBilattice& B = four();
  const std::vector<int>& c = *B.confl;
  struct Fact {
    const char* name;
    int got, want;
  };
  const Fact facts[] = {
      {"neg t = f", B.neg[B.t], B.f},
      {"neg top = top", B.neg[B.top], B.top},
      {"confl top = bot", c[B.top], B.bot},
      {"confl t = t", c[B.t], B.t},
      {"t tens f = bot", B.tens[B.t][B.f], B.bot},
      {"t plus f = top", B.plus[B.t][B.f], B.top},
      {"top and bot = f", B.and_[B.top][B.bot], B.f},
      {"top or bot = t", B.or_[B.top][B.bot], B.t},
  };
  for (const Fact& f : facts)
    if (f.got != f.want)
      return std::string(f.name) + ": got " + B.names[f.got] + ", want " + B.names[f.want];
  return "";
}

std::string validator_sweep() {
  for (const FiniteBilattice& B : catalog_bilattices())
    if (auto bad = validate_bilattice(B)) return B.name + ": " + *bad;
  for (const FiniteDeMorgan& D : catalog_de_morgans())
    if (auto bad = validate_de_morgan(D)) return D.name + ": " + *bad;
  for (const FiniteHBL& H : catalog_hbls())
    if (auto bad = validate_hbl(H)) return H.name + ": " + *bad;
  return "";
}

std::string decomposition_roundtrips() {
  for (const FiniteBilattice& B : catalog_bilattices()) {
    Verdict v = roundtrip_checks(B);
    if (!v.ok) return B.name + ": " + v.detail;
  }
  for (const FiniteHBL& H : catalog_hbls()) {
    Verdict v = roundtrip_checks(H);
    if (!v.ok) return H.name + ": " + v.detail;
  }
  return "";
}

std::string rule_soundness() {
  for (DisplaySystem sys : {DisplaySystem::DBL, DisplaySystem::DCBL})
    for (const RuleSpec& r : rule_table(sys))
      for (const FiniteHBL& H : catalog_hbls()) {
        OracleVerdict v = check_rule_soundness(r, H);
        if (!v.ok) return v.detail;
      }
  return "";
}

std::string paper_corpus(const std::string& corpus_dir) {
  for (const auto& [name, sys] : paper_manifest()) {
    std::string path = corpus_dir + "/paper/" + name + ".mts";
    ProofTreePtr tree = parse_mt_proof(slurp(path));
    DisplayVerdict v = check_proof(tree, sys);
    if (!v.accepted)
      return name + ": rejected at '" + v.locus + "' (" + v.rule_id + "): " + v.diagnostic;
    if (uses_cut(tree)) return name + ": transcription uses cut";
  }
  return "";
}

// All formulas with exactly c connectives over the given leaves.
std::vector<std::vector<FormulaPtr>> formulas_by_complexity(
    const std::vector<FormulaPtr>& leaves, int max_c) {
  std::vector<std::vector<FormulaPtr>> by_c(max_c + 1);
  by_c[0] = leaves;
  for (int c = 1; c <= max_c; c++) {
    for (const FormulaPtr& f : by_c[c - 1]) {
      by_c[c].push_back(neg(f));
      by_c[c].push_back(confl(f));
    }
    for (int cl = 0; cl + 1 <= c; cl++)
      for (const FormulaPtr& l : by_c[cl])
        for (const FormulaPtr& r : by_c[c - 1 - cl])
          for (BinOp op : {BinOp::And, BinOp::Or, BinOp::Tens, BinOp::Plus})
            by_c[c].push_back(bin(op, l, r));
  }
  return by_c;
}

std::vector<FormulaPtr> commutation_formulas() {
  std::vector<FormulaPtr> wide = {atom("p"),           atom("q"),
                                  truth(TruthConst::T), truth(TruthConst::F),
                                  truth(TruthConst::Top), truth(TruthConst::Bot)};
  std::vector<FormulaPtr> narrow = {atom("p"), atom("q")};
  std::vector<FormulaPtr> out;
  for (const auto& layer : formulas_by_complexity(wide, 2))
    out.insert(out.end(), layer.begin(), layer.end());
  std::vector<FormulaPtr> deep3 = formulas_by_complexity(narrow, 3)[3];
  out.insert(out.end(), deep3.begin(), deep3.end());
  return out;
}

std::string translation_commutation() {
  std::vector<FormulaPtr> fs = commutation_formulas();
  for (const FiniteBilattice& B : catalog_bilattices()) {
    FiniteHBL H = b_plus(B);
    std::vector<int> regs = regular_elements(B);
    std::vector<int> back(B.size(), -1);
    for (int i = 0; i < static_cast<int>(regs.size()); i++) back[regs[i]] = i;

    std::vector<std::pair<MTFormulaPtr, MTFormulaPtr>> trans;
    trans.reserve(fs.size());
    for (const FormulaPtr& f : fs) trans.emplace_back(t1(f), t2(f));

    for (int vp = 0; vp < B.size(); vp++)
      for (int vq = 0; vq < B.size(); vq++) {
        Valuation v{{"p", vp}, {"q", vq}};
        MtValuation mv;
        for (const auto& [name, val] : v) {
          mv[{name + "1", Sort::S1}] = back[reg(B, val)];
          mv[{name + "2", Sort::S2}] = back[reg(B, B.neg[val])];
        }
        for (std::size_t i = 0; i < fs.size(); i++) {
          int direct = eval(B, v, fs[i]);
          if (eval_mt(H, mv, trans[i].first) != back[reg(B, direct)])
            return "t1 mismatch on " + B.name + " for " + pretty_print(fs[i]);
          if (eval_mt(H, mv, trans[i].second) != back[reg(B, B.neg[direct])])
            return "t2 mismatch on " + B.name + " for " + pretty_print(fs[i]);
        }
      }
  }
  return "";
}

std::vector<FormulaPtr> sequent_seed_formulas() {
  FormulaPtr p = atom("p"), q = atom("q");
  return {p,
          q,
          truth(TruthConst::T),
          truth(TruthConst::F),
          neg(p),
          confl(p),
          land(p, q),
          lor(p, q),
          tens(p, q),
          plus(p, q),
          neg(land(p, q)),
          confl(neg(p))};
}

std::vector<std::pair<FormulaPtr, FormulaPtr>> generated_sequents(std::size_t count) {
  std::vector<FormulaPtr> fs = sequent_seed_formulas();
  std::vector<std::pair<FormulaPtr, FormulaPtr>> out;
  for (const FormulaPtr& a : fs)
    for (const FormulaPtr& b : fs) {
      if (out.size() == count) return out;
      out.emplace_back(a, b);
    }
  return out;
}

std::string search_soundness() {
  std::vector<FiniteHBL> hbls = catalog_hbls();
  int proved = 0;
  for (const auto& [a, b] : generated_sequents(60)) {
    Sequent goal = translate_sequent(a, b);
    SearchResult r = prove(goal, DisplaySystem::DCBL, {12, 300000});
    if (r.exhausted()) continue;
    proved++;
    std::string name = print_formula_sequent(a, b);
    if (uses_cut(r.tree)) return name + ": search returned a tree with cut";
    if (!check_proof(r.tree, DisplaySystem::DCBL).accepted)
      return name + ": search tree rejected by the checker";
    if (!equal(r.tree->conclusion, goal)) return name + ": wrong end-sequent";
    OracleVerdict v = mt_valid(goal, hbls);
    if (!v.ok) return name + ": proved but " + v.detail;
  }
  if (proved == 0) return "search proved nothing on the generated corpus";
  return "";
}

ProofTreePtr cut_of(const ProofTreePtr& l, const ProofTreePtr& r) {
  return make_proof("cut", make_sequent(l->conclusion.lhs, r->conclusion.rhs), {l, r});
}

struct CutCase {
  std::string name;
  ProofTreePtr tree;
  DisplaySystem sys;
};

ProofTreePtr sub(const ProofTreePtr& t, std::initializer_list<int> path) {
  ProofTreePtr cur = t;
  for (int i : path) cur = cur->premises.at(i);
  return cur;
}

std::vector<CutCase> cut_cases(const std::string& corpus_dir) {
  auto P = [](const char* s) { return parse_mt_proof(s); };
  auto load = [&](const char* n) {
    return parse_mt_proof(slurp(corpus_dir + "/paper/" + std::string(n) + ".mts"));
  };
  std::vector<CutCase> cs;
  auto add = [&](const std::string& n, ProofTreePtr l, ProofTreePtr r, DisplaySystem sys) {
    cs.push_back({n, cut_of(std::move(l), std::move(r)), sys});
  };

  add("atom-1", P("(by W (seq (Scap1 p1 q1) p1) (by id (seq p1 p1)))"),
      P("(by id (seq p1 p1))"), DisplaySystem::DBL);
  add("atom-2", P("(by W (seq (Scap2 p2 q2) p2) (by id (seq p2 p2)))"),
      P("(by id (seq p2 p2))"), DisplaySystem::DBL);

  add("one-1", P("(by one (seq Sone1 one1))"),
      P("(by one (seq one1 one1) (by one (seq Sone1 one1)))"), DisplaySystem::DBL);
  add("one-2", P("(by one (seq Sone2 one2))"),
      P("(by one (seq one2 one2) (by one (seq Sone2 one2)))"), DisplaySystem::DBL);
  add("zero-1", P("(by zero (seq zero1 zero1) (by zero (seq zero1 Szero1)))"),
      P("(by zero (seq zero1 Szero1))"), DisplaySystem::DBL);
  add("zero-2", P("(by zero (seq zero2 zero2) (by zero (seq zero2 Szero2)))"),
      P("(by zero (seq zero2 Szero2))"), DisplaySystem::DBL);

  const char* meet_l1 =
      "(by meet (seq (Scap1 a1 b1) (meet1 a1 b1))"
      " (by id (seq a1 a1)) (by id (seq b1 b1)))";
  const char* meet_r1 =
      "(by meet (seq (meet1 a1 b1) a1)"
      " (by W (seq (Scap1 a1 b1) a1) (by id (seq a1 a1))))";
  add("meet-1", P(meet_l1), P(meet_r1), DisplaySystem::DBL);
  const char* meet_l2 =
      "(by meet (seq (Scap2 a2 b2) (meet2 a2 b2))"
      " (by id (seq a2 a2)) (by id (seq b2 b2)))";
  const char* meet_r2 =
      "(by meet (seq (meet2 a2 b2) a2)"
      " (by W (seq (Scap2 a2 b2) a2) (by id (seq a2 a2))))";
  add("meet-2", P(meet_l2), P(meet_r2), DisplaySystem::DBL);

  const char* join_l1 =
      "(by join (seq a1 (join1 a1 b1))"
      " (by W (seq a1 (Scup1 a1 b1)) (by id (seq a1 a1))))";
  const char* join_r1 =
      "(by join (seq (join1 a1 b1) (Scup1 a1 b1))"
      " (by id (seq a1 a1)) (by id (seq b1 b1)))";
  add("join-1", P(join_l1), P(join_r1), DisplaySystem::DBL);
  const char* join_l2 =
      "(by join (seq a2 (join2 a2 b2))"
      " (by W (seq a2 (Scup2 a2 b2)) (by id (seq a2 a2))))";
  const char* join_r2 =
      "(by join (seq (join2 a2 b2) (Scup2 a2 b2))"
      " (by id (seq a2 a2)) (by id (seq b2 b2)))";
  add("join-2", P(join_l2), P(join_r2), DisplaySystem::DBL);

  const char* sim_l1 =
      "(by sim (seq (sim1 a1) (sim1 a1))"
      " (by sim (seq (sim1 a1) (Sstar1 a1))"
      "  (by cont (seq (Sstar1 a1) (Sstar1 a1)) (by id (seq a1 a1)))))";
  const char* sim_r1 =
      "(by sim (seq (sim1 a1) (sim1 a1))"
      " (by sim (seq (Sstar1 a1) (sim1 a1))"
      "  (by cont (seq (Sstar1 a1) (Sstar1 a1)) (by id (seq a1 a1)))))";
  add("sim-1", P(sim_l1), P(sim_r1), DisplaySystem::DCBL);
  const char* sim_l2 =
      "(by sim (seq (sim2 a2) (sim2 a2))"
      " (by sim (seq (sim2 a2) (Sstar2 a2))"
      "  (by cont (seq (Sstar2 a2) (Sstar2 a2)) (by id (seq a2 a2)))))";
  const char* sim_r2 =
      "(by sim (seq (sim2 a2) (sim2 a2))"
      " (by sim (seq (Sstar2 a2) (sim2 a2))"
      "  (by cont (seq (Sstar2 a2) (Sstar2 a2)) (by id (seq a2 a2)))))";
  add("sim-2", P(sim_l2), P(sim_r2), DisplaySystem::DCBL);

  const char* n_l =
      "(by n (seq (n a1) (n a1))"
      " (by n (seq (n a1) (SN a1))"
      "  (by N (seq (SN a1) (SN a1)) (by id (seq a1 a1)))))";
  const char* n_r =
      "(by n (seq (n a1) (n a1))"
      " (by n (seq (SN a1) (n a1))"
      "  (by N (seq (SN a1) (SN a1)) (by id (seq a1 a1)))))";
  add("n", P(n_l), P(n_r), DisplaySystem::DBL);
  const char* p_l =
      "(by p (seq (p a2) (p a2))"
      " (by p (seq (p a2) (SP a2))"
      "  (by P (seq (SP a2) (SP a2)) (by id (seq a2 a2)))))";
  const char* p_r =
      "(by p (seq (p a2) (p a2))"
      " (by p (seq (SP a2) (p a2))"
      "  (by P (seq (SP a2) (SP a2)) (by id (seq a2 a2)))))";
  add("p", P(p_l), P(p_r), DisplaySystem::DBL);

  // Spliced from the transcribed identity-expansion trees.
  ProofTreePtr dneg = load("dneg"), dneg_conv = load("dneg_conv");
  add("p-spliced", dneg_conv, dneg, DisplaySystem::DBL);
  ProofTreePtr dconfl = load("dconfl"), dconfl_conv = load("dconfl_conv");
  add("p-deep-spliced", dconfl_conv, dconfl, DisplaySystem::DCBL);
  ProofTreePtr neg_r = load("p1_neg_r");
  add("n-spliced", sub(neg_r, {0}), neg_r, DisplaySystem::DBL);
  ProofTreePtr confl_l = load("p1_confl_l");
  add("sim-spliced", sub(confl_l, {0, 0, 0, 0}), sub(confl_l, {0, 0, 0}),
      DisplaySystem::DCBL);
  ProofTreePtr meet_tree = load("p1_meet");
  add("meet-spliced", sub(meet_tree, {0, 0}), meet_tree, DisplaySystem::DBL);
  ProofTreePtr join_tree = load("p1_join");
  add("join-spliced", join_tree, sub(join_tree, {0, 0}), DisplaySystem::DBL);
  return cs;
}

// Sorted-descending sequences compare in the Dershowitz-Manna order
// lexicographically, with a proper prefix below its extensions.
bool multiset_less(const std::vector<int>& a, const std::vector<int>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::string cut_reduction(const std::string& corpus_dir) {
  std::vector<CutCase> cases = cut_cases(corpus_dir);
  if (cases.size() != 20) return "expected 20 cut inputs";
  for (const CutCase& c : cases) {
    DisplayVerdict in = check_proof(c.tree, c.sys);
    if (!in.accepted) return c.name + ": input rejected: " + in.diagnostic;
    std::vector<std::vector<int>> trace;
    ElimResult r = eliminate_with_search(c.tree, 200, c.sys, {10, 500000}, &trace);
    if (r.stuck) return c.name + ": stuck at '" + r.stuck_locus + "'";
    if (uses_cut(r.tree)) return c.name + ": output still has a cut";
    DisplayVerdict out = check_proof(r.tree, c.sys);
    if (!out.accepted) return c.name + ": output rejected: " + out.diagnostic;
    if (!equal(r.tree->conclusion, c.tree->conclusion))
      return c.name + ": end-sequent changed";
    for (std::size_t i = 1; i < trace.size(); i++)
      if (!multiset_less(trace[i], trace[i - 1]))
        return c.name + ": cut-rank trace not strictly decreasing at step " +
               std::to_string(i);
  }
  return "";
}

std::string conservativity_square(const std::string& corpus_dir) {
  std::set<std::string> known;
  std::vector<std::pair<FormulaPtr, FormulaPtr>> pairs;
  for (const char* script : {"f_or", "dneg", "and_comm", "tens_comm", "confl"}) {
    HilbertProof proof =
        parse_hilbert_proof(slurp(corpus_dir + "/hilbert/" + script + ".hjs"));
    Verdict v = check_hilbert(proof, HilbertSystem::CBL);
    if (!v.ok) return std::string(script) + ".hjs: " + v.detail;
    for (const HilbertStep& s : proof) {
      known.insert(print_formula_sequent(s.lhs, s.rhs));
      pairs.emplace_back(s.lhs, s.rhs);
    }
  }
  for (const auto& pr : generated_sequents(60)) pairs.push_back(pr);

  auto rows = conservativity_report(pairs, known, HilbertSystem::CBL, {8, 150000});
  for (const ConservativityRow& row : rows) {
    if (!row.violation) continue;
    return row.sequent + ": hilbert=" + std::to_string(row.hilbert) +
           " display=" + std::to_string(row.display_proved) +
           " single=" + std::to_string(row.single_valid) +
           " multi=" + std::to_string(row.multi_valid);
  }
  return "";
}

}  // namespace

const std::vector<std::pair<std::string, DisplaySystem>>& paper_manifest() {
  static const std::vector<std::pair<std::string, DisplaySystem>> m = {
      {"p1_meet", DisplaySystem::DBL},
      {"p1_join", DisplaySystem::DBL},
      {"p1_neg_l", DisplaySystem::DBL},
      {"p1_neg_r", DisplaySystem::DBL},
      {"p1_confl_l", DisplaySystem::DCBL},
      {"p1_confl_r", DisplaySystem::DCBL},
      {"dneg", DisplaySystem::DBL},
      {"dneg_conv", DisplaySystem::DBL},
      {"dconfl", DisplaySystem::DCBL},
      {"dconfl_conv", DisplaySystem::DCBL},
      {"dconflneg", DisplaySystem::DCBL},
      {"dconflneg_conv", DisplaySystem::DCBL},
      {"dm_meet", DisplaySystem::DBL},
      {"dm_meet_conv", DisplaySystem::DBL},
      {"dm_join", DisplaySystem::DBL},
      {"dm_join_conv", DisplaySystem::DBL},
      {"dm_confl_and", DisplaySystem::DCBL},
      {"dm_confl_and_conv", DisplaySystem::DCBL},
      {"dm_confl_tens", DisplaySystem::DCBL},
      {"dm_confl_tens_conv", DisplaySystem::DCBL},
  };
  return m;
}

std::vector<CriterionResult> run_all(const std::string& corpus_dir) {
  std::vector<CriterionResult> out;
  out.push_back(timed(1, "FOUR reconstruction", reconstruction_facts));
  out.push_back(timed(2, "validator sweep", validator_sweep));
  out.push_back(timed(3, "decomposition round-trips", decomposition_roundtrips));
  out.push_back(timed(4, "rule soundness", rule_soundness));
  out.push_back(
      timed(5, "paper corpus", [&] { return paper_corpus(corpus_dir); }));
  out.push_back(timed(6, "translation commutation", translation_commutation));
  out.push_back(timed(7, "search soundness", search_soundness));
  out.push_back(
      timed(8, "cut reduction", [&] { return cut_reduction(corpus_dir); }));
  out.push_back(timed(9, "conservativity square",
                      [&] { return conservativity_square(corpus_dir); }));
  return out;
}

int report(std::ostream& os, const std::vector<CriterionResult>& results) {
  bool all = true;
  for (const CriterionResult& r : results) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2fs", r.seconds);
    os << "criterion " << r.number << ": " << (r.passed ? "PASS" : "FAIL") << " "
       << r.title << " (" << buf << ")";
    if (!r.passed) os << " -- " << r.detail;
    os << "\n";
    all = all && r.passed;
  }
  return all ? 0 : 1;
}

}  // namespace bilat::corpus
