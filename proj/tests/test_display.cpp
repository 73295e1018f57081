#include "doctest.h"

#include <cctype>

#include "bilat/display.hpp"

using namespace bilat;

namespace {

int count_name(DisplaySystem sys, const std::string& name) {
  int n = 0;
  for (const RuleSpec& r : rule_table(sys))
    if (r.name == name) n++;
  return n;
}

const char* dneg_tree =
    "(by p (seq (p (n a1)) a1)\n"
    " (by adj (seq (SP (n a1)) a1)\n"
    "  (by n (seq (n a1) (SN a1))\n"
    "   (by N (seq (SN a1) (SN a1))\n"
    "    (by id (seq a1 a1))))))\n";

const char* dconfl_tree =
    "(by p (seq (p (sim2 (n (sim1 a1)))) a1)\n"
    " (by adj (seq (SP (sim2 (n (sim1 a1)))) a1)\n"
    "  (by sim (seq (sim2 (n (sim1 a1))) (SN a1))\n"
    "   (by adjstar (seq (Sstar2 (n (sim1 a1))) (SN a1))\n"
    "    (by star2N (seq (Sstar2 (SN a1)) (n (sim1 a1)))\n"
    "     (by n (seq (SN (Sstar1 a1)) (n (sim1 a1)))\n"
    "      (by N (seq (SN (Sstar1 a1)) (SN (sim1 a1)))\n"
    "       (by sim (seq (Sstar1 a1) (sim1 a1))\n"
    "        (by cont (seq (Sstar1 a1) (Sstar1 a1))\n"
    "         (by id (seq a1 a1)))))))))))\n";

// Concrete instantiation used by the coherence sweep: each metavariable gets
// a distinct atom in the pattern's sort.
void bind_atoms(const PatPtr& pat, Bindings& b) {
  if (!pat) return;
  std::string nm;
  for (char c : pat->name) nm += static_cast<char>(std::tolower(c));
  nm += pat->sort == Sort::S1 ? "1" : "2";
  if (pat->kind == Pat::SVar)
    b.s[pat->name] = st_of(mt_atom(nm, pat->sort));
  else if (pat->kind == Pat::FVar || pat->kind == Pat::AVar)
    b.f[pat->name] = mt_atom(nm, pat->sort);
  bind_atoms(pat->a, b);
  bind_atoms(pat->b, b);
}

bool all_premise_vars_bound(const RuleSpec& r, const Bindings& b) {
  for (const SeqPat& p : r.premises) {
    for (const PatPtr& side : {p.lhs, p.rhs}) {
      std::vector<PatPtr> stack{side};
      while (!stack.empty()) {
        PatPtr q = stack.back();
        stack.pop_back();
        if (!q) continue;
        if (q->kind == Pat::SVar && !b.s.count(q->name)) return false;
        if ((q->kind == Pat::FVar || q->kind == Pat::AVar) && !b.f.count(q->name))
          return false;
        stack.push_back(q->a);
        stack.push_back(q->b);
      }
    }
  }
  return true;
}

}  // namespace

TEST_CASE("rule table shape") {
  const auto& dbl = rule_table(DisplaySystem::DBL);
  const auto& dcbl = rule_table(DisplaySystem::DCBL);
  CHECK(dcbl.size() > dbl.size());
  for (std::size_t i = 0; i < dbl.size(); i++) CHECK(dcbl[i].key == dbl[i].key);
  for (const RuleSpec& r : dbl) CHECK_FALSE(r.cbl_only);

  for (const char* name : {"adjstar", "cont", "sim", "star2N"}) {
    CHECK(count_name(DisplaySystem::DBL, name) == 0);
    CHECK(count_name(DisplaySystem::DCBL, name) > 0);
  }
  // bidirectional printed rules give two directed entries per sort instance
  CHECK(count_name(DisplaySystem::DBL, "res") == 8);
  CHECK(count_name(DisplaySystem::DBL, "adj") == 4);
  CHECK(count_name(DisplaySystem::DBL, "N") == 2);
  CHECK(count_name(DisplaySystem::DBL, "P") == 2);
  CHECK(count_name(DisplaySystem::DCBL, "adjstar") == 8);
  CHECK(count_name(DisplaySystem::DCBL, "cont") == 4);
  CHECK(count_name(DisplaySystem::DCBL, "star2N") == 2);
  for (const RuleSpec& r : dcbl) {
    if (r.convenience) CHECK(r.name == "A");
  }
}

TEST_CASE("double negation expansion tree accepted in both systems") {
  ProofTreePtr tree = parse_mt_proof(dneg_tree);
  CHECK(check_proof(tree, DisplaySystem::DBL).accepted);
  CHECK(check_proof(tree, DisplaySystem::DCBL).accepted);
  CHECK_FALSE(uses_cut(tree));
}

TEST_CASE("double conflation tree accepted in D.CBL, SystemViolation in D.BL") {
  ProofTreePtr tree = parse_mt_proof(dconfl_tree);
  DisplayVerdict cbl = check_proof(tree, DisplaySystem::DCBL);
  std::string msg = cbl.locus + " " + cbl.diagnostic;
  CHECK_MESSAGE(cbl.accepted, msg);
  DisplayVerdict bl = check_proof(tree, DisplaySystem::DBL);
  CHECK_FALSE(bl.accepted);
  CHECK(bl.diagnostic.find("SystemViolation") != std::string::npos);
  CHECK(bl.rule_id == "sim");
  CHECK_FALSE(bl.locus.empty());
}

TEST_CASE("Id is atomic-only") {
  ProofTreePtr tree = parse_mt_proof("(by id (seq (meet1 a1 b1) (meet1 a1 b1)))");
  DisplayVerdict v = check_proof(tree, DisplaySystem::DBL);
  CHECK_FALSE(v.accepted);
  CHECK(v.diagnostic.find("PatternMismatch") != std::string::npos);

  CHECK(check_proof(parse_mt_proof("(by id (seq q2 q2))"), DisplaySystem::DBL).accepted);
  CHECK_FALSE(
      check_proof(parse_mt_proof("(by id (seq a1 b1))"), DisplaySystem::DBL).accepted);
}

TEST_CASE("unknown rule names are reported") {
  ProofTreePtr tree = parse_mt_proof("(by frobnicate (seq a1 a1))");
  DisplayVerdict v = check_proof(tree, DisplaySystem::DCBL);
  CHECK_FALSE(v.accepted);
  CHECK(v.diagnostic.find("UnknownRule") != std::string::npos);
}

TEST_CASE("premise mismatches carry a locus") {
  const char* bad =
      "(by p (seq (p (n a1)) a1)\n"
      " (by adj (seq (SP (n a1)) a1)\n"
      "  (by id (seq (n a1) (SN a1)))))";
  DisplayVerdict v = check_proof(parse_mt_proof(bad), DisplaySystem::DBL);
  CHECK_FALSE(v.accepted);
  CHECK(v.locus == "0.0");
  CHECK(v.rule_id == "id");
}

TEST_CASE("apply_backward on the printed display rules") {
  Sequent res_goal = parse_mt_sequent("(seq (Scap1 x1 y1) z1)");
  auto res = apply_backward("res", res_goal, DisplaySystem::DBL);
  REQUIRE(res.size() == 1);
  REQUIRE(res[0].size() == 1);
  CHECK(equal(res[0][0], parse_mt_sequent("(seq x1 (SrresR1 y1 z1))")));

  Sequent adj_goal = parse_mt_sequent("(seq (SP x2) y1)");
  auto adj = apply_backward("adj", adj_goal, DisplaySystem::DBL);
  REQUIRE(adj.size() == 1);
  CHECK(equal(adj[0][0], parse_mt_sequent("(seq x2 (SN y1))")));

  Sequent meet_goal = parse_mt_sequent("(seq x1 (meet1 a1 b1))");
  CHECK(apply_backward("meet", meet_goal, DisplaySystem::DBL).empty());

  // Cut premises are not determined by the goal
  CHECK(apply_backward("cut", parse_mt_sequent("(seq x1 y1)"), DisplaySystem::DBL).empty());

  // Id closes the goal with an empty premise list
  auto id = apply_backward("id", parse_mt_sequent("(seq p1 p1)"), DisplaySystem::DBL);
  REQUIRE(id.size() == 1);
  CHECK(id[0].empty());
}

TEST_CASE("backward application is coherent with forward checking") {
  for (DisplaySystem sys : {DisplaySystem::DBL, DisplaySystem::DCBL}) {
    for (const RuleSpec& r : rule_table(sys)) {
      Bindings b;
      bind_atoms(r.conclusion.lhs, b);
      bind_atoms(r.conclusion.rhs, b);
      if (!all_premise_vars_bound(r, b)) continue;
      Sequent goal =
          make_sequent(instantiate(r.conclusion.lhs, b), instantiate(r.conclusion.rhs, b));
      std::vector<Sequent> expected;
      for (const SeqPat& p : r.premises)
        expected.push_back(make_sequent(instantiate(p.lhs, b), instantiate(p.rhs, b)));

      auto lists = apply_backward(r.name, goal, sys);
      bool found = false;
      for (const auto& lst : lists) {
        if (lst.size() != expected.size()) continue;
        bool same = true;
        for (std::size_t i = 0; i < lst.size(); i++)
          same = same && equal(lst[i], expected[i]);
        found = found || same;
      }
      CHECK_MESSAGE(found, r.key);

      // each returned premise-list yields a locally valid node
      for (const auto& lst : lists) {
        std::vector<ProofTreePtr> kids;
        for (const Sequent& s : lst) kids.push_back(make_proof("hyp", s));
        ProofTreePtr node = make_proof(r.name, goal, kids);
        DisplayVerdict v = check_proof(node, sys);
        bool local_ok = v.accepted || (v.rule_id == "hyp" && !v.locus.empty());
        std::string msg = r.key + ": " + v.diagnostic;
        CHECK_MESSAGE(local_ok, msg);
      }
    }
  }
}
