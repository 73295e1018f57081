#include "bilat/search.hpp"

#include <algorithm>
#include <map>

namespace bilat {

namespace {

// Lower tries first. Operational introductions before display moves before
// structural bookkeeping; premise-growing rules last.
int priority(const RuleSpec& r) {
  const std::string& k = r.key;
  auto is = [&](const char* prefix) { return k.rfind(prefix, 0) == 0; };
  if (is("id")) return 0;
  if (is("one-ax") || is("zero-ax")) return 0;
  if (is("one-l") || is("zero-r") || is("meet-") || is("join-") || is("n-") ||
      is("p-") || is("sim-"))
    return 1;
  if (is("res-") || is("adj-") || is("adjstar-") || is("cont-fwd") || is("star2N") ||
      is("Pzero2") || is("Pone2") || is("N-fwd") || is("P-fwd"))
    return 2;
  if (is("E-") || is("A-") || is("W-")) return 3;
  return 4;  // hatone, checkzero, C, N-bwd, P-bwd, cont-bwd
}

int st_size(const StructurePtr& s) {
  if (s->kind == SKind::Of) return 1 + complexity(s->formula);
  int n = 1;
  if (s->a) n += st_size(s->a);
  if (s->b) n += st_size(s->b);
  return n;
}

struct Ctx {
  std::vector<const RuleSpec*> rules;
  std::vector<int> prio;
  long max_nodes;
  long nodes = 0;
  int size_cap;
  std::vector<std::string> branch;
  // deepest remaining-depth at which this sequent is known unprovable
  std::map<std::string, int> failed;
};

// cycled reports whether some pruned subgoal was an ancestor repeat, in which
// case the failure is branch-relative and must not be memoized.
ProofTreePtr dfs(Ctx& c, const Sequent& goal, int depth_left, int growth_left,
                 bool& cycled) {
  if (c.nodes >= c.max_nodes) return nullptr;
  c.nodes++;
  if (st_size(goal.lhs) + st_size(goal.rhs) > c.size_cap) return nullptr;
  std::string key = pretty_print(goal) + "#" + std::to_string(growth_left);
  if (std::find(c.branch.begin(), c.branch.end(), key) != c.branch.end()) {
    cycled = true;
    return nullptr;
  }
  auto it = c.failed.find(key);
  if (it != c.failed.end() && it->second >= depth_left) return nullptr;

  c.branch.push_back(key);
  ProofTreePtr found;
  bool sub_cycled = false;
  for (std::size_t ri = 0; ri < c.rules.size(); ri++) {
    const RuleSpec* r = c.rules[ri];
    bool growth = c.prio[ri] == 4;
    if (growth && growth_left == 0) continue;
    if (r->conclusion.sort != goal.sort) continue;
    Bindings b;
    if (!match_pat(r->conclusion.lhs, goal.lhs, b)) continue;
    if (!match_pat(r->conclusion.rhs, goal.rhs, b)) continue;
    if (!r->premises.empty() && depth_left == 0) continue;
    std::vector<ProofTreePtr> kids;
    bool ok = true;
    for (const SeqPat& p : r->premises) {
      Sequent prem = make_sequent(instantiate(p.lhs, b), instantiate(p.rhs, b));
      ProofTreePtr k =
          dfs(c, prem, depth_left - 1, growth ? growth_left - 1 : growth_left, sub_cycled);
      if (!k) {
        ok = false;
        break;
      }
      kids.push_back(std::move(k));
    }
    if (ok) {
      found = make_proof(r->name, goal, std::move(kids));
      break;
    }
  }
  c.branch.pop_back();
  if (!found) {
    if (sub_cycled)
      cycled = true;
    else if (c.nodes < c.max_nodes) {
      int& d = c.failed[key];
      d = std::max(d, depth_left);
    }
  }
  return found;
}

}  // namespace

SearchResult prove(const Sequent& goal, DisplaySystem sys, SearchBudget budget) {
  Ctx c;
  for (const RuleSpec& r : rule_table(sys)) {
    if (r.name == "cut") continue;
    // wrapping both sides in N/P/* never makes backward progress
    if (r.key == "N-bwd" || r.key == "P-bwd" || r.key.rfind("cont-bwd", 0) == 0) continue;
    c.rules.push_back(&r);
  }
  std::stable_sort(c.rules.begin(), c.rules.end(),
                   [](const RuleSpec* a, const RuleSpec* b) {
                     return priority(*a) < priority(*b);
                   });
  for (const RuleSpec* r : c.rules) c.prio.push_back(priority(*r));
  c.max_nodes = budget.max_nodes;
  c.size_cap = 2 * (st_size(goal.lhs) + st_size(goal.rhs)) + 6;

  SearchResult out;
  for (int depth = 0; depth <= budget.max_depth; depth++) {
    bool cycled = false;
    ProofTreePtr tree = dfs(c, goal, depth, 3, cycled);
    if (tree) {
      out.tree = tree;
      break;
    }
    if (c.nodes >= c.max_nodes) break;
  }
  out.nodes = c.nodes;
  return out;
}

}  // namespace bilat
