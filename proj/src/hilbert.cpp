#include "bilat/hilbert.hpp"

#include <sstream>

#include "json.hpp"

namespace bilat {

namespace {

Schema ax(const std::string& id, const std::string& seq, bool cbl_only = false) {
  auto [lhs, rhs] = parse_formula_sequent(seq);
  return {id, lhs, rhs, cbl_only};
}

std::vector<Schema> build_schemas(bool printed_axioms) {
  std::vector<Schema> t;
  t.push_back(ax("ax-id", "A |- A"));
  t.push_back(ax("ax-dneg-l", "!!A |- A"));
  t.push_back(ax("ax-dneg-r", "A |- !!A"));
  t.push_back(ax("ax-f-bot", "f |- A"));
  t.push_back(ax("ax-t-top", "A |- t"));
  t.push_back(ax("ax-bot", "bot |- A"));
  t.push_back(ax("ax-top", "A |- top"));
  t.push_back(ax("ax-negf", "A |- !f"));
  t.push_back(ax("ax-negt", "!t |- A"));
  t.push_back(ax("ax-negbot", "!bot |- A"));
  t.push_back(ax("ax-negtop", "A |- !top"));
  t.push_back(ax("ax-and-e1", "A & B |- A"));
  t.push_back(ax("ax-and-e2", "A & B |- B"));
  t.push_back(ax("ax-or-i1", "A |- A | B"));
  t.push_back(ax("ax-or-i2", "B |- A | B"));
  t.push_back(ax("ax-tens-e1", "A * B |- A"));
  t.push_back(ax("ax-tens-e2", "A * B |- B"));
  t.push_back(ax("ax-plus-i1", "A |- A + B"));
  t.push_back(ax("ax-plus-i2", "B |- A + B"));
  t.push_back(ax("ax-dist-and-or", "A & (B | C) |- (A & B) | (A & C)"));
  if (printed_axioms)
    t.push_back(ax("ax-dist-tens-plus", "A * (B + C) |- (A * B) | (A + C)"));
  else
    t.push_back(ax("ax-dist-tens-plus", "A * (B + C) |- (A * B) + (A * C)"));
  t.push_back(ax("ax-dm-neg-and-l", "!(A & B) |- !A | !B"));
  t.push_back(ax("ax-dm-neg-and-r", "!A | !B |- !(A & B)"));
  t.push_back(ax("ax-dm-neg-or-l", "!(A | B) |- !A & !B"));
  t.push_back(ax("ax-dm-neg-or-r", "!A & !B |- !(A | B)"));
  t.push_back(ax("ax-dm-neg-tens-l", "!(A * B) |- !A * !B"));
  t.push_back(ax("ax-dm-neg-tens-r", "!A * !B |- !(A * B)"));
  t.push_back(ax("ax-dm-neg-plus-l", "!(A + B) |- !A + !B"));
  t.push_back(ax("ax-dm-neg-plus-r", "!A + !B |- !(A + B)"));

  t.push_back(ax("ax-dconfl-l", "--A |- A", true));
  t.push_back(ax("ax-dconfl-r", "A |- --A", true));
  t.push_back(ax("ax-confl-neg-l", "-!A |- !-A", true));
  t.push_back(ax("ax-confl-neg-r", "!-A |- -!A", true));
  t.push_back(ax("ax-conflf", "-f |- A", true));
  t.push_back(ax("ax-conflt", "A |- -t", true));
  t.push_back(ax("ax-confltop", "-top |- A", true));
  t.push_back(ax("ax-conflbot", "A |- -bot", true));
  t.push_back(ax("ax-dm-confl-and-l", "-(A & B) |- -A & -B", true));
  t.push_back(ax("ax-dm-confl-and-r", "-A & -B |- -(A & B)", true));
  t.push_back(ax("ax-dm-confl-or-l", "-(A | B) |- -A | -B", true));
  t.push_back(ax("ax-dm-confl-or-r", "-A | -B |- -(A | B)", true));
  t.push_back(ax("ax-dm-confl-tens-l", "-(A * B) |- -A + -B", true));
  t.push_back(ax("ax-dm-confl-tens-r", "-A + -B |- -(A * B)", true));
  t.push_back(ax("ax-dm-confl-plus-l", "-(A + B) |- -A * -B", true));
  t.push_back(ax("ax-dm-confl-plus-r", "-A * -B |- -(A + B)", true));
  return t;
}

HilbertRule rule(const std::string& id, std::vector<std::string> prems,
                 const std::string& concl) {
  HilbertRule r;
  r.id = id;
  for (const std::string& p : prems) r.premises.push_back(parse_formula_sequent(p));
  r.conclusion = parse_formula_sequent(concl);
  return r;
}

}  // namespace

const std::vector<Schema>& schema_table(HilbertSystem sys, bool printed_axioms) {
  static const std::vector<Schema> corrected = build_schemas(false);
  static const std::vector<Schema> printed = build_schemas(true);
  static const auto filter = [](const std::vector<Schema>& all) {
    std::vector<Schema> out;
    for (const Schema& s : all)
      if (!s.cbl_only) out.push_back(s);
    return out;
  };
  static const std::vector<Schema> corrected_bl = filter(corrected);
  static const std::vector<Schema> printed_bl = filter(printed);
  const auto& full = printed_axioms ? printed : corrected;
  const auto& bl = printed_axioms ? printed_bl : corrected_bl;
  return sys == HilbertSystem::CBL ? full : bl;
}

const std::vector<HilbertRule>& hilbert_rules() {
  static const std::vector<HilbertRule> rules = {
      rule("trans", {"A |- B", "B |- C"}, "A |- C"),
      rule("and-r", {"A |- B", "A |- C"}, "A |- B & C"),
      rule("or-l", {"A |- B", "C |- B"}, "A | C |- B"),
      rule("tens-r", {"A |- B", "A |- C"}, "A |- B * C"),
      rule("plus-l", {"A |- B", "C |- B"}, "A + C |- B"),
  };
  return rules;
}

bool match_formula(const FormulaPtr& pattern, const FormulaPtr& f, Subst& subst) {
  switch (pattern->kind) {
    case FKind::Atom: {
      auto it = subst.find(pattern->name);
      if (it != subst.end()) return equal(it->second, f);
      subst[pattern->name] = f;
      return true;
    }
    case FKind::TruthConst: return f->kind == FKind::TruthConst && f->tc == pattern->tc;
    case FKind::Neg: return f->kind == FKind::Neg && match_formula(pattern->a, f->a, subst);
    case FKind::Confl: return f->kind == FKind::Confl && match_formula(pattern->a, f->a, subst);
    case FKind::Bin:
      return f->kind == FKind::Bin && f->op == pattern->op &&
             match_formula(pattern->a, f->a, subst) && match_formula(pattern->b, f->b, subst);
  }
  return false;
}

FormulaPtr substitute(const FormulaPtr& pattern, const Subst& subst) {
  switch (pattern->kind) {
    case FKind::Atom: {
      auto it = subst.find(pattern->name);
      return it != subst.end() ? it->second : pattern;
    }
    case FKind::TruthConst: return pattern;
    case FKind::Neg: return neg(substitute(pattern->a, subst));
    case FKind::Confl: return confl(substitute(pattern->a, subst));
    case FKind::Bin:
      return bin(pattern->op, substitute(pattern->a, subst), substitute(pattern->b, subst));
  }
  return pattern;
}

std::vector<std::pair<std::string, Subst>> match_axiom(const FormulaPtr& lhs,
                                                       const FormulaPtr& rhs,
                                                       HilbertSystem sys,
                                                       bool printed_axioms) {
  std::vector<std::pair<std::string, Subst>> out;
  for (const Schema& s : schema_table(sys, printed_axioms)) {
    Subst subst;
    if (match_formula(s.lhs, lhs, subst) && match_formula(s.rhs, rhs, subst))
      out.push_back({s.id, subst});
  }
  return out;
}

HilbertProof parse_hilbert_proof(const std::string& text) {
  HilbertProof proof;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    nlohmann::json j = nlohmann::json::parse(line);
    HilbertStep step;
    std::tie(step.lhs, step.rhs) = parse_formula_sequent(j.at("seq").get<std::string>());
    const nlohmann::json& by = j.at("by");
    if (by.contains("axiom")) {
      step.is_axiom = true;
      step.id = by.at("axiom").get<std::string>();
    } else {
      step.id = by.at("rule").get<std::string>();
      step.from = by.at("from").get<std::vector<int>>();
    }
    proof.push_back(std::move(step));
  }
  return proof;
}

std::string print_hilbert_proof(const HilbertProof& proof) {
  std::string out;
  for (const HilbertStep& s : proof) {
    nlohmann::json j;
    j["seq"] = print_formula_sequent(s.lhs, s.rhs);
    if (s.is_axiom)
      j["by"] = {{"axiom", s.id}};
    else
      j["by"] = {{"rule", s.id}, {"from", s.from}};
    out += j.dump() + "\n";
  }
  return out;
}

Verdict check_hilbert(const HilbertProof& proof, HilbertSystem sys, bool printed_axioms) {
  auto fail = [](int step, const std::string& why) {
    return Verdict{false, "step " + std::to_string(step + 1) + ": " + why};
  };
  for (int i = 0; i < static_cast<int>(proof.size()); i++) {
    const HilbertStep& step = proof[i];
    if (sys == HilbertSystem::BL &&
        (uses_conflation(step.lhs) || uses_conflation(step.rhs)))
      return fail(i, "conflation formula in BL");
    if (step.is_axiom) {
      const std::vector<Schema>& table = schema_table(sys, printed_axioms);
      const Schema* schema = nullptr;
      for (const Schema& s : table)
        if (s.id == step.id) schema = &s;
      if (!schema) {
        bool known_elsewhere = false;
        for (const Schema& s : schema_table(HilbertSystem::CBL, printed_axioms))
          if (s.id == step.id) known_elsewhere = true;
        return fail(i, known_elsewhere ? "axiom '" + step.id + "' is not available in BL"
                                       : "unknown axiom schema '" + step.id + "'");
      }
      Subst subst;
      if (!match_formula(schema->lhs, step.lhs, subst) ||
          !match_formula(schema->rhs, step.rhs, subst))
        return fail(i, "sequent does not instantiate schema '" + step.id + "'");
    } else {
      const HilbertRule* r = nullptr;
      for (const HilbertRule& candidate : hilbert_rules())
        if (candidate.id == step.id) r = &candidate;
      if (!r) return fail(i, "unknown rule '" + step.id + "'");
      if (step.from.size() != r->premises.size())
        return fail(i, "rule '" + step.id + "' expects " +
                           std::to_string(r->premises.size()) + " premises");
      Subst subst;
      for (std::size_t k = 0; k < step.from.size(); k++) {
        int idx = step.from[k];
        if (idx < 1 || idx > i) return fail(i, "premise index " + std::to_string(idx) +
                                                   " does not refer to an earlier step");
        const HilbertStep& prem = proof[idx - 1];
        if (!match_formula(r->premises[k].first, prem.lhs, subst) ||
            !match_formula(r->premises[k].second, prem.rhs, subst))
          return fail(i, "premise " + std::to_string(idx) + " does not fit rule '" +
                             step.id + "'");
      }
      if (!match_formula(r->conclusion.first, step.lhs, subst) ||
          !match_formula(r->conclusion.second, step.rhs, subst))
        return fail(i, "conclusion does not follow by rule '" + step.id + "'");
    }
  }
  return {true, ""};
}

}  // namespace bilat
