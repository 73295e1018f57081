#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "bilat/corpus.hpp"
#include "bilat/cutelim.hpp"
#include "bilat/display.hpp"
#include "bilat/hilbert.hpp"
#include "bilat/oracle.hpp"
#include "bilat/search.hpp"
#include "bilat/translate.hpp"

#ifndef BILAT_CORPUS_DIR
#define BILAT_CORPUS_DIR "corpus"
#endif

namespace {

using nlohmann::json;
using namespace bilat;

// Arguments are taken literally unless they name a readable file.
std::string arg_text(const std::string& arg) {
  std::ifstream in(arg);
  if (!in) return arg;
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void emit(bool as_json, const json& j, const std::string& plain) {
  if (as_json)
    std::cout << j.dump() << "\n";
  else
    std::cout << plain << "\n";
}

std::vector<FiniteBilattice> bilattice_catalog() {
  if (const char* path = std::getenv("BILAT_CATALOG")) return load_catalog(path);
  return catalog_bilattices();
}

const FiniteBilattice& find_algebra(const std::vector<FiniteBilattice>& cat,
                                    const std::string& name) {
  for (const FiniteBilattice& B : cat)
    if (B.name == name) return B;
  throw std::runtime_error("unknown algebra '" + name + "'");
}

HilbertSystem hilbert_system(const std::string& s) {
  if (s == "bl") return HilbertSystem::BL;
  if (s == "cbl") return HilbertSystem::CBL;
  throw CLI::ValidationError("--system must be bl or cbl");
}

DisplaySystem display_system(const std::string& s) {
  if (s == "dbl") return DisplaySystem::DBL;
  if (s == "dcbl") return DisplaySystem::DCBL;
  throw CLI::ValidationError("--system must be dbl or dcbl");
}

int cmd_parse(const std::string& input, bool as_json) {
  std::string text = arg_text(input);
  std::string kind, printed;
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '(') {
    MtValue v = parse_mt(text);
    if (auto* f = std::get_if<MTFormulaPtr>(&v)) {
      kind = "mt-formula";
      printed = pretty_print(*f);
    } else if (auto* s = std::get_if<StructurePtr>(&v)) {
      kind = "structure";
      printed = pretty_print(*s);
    } else if (auto* s = std::get_if<Sequent>(&v)) {
      kind = "mt-sequent";
      printed = pretty_print(*s);
    } else {
      kind = "proof";
      printed = pretty_print(std::get<ProofTreePtr>(v));
    }
  } else if (text.find("|-") != std::string::npos) {
    auto [lhs, rhs] = parse_formula_sequent(text);
    kind = "sequent";
    printed = print_formula_sequent(lhs, rhs);
  } else {
    kind = "formula";
    printed = pretty_print(parse_formula(text));
  }
  emit(as_json, {{"ok", true}, {"kind", kind}, {"printed", printed}},
       kind + ": " + printed);
  return 0;
}

int cmd_check_hilbert(const std::string& file, const std::string& sys,
                      bool printed_axioms, bool as_json) {
  HilbertProof proof = parse_hilbert_proof(arg_text(file));
  Verdict v = check_hilbert(proof, hilbert_system(sys), printed_axioms);
  emit(as_json, {{"accepted", v.ok}, {"detail", v.detail}},
       v.ok ? "accepted (" + std::to_string(proof.size()) + " steps)"
            : "rejected: " + v.detail);
  return v.ok ? 0 : 1;
}

int cmd_check_display(const std::string& file, const std::string& sys, bool as_json) {
  ProofTreePtr tree = parse_mt_proof(arg_text(file));
  DisplayVerdict v = check_proof(tree, display_system(sys));
  emit(as_json,
       {{"accepted", v.accepted},
        {"locus", v.locus},
        {"rule", v.rule_id},
        {"diagnostic", v.diagnostic}},
       v.accepted ? "accepted: " + pretty_print(tree->conclusion)
                  : "rejected at '" + v.locus + "' (" + v.rule_id + "): " + v.diagnostic);
  return v.accepted ? 0 : 1;
}

int cmd_translate(const std::string& input, const std::string& sys, int side,
                  bool as_json) {
  HilbertSystem hs = hilbert_system(sys);
  std::string text = arg_text(input);
  std::string out;
  if (text.find("|-") != std::string::npos) {
    auto [lhs, rhs] = parse_formula_sequent(text);
    out = pretty_print(translate_sequent(lhs, rhs, hs));
  } else {
    FormulaPtr f = parse_formula(text);
    out = pretty_print(side == 1 ? t1(f, hs) : t2(f, hs));
  }
  emit(as_json, {{"ok", true}, {"mts", out}}, out);
  return 0;
}

int cmd_prove(const std::string& input, const std::string& sys, int depth, long nodes,
              bool as_json) {
  std::string text = arg_text(input);
  Sequent goal = text.find("|-") != std::string::npos
                     ? [&] {
                         auto [lhs, rhs] = parse_formula_sequent(text);
                         return translate_sequent(lhs, rhs);
                       }()
                     : parse_mt_sequent(text);
  SearchResult r = prove(goal, display_system(sys), {depth, nodes});
  if (r.exhausted()) {
    emit(as_json, {{"proved", false}, {"nodes", r.nodes}, {"depth", depth}},
         "exhausted (depth " + std::to_string(depth) + ", " + std::to_string(r.nodes) +
             " nodes)");
    return 1;
  }
  emit(as_json, {{"proved", true}, {"nodes", r.nodes}, {"proof", pretty_print(r.tree)}},
       pretty_print(r.tree));
  return 0;
}

int cmd_cutelim(const std::string& file, const std::string& sys, long fuel, bool search,
                bool as_json) {
  DisplaySystem ds = display_system(sys);
  ProofTreePtr tree = parse_mt_proof(arg_text(file));
  ElimResult r = search ? eliminate_with_search(tree, fuel, ds) : eliminate(tree, fuel);
  if (r.stuck) {
    emit(as_json, {{"ok", false}, {"stuck_at", r.stuck_locus}, {"rewrites", r.rewrites}},
         "stuck at '" + r.stuck_locus + "' after " + std::to_string(r.rewrites) +
             " rewrites");
    return 1;
  }
  emit(as_json,
       {{"ok", true}, {"rewrites", r.rewrites}, {"proof", pretty_print(r.tree)}},
       pretty_print(r.tree));
  return 0;
}

int cmd_eval(const std::string& input, const std::string& algebra,
             const std::vector<std::string>& sets, bool as_json) {
  std::vector<FiniteBilattice> cat = bilattice_catalog();
  const FiniteBilattice& B = find_algebra(cat, algebra);
  Valuation v;
  for (const std::string& s : sets) {
    std::size_t eq = s.find('=');
    if (eq == std::string::npos) throw CLI::ValidationError("--set expects atom=value");
    std::string name = s.substr(0, eq), val = s.substr(eq + 1);
    auto it = std::find(B.names.begin(), B.names.end(), val);
    if (it == B.names.end())
      throw std::runtime_error("'" + val + "' is not an element of " + B.name);
    v[name] = static_cast<int>(it - B.names.begin());
  }
  FormulaPtr f = parse_formula(arg_text(input));
  int e = eval(B, v, f);
  emit(as_json, {{"value", B.names[e]}, {"designated", designated(B, e)}}, B.names[e]);
  return 0;
}

int cmd_valid(const std::string& lhs, const std::string& rhs, const std::string& algebra,
              bool as_json) {
  std::vector<FiniteBilattice> cat = bilattice_catalog();
  const FiniteBilattice& B = find_algebra(cat, algebra);
  ConsequenceVerdict v = consequence(B, parse_formula(lhs), parse_formula(rhs));
  if (v.valid) {
    emit(as_json, {{"valid", true}}, "valid");
    return 0;
  }
  json cv = json::object();
  std::string plain = "countervaluation:";
  for (const auto& [name, val] : v.countervaluation) {
    cv[name] = B.names[val];
    plain += " " + name + "=" + B.names[val];
  }
  emit(as_json, {{"valid", false}, {"countervaluation", cv}}, plain);
  return 1;
}

int cmd_soundness(const std::string& sys, const std::string& only, bool as_json) {
  DisplaySystem ds = display_system(sys);
  std::vector<FiniteHBL> hbls = catalog_hbls();
  bool all_ok = true;
  for (const RuleSpec& r : rule_table(ds)) {
    if (!only.empty() && r.key != only && r.name != only) continue;
    for (const FiniteHBL& H : hbls) {
      OracleVerdict v = check_rule_soundness(r, H);
      emit(as_json,
           {{"rule", r.key}, {"model", H.name}, {"ok", v.ok}, {"detail", v.detail}},
           r.key + " on " + H.name + ": " + (v.ok ? "sound" : "UNSOUND " + v.detail));
      all_ok = all_ok && v.ok;
    }
  }
  return all_ok ? 0 : 1;
}

int cmd_corpus(const std::string& dir, bool as_json) {
  auto results = corpus::run_all(dir);
  if (!as_json) return corpus::report(std::cout, results);
  bool all = true;
  for (const corpus::CriterionResult& r : results) {
    std::cout << json{{"criterion", r.number},
                      {"title", r.title},
                      {"passed", r.passed},
                      {"seconds", r.seconds},
                      {"detail", r.detail}}
                     .dump()
              << "\n";
    all = all && r.passed;
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bilat: proof workbench for bilattice logic"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine output, one JSON object per line");

  std::string input, sys, algebra = "four", only, dir = BILAT_CORPUS_DIR;
  std::string lhs, rhs;
  int side = 1, depth = 12;
  long nodes = 2000000, fuel = 1000;
  bool printed_axioms = false, with_search = false;
  std::vector<std::string> sets;

  auto* parse_c = app.add_subcommand("parse", "parse a term and print it back");
  parse_c->add_option("input", input, "text or file")->required();

  auto* ch = app.add_subcommand("check-hilbert", "check a Hilbert proof script");
  ch->add_option("--system", sys, "bl|cbl")->required();
  ch->add_flag("--printed-axioms", printed_axioms,
               "use the distribution axiom exactly as printed");
  ch->add_option("input", input, "script file (JSON lines)")->required();

  auto* cd = app.add_subcommand("check-display", "check a display proof tree");
  cd->add_option("--system", sys, "dbl|dcbl")->required();
  cd->add_option("input", input, "proof file (S-expression)")->required();

  auto* tr = app.add_subcommand("translate", "translate a formula or sequent");
  tr->add_option("--system", sys, "bl|cbl")->required();
  tr->add_option("--side", side, "1|2")->check(CLI::Range(1, 2));
  tr->add_option("input", input, "formula, sequent, or file")->required();

  auto* pr = app.add_subcommand("prove", "search for a cut-free proof");
  pr->add_option("--system", sys, "dbl|dcbl")->required();
  pr->add_option("--depth", depth, "maximum proof depth");
  pr->add_option("--nodes", nodes, "node budget");
  pr->add_option("input", input, "goal sequent or file")->required();

  auto* ce = app.add_subcommand("cutelim", "eliminate cuts from a proof");
  ce->add_option("--system", sys, "dbl|dcbl")->required();
  ce->add_option("--fuel", fuel, "maximum rewrites");
  ce->add_flag("--search", with_search,
               "discharge residual displayed cuts by bounded search");
  ce->add_option("input", input, "proof file")->required();

  auto* ev = app.add_subcommand("eval", "evaluate a formula in a finite bilattice");
  ev->add_option("--algebra", algebra, "catalog algebra name");
  ev->add_option("--set", sets, "atom=element binding (repeatable)");
  ev->add_option("input", input, "formula")->required();

  auto* va = app.add_subcommand("valid", "decide consequence by brute force");
  va->add_option("--algebra", algebra, "catalog algebra name");
  va->add_option("lhs", lhs, "antecedent formula")->required();
  va->add_option("rhs", rhs, "succedent formula")->required();

  auto* so = app.add_subcommand("soundness", "check display rules on catalog models");
  so->add_option("--system", sys, "dbl|dcbl")->required();
  so->add_option("--rule", only, "restrict to one rule id or key");

  auto* co = app.add_subcommand("corpus", "run the bundled acceptance suite");
  co->add_option("--dir", dir, "corpus directory");

  for (CLI::App* s : {parse_c, ch, cd, tr, pr, ce, ev, va, so, co})
    s->add_flag("--json", as_json, "machine output, one JSON object per line");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (parse_c->parsed()) return cmd_parse(input, as_json);
    if (ch->parsed()) return cmd_check_hilbert(input, sys, printed_axioms, as_json);
    if (cd->parsed()) return cmd_check_display(input, sys, as_json);
    if (tr->parsed()) return cmd_translate(input, sys, side, as_json);
    if (pr->parsed()) return cmd_prove(input, sys, depth, nodes, as_json);
    if (ce->parsed()) return cmd_cutelim(input, sys, fuel, with_search, as_json);
    if (ev->parsed()) return cmd_eval(input, algebra, sets, as_json);
    if (va->parsed()) return cmd_valid(lhs, rhs, algebra, as_json);
    if (so->parsed()) return cmd_soundness(sys, only, as_json);
    if (co->parsed()) return cmd_corpus(dir, as_json);
  } catch (const std::exception& e) {
    if (as_json)
      std::cout << json{{"error", e.what()}}.dump() << "\n";
    else
      std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
