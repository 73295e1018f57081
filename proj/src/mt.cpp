#include "bilat/mt.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace bilat {

namespace {

MTFormulaPtr mk_mt(MKind k, Sort s, std::string name = {}, MTFormulaPtr a = nullptr,
                   MTFormulaPtr b = nullptr) {
  auto f = std::make_shared<MTFormula>();
  f->kind = k;
  f->sort = s;
  f->name = std::move(name);
  f->a = std::move(a);
  f->b = std::move(b);
  return f;
}

void require_same_sort(const MTFormulaPtr& a, const MTFormulaPtr& b, const char* what) {
  if (a->sort != b->sort)
    throw SortError(std::string(what) + ": arguments have sorts " +
                    std::to_string(sort_index(a->sort)) + " and " +
                    std::to_string(sort_index(b->sort)));
}

}  // namespace

MTFormulaPtr mt_atom(const std::string& name, Sort sort) { return mk_mt(MKind::Atom, sort, name); }
MTFormulaPtr mt_one(Sort sort) { return mk_mt(MKind::One, sort); }
MTFormulaPtr mt_zero(Sort sort) { return mk_mt(MKind::Zero, sort); }

MTFormulaPtr mt_meet(MTFormulaPtr a, MTFormulaPtr b) {
  require_same_sort(a, b, "meet");
  Sort s = a->sort;
  return mk_mt(MKind::Meet, s, {}, std::move(a), std::move(b));
}

MTFormulaPtr mt_join(MTFormulaPtr a, MTFormulaPtr b) {
  require_same_sort(a, b, "join");
  Sort s = a->sort;
  return mk_mt(MKind::Join, s, {}, std::move(a), std::move(b));
}

MTFormulaPtr mt_p(MTFormulaPtr a) {
  if (a->sort != Sort::S2) throw SortError("p expects a sort-2 argument");
  return mk_mt(MKind::P, Sort::S1, {}, std::move(a));
}

MTFormulaPtr mt_n(MTFormulaPtr a) {
  if (a->sort != Sort::S1) throw SortError("n expects a sort-1 argument");
  return mk_mt(MKind::N, Sort::S2, {}, std::move(a));
}

MTFormulaPtr mt_sim(MTFormulaPtr a) {
  Sort s = a->sort;
  return mk_mt(MKind::Sim, s, {}, std::move(a));
}

MTFormulaPtr mt_rsup(MTFormulaPtr a, MTFormulaPtr b) {
  require_same_sort(a, b, "rsup");
  Sort s = a->sort;
  return mk_mt(MKind::ResSup, s, {}, std::move(a), std::move(b));
}

MTFormulaPtr mt_rsub(MTFormulaPtr a, MTFormulaPtr b) {
  require_same_sort(a, b, "rsub");
  Sort s = a->sort;
  return mk_mt(MKind::ResSub, s, {}, std::move(a), std::move(b));
}

bool equal(const MTFormulaPtr& a, const MTFormulaPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b || a->kind != b->kind || a->sort != b->sort) return false;
  switch (a->kind) {
    case MKind::Atom: return a->name == b->name;
    case MKind::One:
    case MKind::Zero: return true;
    case MKind::P:
    case MKind::N:
    case MKind::Sim: return equal(a->a, b->a);
    default: return equal(a->a, b->a) && equal(a->b, b->b);
  }
}

int complexity(const MTFormulaPtr& f) {
  switch (f->kind) {
    case MKind::Atom:
    case MKind::One:
    case MKind::Zero: return 0;
    case MKind::P:
    case MKind::N:
    case MKind::Sim: return 1 + complexity(f->a);
    default: return 1 + complexity(f->a) + complexity(f->b);
  }
}

bool uses_sim(const MTFormulaPtr& f) {
  switch (f->kind) {
    case MKind::Atom:
    case MKind::One:
    case MKind::Zero: return false;
    case MKind::Sim: return true;
    case MKind::P:
    case MKind::N: return uses_sim(f->a);
    default: return uses_sim(f->a) || uses_sim(f->b);
  }
}

void collect_atoms(const MTFormulaPtr& f, std::set<std::pair<std::string, Sort>>& out) {
  switch (f->kind) {
    case MKind::Atom: out.insert({f->name, f->sort}); break;
    case MKind::One:
    case MKind::Zero: break;
    case MKind::P:
    case MKind::N:
    case MKind::Sim: collect_atoms(f->a, out); break;
    default:
      collect_atoms(f->a, out);
      collect_atoms(f->b, out);
      break;
  }
}

namespace {

StructurePtr mk_st(SKind k, Sort s, MTFormulaPtr f = nullptr, StructurePtr a = nullptr,
                   StructurePtr b = nullptr) {
  auto st = std::make_shared<Structure>();
  st->kind = k;
  st->sort = s;
  st->formula = std::move(f);
  st->a = std::move(a);
  st->b = std::move(b);
  return st;
}

void require_same_sort(const StructurePtr& a, const StructurePtr& b, const char* what) {
  if (a->sort != b->sort)
    throw SortError(std::string(what) + ": arguments have sorts " +
                    std::to_string(sort_index(a->sort)) + " and " +
                    std::to_string(sort_index(b->sort)));
}

}  // namespace

StructurePtr st_of(MTFormulaPtr f) {
  Sort s = f->sort;
  return mk_st(SKind::Of, s, std::move(f));
}

StructurePtr st_one(Sort sort) { return mk_st(SKind::HatOne, sort); }
StructurePtr st_zero(Sort sort) { return mk_st(SKind::CheckZero, sort); }

StructurePtr st_cap(StructurePtr a, StructurePtr b) {
  require_same_sort(a, b, "Scap");
  Sort s = a->sort;
  return mk_st(SKind::HatCap, s, nullptr, std::move(a), std::move(b));
}

StructurePtr st_cup(StructurePtr a, StructurePtr b) {
  require_same_sort(a, b, "Scup");
  Sort s = a->sort;
  return mk_st(SKind::CheckCup, s, nullptr, std::move(a), std::move(b));
}

StructurePtr st_rsup(StructurePtr a, StructurePtr b) {
  require_same_sort(a, b, "SrresR");
  Sort s = a->sort;
  return mk_st(SKind::CheckRSup, s, nullptr, std::move(a), std::move(b));
}

StructurePtr st_lsub(StructurePtr a, StructurePtr b) {
  require_same_sort(a, b, "SrresL");
  Sort s = a->sort;
  return mk_st(SKind::HatLSub, s, nullptr, std::move(a), std::move(b));
}

StructurePtr st_n(StructurePtr a) {
  if (a->sort != Sort::S1) throw SortError("SN expects a sort-1 argument");
  return mk_st(SKind::SN, Sort::S2, nullptr, std::move(a));
}

StructurePtr st_p(StructurePtr a) {
  if (a->sort != Sort::S2) throw SortError("SP expects a sort-2 argument");
  return mk_st(SKind::SP, Sort::S1, nullptr, std::move(a));
}

StructurePtr st_star(StructurePtr a) {
  Sort s = a->sort;
  return mk_st(SKind::Star, s, nullptr, std::move(a));
}

bool equal(const StructurePtr& a, const StructurePtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b || a->kind != b->kind || a->sort != b->sort) return false;
  switch (a->kind) {
    case SKind::Of: return equal(a->formula, b->formula);
    case SKind::HatOne:
    case SKind::CheckZero: return true;
    case SKind::SN:
    case SKind::SP:
    case SKind::Star: return equal(a->a, b->a);
    default: return equal(a->a, b->a) && equal(a->b, b->b);
  }
}

bool uses_star(const StructurePtr& s) {
  switch (s->kind) {
    case SKind::Of: return uses_sim(s->formula);
    case SKind::HatOne:
    case SKind::CheckZero: return false;
    case SKind::Star: return true;
    case SKind::SN:
    case SKind::SP: return uses_star(s->a);
    default: return uses_star(s->a) || uses_star(s->b);
  }
}

void collect_atoms(const StructurePtr& s, std::set<std::pair<std::string, Sort>>& out) {
  switch (s->kind) {
    case SKind::Of: collect_atoms(s->formula, out); break;
    case SKind::HatOne:
    case SKind::CheckZero: break;
    case SKind::SN:
    case SKind::SP:
    case SKind::Star: collect_atoms(s->a, out); break;
    default:
      collect_atoms(s->a, out);
      collect_atoms(s->b, out);
      break;
  }
}

Sequent make_sequent(StructurePtr lhs, StructurePtr rhs) {
  if (lhs->sort != rhs->sort) throw SortError("sequent sides have different sorts");
  Sort s = lhs->sort;
  return Sequent{std::move(lhs), std::move(rhs), s};
}

bool equal(const Sequent& a, const Sequent& b) {
  return a.sort == b.sort && equal(a.lhs, b.lhs) && equal(a.rhs, b.rhs);
}

ProofTreePtr make_proof(std::string rule_id, Sequent conclusion,
                        std::vector<ProofTreePtr> premises) {
  auto p = std::make_shared<ProofTree>();
  p->rule_id = std::move(rule_id);
  p->conclusion = std::move(conclusion);
  p->premises = std::move(premises);
  return p;
}

// ---------------------------------------------------------------------------
// S-expression reader

namespace {

struct SexpNode {
  bool is_atom;
  std::string atom;
  std::size_t position;
  std::vector<SexpNode> items;
};

struct SexpReader {
  const std::string& s;
  std::size_t pos = 0;

  explicit SexpReader(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size()) {
      if (std::isspace(static_cast<unsigned char>(s[pos]))) {
        pos++;
      } else if (s[pos] == ';') {  // line comment
        while (pos < s.size() && s[pos] != '\n') pos++;
      } else {
        break;
      }
    }
  }

  SexpNode read() {
    skip_ws();
    if (pos >= s.size()) throw SyntaxError(pos, "unexpected end of input");
    SexpNode node;
    node.position = pos;
    if (s[pos] == '(') {
      pos++;
      node.is_atom = false;
      while (true) {
        skip_ws();
        if (pos >= s.size()) throw SyntaxError(pos, "unterminated '('");
        if (s[pos] == ')') {
          pos++;
          break;
        }
        node.items.push_back(read());
      }
      return node;
    }
    if (s[pos] == ')') throw SyntaxError(pos, "unexpected ')'");
    node.is_atom = true;
    std::size_t start = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) ||
                              s[pos] == '_' || s[pos] == '-'))
      pos++;
    if (pos == start) throw SyntaxError(pos, "unexpected character");
    node.atom = s.substr(start, pos - start);
    return node;
  }
};

const std::map<std::string, std::pair<MKind, Sort>>& op_heads() {
  static const std::map<std::string, std::pair<MKind, Sort>> m = {
      {"one1", {MKind::One, Sort::S1}},   {"one2", {MKind::One, Sort::S2}},
      {"zero1", {MKind::Zero, Sort::S1}}, {"zero2", {MKind::Zero, Sort::S2}},
      {"meet1", {MKind::Meet, Sort::S1}}, {"meet2", {MKind::Meet, Sort::S2}},
      {"join1", {MKind::Join, Sort::S1}}, {"join2", {MKind::Join, Sort::S2}},
      {"p", {MKind::P, Sort::S1}},        {"n", {MKind::N, Sort::S2}},
      {"sim1", {MKind::Sim, Sort::S1}},   {"sim2", {MKind::Sim, Sort::S2}},
      {"rsup1", {MKind::ResSup, Sort::S1}}, {"rsup2", {MKind::ResSup, Sort::S2}},
      {"rsub1", {MKind::ResSub, Sort::S1}}, {"rsub2", {MKind::ResSub, Sort::S2}},
  };
  return m;
}

const std::map<std::string, std::pair<SKind, Sort>>& st_heads() {
  static const std::map<std::string, std::pair<SKind, Sort>> m = {
      {"Sone1", {SKind::HatOne, Sort::S1}},    {"Sone2", {SKind::HatOne, Sort::S2}},
      {"Szero1", {SKind::CheckZero, Sort::S1}}, {"Szero2", {SKind::CheckZero, Sort::S2}},
      {"Scap1", {SKind::HatCap, Sort::S1}},    {"Scap2", {SKind::HatCap, Sort::S2}},
      {"Scup1", {SKind::CheckCup, Sort::S1}},  {"Scup2", {SKind::CheckCup, Sort::S2}},
      {"SrresR1", {SKind::CheckRSup, Sort::S1}}, {"SrresR2", {SKind::CheckRSup, Sort::S2}},
      {"SrresL1", {SKind::HatLSub, Sort::S1}}, {"SrresL2", {SKind::HatLSub, Sort::S2}},
      {"SN", {SKind::SN, Sort::S2}},           {"SP", {SKind::SP, Sort::S1}},
      {"Sstar1", {SKind::Star, Sort::S1}},     {"Sstar2", {SKind::Star, Sort::S2}},
  };
  return m;
}

bool valid_mt_atom(const std::string& id, Sort& sort_out) {
  if (id.size() < 2 || !std::isalpha(static_cast<unsigned char>(id[0]))) return false;
  char last = id.back();
  if (last == '1')
    sort_out = Sort::S1;
  else if (last == '2')
    sort_out = Sort::S2;
  else
    return false;
  return true;
}

struct MtBuilder {
  MTFormulaPtr formula(const SexpNode& node) {
    MtValue v = value(node);
    if (auto* f = std::get_if<MTFormulaPtr>(&v)) return *f;
    throw SyntaxError(node.position, "expected an operational term");
  }

  StructurePtr structure(const SexpNode& node) {
    MtValue v = value(node);
    if (auto* f = std::get_if<MTFormulaPtr>(&v)) return st_of(*f);
    if (auto* s = std::get_if<StructurePtr>(&v)) return *s;
    throw SyntaxError(node.position, "expected a structure");
  }

  Sequent sequent(const SexpNode& node) {
    MtValue v = value(node);
    if (auto* s = std::get_if<Sequent>(&v)) return *s;
    throw SyntaxError(node.position, "expected (seq ...)");
  }

  ProofTreePtr proof(const SexpNode& node) {
    MtValue v = value(node);
    if (auto* p = std::get_if<ProofTreePtr>(&v)) return *p;
    throw SyntaxError(node.position, "expected (by ...)");
  }

  MtValue value(const SexpNode& node) {
    if (node.is_atom) return atom_value(node);
    if (node.items.empty()) throw SyntaxError(node.position, "empty list");
    const SexpNode& head = node.items.front();
    if (!head.is_atom) throw SyntaxError(head.position, "expected a head symbol");
    std::size_t argc = node.items.size() - 1;

    if (head.atom == "seq") {
      if (argc != 2) throw SyntaxError(node.position, "seq expects 2 arguments");
      return make_sequent(structure(node.items[1]), structure(node.items[2]));
    }
    if (head.atom == "by") {
      if (argc < 2) throw SyntaxError(node.position, "by expects a rule id and a sequent");
      const SexpNode& rid = node.items[1];
      if (!rid.is_atom) throw SyntaxError(rid.position, "expected a rule id");
      Sequent conclusion = sequent(node.items[2]);
      std::vector<ProofTreePtr> premises;
      for (std::size_t i = 3; i < node.items.size(); i++) premises.push_back(proof(node.items[i]));
      return make_proof(rid.atom, std::move(conclusion), std::move(premises));
    }

    if (auto it = op_heads().find(head.atom); it != op_heads().end()) {
      auto [kind, sort] = it->second;
      return op_node(node, kind, sort, argc);
    }
    if (auto it = st_heads().find(head.atom); it != st_heads().end()) {
      auto [kind, sort] = it->second;
      return st_node(node, kind, sort, argc);
    }
    throw SyntaxError(head.position, "unknown head '" + head.atom + "'");
  }

  MtValue atom_value(const SexpNode& node) {
    if (auto it = op_heads().find(node.atom); it != op_heads().end()) {
      auto [kind, sort] = it->second;
      if (kind == MKind::One) return mt_one(sort);
      if (kind == MKind::Zero) return mt_zero(sort);
      throw SyntaxError(node.position, "'" + node.atom + "' expects arguments");
    }
    if (auto it = st_heads().find(node.atom); it != st_heads().end()) {
      auto [kind, sort] = it->second;
      if (kind == SKind::HatOne) return st_one(sort);
      if (kind == SKind::CheckZero) return st_zero(sort);
      throw SyntaxError(node.position, "'" + node.atom + "' expects arguments");
    }
    Sort sort;
    if (!valid_mt_atom(node.atom, sort))
      throw SyntaxError(node.position, "atom '" + node.atom + "' must end in 1 or 2");
    return mt_atom(node.atom, sort);
  }

  MTFormulaPtr op_node(const SexpNode& node, MKind kind, Sort sort, std::size_t argc) {
    auto arg = [&](std::size_t i) { return formula(node.items[i + 1]); };
    auto check_sort = [&](const MTFormulaPtr& f, Sort want) {
      if (f->sort != want)
        throw SortError("argument of '" + node.items[0].atom + "' has sort " +
                        std::to_string(sort_index(f->sort)) + ", expected " +
                        std::to_string(sort_index(want)));
    };
    switch (kind) {
      case MKind::One:
      case MKind::Zero:
        if (argc != 0) throw SyntaxError(node.position, "constant takes no arguments");
        return kind == MKind::One ? mt_one(sort) : mt_zero(sort);
      case MKind::P: {
        if (argc != 1) throw SyntaxError(node.position, "p expects 1 argument");
        auto f = arg(0);
        check_sort(f, Sort::S2);
        return mt_p(f);
      }
      case MKind::N: {
        if (argc != 1) throw SyntaxError(node.position, "n expects 1 argument");
        auto f = arg(0);
        check_sort(f, Sort::S1);
        return mt_n(f);
      }
      case MKind::Sim: {
        if (argc != 1) throw SyntaxError(node.position, "sim expects 1 argument");
        auto f = arg(0);
        check_sort(f, sort);
        return mt_sim(f);
      }
      default: {
        if (argc != 2) throw SyntaxError(node.position, "binary head expects 2 arguments");
        auto x = arg(0), y = arg(1);
        check_sort(x, sort);
        check_sort(y, sort);
        switch (kind) {
          case MKind::Meet: return mt_meet(x, y);
          case MKind::Join: return mt_join(x, y);
          case MKind::ResSup: return mt_rsup(x, y);
          default: return mt_rsub(x, y);
        }
      }
    }
  }

  StructurePtr st_node(const SexpNode& node, SKind kind, Sort sort, std::size_t argc) {
    auto arg = [&](std::size_t i) { return structure(node.items[i + 1]); };
    auto check_sort = [&](const StructurePtr& s, Sort want) {
      if (s->sort != want)
        throw SortError("argument of '" + node.items[0].atom + "' has sort " +
                        std::to_string(sort_index(s->sort)) + ", expected " +
                        std::to_string(sort_index(want)));
    };
    switch (kind) {
      case SKind::HatOne:
      case SKind::CheckZero:
        if (argc != 0) throw SyntaxError(node.position, "constant takes no arguments");
        return kind == SKind::HatOne ? st_one(sort) : st_zero(sort);
      case SKind::SN: {
        if (argc != 1) throw SyntaxError(node.position, "SN expects 1 argument");
        auto s = arg(0);
        check_sort(s, Sort::S1);
        return st_n(s);
      }
      case SKind::SP: {
        if (argc != 1) throw SyntaxError(node.position, "SP expects 1 argument");
        auto s = arg(0);
        check_sort(s, Sort::S2);
        return st_p(s);
      }
      case SKind::Star: {
        if (argc != 1) throw SyntaxError(node.position, "Sstar expects 1 argument");
        auto s = arg(0);
        check_sort(s, sort);
        return st_star(s);
      }
      default: {
        if (argc != 2) throw SyntaxError(node.position, "binary head expects 2 arguments");
        auto x = arg(0), y = arg(1);
        check_sort(x, sort);
        check_sort(y, sort);
        switch (kind) {
          case SKind::HatCap: return st_cap(x, y);
          case SKind::CheckCup: return st_cup(x, y);
          case SKind::CheckRSup: return st_rsup(x, y);
          default: return st_lsub(x, y);
        }
      }
    }
  }
};

SexpNode read_single(const std::string& text) {
  SexpReader reader(text);
  SexpNode node = reader.read();
  reader.skip_ws();
  if (reader.pos < text.size()) throw SyntaxError(reader.pos, "trailing input");
  return node;
}

}  // namespace

MtValue parse_mt(const std::string& text) { return MtBuilder{}.value(read_single(text)); }

MTFormulaPtr parse_mt_formula(const std::string& text) {
  return MtBuilder{}.formula(read_single(text));
}

StructurePtr parse_mt_structure(const std::string& text) {
  return MtBuilder{}.structure(read_single(text));
}

Sequent parse_mt_sequent(const std::string& text) {
  return MtBuilder{}.sequent(read_single(text));
}

ProofTreePtr parse_mt_proof(const std::string& text) {
  return MtBuilder{}.proof(read_single(text));
}

// ---------------------------------------------------------------------------
// Printing

namespace {

const char* op_head_name(MKind k, Sort s) {
  bool one = s == Sort::S1;
  switch (k) {
    case MKind::One: return one ? "one1" : "one2";
    case MKind::Zero: return one ? "zero1" : "zero2";
    case MKind::Meet: return one ? "meet1" : "meet2";
    case MKind::Join: return one ? "join1" : "join2";
    case MKind::P: return "p";
    case MKind::N: return "n";
    case MKind::Sim: return one ? "sim1" : "sim2";
    case MKind::ResSup: return one ? "rsup1" : "rsup2";
    case MKind::ResSub: return one ? "rsub1" : "rsub2";
    default: return "?";
  }
}

const char* st_head_name(SKind k, Sort s) {
  bool one = s == Sort::S1;
  switch (k) {
    case SKind::HatOne: return one ? "Sone1" : "Sone2";
    case SKind::CheckZero: return one ? "Szero1" : "Szero2";
    case SKind::HatCap: return one ? "Scap1" : "Scap2";
    case SKind::CheckCup: return one ? "Scup1" : "Scup2";
    case SKind::CheckRSup: return one ? "SrresR1" : "SrresR2";
    case SKind::HatLSub: return one ? "SrresL1" : "SrresL2";
    case SKind::SN: return "SN";
    case SKind::SP: return "SP";
    case SKind::Star: return one ? "Sstar1" : "Sstar2";
    default: return "?";
  }
}

}  // namespace

std::string pretty_print(const MTFormulaPtr& f) {
  switch (f->kind) {
    case MKind::Atom: return f->name;
    case MKind::One:
    case MKind::Zero: return op_head_name(f->kind, f->sort);
    case MKind::P:
    case MKind::N:
    case MKind::Sim:
      return std::string("(") + op_head_name(f->kind, f->a->sort == f->sort ? f->sort : f->sort) +
             " " + pretty_print(f->a) + ")";
    default:
      return std::string("(") + op_head_name(f->kind, f->sort) + " " + pretty_print(f->a) + " " +
             pretty_print(f->b) + ")";
  }
}

std::string pretty_print(const StructurePtr& s) {
  switch (s->kind) {
    case SKind::Of: return pretty_print(s->formula);
    case SKind::HatOne:
    case SKind::CheckZero: return st_head_name(s->kind, s->sort);
    case SKind::SN:
    case SKind::SP:
    case SKind::Star:
      return std::string("(") + st_head_name(s->kind, s->sort) + " " + pretty_print(s->a) + ")";
    default:
      return std::string("(") + st_head_name(s->kind, s->sort) + " " + pretty_print(s->a) + " " +
             pretty_print(s->b) + ")";
  }
}

std::string pretty_print(const Sequent& s) {
  return "(seq " + pretty_print(s.lhs) + " " + pretty_print(s.rhs) + ")";
}

std::string pretty_print(const ProofTreePtr& p, int indent) {
  std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  std::string out = pad + "(by " + p->rule_id + " " + pretty_print(p->conclusion);
  for (const auto& sub : p->premises) out += "\n" + pretty_print(sub, indent + 1);
  out += ")";
  return out;
}

}  // namespace bilat
