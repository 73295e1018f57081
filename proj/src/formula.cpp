#include "bilat/formula.hpp"

#include <cctype>
#include <sstream>

namespace bilat {

FormulaPtr atom(const std::string& name) {
  auto f = std::make_shared<Formula>();
  f->kind = FKind::Atom;
  f->name = name;
  return f;
}

FormulaPtr truth(TruthConst tc) {
  auto f = std::make_shared<Formula>();
  f->kind = FKind::TruthConst;
  f->tc = tc;
  return f;
}

FormulaPtr neg(FormulaPtr a) {
  auto f = std::make_shared<Formula>();
  f->kind = FKind::Neg;
  f->a = std::move(a);
  return f;
}

FormulaPtr confl(FormulaPtr a) {
  auto f = std::make_shared<Formula>();
  f->kind = FKind::Confl;
  f->a = std::move(a);
  return f;
}

FormulaPtr bin(BinOp op, FormulaPtr a, FormulaPtr b) {
  auto f = std::make_shared<Formula>();
  f->kind = FKind::Bin;
  f->op = op;
  f->a = std::move(a);
  f->b = std::move(b);
  return f;
}

bool equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b || a->kind != b->kind) return false;
  switch (a->kind) {
    case FKind::Atom: return a->name == b->name;
    case FKind::TruthConst: return a->tc == b->tc;
    case FKind::Neg:
    case FKind::Confl: return equal(a->a, b->a);
    case FKind::Bin: return a->op == b->op && equal(a->a, b->a) && equal(a->b, b->b);
  }
  return false;
}

int complexity(const FormulaPtr& f) {
  switch (f->kind) {
    case FKind::Atom:
    case FKind::TruthConst: return 0;
    case FKind::Neg:
    case FKind::Confl: return 1 + complexity(f->a);
    case FKind::Bin: return 1 + complexity(f->a) + complexity(f->b);
  }
  return 0;
}

bool uses_conflation(const FormulaPtr& f) {
  switch (f->kind) {
    case FKind::Atom:
    case FKind::TruthConst: return false;
    case FKind::Confl: return true;
    case FKind::Neg: return uses_conflation(f->a);
    case FKind::Bin: return uses_conflation(f->a) || uses_conflation(f->b);
  }
  return false;
}

void collect_atoms(const FormulaPtr& f, std::set<std::string>& out) {
  switch (f->kind) {
    case FKind::Atom: out.insert(f->name); break;
    case FKind::TruthConst: break;
    case FKind::Neg:
    case FKind::Confl: collect_atoms(f->a, out); break;
    case FKind::Bin:
      collect_atoms(f->a, out);
      collect_atoms(f->b, out);
      break;
  }
}

namespace {

struct Parser {
  const std::string& s;
  std::size_t pos = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) pos++;
  }

  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  bool eat(char c) {
    if (peek() == c) {
      pos++;
      return true;
    }
    return false;
  }

  FormulaPtr parse() {
    FormulaPtr f = tier2();
    skip_ws();
    return f;
  }

  // tier2 := tier1 (("|" | "+") tier1)*   left-assoc, homogeneous per chain
  FormulaPtr tier2() {
    FormulaPtr lhs = tier1();
    char first = '\0';
    while (true) {
      char c = peek();
      if (c != '|' && c != '+') break;
      if (first == '\0') first = c;
      if (c != first)
        throw MixedTierError(pos, std::string("operator '") + c + "' mixed with '" + first +
                                      "' without parentheses");
      pos++;
      lhs = bin(c == '|' ? BinOp::Or : BinOp::Plus, lhs, tier1());
    }
    return lhs;
  }

  // tier1 := unary (("&" | "*") unary)*   left-assoc, homogeneous
  FormulaPtr tier1() {
    FormulaPtr lhs = unary();
    char first = '\0';
    while (true) {
      char c = peek();
      if (c != '&' && c != '*') break;
      if (first == '\0') first = c;
      if (c != first)
        throw MixedTierError(pos, std::string("operator '") + c + "' mixed with '" + first +
                                      "' without parentheses");
      pos++;
      lhs = bin(c == '&' ? BinOp::And : BinOp::Tens, lhs, unary());
    }
    return lhs;
  }

  FormulaPtr unary() {
    if (eat('!')) return neg(unary());
    if (eat('-')) return confl(unary());
    return atomic();
  }

  FormulaPtr atomic() {
    skip_ws();
    if (eat('(')) {
      FormulaPtr f = tier2();
      if (!eat(')')) throw SyntaxError(pos, "expected ')'");
      return f;
    }
    if (pos >= s.size() || !std::isalpha(static_cast<unsigned char>(s[pos])))
      throw SyntaxError(pos, "expected atom, constant, or '('");
    std::size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      pos++;
    std::string id = s.substr(start, pos - start);
    if (id == "t") return truth(TruthConst::T);
    if (id == "f") return truth(TruthConst::F);
    if (id == "top") return truth(TruthConst::Top);
    if (id == "bot") return truth(TruthConst::Bot);
    return atom(id);
  }
};

char op_char(BinOp op) {
  switch (op) {
    case BinOp::And: return '&';
    case BinOp::Or: return '|';
    case BinOp::Tens: return '*';
    case BinOp::Plus: return '+';
  }
  return '?';
}

int tier_of(const FormulaPtr& f) {
  // 0 = atomic/unary, 1 = & or *, 2 = | or +
  if (f->kind != FKind::Bin) return 0;
  return (f->op == BinOp::And || f->op == BinOp::Tens) ? 1 : 2;
}

void print_rec(const FormulaPtr& f, std::ostringstream& out, int ctx_tier, BinOp ctx_op,
               bool right_side) {
  switch (f->kind) {
    case FKind::Atom: out << f->name; return;
    case FKind::TruthConst:
      switch (f->tc) {
        case TruthConst::T: out << "t"; return;
        case TruthConst::F: out << "f"; return;
        case TruthConst::Top: out << "top"; return;
        case TruthConst::Bot: out << "bot"; return;
      }
      return;
    case FKind::Neg:
    case FKind::Confl: {
      out << (f->kind == FKind::Neg ? '!' : '-');
      bool need = f->a->kind == FKind::Bin;
      if (need) out << '(';
      print_rec(f->a, out, 0, BinOp::And, false);
      if (need) out << ')';
      return;
    }
    case FKind::Bin: {
      int t = tier_of(f);
      // Parenthesize when the chain would be ambiguous: looser tier inside a
      // tighter context, a different operator at the same tier, or any
      // same-tier operand on the right of a left-associative chain.
      bool need = ctx_tier != 0 && (t > ctx_tier || (t == ctx_tier && (f->op != ctx_op || right_side)));
      if (need) out << '(';
      print_rec(f->a, out, t, f->op, false);
      out << ' ' << op_char(f->op) << ' ';
      print_rec(f->b, out, t, f->op, true);
      if (need) out << ')';
      return;
    }
  }
}

}  // namespace

FormulaPtr parse_formula(const std::string& text) {
  Parser p(text);
  FormulaPtr f = p.parse();
  if (p.pos < text.size()) throw SyntaxError(p.pos, "trailing input");
  return f;
}

std::string pretty_print(const FormulaPtr& f) {
  std::ostringstream out;
  print_rec(f, out, 0, BinOp::And, false);
  return out.str();
}

std::pair<FormulaPtr, FormulaPtr> parse_formula_sequent(const std::string& text) {
  auto sep = text.find("|-");
  if (sep == std::string::npos) throw SyntaxError(0, "expected '|-'");
  FormulaPtr lhs = parse_formula(text.substr(0, sep));
  FormulaPtr rhs = parse_formula(text.substr(sep + 2));
  return {lhs, rhs};
}

std::string print_formula_sequent(const FormulaPtr& lhs, const FormulaPtr& rhs) {
  return pretty_print(lhs) + " |- " + pretty_print(rhs);
}

}  // namespace bilat
