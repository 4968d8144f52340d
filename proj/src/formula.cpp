#include "nest/formula.hpp"

#include <algorithm>
#include <cctype>

namespace nest {

Formula Formula::make(Node n) {
  Formula f;
  f.node_ = std::make_shared<const Node>(std::move(n));
  return f;
}

Formula Formula::atom(std::string name) {
  return make(Node{Kind::Atom, std::move(name), {}, {}});
}
Formula Formula::bottom() { return make(Node{Kind::Bottom, {}, {}, {}}); }
Formula Formula::top() { return implies(bottom(), bottom()); }
Formula Formula::conj(Formula l, Formula r) {
  return make(Node{Kind::And, {}, std::move(l), std::move(r)});
}
Formula Formula::disj(Formula l, Formula r) {
  return make(Node{Kind::Or, {}, std::move(l), std::move(r)});
}
Formula Formula::implies(Formula l, Formula r) {
  return make(Node{Kind::Implies, {}, std::move(l), std::move(r)});
}
Formula Formula::box(Formula body) {
  return make(Node{Kind::Box, {}, std::move(body), {}});
}
Formula Formula::dia(Formula body) {
  return make(Node{Kind::Dia, {}, std::move(body), {}});
}

bool Formula::is_binary() const {
  Kind k = kind();
  return k == Kind::And || k == Kind::Or || k == Kind::Implies;
}
bool Formula::is_modal() const {
  Kind k = kind();
  return k == Kind::Box || k == Kind::Dia;
}

bool Formula::operator==(const Formula& o) const { return compare(o) == 0; }

int Formula::compare(const Formula& o) const {
  if (node_ == o.node_) return 0;
  if (kind() != o.kind()) return static_cast<int>(kind()) < static_cast<int>(o.kind()) ? -1 : 1;
  switch (kind()) {
    case Kind::Atom:
      return atom_name().compare(o.atom_name());
    case Kind::Bottom:
      return 0;
    case Kind::Box:
    case Kind::Dia:
      return body().compare(o.body());
    default: {
      int c = left().compare(o.left());
      if (c != 0) return c;
      return right().compare(o.right());
    }
  }
}

int Formula::depth() const {
  switch (kind()) {
    case Kind::Atom:
    case Kind::Bottom:
      return 1;
    case Kind::Box:
    case Kind::Dia:
      return body().depth() + 1;
    default:
      return std::max(left().depth(), right().depth()) + 1;
  }
}

int Formula::size() const {
  switch (kind()) {
    case Kind::Atom:
    case Kind::Bottom:
      return 1;
    case Kind::Box:
    case Kind::Dia:
      return body().size() + 1;
    default:
      return left().size() + right().size() + 1;
  }
}

namespace {

// Precedence levels: 0 = ->, 1 = |, 2 = &, 3 = unary/primary.
int prec(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::Implies:
      return 0;
    case Formula::Kind::Or:
      return 1;
    case Formula::Kind::And:
      return 2;
    default:
      return 3;
  }
}

void print_rec(const Formula& f, int min_prec, std::string& out) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      out += f.atom_name();
      return;
    case Formula::Kind::Bottom:
      out += "bot";
      return;
    case Formula::Kind::Box:
    case Formula::Kind::Dia: {
      out += f.kind() == Formula::Kind::Box ? "[]" : "<>";
      const Formula& b = f.body();
      if (prec(b.kind()) < 3) {
        out += '(';
        print_rec(b, 0, out);
        out += ')';
      } else {
        print_rec(b, 3, out);
      }
      return;
    }
    default: {
      int p = prec(f.kind());
      bool parens = p < min_prec;
      if (parens) out += '(';
      if (f.kind() == Formula::Kind::Implies) {
        // right associative: left side needs strictly higher level
        print_rec(f.left(), p + 1, out);
        out += " -> ";
        print_rec(f.right(), p, out);
      } else {
        // & and | parse left associative
        const char* op = f.kind() == Formula::Kind::And ? " & " : " | ";
        print_rec(f.left(), p, out);
        out += op;
        print_rec(f.right(), p + 1, out);
      }
      if (parens) out += ')';
      return;
    }
  }
}

struct Lexer {
  std::string_view s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) pos++;
  }
  bool eat(std::string_view tok) {
    skip_ws();
    if (s.substr(pos, tok.size()) == tok) {
      pos += tok.size();
      return true;
    }
    return false;
  }
  bool peek(std::string_view tok) {
    skip_ws();
    return s.substr(pos, tok.size()) == tok;
  }
  [[noreturn]] void fail(const std::string& expected) {
    throw ParseError(pos, expected,
                     "syntax error at offset " + std::to_string(pos) + ": expected " + expected);
  }
};

Formula parse_imp(Lexer& lx);

Formula parse_primary(Lexer& lx) {
  lx.skip_ws();
  if (lx.eat("(")) {
    Formula f = parse_imp(lx);
    if (!lx.eat(")")) lx.fail("')'");
    return f;
  }
  if (lx.pos < lx.s.size() && std::islower(static_cast<unsigned char>(lx.s[lx.pos]))) {
    size_t start = lx.pos;
    lx.pos++;
    while (lx.pos < lx.s.size() &&
           (std::isalnum(static_cast<unsigned char>(lx.s[lx.pos])) || lx.s[lx.pos] == '_'))
      lx.pos++;
    std::string name(lx.s.substr(start, lx.pos - start));
    if (name == "bot") return Formula::bottom();
    if (name == "top") return Formula::top();
    return Formula::atom(std::move(name));
  }
  lx.fail("atom, 'bot', 'top', '(', '[]' or '<>'");
}

Formula parse_unary(Lexer& lx) {
  if (lx.eat("[]")) return Formula::box(parse_unary(lx));
  if (lx.eat("<>")) return Formula::dia(parse_unary(lx));
  return parse_primary(lx);
}

Formula parse_and(Lexer& lx) {
  Formula f = parse_unary(lx);
  while (lx.eat("&")) f = Formula::conj(f, parse_unary(lx));
  return f;
}

Formula parse_or(Lexer& lx) {
  Formula f = parse_and(lx);
  // careful: '|' but not part of some longer token (none exist)
  while (!lx.peek("->") && lx.eat("|")) f = Formula::disj(f, parse_and(lx));
  return f;
}

Formula parse_imp(Lexer& lx) {
  Formula f = parse_or(lx);
  if (lx.eat("->")) return Formula::implies(f, parse_imp(lx));
  return f;
}

}  // namespace

std::string Formula::str() const {
  std::string out;
  print_rec(*this, 0, out);
  return out;
}

Formula parse_formula(std::string_view text) {
  Lexer lx{text};
  Formula f = parse_imp(lx);
  lx.skip_ws();
  if (lx.pos != text.size()) lx.fail("end of input");
  return f;
}

}  // namespace nest
