#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nest {

// Modal formulas over atoms, bot, &, |, ->, [] and <>.
// Values are immutable; copies share subtrees.
class Formula {
 public:
  enum class Kind { Atom, Bottom, And, Or, Implies, Box, Dia };

  Formula() = default;  // empty handle; only valid after assignment

  static Formula atom(std::string name);
  static Formula bottom();
  static Formula top();  // sugar for bot -> bot
  static Formula conj(Formula l, Formula r);
  static Formula disj(Formula l, Formula r);
  static Formula implies(Formula l, Formula r);
  static Formula box(Formula body);
  static Formula dia(Formula body);

  bool valid() const { return node_ != nullptr; }
  Kind kind() const { return node_->kind; }
  const std::string& atom_name() const { return node_->name; }
  const Formula& left() const { return node_->a; }
  const Formula& right() const { return node_->b; }
  const Formula& body() const { return node_->a; }

  bool is_atom() const { return kind() == Kind::Atom; }
  bool is_binary() const;
  bool is_modal() const;

  bool operator==(const Formula& o) const;
  bool operator!=(const Formula& o) const { return !(*this == o); }

  // Total structural order, used for canonical sequent forms.
  // Returns <0, 0, >0.
  int compare(const Formula& o) const;

  // dp: dp(a) = dp(bot) = 1, modalities add 1, binary connectives take
  // max of the sides plus 1.  Used as cut rank.
  int depth() const;

  // Number of connectives + atoms; handy for test generators.
  int size() const;

  // Minimal-parentheses concrete syntax.
  std::string str() const;

 private:
  struct Node {
    Kind kind;
    std::string name;
    Formula a, b;
  };
  std::shared_ptr<const Node> node_;
  static Formula make(Node n);
};

struct ParseError : std::runtime_error {
  size_t offset;
  std::string expected;
  ParseError(size_t off, std::string exp, const std::string& msg)
      : std::runtime_error(msg), offset(off), expected(std::move(exp)) {}
};

// Parses the grammar
//   imp  := or ('->' imp)?           (right associative)
//   or   := and ('|' and)*
//   and  := unary ('&' unary)*
//   unary:= ('[]' | '<>')* primary
//   primary := atom | 'bot' | 'top' | '(' imp ')'
// Atoms match [a-z][a-zA-Z0-9_]*; 'top' expands to bot -> bot.
Formula parse_formula(std::string_view text);

}  // namespace nest
