#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "gdpr/model.hpp"

namespace gdpr {

/// One side of an equality atom as written. A quoted operand is always a
/// constant; an unquoted one names an attribute when the scheme has one by
/// that name.
struct Operand {
  std::string text;
  bool quoted = false;

  Operand() = default;
  Operand(std::string text, bool quoted = false);

  friend bool operator==(const Operand&, const Operand&) = default;
};

/// Selection formula syntax tree: equality atoms under !, & and |.
class Formula {
 public:
  enum class Kind { True, False, Equal, Not, And, Or };

  static Formula truth(bool value);
  static Formula equal(Operand lhs, Operand rhs);
  static Formula negate(Formula f);
  static Formula conjunction(Formula a, Formula b);
  static Formula disjunction(Formula a, Formula b);

  Kind kind() const { return node_->kind; }
  const Operand& lhs() const { return node_->lhs; }
  const Operand& rhs() const { return node_->rhs; }
  const Formula& child(std::size_t i) const { return node_->children[i]; }
  std::size_t child_count() const { return node_->children.size(); }

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node {
    Kind kind;
    Operand lhs, rhs;
    std::vector<Formula> children;
  };
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// A formula resolved against a scheme, ready for evaluation on its tuples.
class ScopedFormula {
 public:
  /// Throws ScopeError for unknown attributes, out-of-domain constants, atoms
  /// comparing two constants, or attributes with different domains.
  ScopedFormula(Formula formula, SchemeRef scheme);

  const Formula& formula() const { return formula_; }
  const SchemeRef& scheme() const { return scheme_; }

  bool operator()(const Tuple& t) const { return eval(0, t); }

 private:
  struct Step {
    Formula::Kind kind;
    std::size_t attr = 0;
    bool against_attr = false;
    std::size_t other = 0;  // attribute position or constant value id
    std::vector<std::size_t> children;
  };

  std::size_t compile(const Formula& f);
  bool eval(std::size_t step, const Tuple& t) const;

  Formula formula_;
  SchemeRef scheme_;
  std::vector<Step> steps_;
};

/// Parses `!`, `&`, `|` (that precedence order), parentheses, `true`, `false`
/// and `a = b` atoms.
Formula parse_formula_syntax(std::string_view text);
ScopedFormula parse_formula(std::string_view text, SchemeRef scheme);

bool eval_formula(const ScopedFormula& f, const Tuple& t);

std::string print(const Formula& f);

}  // namespace gdpr
