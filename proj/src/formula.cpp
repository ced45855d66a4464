#include "gdpr/formula.hpp"

#include "gdpr/error.hpp"
#include "lexer.hpp"
#include "parse_formula.hpp"

namespace gdpr {

namespace {

bool keyword(std::string_view s) { return s == "true" || s == "false"; }

}  // namespace

Operand::Operand(std::string text_, bool quoted_)
    : text(std::move(text_)), quoted(quoted_) {
  if (!detail::plain_identifier(text) || keyword(text)) quoted = true;
}

Formula Formula::truth(bool value) {
  return Formula(std::make_shared<const Node>(
      Node{value ? Kind::True : Kind::False, {}, {}, {}}));
}

Formula Formula::equal(Operand lhs, Operand rhs) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::Equal, std::move(lhs), std::move(rhs), {}}));
}

Formula Formula::negate(Formula f) {
  return Formula(std::make_shared<const Node>(Node{Kind::Not, {}, {}, {std::move(f)}}));
}

Formula Formula::conjunction(Formula a, Formula b) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::And, {}, {}, {std::move(a), std::move(b)}}));
}

Formula Formula::disjunction(Formula a, Formula b) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::Or, {}, {}, {std::move(a), std::move(b)}}));
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  return a.node_->kind == b.node_->kind && a.node_->lhs == b.node_->lhs &&
         a.node_->rhs == b.node_->rhs && a.node_->children == b.node_->children;
}

ScopedFormula::ScopedFormula(Formula formula, SchemeRef scheme)
    : formula_(std::move(formula)), scheme_(std::move(scheme)) {
  if (!scheme_) throw ScopeError("formula has no scheme");
  compile(formula_);
}

std::size_t ScopedFormula::compile(const Formula& f) {
  Step step;
  step.kind = f.kind();
  if (f.kind() == Formula::Kind::Equal) {
    auto resolve = [&](const Operand& o) -> std::optional<std::size_t> {
      if (o.quoted) return std::nullopt;
      return scheme_->position(o.text);
    };
    auto l = resolve(f.lhs());
    auto r = resolve(f.rhs());
    const Operand* constant = nullptr;
    if (l && r) {
      const auto& la = scheme_->attribute(*l);
      const auto& ra = scheme_->attribute(*r);
      if (la.domain != ra.domain)
        throw ScopeError("attributes '" + la.name + "' and '" + ra.name +
                         "' have different domains");
      step.attr = *l;
      step.against_attr = true;
      step.other = *r;
    } else if (l) {
      step.attr = *l;
      constant = &f.rhs();
    } else if (r) {
      step.attr = *r;
      constant = &f.lhs();
    } else {
      throw ScopeError("atom '" + f.lhs().text + " = " + f.rhs().text +
                       "' names no attribute of scheme '" + scheme_->name() + "'");
    }
    if (constant) {
      const auto& a = scheme_->attribute(step.attr);
      auto v = a.value_index(constant->text);
      if (!v)
        throw ScopeError("constant '" + constant->text +
                         "' is not in the domain of attribute '" + a.name + "'");
      step.other = *v;
    }
  }
  const std::size_t index = steps_.size();
  steps_.push_back(step);
  for (std::size_t i = 0; i < f.child_count(); ++i) {
    auto c = compile(f.child(i));
    steps_[index].children.push_back(c);
  }
  return index;
}

bool ScopedFormula::eval(std::size_t index, const Tuple& t) const {
  const Step& s = steps_[index];
  switch (s.kind) {
    case Formula::Kind::True: return true;
    case Formula::Kind::False: return false;
    case Formula::Kind::Equal:
      return s.against_attr ? t[s.attr] == t[s.other] : t[s.attr] == s.other;
    case Formula::Kind::Not: return !eval(s.children[0], t);
    case Formula::Kind::And:
      return eval(s.children[0], t) && eval(s.children[1], t);
    case Formula::Kind::Or:
      return eval(s.children[0], t) || eval(s.children[1], t);
  }
  return false;
}

bool eval_formula(const ScopedFormula& f, const Tuple& t) { return f(t); }

namespace detail {

namespace {

Formula parse_disjunction(Lexer& lex);

Operand parse_operand(Lexer& lex) {
  const Token& t = lex.peek();
  if (t.kind == TokenKind::Quoted) return Operand(lex.next().text, true);
  if (t.kind == TokenKind::Identifier && !keyword(t.text))
    return Operand(lex.next().text, false);
  lex.fail("unexpected " + Lexer::describe(t), {"attribute", "constant"});
}

Formula parse_primary(Lexer& lex) {
  if (lex.accept('(')) {
    Formula f = parse_disjunction(lex);
    lex.expect(')');
    return f;
  }
  if (lex.at_keyword("true")) {
    lex.next();
    return Formula::truth(true);
  }
  if (lex.at_keyword("false")) {
    lex.next();
    return Formula::truth(false);
  }
  const Token& t = lex.peek();
  if (t.kind != TokenKind::Identifier && t.kind != TokenKind::Quoted)
    lex.fail("unexpected " + Lexer::describe(t),
             {"'('", "'!'", "'true'", "'false'", "attribute", "constant"});
  Operand lhs = parse_operand(lex);
  lex.expect('=');
  Operand rhs = parse_operand(lex);
  return Formula::equal(std::move(lhs), std::move(rhs));
}

Formula parse_unary(Lexer& lex) {
  if (lex.accept('!')) return Formula::negate(parse_unary(lex));
  return parse_primary(lex);
}

Formula parse_conjunction(Lexer& lex) {
  Formula f = parse_unary(lex);
  while (lex.accept('&')) f = Formula::conjunction(std::move(f), parse_unary(lex));
  return f;
}

Formula parse_disjunction(Lexer& lex) {
  Formula f = parse_conjunction(lex);
  while (lex.accept('|')) f = Formula::disjunction(std::move(f), parse_conjunction(lex));
  return f;
}

}  // namespace

Formula parse_formula(Lexer& lex) { return parse_disjunction(lex); }

}  // namespace detail

Formula parse_formula_syntax(std::string_view text) {
  detail::Lexer lex(text);
  Formula f = detail::parse_formula(lex);
  if (lex.peek().kind != detail::TokenKind::End)
    lex.fail("unexpected " + detail::Lexer::describe(lex.peek()),
             {"'&'", "'|'", "end of input"});
  return f;
}

ScopedFormula parse_formula(std::string_view text, SchemeRef scheme) {
  return ScopedFormula(parse_formula_syntax(text), std::move(scheme));
}

namespace {

std::string print_operand(const Operand& o) {
  return o.quoted ? "'" + o.text + "'" : o.text;
}

int precedence(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::Or: return 1;
    case Formula::Kind::And: return 2;
    default: return 3;
  }
}

// `min` is the weakest binding that may appear unparenthesized here.
std::string print(const Formula& f, int min) {
  std::string out;
  switch (f.kind()) {
    case Formula::Kind::True: return "true";
    case Formula::Kind::False: return "false";
    case Formula::Kind::Equal:
      return print_operand(f.lhs()) + " = " + print_operand(f.rhs());
    case Formula::Kind::Not:
      if (f.child(0).kind() == Formula::Kind::Equal)
        return "!(" + print(f.child(0), 1) + ")";
      return "!" + print(f.child(0), 3);
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      const int p = precedence(f.kind());
      // Left-associative: the right operand of the same operator needs parens.
      out = print(f.child(0), p) + (f.kind() == Formula::Kind::And ? " & " : " | ") +
            print(f.child(1), p + 1);
      return p < min ? "(" + out + ")" : out;
    }
  }
  return out;
}

}  // namespace

std::string print(const Formula& f) { return print(f, 1); }

}  // namespace gdpr
