#include "gdpr/query.hpp"

#include <stdexcept>

#include "gdpr/error.hpp"
#include "lexer.hpp"
#include "parse_formula.hpp"

namespace gdpr {

namespace {

using detail::Lexer;
using detail::TokenKind;

void require_identifier(const std::string& s, const char* what) {
  if (!detail::plain_identifier(s))
    throw ValidationError(std::string(what) + " '" + s + "' is not an identifier");
}

const char* keyword(QueryExpr::Kind k) {
  switch (k) {
    case QueryExpr::Kind::Select: return "select";
    case QueryExpr::Kind::Project: return "project";
    case QueryExpr::Kind::Union: return "union";
    case QueryExpr::Kind::Intersect: return "intersect";
    case QueryExpr::Kind::Join: return "join";
    case QueryExpr::Kind::Complement: return "not";
    case QueryExpr::Kind::Relation: break;
  }
  return "";
}

const std::vector<std::string>& expression_start() {
  static const std::vector<std::string> v{"relation name", "select", "project", "union",
                                          "intersect",     "join",   "not"};
  return v;
}

class QueryParser {
 public:
  explicit QueryParser(std::string_view text) : lex_(text) {}

  QueryExpr parse() {
    QueryExpr e = expr();
    if (lex_.peek().kind != TokenKind::End)
      lex_.fail("unexpected " + Lexer::describe(lex_.peek()), {"end of input"});
    return e;
  }

 private:
  QueryExpr expr() {
    if (lex_.peek().kind != TokenKind::Identifier)
      lex_.fail("unexpected " + Lexer::describe(lex_.peek()), expression_start());
    const std::string word = lex_.next().text;
    // A keyword only starts an operator when its bracket follows, so relations
    // may still be called "union" or "not".
    if (word == "select" && lex_.at_symbol('[')) {
      lex_.next();
      Formula f = detail::parse_formula(lex_);
      lex_.expect(']');
      return QueryExpr::select(std::move(f), parenthesized());
    }
    if (word == "project" && lex_.at_symbol('[')) {
      lex_.next();
      std::vector<std::string> attrs{lex_.expect_identifier("attribute name").text};
      while (lex_.accept(',')) attrs.push_back(lex_.expect_identifier("attribute name").text);
      if (!lex_.at_symbol(']'))
        lex_.fail("unexpected " + Lexer::describe(lex_.peek()), {"','", "']'"});
      lex_.next();
      return QueryExpr::project(std::move(attrs), parenthesized());
    }
    for (auto k : {QueryExpr::Kind::Union, QueryExpr::Kind::Intersect,
                   QueryExpr::Kind::Join}) {
      if (word == keyword(k) && lex_.at_symbol('(')) {
        lex_.next();
        QueryExpr left = expr();
        lex_.expect(',');
        QueryExpr right = expr();
        lex_.expect(')');
        return QueryExpr::binary(k, std::move(left), std::move(right));
      }
    }
    if (word == "not" && lex_.at_symbol('(')) return QueryExpr::complement(parenthesized());
    return QueryExpr::relation(word);
  }

  QueryExpr parenthesized() {
    lex_.expect('(');
    QueryExpr e = expr();
    lex_.expect(')');
    return e;
  }

  Lexer lex_;
};

std::string projected_name(const Scheme& s, const std::vector<std::string>& attrs) {
  std::string name = s.name();
  for (const auto& a : attrs) name += "_" + a;
  return name;
}

// Result scheme of a node given its operands' schemes.
SchemeRef node_scheme(const QueryExpr& e, const std::vector<SchemeRef>& operands) {
  switch (e.kind()) {
    case QueryExpr::Kind::Relation: break;
    case QueryExpr::Kind::Select:
      (void)ScopedFormula(e.formula(), operands[0]);  // scope check only
      return operands[0];
    case QueryExpr::Kind::Project:
      return sub_scheme(*operands[0], e.attributes(),
                        projected_name(*operands[0], e.attributes()));
    case QueryExpr::Kind::Union:
    case QueryExpr::Kind::Intersect:
      if (*operands[0] != *operands[1])
        throw SchemeMismatch(std::string(keyword(e.kind())) + " operands have schemes '" +
                             operands[0]->name() + "' and '" + operands[1]->name() +
                             "' with different attributes");
      return operands[0];
    case QueryExpr::Kind::Join:
      return join_scheme(*operands[0], *operands[1],
                         operands[0]->name() + "_" + operands[1]->name());
    case QueryExpr::Kind::Complement: return operands[0];
  }
  return nullptr;
}

}  // namespace

QueryExpr QueryExpr::relation(std::string name) {
  require_identifier(name, "relation name");
  Node n;
  n.name = std::move(name);
  return QueryExpr(std::make_shared<const Node>(std::move(n)));
}

QueryExpr QueryExpr::select(Formula formula, QueryExpr operand) {
  Node n;
  n.kind = Kind::Select;
  n.formula = std::move(formula);
  n.children.push_back(std::move(operand));
  return QueryExpr(std::make_shared<const Node>(std::move(n)));
}

QueryExpr QueryExpr::project(std::vector<std::string> attributes, QueryExpr operand) {
  if (attributes.empty()) throw ValidationError("projection onto no attributes");
  for (const auto& a : attributes) require_identifier(a, "attribute name");
  Node n;
  n.kind = Kind::Project;
  n.attributes = std::move(attributes);
  n.children.push_back(std::move(operand));
  return QueryExpr(std::make_shared<const Node>(std::move(n)));
}

QueryExpr QueryExpr::binary(Kind kind, QueryExpr left, QueryExpr right) {
  if (kind != Kind::Union && kind != Kind::Intersect && kind != Kind::Join)
    throw std::invalid_argument("not a binary query operator");
  Node n;
  n.kind = kind;
  n.children.push_back(std::move(left));
  n.children.push_back(std::move(right));
  return QueryExpr(std::make_shared<const Node>(std::move(n)));
}

QueryExpr QueryExpr::complement(QueryExpr operand) {
  Node n;
  n.kind = Kind::Complement;
  n.children.push_back(std::move(operand));
  return QueryExpr(std::make_shared<const Node>(std::move(n)));
}

bool operator==(const QueryExpr& a, const QueryExpr& b) {
  if (a.node_ == b.node_) return true;
  return a.kind() == b.kind() && a.name() == b.name() && a.formula() == b.formula() &&
         a.attributes() == b.attributes() && a.node_->children == b.node_->children;
}

QueryExpr parse_query(std::string_view text) { return QueryParser(text).parse(); }

std::string print(const QueryExpr& e) {
  switch (e.kind()) {
    case QueryExpr::Kind::Relation: return e.name();
    case QueryExpr::Kind::Select:
      return "select[" + print(e.formula()) + "](" + print(e.child(0)) + ")";
    case QueryExpr::Kind::Project: {
      std::string out = "project[";
      for (std::size_t i = 0; i < e.attributes().size(); ++i)
        out += (i ? "," : "") + e.attributes()[i];
      return out + "](" + print(e.child(0)) + ")";
    }
    case QueryExpr::Kind::Complement: return "not(" + print(e.child(0)) + ")";
    default:
      return std::string(keyword(e.kind())) + "(" + print(e.child(0)) + "," +
             print(e.child(1)) + ")";
  }
}

SchemeRef infer_scheme(const QueryExpr& e, const Database& db) {
  if (e.kind() == QueryExpr::Kind::Relation) return db.relation(e.name()).scheme;
  std::vector<SchemeRef> operands;
  for (std::size_t i = 0; i < e.child_count(); ++i)
    operands.push_back(infer_scheme(e.child(i), db));
  return node_scheme(e, operands);
}

GenDisjParaRelation eval_query(const QueryExpr& e, const Database& db, std::size_t cap) {
  if (e.kind() == QueryExpr::Kind::Relation)
    return g_reduce(g_norm(db.relation(e.name())), cap);
  std::vector<GenDisjParaRelation> args;
  std::vector<SchemeRef> operands;
  for (std::size_t i = 0; i < e.child_count(); ++i) {
    args.push_back(eval_query(e.child(i), db, cap));
    operands.push_back(args.back().scheme);
  }
  const SchemeRef scheme = node_scheme(e, operands);
  switch (e.kind()) {
    case QueryExpr::Kind::Select:
      return g_select(args[0], ScopedFormula(e.formula(), scheme), cap);
    case QueryExpr::Kind::Project: return g_project(args[0], scheme, cap);
    case QueryExpr::Kind::Union: return g_union(args[0], args[1], cap);
    case QueryExpr::Kind::Intersect: return g_intersect(args[0], args[1], cap);
    case QueryExpr::Kind::Join: return g_join(args[0], args[1], scheme, cap);
    case QueryExpr::Kind::Complement: return g_complement(args[0], cap);
    case QueryExpr::Kind::Relation: break;
  }
  return args[0];
}

}  // namespace gdpr
