#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "gdpr/formula.hpp"
#include "gdpr/gdp_algebra.hpp"
#include "gdpr/model.hpp"

namespace gdpr {

/// Algebra expression over named relations.
///
///   expr := NAME | select[formula](expr) | project[A,B,...](expr)
///         | union(expr,expr) | intersect(expr,expr) | join(expr,expr)
///         | not(expr)
///
/// `not` swaps the two components. It is not a closed-world complement.
class QueryExpr {
 public:
  enum class Kind { Relation, Select, Project, Union, Intersect, Join, Complement };

  static QueryExpr relation(std::string name);
  static QueryExpr select(Formula formula, QueryExpr operand);
  static QueryExpr project(std::vector<std::string> attributes, QueryExpr operand);
  static QueryExpr binary(Kind kind, QueryExpr left, QueryExpr right);
  static QueryExpr complement(QueryExpr operand);

  Kind kind() const { return node_->kind; }
  /// Relation name; empty for other kinds.
  const std::string& name() const { return node_->name; }
  /// Selection formula; `true` for other kinds.
  const Formula& formula() const { return node_->formula; }
  const std::vector<std::string>& attributes() const { return node_->attributes; }
  const QueryExpr& child(std::size_t i) const { return node_->children[i]; }
  std::size_t child_count() const { return node_->children.size(); }

  friend bool operator==(const QueryExpr& a, const QueryExpr& b);

 private:
  struct Node {
    Kind kind = Kind::Relation;
    std::string name;
    Formula formula = Formula::truth(true);
    std::vector<std::string> attributes;
    std::vector<QueryExpr> children;
  };
  explicit QueryExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// Throws ParseError carrying line:column and the expected tokens.
QueryExpr parse_query(std::string_view text);

/// Deterministic rendering; parse_query(print(e)) == e.
std::string print(const QueryExpr& e);

/// Scheme of the result without evaluating. Selection results keep the
/// operand's scheme, projections are named "<operand>_<A>_<B>", joins
/// "<left>_<right>". Throws UnknownRelation, SchemeMismatch or ScopeError.
SchemeRef infer_scheme(const QueryExpr& e, const Database& db);

/// Bottom-up evaluation with the generalized operators. Stored relations are
/// read through g_norm and g_reduce.
GenDisjParaRelation eval_query(const QueryExpr& e, const Database& db,
                               std::size_t cap = kDefaultCap);

}  // namespace gdpr
