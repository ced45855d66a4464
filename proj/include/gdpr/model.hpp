#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gdpr {

/// Index of a value inside its attribute's declared domain.
using ValueId = std::uint32_t;

/// Default ceiling on objects generated by any single enumeration step.
inline constexpr std::size_t kDefaultCap = 1'000'000;

struct Attribute {
  std::string name;
  std::vector<std::string> domain;

  std::optional<ValueId> value_index(std::string_view value) const;

  friend bool operator==(const Attribute&, const Attribute&) = default;
  friend auto operator<=>(const Attribute&, const Attribute&) = default;
};

class Tuple {
 public:
  Tuple() = default;
  explicit Tuple(std::vector<ValueId> values) : values_(std::move(values)) {}
  Tuple(std::initializer_list<ValueId> values) : values_(values) {}

  std::size_t arity() const { return values_.size(); }
  ValueId operator[](std::size_t i) const { return values_[i]; }
  std::span<const ValueId> values() const { return values_; }

  friend bool operator==(const Tuple&, const Tuple&) = default;
  friend auto operator<=>(const Tuple&, const Tuple&) = default;

 private:
  std::vector<ValueId> values_;
};

/// A named, ordered list of attributes with finite declared domains.
///
/// Ordering and equality are structural: two schemes with the same attributes
/// and domains compare equal regardless of their names.
class Scheme {
 public:
  Scheme(std::string name, std::vector<Attribute> attributes);

  const std::string& name() const { return name_; }
  const std::vector<Attribute>& attributes() const { return attributes_; }
  const Attribute& attribute(std::size_t i) const { return attributes_[i]; }
  std::size_t arity() const { return attributes_.size(); }
  std::optional<std::size_t> position(std::string_view attribute) const;

  /// Product of domain sizes, saturating at SIZE_MAX.
  std::size_t tuple_space_size() const;

  bool contains(const Tuple& t) const;
  Tuple make_tuple(std::span<const std::string> values) const;
  const std::string& value_name(std::size_t attr, ValueId v) const {
    return attributes_[attr].domain[v];
  }

  friend bool operator==(const Scheme& a, const Scheme& b) {
    return a.attributes_ == b.attributes_;
  }
  friend auto operator<=>(const Scheme& a, const Scheme& b) {
    return a.attributes_ <=> b.attributes_;
  }

 private:
  std::string name_;
  std::vector<Attribute> attributes_;
};

using SchemeRef = std::shared_ptr<const Scheme>;

SchemeRef make_scheme(std::string name, std::vector<Attribute> attributes);

/// Sorted, duplicate-free tuple vector. May be empty; used for choice
/// selections and intermediate results.
using Tuples = std::vector<Tuple>;

Tuples sorted_unique(Tuples tuples);
bool includes(const Tuples& super, const Tuples& sub);
Tuples set_minus(const Tuples& a, const Tuples& b);
Tuples set_intersection(const Tuples& a, const Tuples& b);
Tuples set_union(const Tuples& a, const Tuples& b);

/// One exclusive disjunction: a nonempty set of tuples on one scheme.
class TupleSet {
 public:
  TupleSet(std::initializer_list<Tuple> tuples);
  explicit TupleSet(Tuples tuples);

  std::size_t size() const { return tuples_.size(); }
  bool singleton() const { return tuples_.size() == 1; }
  const Tuples& tuples() const { return tuples_; }
  const Tuple& front() const { return tuples_.front(); }
  auto begin() const { return tuples_.begin(); }
  auto end() const { return tuples_.end(); }

  bool contains(const Tuple& t) const;
  bool subset_of(const TupleSet& other) const {
    return includes(other.tuples_, tuples_);
  }

  friend bool operator==(const TupleSet&, const TupleSet&) = default;
  friend auto operator<=>(const TupleSet&, const TupleSet&) = default;

 private:
  Tuples tuples_;
};

using TupleSetFamily = std::set<TupleSet>;

/// Definite positive and negative facts; the two parts may overlap.
struct ParaRelation {
  SchemeRef scheme;
  std::set<Tuple> positive;
  std::set<Tuple> negative;
};

/// Disjunctive positive facts with definite negative facts.
struct DisjParaRelation {
  SchemeRef scheme;
  TupleSetFamily positive;
  std::set<Tuple> negative;
};

/// Disjunctive positive facts with disjunctive negative facts.
struct GenDisjParaRelation {
  SchemeRef scheme;
  TupleSetFamily positive;
  TupleSetFamily negative;
};

#define GDPR_RELATION_COMPARISONS(Type)                                      \
  inline bool operator==(const Type& a, const Type& b) {                     \
    return *a.scheme == *b.scheme && a.positive == b.positive &&             \
           a.negative == b.negative;                                         \
  }                                                                          \
  inline std::strong_ordering operator<=>(const Type& a, const Type& b) {    \
    if (auto c = *a.scheme <=> *b.scheme; c != 0) return c;                  \
    if (auto c = a.positive <=> b.positive; c != 0) return c;                \
    return a.negative <=> b.negative;                                        \
  }

GDPR_RELATION_COMPARISONS(ParaRelation)
GDPR_RELATION_COMPARISONS(DisjParaRelation)
GDPR_RELATION_COMPARISONS(GenDisjParaRelation)

#undef GDPR_RELATION_COMPARISONS

using ParaSet = std::set<ParaRelation>;
using DisjSet = std::set<DisjParaRelation>;

/// Throws ValidationError unless every tuple of `r` lies on its scheme.
void validate(const ParaRelation& r);
void validate(const DisjParaRelation& r);
void validate(const GenDisjParaRelation& r);

/// Canonical forms. Relation components are kept in ordered sets, so the
/// relation overloads rebuild their value; the collection overloads sort and
/// drop duplicates so that set equality becomes structural equality.
ParaRelation canonicalize(const ParaRelation& r);
DisjParaRelation canonicalize(const DisjParaRelation& r);
GenDisjParaRelation canonicalize(const GenDisjParaRelation& r);
ParaSet canonicalize(std::span<const ParaRelation> rs);
DisjSet canonicalize(std::span<const DisjParaRelation> rs);

/// All tuples on `scheme`, in lexicographic value order.
Tuples enumerate_tuple_space(const Scheme& scheme, std::size_t cap = kDefaultCap);

/// Positions in `from` of each attribute of `to`. Throws SchemeMismatch if an
/// attribute of `to` is missing from `from` or has a different domain.
std::vector<std::size_t> attribute_positions(const Scheme& from, const Scheme& to);

/// Restriction of `t` (on `from`) to the attributes of `to`.
Tuple project_tuple(const Tuple& t, const Scheme& from, const Scheme& to);

/// Every tuple on `to` that agrees with `t` on the attributes of `from`.
Tuples extend_tuple(const Tuple& t, const Scheme& from, const Scheme& to,
                    std::size_t cap = kDefaultCap);
Tuples extend_tuples(std::span<const Tuple> ts, const Scheme& from,
                     const Scheme& to, std::size_t cap = kDefaultCap);

/// Attributes of `left` followed by the attributes of `right` not in `left`.
SchemeRef join_scheme(const Scheme& left, const Scheme& right, std::string name);

/// Scheme holding the listed attributes of `scheme`, in the listed order.
SchemeRef sub_scheme(const Scheme& scheme, std::span<const std::string> attributes,
                     std::string name);

/// Natural join of two tuple collections onto `joined`.
Tuples join_tuples(const Tuples& left, const Scheme& left_scheme,
                   const Tuples& right, const Scheme& right_scheme,
                   const Scheme& joined);

/// Named schemes and relations.
class Database {
 public:
  void add_scheme(SchemeRef scheme);
  void add_relation(std::string name, GenDisjParaRelation relation);

  SchemeRef scheme(std::string_view name) const;
  const GenDisjParaRelation& relation(std::string_view name) const;
  bool has_relation(std::string_view name) const;

  const std::map<std::string, SchemeRef, std::less<>>& schemes() const {
    return schemes_;
  }
  const std::map<std::string, GenDisjParaRelation, std::less<>>& relations() const {
    return relations_;
  }

  friend bool operator==(const Database& a, const Database& b);

 private:
  std::map<std::string, SchemeRef, std::less<>> schemes_;
  std::map<std::string, GenDisjParaRelation, std::less<>> relations_;
};

// Diagnostic renderings, e.g. "(s1,p1)", "{(a),(b)}".
std::string to_string(const Tuple& t, const Scheme& scheme);
std::string to_string(const TupleSet& w, const Scheme& scheme);
std::string to_string(const ParaRelation& r);
std::string to_string(const DisjParaRelation& r);
std::string to_string(const GenDisjParaRelation& r);

}  // namespace gdpr
