#include "gdpr/model.hpp"

#include <algorithm>
#include <limits>

#include "gdpr/error.hpp"

namespace gdpr {

std::optional<ValueId> Attribute::value_index(std::string_view value) const {
  for (std::size_t i = 0; i < domain.size(); ++i)
    if (domain[i] == value) return static_cast<ValueId>(i);
  return std::nullopt;
}

Scheme::Scheme(std::string name, std::vector<Attribute> attributes)
    : name_(std::move(name)), attributes_(std::move(attributes)) {
  std::set<std::string_view> names;
  for (const auto& a : attributes_) {
    if (!names.insert(a.name).second)
      throw ValidationError("scheme '" + name_ + "': duplicate attribute '" +
                            a.name + "'");
    if (a.domain.empty())
      throw ValidationError("scheme '" + name_ + "': attribute '" + a.name +
                            "' has an empty domain");
    std::set<std::string_view> values(a.domain.begin(), a.domain.end());
    if (values.size() != a.domain.size())
      throw ValidationError("scheme '" + name_ + "': attribute '" + a.name +
                            "' repeats a domain value");
  }
}

std::optional<std::size_t> Scheme::position(std::string_view attribute) const {
  for (std::size_t i = 0; i < attributes_.size(); ++i)
    if (attributes_[i].name == attribute) return i;
  return std::nullopt;
}

std::size_t Scheme::tuple_space_size() const {
  std::size_t n = 1;
  for (const auto& a : attributes_) {
    if (n > std::numeric_limits<std::size_t>::max() / a.domain.size())
      return std::numeric_limits<std::size_t>::max();
    n *= a.domain.size();
  }
  return n;
}

bool Scheme::contains(const Tuple& t) const {
  if (t.arity() != arity()) return false;
  for (std::size_t i = 0; i < arity(); ++i)
    if (t[i] >= attributes_[i].domain.size()) return false;
  return true;
}

Tuple Scheme::make_tuple(std::span<const std::string> values) const {
  if (values.size() != arity())
    throw ValidationError("scheme '" + name_ + "' expects " +
                          std::to_string(arity()) + " values, got " +
                          std::to_string(values.size()));
  std::vector<ValueId> ids;
  ids.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    auto id = attributes_[i].value_index(values[i]);
    if (!id)
      throw ValidationError("value '" + values[i] + "' is not in the domain of " +
                            name_ + "." + attributes_[i].name);
    ids.push_back(*id);
  }
  return Tuple(std::move(ids));
}

SchemeRef make_scheme(std::string name, std::vector<Attribute> attributes) {
  return std::make_shared<const Scheme>(std::move(name), std::move(attributes));
}

Tuples sorted_unique(Tuples tuples) {
  std::sort(tuples.begin(), tuples.end());
  tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
  return tuples;
}

bool includes(const Tuples& super, const Tuples& sub) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

Tuples set_minus(const Tuples& a, const Tuples& b) {
  Tuples out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

Tuples set_intersection(const Tuples& a, const Tuples& b) {
  Tuples out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

Tuples set_union(const Tuples& a, const Tuples& b) {
  Tuples out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

TupleSet::TupleSet(std::initializer_list<Tuple> tuples)
    : TupleSet(Tuples(tuples)) {}

TupleSet::TupleSet(Tuples tuples) : tuples_(sorted_unique(std::move(tuples))) {
  if (tuples_.empty()) throw ValidationError("empty tuple set");
}

bool TupleSet::contains(const Tuple& t) const {
  return std::binary_search(tuples_.begin(), tuples_.end(), t);
}

namespace {

void check_tuple(const Scheme& scheme, const Tuple& t) {
  if (!scheme.contains(t))
    throw ValidationError("tuple is not on scheme '" + scheme.name() + "'");
}

void check_family(const Scheme& scheme, const TupleSetFamily& family) {
  for (const auto& w : family)
    for (const auto& t : w) check_tuple(scheme, t);
}

void check_tuples(const Scheme& scheme, const std::set<Tuple>& ts) {
  for (const auto& t : ts) check_tuple(scheme, t);
}

void require_scheme(const SchemeRef& s) {
  if (!s) throw ValidationError("relation has no scheme");
}

}  // namespace

void validate(const ParaRelation& r) {
  require_scheme(r.scheme);
  check_tuples(*r.scheme, r.positive);
  check_tuples(*r.scheme, r.negative);
}

void validate(const DisjParaRelation& r) {
  require_scheme(r.scheme);
  check_family(*r.scheme, r.positive);
  check_tuples(*r.scheme, r.negative);
}

void validate(const GenDisjParaRelation& r) {
  require_scheme(r.scheme);
  check_family(*r.scheme, r.positive);
  check_family(*r.scheme, r.negative);
}

ParaRelation canonicalize(const ParaRelation& r) {
  return {r.scheme, {r.positive.begin(), r.positive.end()},
          {r.negative.begin(), r.negative.end()}};
}

DisjParaRelation canonicalize(const DisjParaRelation& r) {
  return {r.scheme, {r.positive.begin(), r.positive.end()},
          {r.negative.begin(), r.negative.end()}};
}

GenDisjParaRelation canonicalize(const GenDisjParaRelation& r) {
  return {r.scheme, {r.positive.begin(), r.positive.end()},
          {r.negative.begin(), r.negative.end()}};
}

ParaSet canonicalize(std::span<const ParaRelation> rs) {
  ParaSet out;
  for (const auto& r : rs) out.insert(canonicalize(r));
  return out;
}

DisjSet canonicalize(std::span<const DisjParaRelation> rs) {
  DisjSet out;
  for (const auto& r : rs) out.insert(canonicalize(r));
  return out;
}

Tuples enumerate_tuple_space(const Scheme& scheme, std::size_t cap) {
  const std::size_t total = scheme.tuple_space_size();
  if (total > cap)
    throw CombinatorialLimit("tuple space of '" + scheme.name() + "'", cap);
  Tuples out;
  out.reserve(total);
  std::vector<ValueId> current(scheme.arity(), 0);
  for (std::size_t n = 0; n < total; ++n) {
    out.emplace_back(current);
    for (std::size_t i = scheme.arity(); i-- > 0;) {
      if (++current[i] < scheme.attribute(i).domain.size()) break;
      current[i] = 0;
    }
  }
  return out;
}

std::vector<std::size_t> attribute_positions(const Scheme& from, const Scheme& to) {
  std::vector<std::size_t> out;
  out.reserve(to.arity());
  for (const auto& a : to.attributes()) {
    auto p = from.position(a.name);
    if (!p)
      throw SchemeMismatch("attribute '" + a.name + "' is not in scheme '" +
                           from.name() + "'");
    if (from.attribute(*p).domain != a.domain)
      throw SchemeMismatch("attribute '" + a.name + "' has different domains in '" +
                           from.name() + "' and '" + to.name() + "'");
    out.push_back(*p);
  }
  return out;
}

Tuple project_tuple(const Tuple& t, const Scheme& from, const Scheme& to) {
  std::vector<ValueId> values;
  for (auto p : attribute_positions(from, to)) values.push_back(t[p]);
  return Tuple(std::move(values));
}

namespace {

// For each attribute of `to`: its position in `from`, or nullopt if free.
std::vector<std::optional<std::size_t>> extension_map(const Scheme& from,
                                                      const Scheme& to) {
  attribute_positions(to, from);  // from ⊆ to with identical domains
  std::vector<std::optional<std::size_t>> out;
  for (const auto& a : to.attributes()) out.push_back(from.position(a.name));
  return out;
}

std::size_t free_combinations(const Scheme& to,
                              const std::vector<std::optional<std::size_t>>& map) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (map[i]) continue;
    const auto d = to.attribute(i).domain.size();
    if (n > std::numeric_limits<std::size_t>::max() / d)
      return std::numeric_limits<std::size_t>::max();
    n *= d;
  }
  return n;
}

void append_extensions(const Tuple& t, const Scheme& to,
                       const std::vector<std::optional<std::size_t>>& map,
                       Tuples& out) {
  std::vector<ValueId> current(to.arity(), 0);
  for (std::size_t i = 0; i < map.size(); ++i)
    if (map[i]) current[i] = t[*map[i]];
  while (true) {
    out.emplace_back(current);
    bool advanced = false;
    for (std::size_t i = to.arity(); i-- > 0;) {
      if (map[i]) continue;
      if (++current[i] < to.attribute(i).domain.size()) {
        advanced = true;
        break;
      }
      current[i] = 0;
    }
    if (!advanced) return;
  }
}

}  // namespace

Tuples extend_tuple(const Tuple& t, const Scheme& from, const Scheme& to,
                    std::size_t cap) {
  return extend_tuples(std::span<const Tuple>(&t, 1), from, to, cap);
}

Tuples extend_tuples(std::span<const Tuple> ts, const Scheme& from,
                     const Scheme& to, std::size_t cap) {
  const auto map = extension_map(from, to);
  const std::size_t per = free_combinations(to, map);
  if (per != 0 && ts.size() > cap / per)
    throw CombinatorialLimit("tuple extension onto '" + to.name() + "'", cap);
  Tuples out;
  out.reserve(ts.size() * per);
  for (const auto& t : ts) append_extensions(t, to, map, out);
  return sorted_unique(std::move(out));
}

SchemeRef join_scheme(const Scheme& left, const Scheme& right, std::string name) {
  std::vector<Attribute> attrs = left.attributes();
  for (const auto& a : right.attributes()) {
    if (auto p = left.position(a.name)) {
      if (left.attribute(*p).domain != a.domain)
        throw SchemeMismatch("join attribute '" + a.name +
                             "' has different domains in '" + left.name() +
                             "' and '" + right.name() + "'");
      continue;
    }
    attrs.push_back(a);
  }
  return make_scheme(std::move(name), std::move(attrs));
}

SchemeRef sub_scheme(const Scheme& scheme, std::span<const std::string> attributes,
                     std::string name) {
  std::vector<Attribute> attrs;
  for (const auto& a : attributes) {
    auto p = scheme.position(a);
    if (!p)
      throw SchemeMismatch("attribute '" + a + "' is not in scheme '" +
                           scheme.name() + "'");
    attrs.push_back(scheme.attribute(*p));
  }
  return make_scheme(std::move(name), std::move(attrs));
}

Tuples join_tuples(const Tuples& left, const Scheme& left_scheme,
                   const Tuples& right, const Scheme& right_scheme,
                   const Scheme& joined) {
  // joined = left ++ (right \ left); shared attributes must agree.
  std::vector<std::pair<std::size_t, std::size_t>> shared;
  std::vector<std::size_t> extra;
  for (std::size_t j = 0; j < right_scheme.arity(); ++j) {
    if (auto p = left_scheme.position(right_scheme.attribute(j).name))
      shared.emplace_back(*p, j);
    else
      extra.push_back(j);
  }
  if (joined.arity() != left_scheme.arity() + extra.size())
    throw SchemeMismatch("joined scheme does not match its operands");
  Tuples out;
  for (const auto& l : left) {
    for (const auto& r : right) {
      bool match = std::all_of(shared.begin(), shared.end(),
                               [&](auto p) { return l[p.first] == r[p.second]; });
      if (!match) continue;
      std::vector<ValueId> values(l.values().begin(), l.values().end());
      for (auto j : extra) values.push_back(r[j]);
      out.emplace_back(std::move(values));
    }
  }
  return sorted_unique(std::move(out));
}

void Database::add_scheme(SchemeRef scheme) {
  if (!scheme) throw ValidationError("null scheme");
  const std::string name = scheme->name();
  if (!schemes_.emplace(name, std::move(scheme)).second)
    throw ValidationError("duplicate scheme '" + name + "'");
}

void Database::add_relation(std::string name, GenDisjParaRelation relation) {
  validate(relation);
  auto it = schemes_.find(relation.scheme->name());
  if (it == schemes_.end() || *it->second != *relation.scheme)
    throw ValidationError("relation '" + name + "' uses unregistered scheme '" +
                          relation.scheme->name() + "'");
  relation.scheme = it->second;
  if (relations_.contains(name))
    throw ValidationError("duplicate relation '" + name + "'");
  relations_.emplace(std::move(name), std::move(relation));
}

SchemeRef Database::scheme(std::string_view name) const {
  auto it = schemes_.find(name);
  return it == schemes_.end() ? nullptr : it->second;
}

const GenDisjParaRelation& Database::relation(std::string_view name) const {
  auto it = relations_.find(name);
  if (it == relations_.end()) throw UnknownRelation(std::string(name));
  return it->second;
}

bool Database::has_relation(std::string_view name) const {
  return relations_.find(name) != relations_.end();
}

bool operator==(const Database& a, const Database& b) {
  if (a.schemes_.size() != b.schemes_.size() ||
      a.relations_.size() != b.relations_.size())
    return false;
  for (auto ia = a.schemes_.begin(), ib = b.schemes_.begin();
       ia != a.schemes_.end(); ++ia, ++ib)
    if (ia->first != ib->first || *ia->second != *ib->second) return false;
  for (auto ia = a.relations_.begin(), ib = b.relations_.begin();
       ia != a.relations_.end(); ++ia, ++ib)
    if (ia->first != ib->first || ia->second != ib->second ||
        ia->second.scheme->name() != ib->second.scheme->name())
      return false;
  return true;
}

std::string to_string(const Tuple& t, const Scheme& scheme) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.arity(); ++i) {
    if (i) out += ",";
    out += scheme.value_name(i, t[i]);
  }
  return out + ")";
}

namespace {

template <typename Range>
std::string tuples_string(const Range& ts, const Scheme& scheme) {
  std::string out = "{";
  bool first = true;
  for (const auto& t : ts) {
    if (!first) out += ",";
    first = false;
    out += to_string(t, scheme);
  }
  return out + "}";
}

std::string family_string(const TupleSetFamily& f, const Scheme& scheme) {
  std::string out = "{";
  bool first = true;
  for (const auto& w : f) {
    if (!first) out += ",";
    first = false;
    out += to_string(w, scheme);
  }
  return out + "}";
}

}  // namespace

std::string to_string(const TupleSet& w, const Scheme& scheme) {
  return tuples_string(w, scheme);
}

std::string to_string(const ParaRelation& r) {
  return "<" + tuples_string(r.positive, *r.scheme) + ", " +
         tuples_string(r.negative, *r.scheme) + ">";
}

std::string to_string(const DisjParaRelation& r) {
  return "<" + family_string(r.positive, *r.scheme) + ", " +
         tuples_string(r.negative, *r.scheme) + ">";
}

std::string to_string(const GenDisjParaRelation& r) {
  return "<" + family_string(r.positive, *r.scheme) + ", " +
         family_string(r.negative, *r.scheme) + ">";
}

}  // namespace gdpr
