#include "gdpr/gdp_algebra.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "gdpr/error.hpp"

namespace gdpr {

namespace {

Tuples singleton_tuples(const TupleSetFamily& family) {
  Tuples out;
  for (const auto& w : family)
    if (w.singleton()) out.push_back(w.front());
  return sorted_unique(std::move(out));
}

std::set<Tuple> as_set(const Selection& s) { return {s.begin(), s.end()}; }

Tuples as_tuples(const std::set<Tuple>& ts) { return Tuples(ts.begin(), ts.end()); }

std::size_t saturating_mul(std::size_t a, std::size_t b) {
  if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a)
    return std::numeric_limits<std::size_t>::max();
  return a * b;
}

void require_same_scheme(const SchemeRef& a, const SchemeRef& b, const char* op) {
  if (*a != *b)
    throw SchemeMismatch(std::string(op) + " operands are on different schemes ('" +
                         a->name() + "' and '" + b->name() + "')");
}

template <typename Combine>
SelectionSet pairwise(const std::vector<Selection>& e, const std::vector<Selection>& f,
                      std::size_t cap, Combine combine) {
  if (saturating_mul(e.size(), f.size()) > cap)
    throw CombinatorialLimit("pairwise choice combination", cap);
  SelectionSet out;
  for (const auto& a : e)
    for (const auto& b : f) out.insert(combine(a, b));
  return out;
}

std::vector<Selection> listed(const SelectionSet& s) { return {s.begin(), s.end()}; }

}  // namespace

GenDisjParaRelation g_norm(const GenDisjParaRelation& r) {
  const Tuples negated = singleton_tuples(r.negative);
  const Tuples asserted = singleton_tuples(r.positive);

  std::vector<const TupleSet*> dropped_positive, dropped_negative;
  for (const auto& w : r.positive)
    if (includes(negated, w.tuples())) dropped_positive.push_back(&w);
  for (const auto& u : r.negative)
    if (includes(asserted, u.tuples())) dropped_negative.push_back(&u);

  auto touches = [](const std::vector<const TupleSet*>& sets, const Tuple& t) {
    return std::any_of(sets.begin(), sets.end(),
                       [&](const TupleSet* s) { return s->contains(t); });
  };

  GenDisjParaRelation out{r.scheme, {}, {}};
  for (const auto& w : r.positive) {
    if (includes(negated, w.tuples())) continue;
    if (w.singleton() && touches(dropped_negative, w.front())) continue;
    out.positive.insert(w);
  }
  for (const auto& u : r.negative) {
    if (includes(asserted, u.tuples())) continue;
    if (u.singleton() && touches(dropped_positive, u.front())) continue;
    out.negative.insert(u);
  }
  return out;
}

bool g_is_normalized(const GenDisjParaRelation& r) { return g_norm(r) == r; }

GenDisjParaRelation g_reduce(const GenDisjParaRelation& r, std::size_t) {
  // Every round either leaves the relation unchanged or strictly shrinks the
  // total number of stored tuples, so the loop terminates.
  GenDisjParaRelation current = r;
  while (true) {
    GenDisjParaRelation normal = g_norm(current);
    const Tuples negated = singleton_tuples(normal.negative);
    const Tuples asserted = singleton_tuples(normal.positive);
    auto strip = [&](const TupleSetFamily& family, const Tuples& opposite) {
      TupleSetFamily out;
      for (const auto& w : family) {
        Tuples rest = set_minus(w.tuples(), opposite);
        if (rest.empty())
          throw InconsistentInput("tuple set " + to_string(w, *r.scheme) +
                                  " is covered by opposite singletons after g_norm");
        out.insert(TupleSet(std::move(rest)));
      }
      return minimal_sets(out);
    };
    GenDisjParaRelation next{r.scheme, strip(normal.positive, negated),
                             strip(normal.negative, asserted)};
    if (next == current) return next;
    current = std::move(next);
  }
}

DisjSet g_normrep(const DisjSet& u) {
  DisjSet out;
  for (const auto& r : u) {
    const Tuples negative = as_tuples(r.negative);
    bool clash = std::any_of(r.positive.begin(), r.positive.end(),
                             [&](const TupleSet& w) { return includes(negative, w.tuples()); });
    if (!clash) out.insert(r);
  }
  return out;
}

DisjSet g_reducerep(const DisjSet& u) {
  DisjSet out;
  for (const auto& r : u) {
    bool subsumed = std::any_of(u.begin(), u.end(), [&](const DisjParaRelation& s) {
      return s != r &&
             std::includes(r.positive.begin(), r.positive.end(), s.positive.begin(),
                           s.positive.end()) &&
             std::includes(r.negative.begin(), r.negative.end(), s.negative.begin(),
                           s.negative.end());
    });
    if (!subsumed) out.insert(r);
  }
  return out;
}

DisjSet g_rep(const GenDisjParaRelation& r, std::size_t cap) {
  DisjSet expanded;
  for (const auto& pick : choices(r.negative, cap))
    expanded.insert({r.scheme, r.positive, as_set(pick)});
  return g_reducerep(g_normrep(expanded));
}

GenDisjParaRelation g_union(const GenDisjParaRelation& r, const GenDisjParaRelation& s,
                            std::size_t cap) {
  require_same_scheme(r.scheme, s.scheme, "union");
  const auto rr = g_reduce(r, cap);
  const auto rs = g_reduce(s, cap);
  const auto distinct =
      pairwise(listed(choices(rr.negative, cap)), listed(choices(rs.negative, cap)), cap,
               [](const Selection& a, const Selection& b) { return set_intersection(a, b); });
  GenDisjParaRelation t{r.scheme, rr.positive, transversal_component(distinct, cap)};
  t.positive.insert(rs.positive.begin(), rs.positive.end());
  return g_reduce(t, cap);
}

GenDisjParaRelation g_intersect(const GenDisjParaRelation& r,
                                const GenDisjParaRelation& s, std::size_t cap) {
  require_same_scheme(r.scheme, s.scheme, "intersection");
  const auto rr = g_reduce(r, cap);
  const auto rs = g_reduce(s, cap);
  const auto distinct =
      pairwise(listed(choices(rr.positive, cap)), listed(choices(rs.positive, cap)), cap,
               [](const Selection& a, const Selection& b) { return set_intersection(a, b); });
  GenDisjParaRelation t{r.scheme, transversal_component(distinct, cap), rr.negative};
  t.negative.insert(rs.negative.begin(), rs.negative.end());
  return g_reduce(t, cap);
}

GenDisjParaRelation g_complement(const GenDisjParaRelation& r, std::size_t cap) {
  auto rr = g_reduce(r, cap);
  return {rr.scheme, std::move(rr.negative), std::move(rr.positive)};
}

GenDisjParaRelation g_select(const GenDisjParaRelation& r, const ScopedFormula& f,
                             std::size_t cap) {
  if (*f.scheme() != *r.scheme)
    throw FormulaError("selection formula is scoped to a different scheme");
  const auto rr = g_reduce(r, cap);
  GenDisjParaRelation t{r.scheme, {}, rr.negative};
  for (const auto& w : rr.positive)
    if (std::all_of(w.begin(), w.end(), [&](const Tuple& x) { return f(x); }))
      t.positive.insert(w);
  for (auto& x : enumerate_tuple_space(*r.scheme, cap))
    if (!f(x)) t.negative.insert(TupleSet{std::move(x)});
  return g_reduce(t, cap);
}

GenDisjParaRelation g_project(const GenDisjParaRelation& r, const SchemeRef& target,
                              std::size_t cap) {
  const auto positions = attribute_positions(*r.scheme, *target);
  auto project = [&](const Tuple& x) {
    std::vector<ValueId> v;
    v.reserve(positions.size());
    for (auto p : positions) v.push_back(x[p]);
    return Tuple(std::move(v));
  };
  std::size_t extensions = 1;
  std::vector<bool> kept(r.scheme->arity(), false);
  for (auto p : positions) kept[p] = true;
  for (std::size_t i = 0; i < kept.size(); ++i)
    if (!kept[i])
      extensions = saturating_mul(extensions, r.scheme->attribute(i).domain.size());
  if (extensions > cap) throw CombinatorialLimit("projection extension count", cap);

  const auto rr = g_reduce(r, cap);
  GenDisjParaRelation t{target, {}, {}};
  for (const auto& w : rr.positive) {
    Tuples image;
    for (const auto& x : w) image.push_back(project(x));
    t.positive.insert(TupleSet(std::move(image)));
  }
  // For each negative pick, the target tuples all of whose extensions it
  // negates.
  SelectionSet covered;
  for (const auto& pick : choices(rr.negative, cap)) {
    std::map<Tuple, std::size_t> hits;
    for (const auto& x : pick) ++hits[project(x)];
    Selection a;
    for (const auto& [x, n] : hits)
      if (n == extensions) a.push_back(x);
    covered.insert(std::move(a));
  }
  t.negative = transversal_component(covered, cap);
  return g_reduce(t, cap);
}

GenDisjParaRelation g_join(const GenDisjParaRelation& r, const GenDisjParaRelation& s,
                           const SchemeRef& joined, std::size_t cap) {
  if (*join_scheme(*r.scheme, *s.scheme, joined->name()) != *joined)
    throw SchemeMismatch("'" + joined->name() + "' is not the join scheme of '" +
                         r.scheme->name() + "' and '" + s.scheme->name() + "'");
  const auto rr = g_reduce(r, cap);
  const auto rs = g_reduce(s, cap);
  const auto joins = pairwise(
      listed(choices(rr.positive, cap)), listed(choices(rs.positive, cap)), cap,
      [&](const Selection& a, const Selection& b) {
        return join_tuples(a, *r.scheme, b, *s.scheme, *joined);
      });

  auto extended = [&](const TupleSetFamily& negative, const Scheme& from) {
    std::vector<Selection> out;
    for (const auto& pick : choices(negative, cap))
      out.push_back(extend_tuples(pick, from, *joined, cap));
    return out;
  };
  const auto unions =
      pairwise(extended(rr.negative, *r.scheme), extended(rs.negative, *s.scheme), cap,
               [](const Selection& a, const Selection& b) { return set_union(a, b); });
  return g_reduce({joined, transversal_component(joins, cap),
                   transversal_component(unions, cap)},
                  cap);
}

DisjSet lift_operator(const UnaryDpOperator& op, const DisjSet& m, std::size_t) {
  DisjSet out;
  for (const auto& r : m) out.insert(op(r));
  return out;
}

DisjSet lift_operator(const BinaryDpOperator& op, const DisjSet& m1, const DisjSet& m2,
                      std::size_t cap) {
  if (saturating_mul(m1.size(), m2.size()) > cap)
    throw CombinatorialLimit("lifted operator argument product", cap);
  DisjSet out;
  for (const auto& a : m1)
    for (const auto& b : m2) out.insert(op(a, b));
  return out;
}

}  // namespace gdpr
