#include "gdpr/dp_algebra.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "gdpr/error.hpp"

namespace gdpr {

namespace {

std::size_t saturating_mul(std::size_t a, std::size_t b) {
  if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a)
    return std::numeric_limits<std::size_t>::max();
  return a * b;
}

Selection with_tuple(const Selection& s, const Tuple& t) {
  auto pos = std::lower_bound(s.begin(), s.end(), t);
  if (pos != s.end() && *pos == t) return s;
  Selection out;
  out.reserve(s.size() + 1);
  out.insert(out.end(), s.begin(), pos);
  out.push_back(t);
  out.insert(out.end(), pos, s.end());
  return out;
}

Tuples as_tuples(const std::set<Tuple>& ts) { return Tuples(ts.begin(), ts.end()); }

void require_same_scheme(const SchemeRef& a, const SchemeRef& b, const char* op) {
  if (*a != *b)
    throw SchemeMismatch(std::string(op) + " operands are on different schemes ('" +
                         a->name() + "' and '" + b->name() + "')");
}

DisjParaRelation finish(DisjParaRelation t) { return dp_reduce(dp_norm(t)); }

}  // namespace

SelectionSet choices(std::span<const TupleSet> family, std::size_t cap) {
  std::size_t product = 1;
  for (const auto& w : family) product = saturating_mul(product, w.size());
  if (product > cap) throw CombinatorialLimit("choice product", cap);
  SelectionSet current{Selection{}};
  for (const auto& w : family) {
    SelectionSet next;
    for (const auto& s : current)
      for (const auto& t : w) next.insert(with_tuple(s, t));
    current = std::move(next);
  }
  return current;
}

SelectionSet choices(const TupleSetFamily& family, std::size_t cap) {
  std::vector<TupleSet> members(family.begin(), family.end());
  return choices(std::span<const TupleSet>(members), cap);
}

TupleSetFamily transversal_component(const SelectionSet& distinct_sets,
                                     std::size_t cap) {
  if (distinct_sets.empty()) return {};
  for (const auto& a : distinct_sets)
    if (a.empty()) return {};
  SelectionSet current{Selection{}};
  for (const auto& a : distinct_sets) {
    if (saturating_mul(current.size(), a.size()) > cap)
      throw CombinatorialLimit("transversal enumeration", cap);
    SelectionSet next;
    for (const auto& s : current)
      for (const auto& t : a) next.insert(with_tuple(s, t));
    current = std::move(next);
  }
  TupleSetFamily out;
  for (auto& s : current) out.insert(TupleSet(s));
  return out;
}

TupleSetFamily minimal_sets(const TupleSetFamily& family) {
  std::vector<const TupleSet*> by_size;
  for (const auto& w : family) by_size.push_back(&w);
  std::stable_sort(by_size.begin(), by_size.end(),
                   [](auto a, auto b) { return a->size() < b->size(); });
  std::vector<const TupleSet*> kept;
  for (auto w : by_size) {
    bool subsumed = std::any_of(kept.begin(), kept.end(), [&](auto k) {
      return k->size() < w->size() && k->subset_of(*w);
    });
    if (!subsumed) kept.push_back(w);
  }
  TupleSetFamily out;
  for (auto w : kept) out.insert(*w);
  return out;
}

DisjParaRelation dp_norm(const DisjParaRelation& r) {
  const Tuples negative = as_tuples(r.negative);
  DisjParaRelation out{r.scheme, {}, r.negative};
  for (const auto& w : r.positive) {
    if (includes(negative, w.tuples())) {
      for (const auto& t : w) out.negative.erase(t);
    } else {
      out.positive.insert(w);
    }
  }
  return out;
}

bool dp_is_normalized(const DisjParaRelation& r) {
  const Tuples negative = as_tuples(r.negative);
  return std::none_of(r.positive.begin(), r.positive.end(), [&](const TupleSet& w) {
    return includes(negative, w.tuples());
  });
}

DisjParaRelation dp_reduce(const DisjParaRelation& r) {
  const Tuples negative = as_tuples(r.negative);
  TupleSetFamily stripped;
  for (const auto& w : r.positive) {
    Tuples rest = set_minus(w.tuples(), negative);
    if (rest.empty())
      throw InconsistentInput("positive tuple set " + to_string(w, *r.scheme) +
                              " is wholly negated; relation is not normalized");
    stripped.insert(TupleSet(std::move(rest)));
  }
  return {r.scheme, minimal_sets(stripped), r.negative};
}

ParaSet dp_normrep(const ParaSet& u) {
  ParaSet out;
  for (const auto& r : u) {
    bool clash = std::any_of(r.positive.begin(), r.positive.end(),
                             [&](const Tuple& t) { return r.negative.contains(t); });
    if (!clash) out.insert(r);
  }
  return out;
}

ParaSet dp_reducerep(const ParaSet& u) {
  ParaSet out;
  for (const auto& r : u) {
    bool subsumed = std::any_of(u.begin(), u.end(), [&](const ParaRelation& s) {
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

ParaSet dp_rep(const DisjParaRelation& r, std::size_t cap) {
  ParaSet expanded;
  for (const auto& pick : choices(r.positive, cap))
    expanded.insert({r.scheme, {pick.begin(), pick.end()}, r.negative});
  return dp_reducerep(dp_normrep(expanded));
}

DisjParaRelation dp_union(const DisjParaRelation& r, const DisjParaRelation& s,
                          std::size_t) {
  require_same_scheme(r.scheme, s.scheme, "union");
  const auto rr = dp_reduce(r);
  const auto rs = dp_reduce(s);
  DisjParaRelation t{r.scheme, rr.positive, {}};
  t.positive.insert(rs.positive.begin(), rs.positive.end());
  std::set_intersection(rr.negative.begin(), rr.negative.end(), rs.negative.begin(),
                        rs.negative.end(), std::inserter(t.negative, t.negative.end()));
  return finish(std::move(t));
}

namespace {

template <typename Combine>
SelectionSet pairwise(const SelectionSet& e, const SelectionSet& f, std::size_t cap,
                      Combine combine) {
  if (saturating_mul(e.size(), f.size()) > cap)
    throw CombinatorialLimit("pairwise choice combination", cap);
  SelectionSet out;
  for (const auto& a : e)
    for (const auto& b : f) out.insert(combine(a, b));
  return out;
}

}  // namespace

DisjParaRelation dp_intersect(const DisjParaRelation& r, const DisjParaRelation& s,
                              std::size_t cap) {
  require_same_scheme(r.scheme, s.scheme, "intersection");
  const auto rr = dp_reduce(r);
  const auto rs = dp_reduce(s);
  const auto distinct = pairwise(choices(rr.positive, cap), choices(rs.positive, cap),
                                 cap, [](const Selection& a, const Selection& b) {
                                   return set_intersection(a, b);
                                 });
  DisjParaRelation t{r.scheme, transversal_component(distinct, cap), rr.negative};
  t.negative.insert(rs.negative.begin(), rs.negative.end());
  return finish(std::move(t));
}

DisjParaRelation dp_select(const DisjParaRelation& r, const ScopedFormula& f,
                           std::size_t cap) {
  if (*f.scheme() != *r.scheme)
    throw FormulaError("selection formula is scoped to a different scheme");
  const auto rr = dp_reduce(r);
  DisjParaRelation t{r.scheme, {}, rr.negative};
  for (const auto& w : rr.positive)
    if (std::all_of(w.begin(), w.end(), [&](const Tuple& x) { return f(x); }))
      t.positive.insert(w);
  for (auto& x : enumerate_tuple_space(*r.scheme, cap))
    if (!f(x)) t.negative.insert(std::move(x));
  return finish(std::move(t));
}

DisjParaRelation dp_project(const DisjParaRelation& r, const SchemeRef& target,
                            std::size_t cap) {
  const auto positions = attribute_positions(*r.scheme, *target);
  auto project = [&](const Tuple& x) {
    std::vector<ValueId> v;
    v.reserve(positions.size());
    for (auto p : positions) v.push_back(x[p]);
    return Tuple(std::move(v));
  };
  const auto rr = dp_reduce(r);
  DisjParaRelation t{target, {}, {}};
  for (const auto& w : rr.positive) {
    Tuples image;
    for (const auto& x : w) image.push_back(project(x));
    t.positive.insert(TupleSet(std::move(image)));
  }
  // A target tuple is negated when all of its extensions are negated: count
  // the negated tuples over each projection and compare with the number of
  // extensions.
  std::size_t extensions = 1;
  std::vector<bool> kept(r.scheme->arity(), false);
  for (auto p : positions) kept[p] = true;
  for (std::size_t i = 0; i < kept.size(); ++i)
    if (!kept[i]) extensions = saturating_mul(extensions, r.scheme->attribute(i).domain.size());
  if (extensions > cap) throw CombinatorialLimit("projection extension count", cap);
  std::map<Tuple, std::size_t> negated;
  for (const auto& x : rr.negative) ++negated[project(x)];
  for (const auto& [x, n] : negated)
    if (n == extensions) t.negative.insert(x);
  return finish(std::move(t));
}

DisjParaRelation dp_join(const DisjParaRelation& r, const DisjParaRelation& s,
                         const SchemeRef& joined, std::size_t cap) {
  if (*join_scheme(*r.scheme, *s.scheme, joined->name()) != *joined)
    throw SchemeMismatch("'" + joined->name() + "' is not the join scheme of '" +
                         r.scheme->name() + "' and '" + s.scheme->name() + "'");
  const auto rr = dp_reduce(r);
  const auto rs = dp_reduce(s);
  const auto distinct = pairwise(
      choices(rr.positive, cap), choices(rs.positive, cap), cap,
      [&](const Selection& a, const Selection& b) {
        return join_tuples(a, *r.scheme, b, *s.scheme, *joined);
      });
  DisjParaRelation t{joined, transversal_component(distinct, cap), {}};
  for (auto& x : extend_tuples(as_tuples(rr.negative), *r.scheme, *joined, cap))
    t.negative.insert(std::move(x));
  for (auto& x : extend_tuples(as_tuples(rs.negative), *s.scheme, *joined, cap))
    t.negative.insert(std::move(x));
  return finish(std::move(t));
}

}  // namespace gdpr
