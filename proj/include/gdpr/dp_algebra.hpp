#pragma once

#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "gdpr/formula.hpp"
#include "gdpr/model.hpp"

namespace gdpr {

/// Sets to pick one tuple from. Members may repeat; order does not matter.
using ChoiceFamily = std::vector<TupleSet>;

/// A picked set of tuples; may be empty (the pick over an empty family).
using Selection = Tuples;
using SelectionSet = std::set<Selection>;

/// Every set obtained by picking exactly one tuple from each member of
/// `family`. Picks from different members may coincide, giving smaller sets.
/// The empty family yields exactly one, empty, selection.
///
/// Throws CombinatorialLimit when the product of member sizes exceeds `cap`.
SelectionSet choices(std::span<const TupleSet> family, std::size_t cap = kDefaultCap);
SelectionSet choices(const TupleSetFamily& family, std::size_t cap = kDefaultCap);

/// Every set {t_1, ..., t_g} with t_i drawn from the i-th of the distinct
/// sets. Any empty member, or no members at all, leaves nothing to assert and
/// the result is empty.
///
/// Throws CombinatorialLimit when one extension step would generate more
/// than `cap` candidate sets.
TupleSetFamily transversal_component(const SelectionSet& distinct_sets,
                                     std::size_t cap = kDefaultCap);

/// Minimal members of a family under strict inclusion.
TupleSetFamily minimal_sets(const TupleSetFamily& family);

DisjParaRelation dp_norm(const DisjParaRelation& r);
bool dp_is_normalized(const DisjParaRelation& r);

/// Removes negated tuples from each positive set and keeps the minimal
/// results. Throws InconsistentInput if a positive set is wholly negated.
DisjParaRelation dp_reduce(const DisjParaRelation& r);

ParaSet dp_normrep(const ParaSet& u);
ParaSet dp_reducerep(const ParaSet& u);

/// Information content: the minimal consistent paraconsistent relations
/// obtained by picking one tuple from every positive set.
ParaSet dp_rep(const DisjParaRelation& r, std::size_t cap = kDefaultCap);

// Operators on normalized disjunctive paraconsistent relations. Inputs are
// reduced first and results are returned normalized and reduced.

DisjParaRelation dp_union(const DisjParaRelation& r, const DisjParaRelation& s,
                          std::size_t cap = kDefaultCap);
DisjParaRelation dp_intersect(const DisjParaRelation& r, const DisjParaRelation& s,
                              std::size_t cap = kDefaultCap);
DisjParaRelation dp_select(const DisjParaRelation& r, const ScopedFormula& f,
                           std::size_t cap = kDefaultCap);
/// `target` must hold a subset of `r`'s attributes with the same domains.
DisjParaRelation dp_project(const DisjParaRelation& r, const SchemeRef& target,
                            std::size_t cap = kDefaultCap);
/// Result is on `joined`, which must be join_scheme(r, s) up to naming.
DisjParaRelation dp_join(const DisjParaRelation& r, const DisjParaRelation& s,
                         const SchemeRef& joined, std::size_t cap = kDefaultCap);

}  // namespace gdpr
