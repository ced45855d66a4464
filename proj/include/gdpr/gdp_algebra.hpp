#pragma once

#include <cstddef>
#include <functional>

#include "gdpr/dp_algebra.hpp"
#include "gdpr/formula.hpp"
#include "gdpr/model.hpp"

namespace gdpr {

/// Resolves the two containment inconsistencies, both decided against the
/// input and applied together:
///  - a positive set covered by the negative singletons is dropped, along
///    with the negative singletons of its tuples;
///  - a negative set covered by the positive singletons is dropped, along
///    with the positive singletons of its tuples.
GenDisjParaRelation g_norm(const GenDisjParaRelation& r);
bool g_is_normalized(const GenDisjParaRelation& r);

/// Removes redundancy until nothing changes: each round normalizes, strips
/// the opposite side's singleton tuples from every set, and keeps only the
/// subset-minimal sets on each side.
GenDisjParaRelation g_reduce(const GenDisjParaRelation& r, std::size_t cap = kDefaultCap);

/// Drops members with a positive set wholly inside their negative set.
DisjSet g_normrep(const DisjSet& u);
/// Keeps members not componentwise subsumed by another member.
DisjSet g_reducerep(const DisjSet& u);

/// Information content: one disjunctive paraconsistent relation per way of
/// picking a tuple from every negative set, minus inconsistent and
/// non-minimal ones.
DisjSet g_rep(const GenDisjParaRelation& r, std::size_t cap = kDefaultCap);

// Generalized operators. Inputs must be normalized; each is reduced first and
// every result is reduced (and therefore normalized).

GenDisjParaRelation g_union(const GenDisjParaRelation& r, const GenDisjParaRelation& s,
                            std::size_t cap = kDefaultCap);
GenDisjParaRelation g_intersect(const GenDisjParaRelation& r,
                                const GenDisjParaRelation& s,
                                std::size_t cap = kDefaultCap);
/// Swaps the components of g_reduce(r). This is explicit negation, not a
/// closed-world complement.
GenDisjParaRelation g_complement(const GenDisjParaRelation& r,
                                 std::size_t cap = kDefaultCap);
GenDisjParaRelation g_select(const GenDisjParaRelation& r, const ScopedFormula& f,
                             std::size_t cap = kDefaultCap);
GenDisjParaRelation g_project(const GenDisjParaRelation& r, const SchemeRef& target,
                              std::size_t cap = kDefaultCap);
GenDisjParaRelation g_join(const GenDisjParaRelation& r, const GenDisjParaRelation& s,
                           const SchemeRef& joined, std::size_t cap = kDefaultCap);

using UnaryDpOperator = std::function<DisjParaRelation(const DisjParaRelation&)>;
using BinaryDpOperator =
    std::function<DisjParaRelation(const DisjParaRelation&, const DisjParaRelation&)>;

/// Applies a DP-level operator to every member (or pair of members) of its
/// argument sets and collects the images.
DisjSet lift_operator(const UnaryDpOperator& op, const DisjSet& m,
                      std::size_t cap = kDefaultCap);
DisjSet lift_operator(const BinaryDpOperator& op, const DisjSet& m1, const DisjSet& m2,
                      std::size_t cap = kDefaultCap);

}  // namespace gdpr
