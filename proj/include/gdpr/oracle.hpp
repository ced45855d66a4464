#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gdpr/formula.hpp"
#include "gdpr/gdp_algebra.hpp"
#include "gdpr/model.hpp"

namespace gdpr::oracle {

/// Bounds for random instances. Attribute count and domain size are upper
/// bounds drawn per trial; generation is a pure function of the seed.
struct GenConfig {
  std::uint64_t seed = 42;
  std::size_t max_attributes = 2;  // 1..2
  std::size_t max_domain = 4;      // 2..4
  std::size_t max_sets = 3;        // 0..3 tuple sets per component
  std::size_t max_set_size = 3;    // 1..3 tuples per set
  std::size_t trials = 500;
  std::size_t cap = kDefaultCap;

  /// Throws std::invalid_argument when a bound is out of range.
  void validate() const;
};

using Rng = std::mt19937_64;

/// Per-trial seed derived from the run seed.
std::uint64_t trial_seed(std::uint64_t seed, std::size_t trial);

SchemeRef random_scheme(Rng& rng, const GenConfig& cfg, std::string name,
                        std::size_t domain_size,
                        const std::vector<std::string>& attribute_pool = {"A", "B"});

/// Random components within bounds, before any normalization.
GenDisjParaRelation gen_raw_relation(Rng& rng, const GenConfig& cfg,
                                     const SchemeRef& scheme);

/// Random relation, then g_norm and g_reduce.
GenDisjParaRelation gen_relation(Rng& rng, const GenConfig& cfg, const SchemeRef& scheme);
GenDisjParaRelation gen_relation(const GenConfig& cfg, const SchemeRef& scheme);

/// Random selection formula of depth at most `depth` over =, !, &, |.
Formula gen_formula(Rng& rng, const Scheme& scheme, int depth = 3);

// Brute-force possible-worlds evaluation. These routines share nothing with
// the operators under test beyond the core value types.

/// Minimal consistent definite relations described by a DP relation.
ParaSet brute_dp_worlds(const DisjParaRelation& r);

/// Union over D in g_rep(r) of the worlds of normalized D, computed from
/// scratch by enumerating negative picks and then positive picks.
ParaSet flatten_worlds(const GenDisjParaRelation& r);

/// The same expansion applied member-wise to a set of DP relations, followed
/// by removal of inconsistent and non-minimal worlds.
ParaSet worlds_of(const DisjSet& members);

/// Canonical closure applied to both sides of a theorem check: drop
/// inconsistent members, normalize and reduce each member, keep the minimal
/// ones.
DisjSet dp_closure(const DisjSet& members, std::size_t cap = kDefaultCap);

enum class Agreement {
  Raw,      ///< identical sets of DP relations
  Closure,  ///< equal only after dp_closure
  Worlds,   ///< equal only at the level of definite worlds
  None,
};

const char* to_string(Agreement a);

Agreement compare(const DisjSet& lhs, const DisjSet& rhs, std::size_t cap = kDefaultCap);

struct Finding {
  std::uint64_t seed = 0;
  Agreement agreement = Agreement::None;
  std::string inputs;
  std::string lhs;
  std::string rhs;
  std::string diff;
};

struct CheckReport {
  std::string theorem;
  std::size_t trials = 0;
  std::size_t completed = 0;
  std::size_t skipped = 0;  ///< trials that hit the combinatorial cap
  std::size_t raw_equal = 0;
  std::size_t closure_equal = 0;
  std::size_t worlds_equal = 0;  ///< violations that still agree on definite worlds
  std::size_t consistency_failures = 0;  ///< outputs with g_norm(out) != out
  std::vector<Finding> closure_only;     ///< raw unequal, closure equal
  std::vector<Finding> violations;       ///< closure unequal

  bool passed() const { return violations.empty() && consistency_failures == 0; }
  void merge(const CheckReport& other);
};

/// Operators checked against their lifted DP counterparts.
enum class Operator { Union, Intersect, Select, Project, Join };

const char* to_string(Operator op);

/// g_rep(g_reduce(R)) against g_rep(R) for random normalized R.
CheckReport check_theorem1(const GenConfig& cfg);

/// g_rep(R op S) against S(op-hat)(g_rep(R), g_rep(S)) for union or
/// intersection.
CheckReport check_theorem2(const GenConfig& cfg, Operator op);

/// The intersection law with the lifted union on the right-hand side, as the
/// law is literally written.
CheckReport check_theorem2_literal_union(const GenConfig& cfg);

/// Selection, projection or join against the lifted DP operator.
CheckReport check_theorem3(const GenConfig& cfg, Operator op);

/// Positive components of the generalized operators on definite consistent
/// relations against a naive classical evaluator.
CheckReport classical_degeneration_check(const GenConfig& cfg);

/// A single trial, reproducible from its seed.
CheckReport replay(const std::string& theorem, std::uint64_t seed, const GenConfig& cfg);

std::string render(const CheckReport& report, bool verbose = false);

}  // namespace gdpr::oracle
