#include "gdpr/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "gdpr/error.hpp"

namespace gdpr::oracle {

void GenConfig::validate() const {
  auto bad = [](const std::string& what) { throw std::invalid_argument(what); };
  if (max_attributes < 1 || max_attributes > 2) bad("attribute count must be 1..2");
  if (max_domain < 2 || max_domain > 4) bad("domain size must be 2..4");
  if (max_sets > 3) bad("tuple sets per component must be 0..3");
  if (max_set_size < 1 || max_set_size > 3) bad("tuples per set must be 1..3");
  if (cap < 1) bad("cap must be positive");
}

std::uint64_t trial_seed(std::uint64_t seed, std::size_t trial) {
  // splitmix64 finalizer over the pair.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (trial + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

std::vector<std::string> domain_values(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("v" + std::to_string(i));
  return out;
}

std::vector<std::string> pick_attributes(Rng& rng, std::size_t max,
                                         const std::vector<std::string>& pool) {
  const std::size_t count = uniform(rng, 1, std::min(max, pool.size()));
  std::vector<std::string> shuffled = pool;
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  shuffled.resize(count);
  std::vector<std::string> out;
  for (const auto& a : pool)
    if (std::find(shuffled.begin(), shuffled.end(), a) != shuffled.end()) out.push_back(a);
  return out;
}

TupleSetFamily random_family(Rng& rng, const GenConfig& cfg, const Tuples& space) {
  TupleSetFamily out;
  const std::size_t sets = uniform(rng, 0, cfg.max_sets);
  for (std::size_t i = 0; i < sets; ++i) {
    const std::size_t size = uniform(rng, 1, std::min(cfg.max_set_size, space.size()));
    Tuples w;
    for (std::size_t k = 0; k < size; ++k) w.push_back(space[uniform(rng, 0, space.size() - 1)]);
    out.insert(TupleSet(std::move(w)));
  }
  return out;
}

}  // namespace

SchemeRef random_scheme(Rng& rng, const GenConfig& cfg, std::string name,
                        std::size_t domain_size,
                        const std::vector<std::string>& attribute_pool) {
  std::vector<Attribute> attrs;
  for (auto& a : pick_attributes(rng, cfg.max_attributes, attribute_pool))
    attrs.push_back({std::move(a), domain_values(domain_size)});
  return make_scheme(std::move(name), std::move(attrs));
}

GenDisjParaRelation gen_raw_relation(Rng& rng, const GenConfig& cfg,
                                     const SchemeRef& scheme) {
  const Tuples space = enumerate_tuple_space(*scheme, cfg.cap);
  GenDisjParaRelation r{scheme, random_family(rng, cfg, space), {}};
  r.negative = random_family(rng, cfg, space);
  return r;
}

GenDisjParaRelation gen_relation(Rng& rng, const GenConfig& cfg, const SchemeRef& scheme) {
  return g_reduce(g_norm(gen_raw_relation(rng, cfg, scheme)), cfg.cap);
}

GenDisjParaRelation gen_relation(const GenConfig& cfg, const SchemeRef& scheme) {
  Rng rng(cfg.seed);
  return gen_relation(rng, cfg, scheme);
}

Formula gen_formula(Rng& rng, const Scheme& scheme, int depth) {
  const std::size_t roll = uniform(rng, 0, depth <= 1 ? 5 : 9);
  auto attribute = [&] { return scheme.attribute(uniform(rng, 0, scheme.arity() - 1)); };
  if (roll == 0) return Formula::truth(uniform(rng, 0, 1) == 1);
  if (roll <= 5) {
    const Attribute a = attribute();
    if (scheme.arity() > 1 && uniform(rng, 0, 4) == 0) {
      const Attribute b = attribute();
      if (a.domain == b.domain) return Formula::equal(Operand(a.name), Operand(b.name));
    }
    const std::string& v = a.domain[uniform(rng, 0, a.domain.size() - 1)];
    const bool quoted = scheme.position(v).has_value();
    return Formula::equal(Operand(a.name), Operand(v, quoted));
  }
  if (roll <= 6) return Formula::negate(gen_formula(rng, scheme, depth - 1));
  Formula l = gen_formula(rng, scheme, depth - 1);
  Formula r = gen_formula(rng, scheme, depth - 1);
  return roll <= 8 ? Formula::conjunction(std::move(l), std::move(r))
                   : Formula::disjunction(std::move(l), std::move(r));
}

// --- brute-force possible worlds -------------------------------------------

namespace {

using TupleVecs = std::vector<std::vector<Tuple>>;

void each_pick(const TupleVecs& sets, std::size_t i, std::set<Tuple>& current,
               const std::function<void(const std::set<Tuple>&)>& visit) {
  if (i == sets.size()) {
    visit(current);
    return;
  }
  for (const auto& t : sets[i]) {
    const bool fresh = current.insert(t).second;
    each_pick(sets, i + 1, current, visit);
    if (fresh) current.erase(t);
  }
}

TupleVecs as_vecs(const TupleSetFamily& f) {
  TupleVecs out;
  for (const auto& w : f) out.emplace_back(w.begin(), w.end());
  return out;
}

bool covered_by(const TupleSet& w, const std::set<Tuple>& ts) {
  for (const auto& t : w)
    if (!ts.contains(t)) return false;
  return true;
}

template <typename T>
bool subset(const std::set<T>& small, const std::set<T>& big) {
  for (const auto& x : small)
    if (!big.contains(x)) return false;
  return true;
}

ParaSet minimal_worlds(const ParaSet& worlds) {
  ParaSet out;
  for (const auto& w : worlds) {
    bool consistent = true;
    for (const auto& t : w.positive)
      if (w.negative.contains(t)) consistent = false;
    if (!consistent) continue;
    bool dominated = false;
    for (const auto& v : worlds) {
      if (v == w) continue;
      bool v_consistent = true;
      for (const auto& t : v.positive)
        if (v.negative.contains(t)) v_consistent = false;
      if (v_consistent && subset(v.positive, w.positive) && subset(v.negative, w.negative))
        dominated = true;
    }
    if (!dominated) out.insert(w);
  }
  return out;
}

// Drops positive sets wholly negated, together with their negated tuples.
DisjParaRelation brute_norm(const DisjParaRelation& r) {
  DisjParaRelation out{r.scheme, {}, r.negative};
  for (const auto& w : r.positive) {
    if (covered_by(w, r.negative)) {
      for (const auto& t : w) out.negative.erase(t);
    } else {
      out.positive.insert(w);
    }
  }
  return out;
}

}  // namespace

ParaSet brute_dp_worlds(const DisjParaRelation& r) {
  ParaSet all;
  std::set<Tuple> current;
  each_pick(as_vecs(r.positive), 0, current, [&](const std::set<Tuple>& pick) {
    all.insert({r.scheme, pick, r.negative});
  });
  return minimal_worlds(all);
}

ParaSet flatten_worlds(const GenDisjParaRelation& r) {
  std::vector<DisjParaRelation> members;
  std::set<Tuple> current;
  each_pick(as_vecs(r.negative), 0, current, [&](const std::set<Tuple>& pick) {
    for (const auto& w : r.positive)
      if (covered_by(w, pick)) return;
    members.push_back({r.scheme, r.positive, pick});
  });
  // Every member shares the positive component, so minimality is decided by
  // the negative picks alone.
  ParaSet out;
  for (const auto& m : members) {
    bool dominated = std::any_of(members.begin(), members.end(), [&](const auto& o) {
      return o.negative != m.negative && subset(o.negative, m.negative);
    });
    if (dominated) continue;
    for (const auto& w : brute_dp_worlds(brute_norm(m))) out.insert(w);
  }
  return out;
}

ParaSet worlds_of(const DisjSet& members) {
  ParaSet all;
  for (const auto& m : members)
    for (const auto& w : brute_dp_worlds(brute_norm(m))) all.insert(w);
  return minimal_worlds(all);
}

DisjSet dp_closure(const DisjSet& members, std::size_t) {
  DisjSet reduced;
  for (const auto& m : g_normrep(members)) reduced.insert(dp_reduce(dp_norm(m)));
  return g_reducerep(reduced);
}

const char* to_string(Agreement a) {
  switch (a) {
    case Agreement::Raw: return "raw";
    case Agreement::Closure: return "closure";
    case Agreement::Worlds: return "worlds";
    case Agreement::None: return "none";
  }
  return "?";
}

Agreement compare(const DisjSet& lhs, const DisjSet& rhs, std::size_t cap) {
  if (lhs == rhs) return Agreement::Raw;
  if (dp_closure(lhs, cap) == dp_closure(rhs, cap)) return Agreement::Closure;
  if (worlds_of(lhs) == worlds_of(rhs)) return Agreement::Worlds;
  return Agreement::None;
}

const char* to_string(Operator op) {
  switch (op) {
    case Operator::Union: return "union";
    case Operator::Intersect: return "intersect";
    case Operator::Select: return "select";
    case Operator::Project: return "project";
    case Operator::Join: return "join";
  }
  return "?";
}

void CheckReport::merge(const CheckReport& o) {
  trials += o.trials;
  completed += o.completed;
  skipped += o.skipped;
  raw_equal += o.raw_equal;
  closure_equal += o.closure_equal;
  worlds_equal += o.worlds_equal;
  consistency_failures += o.consistency_failures;
  closure_only.insert(closure_only.end(), o.closure_only.begin(), o.closure_only.end());
  violations.insert(violations.end(), o.violations.begin(), o.violations.end());
}

// --- theorem trials ----------------------------------------------------------

namespace {

std::string set_string(const DisjSet& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& r : s) {
    if (!first) out += ", ";
    first = false;
    out += to_string(r);
  }
  return out + "}";
}

std::string diff_string(const DisjSet& lhs, const DisjSet& rhs) {
  DisjSet only_l, only_r;
  std::set_difference(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(),
                      std::inserter(only_l, only_l.end()));
  std::set_difference(rhs.begin(), rhs.end(), lhs.begin(), lhs.end(),
                      std::inserter(only_r, only_r.end()));
  return "only lhs " + set_string(only_l) + "; only rhs " + set_string(only_r);
}

struct TrialOutcome {
  std::string inputs;
  DisjSet lhs, rhs;
  std::vector<GenDisjParaRelation> outputs;  // checked for consistency
};

// Records one finished trial into `report`.
void record(CheckReport& report, std::uint64_t seed, const TrialOutcome& t,
            std::size_t cap) {
  ++report.completed;
  for (const auto& out : t.outputs)
    if (g_norm(out) != out) ++report.consistency_failures;
  const Agreement a = compare(t.lhs, t.rhs, cap);
  Finding f;
  if (a != Agreement::Raw) {
    const DisjSet cl = dp_closure(t.lhs, cap), cr = dp_closure(t.rhs, cap);
    f = {seed, a, t.inputs, set_string(cl), set_string(cr), diff_string(cl, cr)};
  }
  switch (a) {
    case Agreement::Raw: ++report.raw_equal; break;
    case Agreement::Closure:
      ++report.closure_equal;
      report.closure_only.push_back(f);
      break;
    // Agreement on definite worlds alone is still a violation; the count
    // only tells representational mismatches from lost information.
    case Agreement::Worlds:
      ++report.worlds_equal;
      report.violations.push_back(f);
      break;
    case Agreement::None: report.violations.push_back(f); break;
  }
}

using Trial = std::function<TrialOutcome(Rng&, const GenConfig&)>;

CheckReport run_trials(const std::string& theorem, const GenConfig& cfg,
                       const Trial& trial, std::size_t first = 0,
                       std::optional<std::uint64_t> fixed_seed = std::nullopt) {
  cfg.validate();
  CheckReport report;
  report.theorem = theorem;
  const std::size_t n = fixed_seed ? 1 : cfg.trials;
  for (std::size_t i = first; i < first + n; ++i) {
    const std::uint64_t seed = fixed_seed ? *fixed_seed : trial_seed(cfg.seed, i);
    ++report.trials;
    Rng rng(seed);
    try {
      TrialOutcome t = trial(rng, cfg);
      record(report, seed, t, cfg.cap);
    } catch (const CombinatorialLimit&) {
      ++report.skipped;
    }
  }
  return report;
}

std::size_t draw_domain(Rng& rng, const GenConfig& cfg) {
  return uniform(rng, 2, cfg.max_domain);
}

TrialOutcome theorem1_trial(Rng& rng, const GenConfig& cfg) {
  auto scheme = random_scheme(rng, cfg, "S", draw_domain(rng, cfg));
  // Normalized but not yet reduced, so that reduction has work to do.
  const auto r = g_norm(gen_raw_relation(rng, cfg, scheme));
  const auto reduced = g_reduce(r, cfg.cap);
  return {"R = " + to_string(r), g_rep(reduced, cfg.cap), g_rep(r, cfg.cap), {reduced}};
}

BinaryDpOperator dp_binary(Operator op, std::size_t cap) {
  if (op == Operator::Union)
    return [cap](const auto& a, const auto& b) { return dp_union(a, b, cap); };
  return [cap](const auto& a, const auto& b) { return dp_intersect(a, b, cap); };
}

TrialOutcome theorem2_trial(Rng& rng, const GenConfig& cfg, Operator op,
                            Operator lifted) {
  auto scheme = random_scheme(rng, cfg, "S", draw_domain(rng, cfg));
  const auto r = gen_relation(rng, cfg, scheme);
  const auto s = gen_relation(rng, cfg, scheme);
  const auto out = op == Operator::Union ? g_union(r, s, cfg.cap)
                                         : g_intersect(r, s, cfg.cap);
  return {"R = " + to_string(r) + ", S = " + to_string(s), g_rep(out, cfg.cap),
          lift_operator(dp_binary(lifted, cfg.cap), g_rep(r, cfg.cap), g_rep(s, cfg.cap),
                        cfg.cap),
          {out}};
}

TrialOutcome theorem3_trial(Rng& rng, const GenConfig& cfg, Operator op) {
  const std::size_t domain = draw_domain(rng, cfg);
  auto scheme = random_scheme(rng, cfg, "S", domain);
  const auto r = gen_relation(rng, cfg, scheme);
  const std::string rs = "R = " + to_string(r);
  switch (op) {
    case Operator::Select: {
      const ScopedFormula f(gen_formula(rng, *scheme), scheme);
      const auto out = g_select(r, f, cfg.cap);
      UnaryDpOperator theta = [&](const DisjParaRelation& d) {
        return dp_select(d, f, cfg.cap);
      };
      return {rs + ", F = " + print(f.formula()), g_rep(out, cfg.cap),
              lift_operator(theta, g_rep(r, cfg.cap), cfg.cap), {out}};
    }
    case Operator::Project: {
      std::vector<std::string> names;
      for (const auto& a : scheme->attributes()) names.push_back(a.name);
      auto kept = pick_attributes(rng, names.size(), names);
      auto target = sub_scheme(*scheme, kept, "P");
      const auto out = g_project(r, target, cfg.cap);
      UnaryDpOperator theta = [&](const DisjParaRelation& d) {
        return dp_project(d, target, cfg.cap);
      };
      std::string attrs;
      for (const auto& k : kept) attrs += (attrs.empty() ? "" : ",") + k;
      return {rs + ", onto [" + attrs + "]", g_rep(out, cfg.cap),
              lift_operator(theta, g_rep(r, cfg.cap), cfg.cap), {out}};
    }
    case Operator::Join: {
      auto other = random_scheme(rng, cfg, "T", domain, {"A", "B", "C"});
      const auto s = gen_relation(rng, cfg, other);
      auto joined = join_scheme(*scheme, *other, "J");
      const auto out = g_join(r, s, joined, cfg.cap);
      BinaryDpOperator theta = [&](const DisjParaRelation& a, const DisjParaRelation& b) {
        return dp_join(a, b, joined, cfg.cap);
      };
      std::string attrs;
      for (const auto& a : other->attributes()) attrs += (attrs.empty() ? "" : ",") + a.name;
      return {rs + ", S[" + attrs + "] = " + to_string(s), g_rep(out, cfg.cap),
              lift_operator(theta, g_rep(r, cfg.cap), g_rep(s, cfg.cap), cfg.cap),
              {out}};
    }
    default: break;
  }
  throw std::invalid_argument("theorem 3 covers select, project and join");
}

// --- classical evaluator -------------------------------------------------------

// Rows keyed by attribute name; values by name. Independent of the library's
// index encoding and operators.
using Row = std::map<std::string, std::string>;
using Table = std::set<Row>;

Table table_of(const std::set<Tuple>& ts, const Scheme& scheme) {
  Table out;
  for (const auto& t : ts) {
    Row row;
    for (std::size_t i = 0; i < scheme.arity(); ++i)
      row[scheme.attribute(i).name] = scheme.value_name(i, t[i]);
    out.insert(row);
  }
  return out;
}

bool classical_holds(const Formula& f, const Row& row) {
  auto operand = [&](const Operand& o) {
    if (!o.quoted) {
      auto it = row.find(o.text);
      if (it != row.end()) return it->second;
    }
    return o.text;
  };
  switch (f.kind()) {
    case Formula::Kind::True: return true;
    case Formula::Kind::False: return false;
    case Formula::Kind::Equal: return operand(f.lhs()) == operand(f.rhs());
    case Formula::Kind::Not: return !classical_holds(f.child(0), row);
    case Formula::Kind::And:
      return classical_holds(f.child(0), row) && classical_holds(f.child(1), row);
    case Formula::Kind::Or:
      return classical_holds(f.child(0), row) || classical_holds(f.child(1), row);
  }
  return false;
}

Table positive_singletons(const GenDisjParaRelation& r, bool& definite) {
  std::set<Tuple> ts;
  definite = true;
  for (const auto& w : r.positive) {
    if (!w.singleton()) definite = false;
    ts.insert(w.front());
  }
  return table_of(ts, *r.scheme);
}

GenDisjParaRelation definite_relation(Rng& rng, const GenConfig& cfg,
                                      const SchemeRef& scheme) {
  const Tuples space = enumerate_tuple_space(*scheme, cfg.cap);
  GenDisjParaRelation r{scheme, {}, {}};
  std::set<Tuple> used;
  for (std::size_t i = uniform(rng, 0, cfg.max_sets * 2); i > 0; --i) {
    const Tuple& t = space[uniform(rng, 0, space.size() - 1)];
    if (used.insert(t).second) r.positive.insert(TupleSet{t});
  }
  for (std::size_t i = uniform(rng, 0, cfg.max_sets); i > 0; --i) {
    const Tuple& t = space[uniform(rng, 0, space.size() - 1)];
    if (used.insert(t).second) r.negative.insert(TupleSet{t});
  }
  return r;
}

std::set<Tuple> tuples_of(const GenDisjParaRelation& r) {
  std::set<Tuple> out;
  for (const auto& w : r.positive) out.insert(w.front());
  return out;
}

}  // namespace

CheckReport check_theorem1(const GenConfig& cfg) {
  return run_trials("1", cfg, theorem1_trial);
}

CheckReport check_theorem2(const GenConfig& cfg, Operator op) {
  if (op != Operator::Union && op != Operator::Intersect)
    throw std::invalid_argument("theorem 2 covers union and intersection");
  return run_trials(std::string("2-") + to_string(op), cfg,
                    [op](Rng& rng, const GenConfig& c) {
                      return theorem2_trial(rng, c, op, op);
                    });
}

CheckReport check_theorem2_literal_union(const GenConfig& cfg) {
  return run_trials("2-intersect-vs-lifted-union", cfg, [](Rng& rng, const GenConfig& c) {
    return theorem2_trial(rng, c, Operator::Intersect, Operator::Union);
  });
}

CheckReport check_theorem3(const GenConfig& cfg, Operator op) {
  return run_trials(std::string("3-") + to_string(op), cfg,
                    [op](Rng& rng, const GenConfig& c) { return theorem3_trial(rng, c, op); });
}

CheckReport classical_degeneration_check(const GenConfig& cfg) {
  cfg.validate();
  CheckReport report;
  report.theorem = "classical";
  for (std::size_t i = 0; i < cfg.trials; ++i) {
    const std::uint64_t seed = trial_seed(cfg.seed, i);
    Rng rng(seed);
    ++report.trials;
    try {
      const std::size_t domain = draw_domain(rng, cfg);
      auto scheme = random_scheme(rng, cfg, "S", domain);
      auto other = random_scheme(rng, cfg, "T", domain, {"A", "B", "C"});
      const auto r = definite_relation(rng, cfg, scheme);
      const auto s = definite_relation(rng, cfg, scheme);
      const auto u = definite_relation(rng, cfg, other);
      const Formula formula = gen_formula(rng, *scheme);
      const ScopedFormula f(formula, scheme);
      std::vector<std::string> names;
      for (const auto& a : scheme->attributes()) names.push_back(a.name);
      auto kept = pick_attributes(rng, names.size(), names);
      auto target = sub_scheme(*scheme, kept, "P");
      auto joined = join_scheme(*scheme, *other, "J");

      const Table tr = table_of(tuples_of(r), *scheme);
      const Table ts = table_of(tuples_of(s), *scheme);
      const Table tu = table_of(tuples_of(u), *other);

      std::vector<std::pair<std::string, std::pair<GenDisjParaRelation, Table>>> cases;
      {
        Table t = tr;
        t.insert(ts.begin(), ts.end());
        cases.push_back({"union", {g_union(r, s, cfg.cap), t}});
      }
      {
        Table t;
        std::set_intersection(tr.begin(), tr.end(), ts.begin(), ts.end(),
                              std::inserter(t, t.end()));
        cases.push_back({"intersect", {g_intersect(r, s, cfg.cap), t}});
      }
      {
        Table t;
        for (const auto& row : tr)
          if (classical_holds(formula, row)) t.insert(row);
        cases.push_back({"select", {g_select(r, f, cfg.cap), t}});
      }
      {
        Table t;
        for (const auto& row : tr) {
          Row p;
          for (const auto& k : kept) p[k] = row.at(k);
          t.insert(p);
        }
        cases.push_back({"project", {g_project(r, target, cfg.cap), t}});
      }
      {
        Table t;
        for (const auto& a : tr)
          for (const auto& b : tu) {
            bool match = true;
            for (const auto& [k, v] : b)
              if (a.contains(k) && a.at(k) != v) match = false;
            if (!match) continue;
            Row row = a;
            row.insert(b.begin(), b.end());
            t.insert(row);
          }
        cases.push_back({"join", {g_join(r, u, joined, cfg.cap), t}});
      }
      ++report.completed;
      bool all_equal = true;
      for (const auto& [name, c] : cases) {
        bool definite = true;
        const Table got = positive_singletons(c.first, definite);
        if (!definite || got != c.second) {
          all_equal = false;
          report.violations.push_back({seed, Agreement::None,
                                       name + ": R = " + to_string(r) + ", S = " +
                                           to_string(s) + ", U = " + to_string(u) +
                                           ", F = " + print(formula),
                                       to_string(c.first), "classical result differs",
                                       ""});
        }
        if (g_norm(c.first) != c.first) ++report.consistency_failures;
      }
      if (all_equal) ++report.raw_equal;
    } catch (const CombinatorialLimit&) {
      ++report.skipped;
    }
  }
  return report;
}

CheckReport replay(const std::string& theorem, std::uint64_t seed, const GenConfig& cfg) {
  if (theorem == "1") return run_trials(theorem, cfg, theorem1_trial, 0, seed);
  for (Operator op : {Operator::Union, Operator::Intersect})
    if (theorem == std::string("2-") + to_string(op))
      return run_trials(theorem, cfg,
                        [op](Rng& rng, const GenConfig& c) {
                          return theorem2_trial(rng, c, op, op);
                        },
                        0, seed);
  if (theorem == "2-intersect-vs-lifted-union")
    return run_trials(theorem, cfg,
                      [](Rng& rng, const GenConfig& c) {
                        return theorem2_trial(rng, c, Operator::Intersect, Operator::Union);
                      },
                      0, seed);
  for (Operator op : {Operator::Select, Operator::Project, Operator::Join})
    if (theorem == std::string("3-") + to_string(op))
      return run_trials(theorem, cfg,
                        [op](Rng& rng, const GenConfig& c) {
                          return theorem3_trial(rng, c, op);
                        },
                        0, seed);
  throw std::invalid_argument("unknown theorem '" + theorem + "'");
}

std::string render(const CheckReport& r, bool verbose) {
  std::ostringstream out;
  out << "theorem " << r.theorem << ": trials=" << r.trials << " completed=" << r.completed
      << " skipped=" << r.skipped << " raw-equal=" << r.raw_equal
      << " closure-only=" << r.closure_equal << " violations=" << r.violations.size()
      << " (worlds-equal=" << r.worlds_equal << ")"
      << " consistency-failures=" << r.consistency_failures << "\n";
  auto list = [&](const char* label, const std::vector<Finding>& fs, std::size_t limit) {
    for (std::size_t i = 0; i < fs.size() && i < limit; ++i) {
      const auto& f = fs[i];
      out << "  " << label << " seed=" << f.seed << " agreement=" << to_string(f.agreement)
          << "\n    inputs: " << f.inputs
          << "\n    lhs: " << f.lhs << "\n    rhs: " << f.rhs << "\n    diff: " << f.diff
          << "\n";
    }
    if (fs.size() > limit) out << "  ... " << fs.size() - limit << " more " << label << "\n";
  };
  list("violation", r.violations, verbose ? r.violations.size() : 5);
  if (verbose) {
    list("closure-only", r.closure_only, r.closure_only.size());
  }
  return out.str();
}

}  // namespace gdpr::oracle
