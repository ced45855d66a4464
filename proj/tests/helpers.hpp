#pragma once

// Compact construction of test relations through the database text format:
//   gdp(s, "+ (a); + (b) | (c); - (b);")

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gdpr/model.hpp"
#include "gdpr/storage.hpp"

namespace testing {

inline gdpr::SchemeRef letters(std::vector<std::string> domain = {"a", "b", "c", "d", "e",
                                                                  "f", "g", "h", "i"}) {
  return gdpr::make_scheme("letters", {{"X", std::move(domain)}});
}

inline gdpr::SchemeRef two(std::string a = "A", std::vector<std::string> da = {"a1", "a2"},
                           std::string b = "B", std::vector<std::string> db = {"b1", "b2"},
                           std::string name = "ab") {
  return gdpr::make_scheme(std::move(name), {{std::move(a), std::move(da)},
                                             {std::move(b), std::move(db)}});
}

inline std::string scheme_text(const gdpr::Scheme& s) {
  std::string out = "scheme " + s.name() + " {";
  for (const auto& a : s.attributes()) {
    out += " " + a.name + ":";
    for (const auto& v : a.domain) out += " '" + v + "'";
    out += ";";
  }
  return out + " }\n";
}

inline gdpr::GenDisjParaRelation gdp(const gdpr::SchemeRef& s, std::string_view body) {
  auto db = gdpr::parse_db(scheme_text(*s) + "relation r : " + s->name() + " {" +
                           std::string(body) + "}");
  auto r = db.relation("r");
  r.scheme = s;
  return r;
}

/// Negative statements must be singletons.
inline gdpr::DisjParaRelation dp(const gdpr::SchemeRef& s, std::string_view body) {
  auto g = gdp(s, body);
  gdpr::DisjParaRelation out{s, g.positive, {}};
  for (const auto& w : g.negative) {
    if (!w.singleton()) throw std::invalid_argument("dp(): disjunctive negative");
    out.negative.insert(w.front());
  }
  return out;
}

inline gdpr::ParaRelation para(const gdpr::SchemeRef& s, std::string_view body) {
  auto d = dp(s, body);
  gdpr::ParaRelation out{s, {}, d.negative};
  for (const auto& w : d.positive) {
    if (!w.singleton()) throw std::invalid_argument("para(): disjunctive positive");
    out.positive.insert(w.front());
  }
  return out;
}

inline gdpr::Tuple tup(const gdpr::SchemeRef& s, std::vector<std::string> values) {
  return s->make_tuple(values);
}

inline gdpr::TupleSet set(const gdpr::SchemeRef& s,
                          std::vector<std::vector<std::string>> tuples) {
  gdpr::Tuples ts;
  for (auto& t : tuples) ts.push_back(tup(s, std::move(t)));
  return gdpr::TupleSet(gdpr::sorted_unique(std::move(ts)));
}

/// Single-attribute shorthand: sel(s, "bc") is the selection {(b),(c)}.
inline gdpr::Tuples sel(const gdpr::SchemeRef& s, std::string_view chars) {
  gdpr::Tuples ts;
  for (char c : chars) ts.push_back(tup(s, {std::string(1, c)}));
  return gdpr::sorted_unique(std::move(ts));
}

}  // namespace testing
