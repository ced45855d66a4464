#include <doctest.h>

#include "gdpr/dp_algebra.hpp"
#include "gdpr/error.hpp"
#include "helpers.hpp"

using namespace gdpr;
using testing::dp;
using testing::para;
using testing::sel;
using testing::tup;

namespace {

TupleSet ts(const SchemeRef& s, std::string_view chars) { return TupleSet(sel(s, chars)); }

}  // namespace

TEST_CASE("choices") {
  auto s = testing::letters();
  ChoiceFamily f{ts(s, "ab"), ts(s, "c")};
  CHECK(choices(f) == SelectionSet{sel(s, "ac"), sel(s, "bc")});
  ChoiceFamily same{ts(s, "a"), ts(s, "a")};
  CHECK(choices(same) == SelectionSet{sel(s, "a")});
  ChoiceFamily none;
  CHECK(choices(none) == SelectionSet{Selection{}});

  ChoiceFamily ex3{ts(s, "b"), ts(s, "ce"), ts(s, "cdg")};
  CHECK(choices(ex3) == SelectionSet{sel(s, "bc"), sel(s, "bcd"), sel(s, "bcg"),
                                     sel(s, "bce"), sel(s, "bed"), sel(s, "beg")});
  CHECK_THROWS_AS(choices(ex3, 5), CombinatorialLimit);
  CHECK_NOTHROW(choices(ex3, 6));
}

TEST_CASE("transversal component") {
  auto s = testing::letters();
  CHECK(transversal_component({sel(s, "b")}) == TupleSetFamily{ts(s, "b")});
  CHECK(transversal_component({sel(s, "ab"), sel(s, "c")}) ==
        TupleSetFamily{ts(s, "ac"), ts(s, "bc")});
  CHECK(transversal_component({Selection{}, sel(s, "b")}).empty());
  CHECK(transversal_component({}).empty());
  CHECK_THROWS_AS(transversal_component({sel(s, "abc"), sel(s, "def")}, 8),
                  CombinatorialLimit);
}

TEST_CASE("minimal sets") {
  auto s = testing::letters();
  CHECK(minimal_sets({ts(s, "a"), ts(s, "ab"), ts(s, "bc"), ts(s, "abc")}) ==
        TupleSetFamily{ts(s, "a"), ts(s, "bc")});
}

TEST_CASE("dp_norm") {
  auto s = testing::letters();
  auto r = dp(s, "+ (a) | (c); - (c);");
  CHECK(dp_norm(r) == r);
  CHECK(dp_norm(dp(s, "+ (b) | (c); - (b); - (c); - (e);")) == dp(s, "- (e);"));
  auto only_pos = dp(s, "+ (a) | (b); + (c);");
  CHECK(dp_norm(only_pos) == only_pos);
  CHECK(dp_is_normalized(r));
  CHECK_FALSE(dp_is_normalized(dp(s, "+ (c); - (c);")));
}

TEST_CASE("dp_reduce") {
  auto s = testing::letters();
  CHECK(dp_reduce(dp(s, "+ (a) | (b); + (c); - (b);")) == dp(s, "+ (a); + (c); - (b);"));
  CHECK(dp_reduce(dp(s, "+ (a); + (a) | (b);")) == dp(s, "+ (a);"));
  auto reduced = dp(s, "+ (a) | (d); + (c); - (b);");
  CHECK(dp_reduce(reduced) == reduced);
  CHECK_THROWS_AS(dp_reduce(dp(s, "+ (b); - (b);")), InconsistentInput);
}

TEST_CASE("dp_normrep and dp_reducerep") {
  auto s = testing::letters();
  CHECK(dp_normrep({para(s, "+ (a); - (a);")}).empty());
  CHECK(dp_normrep({para(s, "+ (a); - (c);"), para(s, "+ (c); - (c);")}) ==
        ParaSet{para(s, "+ (a); - (c);")});
  CHECK(dp_normrep({}).empty());

  auto small = para(s, "+ (b); + (c); - (a);");
  auto big = para(s, "+ (b); + (c); + (g); - (a);");
  CHECK(dp_reducerep({small, big}) == ParaSet{small});
  auto other = para(s, "+ (d); - (a);");
  CHECK(dp_reducerep({small, other}) == ParaSet{small, other});
  CHECK(dp_reducerep({small, small}).size() == 1);
}

TEST_CASE("dp_rep") {
  auto s = testing::letters();
  CHECK(dp_rep(dp(s, "+ (a) | (b); - (c);")) ==
        ParaSet{para(s, "+ (a); - (c);"), para(s, "+ (b); - (c);")});
  CHECK(dp_rep(dp(s, "+ (a) | (c); - (c);")) == ParaSet{para(s, "+ (a); - (c);")});
  CHECK(dp_rep(dp(s, "- (c);")) == ParaSet{para(s, "- (c);")});
}

TEST_CASE("dp_union") {
  auto s = testing::letters();
  CHECK(dp_union(dp(s, "+ (a); - (b); - (c);"), dp(s, "+ (b); - (c); - (d);")) ==
        dp(s, "+ (a); + (b); - (c);"));
  auto r = dp(s, "+ (a) | (b); + (a) | (b) | (c); - (d);");
  CHECK(dp_union(r, dp(s, "")) == DisjParaRelation{s, dp_reduce(r).positive, {}});
  CHECK(dp_union(r, r) == dp_reduce(r));
  CHECK_THROWS_AS(dp_union(r, dp(testing::two(), "")), SchemeMismatch);
}

TEST_CASE("dp_intersect") {
  auto s = testing::letters();
  CHECK(dp_intersect(dp(s, "+ (a) | (b);"), dp(s, "+ (b) | (c);")) == dp(s, ""));
  CHECK(dp_intersect(dp(s, "+ (b);"), dp(s, "+ (b);")) == dp(s, "+ (b);"));
  CHECK(dp_intersect(dp(s, "- (h);"), dp(s, "- (i);")) == dp(s, "- (h); - (i);"));
}

TEST_CASE("dp_select") {
  auto s = testing::letters({"a", "b", "c", "d"});
  auto r = dp(s, "+ (a) | (b); - (c);");
  CHECK(dp_select(r, parse_formula("X=a", s)) == dp(s, "- (b); - (c); - (d);"));
  CHECK(dp_select(r, parse_formula("true", s)) == dp_reduce(r));
  CHECK(dp_select(r, parse_formula("false", s)) == dp(s, "- (a); - (b); - (c); - (d);"));
}

TEST_CASE("dp_project") {
  auto s = testing::two();
  auto r = dp(s, "+ (a2,b1); - (a1,b1); - (a1,b2);");
  std::vector<std::string> a{"A"};
  auto target = sub_scheme(*s, a, "a");
  CHECK(dp_project(r, target) == dp(target, "+ (a2); - (a1);"));
  CHECK(dp_project(dp(s, "- (a1,b1); - (a2,b2);"), target) == dp(target, ""));
  auto same = sub_scheme(*s, std::vector<std::string>{"A", "B"}, "ab2");
  auto proj = dp_project(r, same);
  CHECK(proj.positive == dp_reduce(r).positive);
  CHECK(proj.negative == dp_reduce(r).negative);
}

TEST_CASE("dp_join") {
  auto ab = testing::two();
  auto bc = testing::two("B", {"b1", "b2"}, "C", {"c1"}, "bc");
  auto abc = join_scheme(*ab, *bc, "abc");
  CHECK(dp_join(dp(ab, "+ (a1,b1);"), dp(bc, "+ (b1,c1);"), abc) == dp(abc, "+ (a1,b1,c1);"));
  CHECK(dp_join(dp(ab, "+ (a1,b1) | (a1,b2);"), dp(bc, "+ (b1,c1);"), abc).positive.empty());
  CHECK(dp_join(dp(ab, "- (a1,b1);"), dp(bc, ""), abc).negative.contains(
      tup(abc, {"a1", "b1", "c1"})));
  CHECK_THROWS_AS(dp_join(dp(ab, ""), dp(bc, ""), ab), SchemeMismatch);
}
