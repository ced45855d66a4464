#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gdpr/error.hpp"
#include "gdpr/gdp_algebra.hpp"
#include "gdpr/query.hpp"
#include "gdpr/storage.hpp"
#include "helpers.hpp"

using namespace gdpr;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const std::filesystem::path kFixtures = GDPR_FIXTURES;

}  // namespace

TEST_CASE("the supplier fixture loads with the published component counts") {
  const Database db = load_db(kFixtures / "supply.gdb");
  const auto& supply = db.relation("supply");
  CHECK(supply.positive.size() == 3);
  CHECK(supply.negative.size() == 3);
  CHECK(supply.scheme->arity() == 2);
  CHECK(to_string(supply) ==
        "<{{(s1,p1)},{(s2,p1),(s2,p2)},{(s3,p3),(s3,p4)}}, "
        "{{(s1,p2)},{(s1,p3)},{(s2,p3),(s2,p4)}}>");
}

TEST_CASE("loading keeps relations as written") {
  const Database db = load_db(kFixtures / "example2.gdb");
  const auto& r = db.relation("r");
  CHECK(r.positive.size() == 5);
  CHECK(r.negative.size() == 4);
  CHECK(g_reduce(r) != r);
}

TEST_CASE("canonical write matches the golden file and is stable") {
  const Database db = load_db(kFixtures / "example2.gdb");
  const std::string once = format_db(db);
  CHECK(once == slurp(kFixtures / "example2.golden.gdb"));
  CHECK(format_db(parse_db(once)) == once);
  CHECK(parse_db(once) == db);

  for (const char* f : {"supply.gdb", "definite.gdb", "example3.gdb", "wide.gdb",
                        "late_inconsistency.gdb"}) {
    CAPTURE(f);
    const std::string text = format_db(load_db(kFixtures / f));
    CHECK(format_db(parse_db(text)) == text);
  }

  const auto tmp = std::filesystem::temp_directory_path() / "gdpr_storage_test.gdb";
  write_db(db, tmp);
  const std::string first = slurp(tmp);
  write_db(load_db(tmp), tmp);
  CHECK(slurp(tmp) == first);
  std::filesystem::remove(tmp);
}

TEST_CASE("load errors") {
  CHECK_THROWS_AS(load_db(kFixtures / "empty_set.gdb"), ValidationError);
  CHECK_THROWS_AS(load_db(kFixtures / "does_not_exist.gdb"), IoError);
  CHECK_THROWS_AS(parse_db("scheme s { A: x; } relation r : s { + (y); }"), ValidationError);
  CHECK_THROWS_AS(parse_db("scheme s { A: x; } relation r : s { + (x,x); }"), ValidationError);
  CHECK_THROWS_AS(parse_db("relation r : s { + (x); }"), ValidationError);
  CHECK_THROWS_AS(parse_db("scheme s { A: x; } scheme s { A: y; }"), ValidationError);
  CHECK_THROWS_AS(parse_db("scheme s { A: x; } relation r : s { } relation r : s { }"),
                  ValidationError);
  CHECK_THROWS_AS(parse_db("scheme s { A: x x; }"), ValidationError);
  CHECK_THROWS_AS(parse_db("scheme s { }"), ValidationError);
  try {
    parse_db("scheme s {\n  A: x;\n}\nrelation r : s {\n  + (x) (x);\n}");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 5);
    CHECK(e.column() == 9);
    CHECK(e.expected() == std::vector<std::string>{"'|'", "';'"});
  }
  CHECK_THROWS_AS(parse_db("schema s { A: x; }"), ParseError);
  CHECK_THROWS_AS(parse_db("scheme s { A: 'x; }"), ParseError);
}

TEST_CASE("quoted values") {
  const Database db = parse_db(
      "scheme s { A: 'two words' plain '+'; }\n"
      "relation r : s { + ('two words') | ('+'); - (plain); }  # comment\n");
  const std::string text = format_db(db);
  CHECK(text.find("A: 'two words' plain '+';") != std::string::npos);
  CHECK(text.find("+ ('two words') | ('+');") != std::string::npos);
  CHECK(parse_db(text) == db);
}

TEST_CASE("text rendering re-parses and re-evaluates to the same relation") {
  const Database db = load_db(kFixtures / "supply.gdb");
  for (const char* q : {"supply", "select[PNUM=p1](supply)", "project[SNUM](supply)",
                        "join(supply,parts)", "not(parts)"}) {
    CAPTURE(q);
    const auto result = eval_query(parse_query(q), db);
    const Database back = parse_db(render_text(result));
    CHECK(back.relation("result") == result);
    CHECK(eval_query(parse_query("result"), back) == result);
  }
}

TEST_CASE("json rendering") {
  const Database db = load_db(kFixtures / "supply.gdb");
  const auto result = eval_query(parse_query("select[PNUM=p1](supply)"), db);
  const auto j = nlohmann::ordered_json::parse(render_json(result));
  CHECK(j["scheme"] == "supply_s");
  REQUIRE(j["positive"].size() == 1);
  CHECK(j["positive"][0][0].dump() == R"({"SNUM":"s1","PNUM":"p1"})");
  CHECK(j["negative"].size() == 9);
  CHECK(render_json(result) == render_json(result));
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"scheme", "positive", "negative"});
}

TEST_CASE("member listings") {
  auto s = testing::letters();
  const std::string text = render_members(DisjSet{testing::dp(s, "+ (a) | (b); - (c);")});
  CHECK(text == "1 member\nmember 1 {\n  + (a) | (b);\n  - (c);\n}\n");
  CHECK(render_members(ParaSet{}, "world") == "0 worlds\n");
}
