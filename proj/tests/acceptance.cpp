// Acceptance run: one PASS/FAIL line per criterion, then details.
//
// Exits 0 once every criterion has been evaluated, whatever the verdicts;
// a nonzero exit means the harness itself broke.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gdpr/dp_algebra.hpp"
#include "gdpr/gdp_algebra.hpp"
#include "gdpr/oracle.hpp"
#include "gdpr/query.hpp"
#include "gdpr/storage.hpp"
#include "query_gen.hpp"

namespace {

using namespace gdpr;
namespace fs = std::filesystem;

const fs::path kFixtures = GDPR_FIXTURES;

struct Verdict {
  bool pass = false;
  std::string detail;
};

struct Line {
  int number;
  std::string title;
  Verdict verdict;
  double seconds;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string summary(const oracle::CheckReport& r) {
  std::ostringstream out;
  out << r.theorem << " completed=" << r.completed << "/" << r.trials
      << " skipped=" << r.skipped << " violations=" << r.violations.size()
      << " closure-only=" << r.closure_only.size()
      << " consistency-failures=" << r.consistency_failures;
  return out.str();
}

GenDisjParaRelation letters_relation(const char* file) {
  return load_db(kFixtures / file).relation("r");
}

Verdict example2() {
  const auto r = letters_relation("example2.gdb");
  const auto expected = parse_db(
      "scheme letters { X: a b c d e f g h i; }\n"
      "relation r : letters { + (a); + (c); + (f) | (g); - (b); - (e); - (i); }\n");
  const auto got = g_reduce(r);
  return {got == expected.relation("r"), "g_reduce = " + to_string(got)};
}

Verdict example3() {
  const auto r = letters_relation("example3.gdb");
  DisjSet expanded;
  for (const auto& pick : choices(r.negative))
    expanded.insert(DisjParaRelation{r.scheme, r.positive, {pick.begin(), pick.end()}});
  const DisjSet kept = g_normrep(expanded);
  const DisjSet rep = g_rep(r);
  bool ok = expanded.size() == 6 && kept.size() == 2 && rep.size() == 1;
  std::string negative;
  if (rep.size() == 1) {
    const auto& m = *rep.begin();
    const auto& s = *r.scheme;
    const std::vector<std::string> b{"b"}, c{"c"};
    ok = ok && m.positive == r.positive && m.negative.size() == 2 &&
         m.negative.contains(s.make_tuple(b)) && m.negative.contains(s.make_tuple(c));
    for (const auto& t : m.negative)
      negative += (negative.empty() ? "" : ",") + s.attribute(0).domain[t[0]];
  }
  return {ok, "expansion=" + std::to_string(expanded.size()) + " after-normrep=" +
                  std::to_string(kept.size()) + " g_rep=" + std::to_string(rep.size()) +
                  " negative={" + negative + "}"};
}

oracle::GenConfig fuzz_config(std::size_t trials) {
  oracle::GenConfig cfg;
  cfg.seed = 42;
  cfg.trials = trials;
  return cfg;
}

Verdict theorem1(double& seconds_out) {
  const auto start = std::chrono::steady_clock::now();
  const auto r = oracle::check_theorem1(fuzz_config(500));
  seconds_out = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool skips_ok = r.skipped * 20 < r.trials;
  const bool ok = r.completed + r.skipped >= 500 && r.violations.empty() && skips_ok &&
                  seconds_out < 300;
  std::string detail = summary(r);
  if (!r.violations.empty()) detail += "; first violation seed=" + std::to_string(r.violations[0].seed);
  return {ok, detail};
}

// Criterion 4 runs feed criterion 5.
std::vector<oracle::CheckReport> differential_reports;
bool differential_threw = false;
std::string differential_error;

Verdict differential(double& seconds_out) {
  using oracle::Operator;
  const auto start = std::chrono::steady_clock::now();
  try {
    for (auto op : {Operator::Union, Operator::Intersect})
      differential_reports.push_back(oracle::check_theorem2(fuzz_config(200), op));
    for (auto op : {Operator::Select, Operator::Project})
      differential_reports.push_back(oracle::check_theorem3(fuzz_config(200), op));
    // Join hits the cap on roughly one trial in ten; run enough to complete 200.
    differential_reports.push_back(oracle::check_theorem3(fuzz_config(250), Operator::Join));
  } catch (const std::exception& e) {
    differential_threw = true;
    differential_error = e.what();
  }
  seconds_out = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (differential_threw) return {false, "exception: " + differential_error};
  bool ok = seconds_out < 900;
  std::string detail;
  for (const auto& r : differential_reports) {
    ok = ok && r.completed >= 200 && r.violations.empty();
    detail += (detail.empty() ? "" : "; ") + summary(r);
  }
  return {ok, detail};
}

Verdict consistency() {
  if (differential_threw) return {false, "exception during criterion 4: " + differential_error};
  std::size_t outputs = 0, failures = 0, skipped = 0;
  for (const auto& r : differential_reports) {
    outputs += r.completed;
    failures += r.consistency_failures;
    skipped += r.skipped;
  }
  return {failures == 0 && outputs > 0,
          "g_norm(out) != out in " + std::to_string(failures) + " of " +
              std::to_string(outputs) + " outputs; no exceptions escaped; " +
              std::to_string(skipped) + " trials stopped at the cap"};
}

// Naive classical evaluation over rows keyed by attribute name.
using Row = std::map<std::string, std::string>;
using Table = std::set<Row>;

Table positives(const GenDisjParaRelation& r) {
  Table t;
  for (const auto& w : r.positive) {
    if (!w.singleton()) throw std::logic_error("definite fixture expected");
    Row row;
    for (std::size_t i = 0; i < r.scheme->arity(); ++i)
      row[r.scheme->attribute(i).name] = r.scheme->attribute(i).domain[w.front()[i]];
    t.insert(row);
  }
  return t;
}

Table naive(const QueryExpr& e, const Database& db) {
  using K = QueryExpr::Kind;
  switch (e.kind()) {
    case K::Relation: return positives(db.relation(e.name()));
    case K::Select: {
      // Only attribute = constant formulas are used below.
      const auto& f = e.formula();
      Table out;
      for (const auto& row : naive(e.child(0), db))
        if (row.at(f.lhs().text) == f.rhs().text) out.insert(row);
      return out;
    }
    case K::Project: {
      Table out;
      for (const auto& row : naive(e.child(0), db)) {
        Row p;
        for (const auto& a : e.attributes()) p[a] = row.at(a);
        out.insert(p);
      }
      return out;
    }
    case K::Union: {
      Table out = naive(e.child(0), db);
      for (const auto& row : naive(e.child(1), db)) out.insert(row);
      return out;
    }
    case K::Intersect: {
      Table out, right = naive(e.child(1), db);
      for (const auto& row : naive(e.child(0), db))
        if (right.contains(row)) out.insert(row);
      return out;
    }
    case K::Join: {
      Table out, right = naive(e.child(1), db);
      for (const auto& a : naive(e.child(0), db))
        for (const auto& b : right) {
          bool match = true;
          for (const auto& [k, v] : b)
            if (a.contains(k) && a.at(k) != v) match = false;
          if (!match) continue;
          Row joined = a;
          joined.insert(b.begin(), b.end());
          out.insert(joined);
        }
      return out;
    }
    case K::Complement: break;
  }
  throw std::logic_error("no classical counterpart");
}

Verdict classical() {
  const Database db = load_db(kFixtures / "definite.gdb");
  std::string detail;
  bool ok = true;
  for (const char* q : {"select[PNUM=p1](supply)", "project[SNUM](supply)",
                        "join(supply,parts)", "union(supply,orders)",
                        "intersect(supply,orders)", "project[SNUM](join(supply,parts))",
                        "select[COLOR=red](join(orders,parts))"}) {
    const auto e = parse_query(q);
    const auto got = eval_query(e, db);
    bool singletons = true;
    for (const auto& w : got.positive) singletons = singletons && w.singleton();
    const bool same = singletons && positives(got) == naive(e, db);
    ok = ok && same;
    if (!same) detail += std::string(detail.empty() ? "" : "; ") + "mismatch on " + q;
  }
  const auto random = oracle::classical_degeneration_check(fuzz_config(200));
  ok = ok && random.passed();
  return {ok, (detail.empty() ? "7 fixture queries equal" : detail) + "; random " +
                  summary(random)};
}

Verdict formats() {
  testing::QRng rng(2024);
  std::size_t round_trips = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto e = testing::random_query(rng, 4);
    if (parse_query(print(e)) == e) ++round_trips;
  }
  std::size_t stable = 0, files = 0;
  for (const auto& entry : fs::directory_iterator(kFixtures)) {
    if (entry.path().extension() != ".gdb" || entry.path().stem() == "empty_set") continue;
    ++files;
    const std::string once = format_db(load_db(entry.path()));
    const auto tmp = fs::temp_directory_path() / ("gdpr_acceptance_" + entry.path().filename().string());
    write_db(parse_db(once), tmp);
    if (slurp(tmp) == once) ++stable;
    fs::remove(tmp);
  }
  const bool golden = format_db(load_db(kFixtures / "example2.gdb")) ==
                      slurp(kFixtures / "example2.golden.gdb");
  const auto supply = load_db(kFixtures / "supply.gdb").relation("supply");
  const bool counts = supply.positive.size() == 3 && supply.negative.size() == 3;
  return {round_trips == 1000 && stable == files && golden && counts,
          "ast round trips " + std::to_string(round_trips) + "/1000; byte-stable files " +
              std::to_string(stable) + "/" + std::to_string(files) +
              "; golden " + (golden ? "equal" : "differs") + "; supply |R+|=" +
              std::to_string(supply.positive.size()) + " |R-|=" +
              std::to_string(supply.negative.size())};
}

Verdict cli() {
  const std::string cmd = std::string("sh '") + GDPR_CLI_SCRIPT + "' '" + GDPR_CLI_BINARY +
                          "' '" + kFixtures.string() + "' > cli_exit_codes.log 2>&1";
  const int status = std::system(cmd.c_str());
  return {status == 0, std::string("tests/cli_exit_codes.sh ") +
                           (status == 0 ? "passed" : "failed, see cli_exit_codes.log")};
}

template <typename F>
Line timed(int n, std::string title, F&& f) {
  const auto start = std::chrono::steady_clock::now();
  Verdict v = f();
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {n, std::move(title), std::move(v), s};
}

}  // namespace

int main() {
  std::vector<Line> lines;
  try {
    lines.push_back(timed(1, "golden g_reduce", example2));
    lines.push_back(timed(2, "golden g_rep expansion", example3));
    double t3 = 0, t4 = 0;
    lines.push_back(timed(3, "g_rep(g_reduce(R)) = g_rep(R)", [&] { return theorem1(t3); }));
    lines.push_back(timed(4, "operators commute with g_rep", [&] { return differential(t4); }));
    lines.push_back(timed(5, "outputs are normalized", consistency));
    lines.push_back(timed(6, "classical degeneration", classical));
    lines.push_back(timed(7, "parser and file format", formats));
    lines.push_back(timed(8, "CLI exit codes", cli));
  } catch (const std::exception& e) {
    std::cerr << "acceptance harness error: " << e.what() << "\n";
    return 2;
  }
  // Limits of one second apply to the golden examples.
  for (auto& l : lines)
    if (l.number <= 2 && l.seconds >= 1.0) l.verdict.pass = false;

  std::size_t passed = 0;
  for (const auto& l : lines) {
    passed += l.verdict.pass;
    std::printf("criterion %d: %s  %s (%.2fs)\n", l.number, l.verdict.pass ? "PASS" : "FAIL",
                l.title.c_str(), l.seconds);
  }
  std::printf("%zu/%zu criteria pass\n\n", passed, lines.size());
  for (const auto& l : lines) std::printf("[%d] %s\n", l.number, l.verdict.detail.c_str());
  return 0;
}
