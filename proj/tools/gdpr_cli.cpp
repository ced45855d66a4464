// gdpr: evaluate queries over disjunctive paraconsistent databases.
//
// Exit codes: 0 ok, 1 input error (parse, scope, validation, unknown name,
// scheme), 2 combinatorial limit, 3 fuzz violation.

#include <unistd.h>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gdpr/error.hpp"
#include "gdpr/gdp_algebra.hpp"
#include "gdpr/oracle.hpp"
#include "gdpr/query.hpp"
#include "gdpr/storage.hpp"

namespace {

using namespace gdpr;

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kLimit = 2;
constexpr int kViolation = 3;

std::size_t parse_cap(const std::string& text, const char* source) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != text.size() || text.empty() || text[0] == '-' || v == 0)
    throw ValidationError(std::string(source) + " must be a positive integer, got '" +
                          text + "'");
  return static_cast<std::size_t>(v);
}

// --cap beats GDPR_MAX_WORLDS beats the built-in default.
std::size_t effective_cap(const std::optional<std::size_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("GDPR_MAX_WORLDS"); env && *env)
    return parse_cap(env, "GDPR_MAX_WORLDS");
  return kDefaultCap;
}

// Runs `body`, mapping engine errors onto exit codes.
template <typename F>
int guarded(F&& body) {
  try {
    return body();
  } catch (const CombinatorialLimit& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kLimit;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}

std::string rep_text(const GenDisjParaRelation& stored, const std::string& level,
                     std::size_t cap) {
  const DisjSet members = g_rep(g_norm(stored), cap);
  if (level == "gdp") return render_members(members);
  if (level == "para") return render_members(oracle::flatten_worlds(g_norm(stored)), "world");
  // dp: each member followed by its own worlds, numbered "world <member>.<k>".
  std::string out = std::to_string(members.size()) +
                    (members.size() == 1 ? " member\n" : " members\n");
  std::size_t i = 0;
  for (const auto& m : members) {
    const std::string n = std::to_string(++i);
    out += render_member(m, "member " + n);
    const ParaSet worlds = dp_rep(dp_norm(m), cap);
    std::size_t k = 0;
    for (const auto& w : worlds) out += render_member(w, "world " + n + "." + std::to_string(++k));
  }
  return out;
}

std::vector<oracle::CheckReport> run_fuzz(const std::string& theorem,
                                          const oracle::GenConfig& cfg) {
  using oracle::Operator;
  std::vector<oracle::CheckReport> out;
  const bool all = theorem == "all";
  if (all || theorem == "1") out.push_back(oracle::check_theorem1(cfg));
  if (all || theorem == "2")
    for (auto op : {Operator::Union, Operator::Intersect})
      out.push_back(oracle::check_theorem2(cfg, op));
  if (all || theorem == "3")
    for (auto op : {Operator::Select, Operator::Project, Operator::Join})
      out.push_back(oracle::check_theorem3(cfg, op));
  if (all || theorem == "classical") out.push_back(oracle::classical_degeneration_check(cfg));
  if (theorem == "2-literal") out.push_back(oracle::check_theorem2_literal_union(cfg));
  return out;
}

nlohmann::ordered_json report_json(const oracle::CheckReport& r) {
  auto findings = [](const std::vector<oracle::Finding>& fs) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (const auto& f : fs)
      a.push_back({{"seed", f.seed},
                   {"agreement", oracle::to_string(f.agreement)},
                   {"inputs", f.inputs},
                   {"lhs", f.lhs},
                   {"rhs", f.rhs},
                   {"diff", f.diff}});
    return a;
  };
  return {{"theorem", r.theorem},
          {"trials", r.trials},
          {"completed", r.completed},
          {"skipped", r.skipped},
          {"raw_equal", r.raw_equal},
          {"closure_equal", r.closure_equal},
          {"worlds_equal", r.worlds_equal},
          {"consistency_failures", r.consistency_failures},
          {"passed", r.passed()},
          {"violations", findings(r.violations)},
          {"closure_only", findings(r.closure_only)}};
}

void repl(const Database& db, std::size_t cap) {
  const bool interactive = isatty(STDIN_FILENO);
  std::string line;
  auto prompt = [&] {
    if (interactive) std::cout << "gdpr> " << std::flush;
  };
  prompt();
  while (std::getline(std::cin, line)) {
    std::istringstream words(line);
    std::string head;
    words >> head;
    if (head.empty()) {
      prompt();
      continue;
    }
    if (head == ":quit" || head == ":q") return;
    guarded([&] {
      if (head == ":help") {
        std::cout << "query, :rep NAME [gdp|dp|para], :normalize NAME, :quit\n";
      } else if (head == ":rep" || head == ":normalize") {
        std::string name, level = "gdp", extra;
        words >> name >> level >> extra;
        if (name.empty() || !extra.empty() ||
            (level != "gdp" && level != "dp" && level != "para"))
          throw ValidationError("usage: " + head +
                                (head == ":rep" ? " NAME [gdp|dp|para]" : " NAME"));
        const auto& r = db.relation(name);
        if (head == ":rep")
          std::cout << rep_text(r, level, cap);
        else
          std::cout << render_text(g_reduce(g_norm(r), cap), name);
      } else if (head[0] == ':') {
        throw ValidationError("unknown command '" + head + "' (try :help)");
      } else {
        std::cout << render_text(eval_query(parse_query(line), db, cap));
      }
      return kOk;
    });
    std::cout << std::flush;
    prompt();
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Queries over generalized disjunctive paraconsistent relations"};
  app.require_subcommand(1);
  app.fallthrough();
  std::optional<std::size_t> cap_flag;
  std::string cap_text;
  app.add_option("--cap", cap_text,
                 "Ceiling on objects produced by one enumeration step "
                 "(overrides GDPR_MAX_WORLDS)");

  std::string db_path, query, format = "text", relation, level = "gdp", output;

  auto* eval = app.add_subcommand("eval", "Evaluate a query and print the result");
  eval->add_option("db", db_path, "Database file")->required();
  eval->add_option("query", query, "Query expression")->required();
  eval->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* rep = app.add_subcommand("rep", "Print the information content of a relation");
  rep->add_option("db", db_path, "Database file")->required();
  rep->add_option("relation", relation, "Relation name")->required();
  rep->add_option("--level", level, "gdp: g_rep; dp: worlds per member; para: all worlds")
      ->check(CLI::IsMember({"gdp", "dp", "para"}));

  auto* normalize =
      app.add_subcommand("normalize", "Rewrite every relation as g_reduce(g_norm(R))");
  normalize->add_option("db", db_path, "Database file")->required();
  normalize->add_option("-o,--output", output, "Write here instead of stdout");

  std::string theorem = "all";
  oracle::GenConfig cfg;
  bool verbose = false;
  auto* fuzz = app.add_subcommand("fuzz", "Differential checks against brute force");
  fuzz->add_option("--theorem", theorem)
      ->check(CLI::IsMember({"1", "2", "3", "all", "classical", "2-literal"}));
  fuzz->add_option("--seed", cfg.seed);
  fuzz->add_option("--trials", cfg.trials);
  fuzz->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  fuzz->add_flag("-v,--verbose", verbose, "List every finding");

  auto* repl_cmd = app.add_subcommand("repl", "Read queries from standard input");
  repl_cmd->add_option("db", db_path, "Database file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  return guarded([&]() -> int {
    if (!cap_text.empty()) cap_flag = parse_cap(cap_text, "--cap");
    const std::size_t cap = effective_cap(cap_flag);

    if (*fuzz) {
      cfg.cap = cap;
      const auto reports = run_fuzz(theorem, cfg);
      bool passed = true;
      nlohmann::ordered_json all = nlohmann::ordered_json::array();
      for (const auto& r : reports) {
        passed = passed && r.passed();
        if (format == "json")
          all.push_back(report_json(r));
        else
          std::cout << oracle::render(r, verbose);
      }
      if (format == "json") std::cout << all.dump(2) << "\n";
      return passed ? kOk : kViolation;
    }

    const Database db = load_db(db_path);
    if (*eval) {
      const auto result = eval_query(parse_query(query), db, cap);
      std::cout << (format == "json" ? render_json(result, 2) + "\n" : render_text(result));
    } else if (*rep) {
      std::cout << rep_text(db.relation(relation), level, cap);
    } else if (*normalize) {
      Database out;
      for (const auto& [name, s] : db.schemes()) out.add_scheme(s);
      for (const auto& [name, r] : db.relations())
        out.add_relation(name, g_reduce(g_norm(r), cap));
      if (output.empty())
        std::cout << format_db(out);
      else
        write_db(out, output);
    } else if (*repl_cmd) {
      repl(db, cap);
    }
    return kOk;
  });
}
