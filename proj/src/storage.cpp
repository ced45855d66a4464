#include "gdpr/storage.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gdpr/error.hpp"
#include "lexer.hpp"

namespace gdpr {

namespace {

using detail::Lexer;
using detail::Token;
using detail::TokenKind;

std::string at(const Token& t) {
  return std::to_string(t.line) + ":" + std::to_string(t.column) + ": ";
}

class DbParser {
 public:
  explicit DbParser(std::string_view text) : lex_(text) {}

  Database parse() {
    while (lex_.peek().kind != TokenKind::End) {
      if (lex_.at_keyword("scheme")) {
        scheme();
      } else if (lex_.at_keyword("relation")) {
        relation();
      } else {
        lex_.fail("unexpected " + Lexer::describe(lex_.peek()), {"'scheme'", "'relation'"});
      }
    }
    return std::move(db_);
  }

 private:
  bool at_value() const {
    auto k = lex_.peek().kind;
    return k == TokenKind::Identifier || k == TokenKind::Quoted;
  }

  Token value() {
    if (!at_value()) lex_.fail("unexpected " + Lexer::describe(lex_.peek()), {"value"});
    return lex_.next();
  }

  void scheme() {
    const Token start = lex_.next();
    const Token name = lex_.expect_identifier("scheme name");
    lex_.expect('{');
    std::vector<Attribute> attrs;
    while (!lex_.at_symbol('}')) {
      if (lex_.peek().kind != TokenKind::Identifier)
        lex_.fail("unexpected " + Lexer::describe(lex_.peek()), {"attribute name", "'}'"});
      Attribute a{lex_.next().text, {}};
      lex_.expect(':');
      while (at_value()) a.domain.push_back(lex_.next().text);
      if (!lex_.at_symbol(';'))
        lex_.fail("unexpected " + Lexer::describe(lex_.peek()), {"value", "';'"});
      lex_.next();
      attrs.push_back(std::move(a));
    }
    lex_.next();
    if (attrs.empty())
      throw ValidationError(at(start) + "scheme '" + name.text + "' has no attributes");
    try {
      db_.add_scheme(make_scheme(name.text, std::move(attrs)));
    } catch (const ValidationError& e) {
      throw ValidationError(at(start) + e.what());
    }
  }

  Tuple tuple(const Scheme& s) {
    const Token open = lex_.expect('(');
    std::vector<std::string> values{value().text};
    while (lex_.accept(',')) values.push_back(value().text);
    if (!lex_.at_symbol(')'))
      lex_.fail("unexpected " + Lexer::describe(lex_.peek()), {"','", "')'"});
    lex_.next();
    try {
      return s.make_tuple(values);
    } catch (const ValidationError& e) {
      throw ValidationError(at(open) + e.what());
    }
  }

  void relation() {
    const Token start = lex_.next();
    const Token name = lex_.expect_identifier("relation name");
    lex_.expect(':');
    const Token scheme_name = lex_.expect_identifier("scheme name");
    SchemeRef s = db_.scheme(scheme_name.text);
    if (!s)
      throw ValidationError(at(scheme_name) + "unknown scheme '" + scheme_name.text + "'");
    lex_.expect('{');
    GenDisjParaRelation r{s, {}, {}};
    while (!lex_.at_symbol('}')) {
      const Token sign = lex_.peek();
      const bool positive = lex_.at_symbol('+');
      if (!positive && !lex_.at_symbol('-'))
        lex_.fail("unexpected " + Lexer::describe(sign), {"'+'", "'-'", "'}'"});
      lex_.next();
      if (lex_.at_symbol(';'))
        throw ValidationError(at(sign) + "empty tuple set in relation '" + name.text + "'");
      Tuples ts{tuple(*s)};
      while (lex_.accept('|')) ts.push_back(tuple(*s));
      if (!lex_.at_symbol(';'))
        lex_.fail("unexpected " + Lexer::describe(lex_.peek()), {"'|'", "';'"});
      lex_.next();
      (positive ? r.positive : r.negative).insert(TupleSet(sorted_unique(std::move(ts))));
    }
    lex_.next();
    try {
      db_.add_relation(name.text, std::move(r));
    } catch (const ValidationError& e) {
      throw ValidationError(at(start) + e.what());
    }
  }

  Lexer lex_;
  Database db_;
};

std::string value_text(const std::string& v) {
  if (detail::plain_identifier(v)) return v;
  if (v.find('\'') != std::string::npos || v.find('\n') != std::string::npos)
    throw ValidationError("value '" + v + "' cannot be written in the text format");
  return "'" + v + "'";
}

std::string tuple_text(const Tuple& t, const Scheme& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.arity(); ++i)
    out += (i ? "," : "") + value_text(s.attribute(i).domain[t[i]]);
  return out + ")";
}

std::string set_text(const TupleSet& w, const Scheme& s) {
  std::string out;
  for (const auto& t : w) out += (out.empty() ? "" : " | ") + tuple_text(t, s);
  return out;
}

void write_scheme(std::ostream& out, const Scheme& s) {
  out << "scheme " << s.name() << " {\n";
  for (const auto& a : s.attributes()) {
    out << "  " << a.name << ":";
    for (const auto& v : a.domain) out << " " << value_text(v);
    out << ";\n";
  }
  out << "}\n";
}

void write_body(std::ostream& out, const GenDisjParaRelation& r, const char* indent) {
  for (const auto& w : r.positive) out << indent << "+ " << set_text(w, *r.scheme) << ";\n";
  for (const auto& w : r.negative) out << indent << "- " << set_text(w, *r.scheme) << ";\n";
}

void write_relation(std::ostream& out, const std::string& name,
                    const GenDisjParaRelation& r) {
  out << "relation " << name << " : " << r.scheme->name() << " {\n";
  write_body(out, r, "  ");
  out << "}\n";
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

Database parse_db(std::string_view text) { return DbParser(text).parse(); }

Database load_db(const std::filesystem::path& path) {
  return parse_db(read_file(path));
}

std::string format_db(const Database& db) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [name, s] : db.schemes()) {
    out << (first ? "" : "\n");
    write_scheme(out, *s);
    first = false;
  }
  for (const auto& [name, r] : db.relations()) {
    out << (first ? "" : "\n");
    write_relation(out, name, r);
    first = false;
  }
  return out.str();
}

void write_db(const Database& db, const std::filesystem::path& path) {
  const std::string text = format_db(db);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out << text;
  if (!out.flush()) throw IoError("write to '" + path.string() + "' failed");
}

std::string render_text(const GenDisjParaRelation& r, std::string_view name) {
  std::ostringstream out;
  write_scheme(out, *r.scheme);
  out << "\n";
  write_relation(out, std::string(name), r);
  return out.str();
}

std::string render_json(const GenDisjParaRelation& r, int indent) {
  using nlohmann::ordered_json;
  const Scheme& s = *r.scheme;
  auto family = [&](const TupleSetFamily& f) {
    ordered_json sets = ordered_json::array();
    for (const auto& w : f) {
      ordered_json set = ordered_json::array();
      for (const auto& t : w) {
        ordered_json tuple = ordered_json::object();
        for (std::size_t i = 0; i < s.arity(); ++i)
          tuple[s.attribute(i).name] = s.attribute(i).domain[t[i]];
        set.push_back(std::move(tuple));
      }
      sets.push_back(std::move(set));
    }
    return sets;
  };
  ordered_json j;
  j["scheme"] = s.name();
  j["positive"] = family(r.positive);
  j["negative"] = family(r.negative);
  return j.dump(indent);
}

std::string render_member(const DisjParaRelation& m, std::string_view heading) {
  std::ostringstream out;
  out << heading << " {\n";
  for (const auto& w : m.positive) out << "  + " << set_text(w, *m.scheme) << ";\n";
  for (const auto& t : m.negative) out << "  - " << tuple_text(t, *m.scheme) << ";\n";
  out << "}\n";
  return out.str();
}

std::string render_member(const ParaRelation& m, std::string_view heading) {
  std::ostringstream out;
  out << heading << " {\n";
  for (const auto& t : m.positive) out << "  + " << tuple_text(t, *m.scheme) << ";\n";
  for (const auto& t : m.negative) out << "  - " << tuple_text(t, *m.scheme) << ";\n";
  out << "}\n";
  return out.str();
}

namespace {

template <typename Relation>
std::string numbered(const std::set<Relation>& members, std::string_view label) {
  std::string out = std::to_string(members.size()) + " " + std::string(label) +
                    (members.size() == 1 ? "\n" : "s\n");
  std::size_t i = 0;
  for (const auto& m : members)
    out += render_member(m, std::string(label) + " " + std::to_string(++i));
  return out;
}

}  // namespace

std::string render_members(const DisjSet& members, std::string_view label) {
  return numbered(members, label);
}

std::string render_members(const ParaSet& members, std::string_view label) {
  return numbered(members, label);
}

}  // namespace gdpr
