#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "gdpr/error.hpp"
#include "gdpr/model.hpp"

namespace gdpr {

// Database text format:
//
//   scheme supply_s { SNUM: s1 s2 s3; PNUM: p1 p2 p3 p4; }
//   relation supply : supply_s {
//     + (s1,p1);
//     + (s2,p1) | (s2,p2);   # one tuple set per statement
//     - (s1,p2);
//   }
//
// Values that are not plain identifiers are written in single quotes.
// Relations are stored as written; nothing is normalized on load.

/// Reading or writing a database file failed.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Throws ParseError for syntax, ValidationError for empty tuple sets,
/// out-of-domain values, arity mismatches, unknown schemes and duplicates.
Database parse_db(std::string_view text);
Database load_db(const std::filesystem::path& path);

/// Canonical text: schemes then relations, each alphabetical, positive
/// statements before negative ones, tuple sets in canonical order.
std::string format_db(const Database& db);
void write_db(const Database& db, const std::filesystem::path& path);

/// The relation as a one-scheme database named `name`, so the output
/// parses back with parse_db.
std::string render_text(const GenDisjParaRelation& r, std::string_view name = "result");

/// {"scheme": ..., "positive": [[{attr: value}, ...], ...], "negative": ...}
/// in canonical order. Compact unless `indent` is nonnegative.
std::string render_json(const GenDisjParaRelation& r, int indent = -1);

/// "heading {", then one `+`/`-` line per positive set or negative tuple.
std::string render_member(const DisjParaRelation& m, std::string_view heading);
std::string render_member(const ParaRelation& m, std::string_view heading);

/// "N members", then blocks headed "member 1", "member 2", ...
std::string render_members(const DisjSet& members, std::string_view label = "member");
std::string render_members(const ParaSet& members, std::string_view label = "member");

}  // namespace gdpr
