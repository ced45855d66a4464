#pragma once

#include "gdpr/formula.hpp"
#include "lexer.hpp"

namespace gdpr::detail {

/// Parses a formula starting at the lexer's current token and stops at the
/// first token that cannot continue it.
Formula parse_formula(Lexer& lex);

}  // namespace gdpr::detail
