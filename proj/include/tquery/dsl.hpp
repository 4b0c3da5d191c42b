#pragma once

#include <string>
#include <string_view>

#include "tquery/pipeline.hpp"

namespace tquery {

// Query text grammar (whitespace-insensitive, // line comments):
//
//   pipeline  := stage ( "|>" stage )*
//   stage     := "match" "{" crit "}"
//              | "unwind" "{" path "}"
//              | "project" "{" projItem ("," projItem)* "}"
//              | "group" "{" grpItem ("," grpItem)* "by" grpItem ("," grpItem)* "}"
//              | "lookup" "{" path "==" NAME "." path "in" path "}"
//   crit      := "true" | "exists" path | path "==" (literal | path | arrayLit)
//              | "!" crit | crit "&&" crit | crit "||" crit | "(" crit ")"
//   projItem  := path | valuedef "in" path
//   grpItem   := path [ "in" path ]          -- omission keeps the source path
//   valuedef  := literal | path | "[" [valuedef ("," valuedef)*] "]"
//              | crit | crit "?" valuedef ":" valuedef
//   literal   := number | quotedString | "true" | "false"
//   path      := segment ("." segment)* ;  segment := identifier | quotedString
//
// Precedence: ! binds tighter than &&, which binds tighter than ||.
// A scalar comparison `path == literal` is sugar for equality with the
// singleton array holding that literal.

/// Parses query text into a pipeline (with empty bindings).
/// Throws ParseError with the 1-based position of the first offending token.
Pipeline parse_pipeline(std::string_view source);

/// Prints a pipeline back to query text; parse_pipeline(print_pipeline(p))
/// reproduces p. Throws std::invalid_argument on engine-internal forms the
/// grammar cannot express (array-literal value definitions, null scalar
/// literals, criterion arrays with non-leaf elements).
std::string print_pipeline(const Pipeline& pipeline);

}  // namespace tquery
