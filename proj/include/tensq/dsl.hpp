#pragma once

#include <string>

#include "tensq/presentation.hpp"

namespace tensq {

// Parser and printer for the presentation DSL:
//
//   file       := "group" IDENT "{" "gens:" identlist ";" "rels:" wordlist ";" "}"
//   identlist  := IDENT ("," IDENT)*
//   wordlist   := word ("," word)*
//   word       := term ("*" term)* | "1"
//   term       := IDENT ("^" INT)? | "[" word "," word "]" | "(" word ")" ("^" INT)?
//   IDENT      := [A-Za-z][A-Za-z0-9_]*
//   INT        := "-"? [0-9]+          (exponents must be nonzero)
//
// Relators are words equal to the identity; "[x,y]" expands to x*y*x^-1*y^-1.
Presentation parse_presentation(const std::string& text);

// Canonical form; parse_presentation(print_presentation(p)) == p.
std::string print_presentation(const Presentation& p);

std::string print_word(const Word& w, const Presentation& p);

}  // namespace tensq
