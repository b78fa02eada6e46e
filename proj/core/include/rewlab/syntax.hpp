// Copyright (c) 2026, the rewlab authors
// Licensed under the Apache License Version 2.0.

#ifndef REWLAB_SYNTAX_HPP
#define REWLAB_SYNTAX_HPP

#include <stdexcept>
#include <string>

#include "rewlab/term.hpp"

namespace rewlab {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Surface grammar:
///
///   term  ::= '\' ident ':' type '.' term
///           | appseq ( ('->' | '=>') term )?      right-associative
///   appseq::= atom atom*                          left-associative
///   atom  ::= 'A' | 'a' | 'f' | ident | '(' term ')'
///   type  ::= 'A' | type '->' type | '(' type ')'
///
/// 'A' in term position is the embedded base type. An arrow in term
/// position requires its left side to denote a type and builds T => m;
/// '->' and '=>' are interchangeable there (printing uses '->' when the
/// whole subterm is a type and '=>' otherwise). Unicode aliases are
/// accepted on input: λ for '\', → for '->', ⇒ for '=>'.
Term parse_term(const std::string& input);
Type parse_type(const std::string& input);

/// Canonical ASCII rendering; parse_term(print_term(m)) is alpha-equal
/// (in fact equal) to m.
std::string print_term(const Term& m);

}  // namespace rewlab

#endif
