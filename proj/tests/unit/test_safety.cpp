// Copyright (c) 2026, the rewlab authors
// Licensed under the Apache License Version 2.0.

#include <doctest.h>

#include "rewlab/enumerate.hpp"
#include "rewlab/safety.hpp"
#include "rewlab/syntax.hpp"

using namespace rewlab;

TEST_CASE("quasi-stuck membership clause by clause") {
  CHECK(is_quasi_stuck(parse_term("f f")));            // f s, s = f
  CHECK(is_quasi_stuck(parse_term("\\x:A. x")));       // values
  CHECK(is_quasi_stuck(Term::ty_base()));
  CHECK(!is_quasi_stuck(parse_term("f a")));           // s = a excluded
  CHECK(!is_quasi_stuck(parse_term("f A")));           // s = A excluded
  CHECK(is_quasi_stuck(parse_term("a f")));            // a s
  CHECK(is_quasi_stuck(parse_term("A f")));            // A s
  CHECK(is_quasi_stuck(parse_term("(A->A) f")));       // (A->A) s, s != a, A
  CHECK(is_quasi_stuck(parse_term("(\\x:A. x) (f f)")));   // lambda on non-value
  CHECK(!is_quasi_stuck(parse_term("(\\x:A. x) a")));      // value argument: a redex
  CHECK(is_quasi_stuck(parse_term("(f f) (f f)")));        // s s'
  CHECK(!is_quasi_stuck(parse_term("x")));                 // no clause for variables
  CHECK(!is_quasi_stuck(parse_term("x y")));
}

TEST_CASE("stuck terms are the quasi-stuck non-values") {
  CHECK(is_stuck(parse_term("f f")));
  CHECK(!is_stuck(Term::constant_a()));
  CHECK(!is_stuck(parse_term("\\x:A. x")));
}

TEST_CASE("the non-confluence endpoint is ca-normal but not quasi-stuck") {
  // (A->(A->A)) (A=>(A A)) ends a ca-derivation and is no value, yet its
  // argument is a mixed value, so no quasi-stuck clause admits it.
  Term m = parse_term("(A->(A->A)) (A->(A A))");
  CHECK(redexes(m, Relation::ca).empty());
  CHECK(!is_mixed_value(m));
  CHECK(!is_quasi_stuck(m));
  CHECK(!is_stuck(m));
}

TEST_CASE("progress on values and reducible terms") {
  CHECK(progress_check(parse_term("\\x:A. x")));
  CHECK(progress_check(parse_term("(\\x:(A->A). x (x a)) f")));
  CHECK_THROWS_AS(progress_check(parse_term("f f")), std::invalid_argument);
  CHECK_THROWS_AS(progress_check(parse_term("x")), std::invalid_argument);
}

TEST_CASE("type safety runs") {
  auto r1 = type_safety_run(parse_term("(\\x:(A->A). x (x a)) f"), 100);
  CHECK(r1.kind == SafetyOutcome::Kind::Value);
  CHECK(alpha_eq(r1.final_term, Term::constant_a()));
  CHECK(r1.steps == 3);

  auto r2 = type_safety_run(parse_term("f f"), 100);
  CHECK(r2.kind == SafetyOutcome::Kind::Stuck);
  CHECK(alpha_eq(r2.final_term, parse_term("f f")));

  auto r3 = type_safety_run(parse_term("\\x:A. x"), 100);
  CHECK(r3.kind == SafetyOutcome::Kind::Value);
}

TEST_CASE("quasi-stuck terms have no call-by-value redex") {
  for (const auto& t : enum_closed_terms(5, 1))
    for (const auto& m : a_closure(t))
      if (is_quasi_stuck(m)) CHECK(redexes(m, Relation::c).empty());
}

TEST_CASE("closed standard c-normal terms are quasi-stuck up to size 6") {
  for (const auto& t : enum_closed_terms(6, 1))
    if (redexes(t, Relation::c).empty()) CHECK(is_quasi_stuck(t));
}

TEST_CASE("c-normal terms with a masked redex argument escape the set") {
  // (a a) (f a) is closed, standard and c-normal: the head a a is a
  // non-value, so call-by-value contexts never reach the argument. The
  // fifth clause nevertheless demands the argument be quasi-stuck, and
  // f a is excluded by the third clause. These size-7 terms are the
  // smallest closed standard c-normal terms outside the set.
  for (const char* src : {"a a (f a)", "a f (f a)", "f f (f a)"}) {
    Term t = parse_term(src);
    CAPTURE(src);
    CHECK(is_closed(t));
    CHECK(is_standard(t));
    CHECK(redexes(t, Relation::c).empty());
    CHECK(!is_quasi_stuck(t));
    // Consistency: they are untypable, so progress is not at stake.
    CHECK(!typable(t).has_value());
  }
}

TEST_CASE("the quasi-stuck set is closed under abstract reduction") {
  for (const auto& t : enum_closed_terms(5, 1))
    for (const auto& m : a_closure(t))
      if (is_quasi_stuck(m))
        for (const auto& next : successors(m, Relation::a)) {
          CHECK(is_quasi_stuck(next));
          CHECK(is_mixed_value(next) == is_mixed_value(m));
        }
}

TEST_CASE("quasi-stuck terms reach types only through pure abstract steps") {
  // If a ca-path from a quasi-stuck term hits a type, the a-normal form is
  // that type.
  for (const auto& t : enum_closed_terms(4, 1)) {
    for (const auto& m : a_closure(t)) {
      if (!is_quasi_stuck(m)) continue;
      ReductionGraph g = build_graph(m, Relation::ca, 2000);
      if (g.truncated) continue;
      for (const auto& node : g.nodes)
        if (is_type(node)) CHECK(alpha_eq(normalize_a(m), node));
    }
  }
}
