// Copyright (c) 2026, the rewlab authors
// Licensed under the Apache License Version 2.0.

#include <doctest.h>

#include "rewlab/enumerate.hpp"
#include "rewlab/syntax.hpp"
#include "rewlab/term.hpp"

using namespace rewlab;

namespace {

const Type A = Type::base();
const Type AA = Type::arrow(A, A);

}  // namespace

TEST_CASE("types are finite trees with structural equality") {
  CHECK(A == Type::base());
  CHECK(AA != A);
  CHECK(Type::arrow(A, AA) == Type::arrow(A, Type::arrow(A, A)));
  CHECK(Type::arrow(AA, A) != Type::arrow(A, AA));
  CHECK(A.depth() == 0);
  CHECK(AA.depth() == 1);
  CHECK(Type::arrow(AA, A).depth() == 2);
  CHECK(Type::arrow(AA, AA).str() == "(A->A)->A->A");
}

TEST_CASE("substitution hits free variables") {
  Term result = subst(Term::var("x"), "x", Term::constant_a());
  CHECK(alpha_eq(result, Term::constant_a()));
}

TEST_CASE("substitution renames to avoid capture") {
  // [y/x](\y:A. x) must not capture the substituted y.
  Term body = Term::lam("y", A, Term::var("x"));
  Term result = subst(body, "x", Term::var("y"));
  REQUIRE(result.is(Term::Kind::Lam));
  CHECK(result.name() != "y");
  CHECK(alpha_eq(result.body(), Term::var("y")));
  CHECK(alpha_eq(result, Term::lam("z", A, Term::var("y"))));
}

TEST_CASE("substituting an embedded type into an application spine") {
  Term t = parse_term("x (x y)");
  Term result = subst(t, "x", Term::embed(AA));
  CHECK(alpha_eq(result, parse_term("(A->A) ((A->A) y)")));
}

TEST_CASE("substituting a variable by itself is the identity") {
  for (const auto& t : enum_open_terms(4, 1, 1))
    CHECK(alpha_eq(subst(t, "v0", Term::var("v0")), t));
}

TEST_CASE("context substitution replaces variables by embedded types") {
  CHECK(alpha_eq(ctx_subst(TypingContext{{"x", A}}, Term::var("x")), Term::ty_base()));

  TypingContext ctx{{"x", AA}};
  Term t = parse_term("x (x a)");
  CHECK(alpha_eq(ctx_subst(ctx, t), parse_term("(A->A) ((A->A) a)")));

  Term any = parse_term("\\z:A. z (a f)");
  CHECK(alpha_eq(ctx_subst(TypingContext{}, any), any));
}

TEST_CASE("context substitution respects shadowing") {
  Term t = parse_term("\\x:A. x");
  CHECK(alpha_eq(ctx_subst(TypingContext{{"x", AA}}, t), t));
}

TEST_CASE("free variables") {
  CHECK(free_vars(parse_term("\\x:A. x y")) == std::set<std::string>{"y"});
  CHECK(free_vars(parse_term("\\x:A. x")).empty());
  CHECK(is_closed(parse_term("(\\x:A. x) a")));
  CHECK(!is_free_in("x", parse_term("\\x:A. x")));
  CHECK(is_free_in("y", parse_term("x y")));
}

TEST_CASE("alpha equivalence ignores binder names") {
  CHECK(alpha_eq(parse_term("\\x:A. x"), parse_term("\\y:A. y")));
  CHECK(!alpha_eq(parse_term("\\x:A. x"), parse_term("\\y:(A->A). y")));
  CHECK(!alpha_eq(parse_term("\\x:A. \\y:A. x"), parse_term("\\x:A. \\y:A. y")));
  CHECK(alpha_key(parse_term("\\x:A. x y")) == alpha_key(parse_term("\\q:A. q y")));
  CHECK(alpha_key(parse_term("x")) != alpha_key(parse_term("y")));
}

TEST_CASE("classification flags follow the grammar") {
  auto c = classify(Term::arrow_abs(A, Term::ty_base()));  // A->A as a term
  CHECK(c.type);
  CHECK(c.mixed_value);
  CHECK(!c.standard);
  CHECK(!c.standard_value);

  CHECK(is_standard(parse_term("(\\x:A. x) (f a)")));
  CHECK(!is_standard(parse_term("A=>x")));
  CHECK(is_mixed_value(parse_term("\\x:A. A")));
  CHECK(!is_standard_value(parse_term("\\x:A. A")));  // body is mixed
  CHECK(is_standard_value(parse_term("\\x:A. x")));
  CHECK(is_mixed_value(Term::constant_a()));
  CHECK(!is_mixed_value(parse_term("f a")));
}

TEST_CASE("embedded types are exactly the type-classified terms") {
  for (const auto& ty : enum_types(3)) {
    Term e = Term::embed(ty);
    CHECK(is_type(e));
    CHECK(is_mixed_value(e));
    auto back = as_type(e);
    REQUIRE(back.has_value());
    CHECK(*back == ty);
  }
  CHECK(!as_type(parse_term("A=>x")).has_value());
  CHECK(!as_type(Term::constant_a()).has_value());
}

TEST_CASE("standard values are the standard mixed values") {
  for (const auto& t : enum_closed_terms(4, 1)) {
    CHECK(is_standard(t));
    CHECK(is_standard_value(t) == (is_mixed_value(t) && is_standard(t)));
  }
}

TEST_CASE("typing contexts bind each variable at most once") {
  TypingContext ctx{{"x", A}, {"y", AA}};
  CHECK(ctx.binds("x"));
  CHECK(ctx.lookup("y") == AA);
  CHECK(!ctx.lookup("z").has_value());
  CHECK_THROWS_AS(ctx.push("x", AA), std::invalid_argument);
}

TEST_CASE("fresh names avoid the given set") {
  CHECK(fresh_name("x", {"y"}) == "x");
  CHECK(fresh_name("x", {"x"}) == "x'");
  CHECK(fresh_name("x", {"x", "x'"}) == "x''");
}
