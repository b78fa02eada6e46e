// Copyright (c) 2026, the rewlab authors
// Licensed under the Apache License Version 2.0.

#include "rewlab/typing.hpp"

#include "rewlab/reduction.hpp"

namespace rewlab {

std::optional<Type> infer(const TypingContext& ctx, const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Var:
      return ctx.lookup(t.name());
    case Term::Kind::ConstF:
      return Type::arrow(Type::base(), Type::base());
    case Term::Kind::ConstA:
      return Type::base();
    case Term::Kind::App: {
      auto fun_type = infer(ctx, t.fun());
      if (!fun_type || !fun_type->is_arrow()) return std::nullopt;
      auto arg_type = infer(ctx, t.arg());
      if (!arg_type || *arg_type != fun_type->dom()) return std::nullopt;
      return fun_type->cod();
    }
    case Term::Kind::Lam: {
      std::string binder = t.name();
      Term body = t.body();
      if (ctx.binds(binder)) {
        // Keep the at-most-once context invariant by renaming the binder.
        std::set<std::string> avoid = free_vars(body);
        for (const auto& [n, ty] : ctx.bindings()) avoid.insert(n);
        std::string renamed = fresh_name(binder, avoid);
        body = subst(body, binder, Term::var(renamed));
        binder = renamed;
      }
      TypingContext extended = ctx;
      extended.push(binder, t.ann());
      auto body_type = infer(extended, body);
      if (!body_type) return std::nullopt;
      return Type::arrow(t.ann(), *body_type);
    }
    case Term::Kind::TyBase:
    case Term::Kind::ArrowAbs:
      throw NotStandard("infer requires a standard term");
  }
  return std::nullopt;
}

bool correspondence_check(const TypingContext& ctx, const Term& t) {
  if (!is_standard(t)) throw NotStandard("correspondence_check requires a standard term");
  for (const auto& name : free_vars(t))
    if (!ctx.binds(name))
      throw std::invalid_argument("correspondence_check: unbound variable " + name);
  auto inferred = infer(ctx, t);
  auto reduced = typable(ctx_subst(ctx, t));
  if (inferred.has_value() != reduced.has_value()) return false;
  return !inferred || *inferred == *reduced;
}

}  // namespace rewlab
