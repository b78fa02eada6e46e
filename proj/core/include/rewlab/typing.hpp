// Copyright (c) 2026, the rewlab authors
// Licensed under the Apache License Version 2.0.

#ifndef REWLAB_TYPING_HPP
#define REWLAB_TYPING_HPP

#include <optional>
#include <stdexcept>

#include "rewlab/term.hpp"

namespace rewlab {

struct NotStandard : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Standard syntax-directed type computation. Returns the unique type of a
/// standard term under the context, or nullopt when no rule applies.
/// Throws NotStandard on mixed input.
std::optional<Type> infer(const TypingContext& ctx, const Term& t);

/// True iff infer(ctx, t) and typable(ctx_subst(ctx, t)) agree: both absent
/// or both the same type. Requires a standard term with FV(t) within the
/// context domain.
bool correspondence_check(const TypingContext& ctx, const Term& t);

}  // namespace rewlab

#endif
