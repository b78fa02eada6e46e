// Copyright (c) 2026, the rewlab authors
// Licensed under the Apache License Version 2.0.

#ifndef REWLAB_UNIFORM_HPP
#define REWLAB_UNIFORM_HPP

#include <optional>
#include <vector>

#include "rewlab/trs.hpp"

namespace rewlab::trs {

/// The abstract reduction system for the uniform combinator language:
/// S and K indexed by type terms, application, arrows, and kind-checking
/// terms. Signature: S/3, K/2, app/2, arrow/2, A/0, kind/2.
const FoTRS& uniform_stc_abstract();

/// The extended kind-grouping system quoted verbatim (kind permutation and
/// hoisting rules added; base type spelled "base"). Not orientable by any
/// simplification order: the permutation rule loops in two steps.
const FoTRS& uniform_stc_extended();

/// Values of the uniform language: S<...>, K<...>, A, and arrow terms.
bool uniform_is_value(const FoTerm& t);

/// One call-by-value step: left-to-right evaluation of application spines,
/// K-contraction on two value arguments, S-contraction on three. The type
/// indices on S and K are inert.
std::optional<FoTerm> uniform_cbv_step(const FoTerm& t);

/// kind(u, A) abstractly reduces to A.
bool uniform_kindable(const FoTerm& u, std::uint64_t fuel = kFoDefaultFuel);

/// The a-normal form of t when it is a kindable value; nullopt otherwise.
std::optional<FoTerm> uniform_typable(const FoTerm& t,
                                      std::uint64_t fuel = kFoDefaultFuel);

struct UniformPreservationReport {
  bool ok;
  int c_steps_checked;
};

/// Walks the call-by-value derivation of a typable term and checks that
/// every intermediate term a-normalizes to the same type value. Throws
/// std::invalid_argument when t is not typable.
UniformPreservationReport uniform_preservation_check(
    const FoTerm& t, std::uint64_t fuel = kFoDefaultFuel);

/// Exhaustive applicative S/K terms over base A: atoms are A and
/// combinators indexed by types of the given depth, composites are
/// applications. Size counts atoms and applications, not type indices.
std::vector<FoTerm> enum_uniform_terms(int max_size, int type_depth = 1);

}  // namespace rewlab::trs

#endif
