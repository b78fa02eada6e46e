// Copyright (c) 2026, the rewlab authors
// Licensed under the Apache License Version 2.0.

#ifndef REWLAB_SAFETY_HPP
#define REWLAB_SAFETY_HPP

#include "rewlab/reduction.hpp"
#include "rewlab/term.hpp"

namespace rewlab {

/// Membership in the inductively defined set of quasi-stuck terms:
///   - mixed values;
///   - a s, A s               with s quasi-stuck;
///   - f s, (A->A) s          with s quasi-stuck, s neither a nor A;
///   - (\x:T.m) s, (T=>m) s   with s quasi-stuck and not a mixed value;
///   - s s'                   with s, s' quasi-stuck and s not a mixed value.
bool is_quasi_stuck(const Term& m);

/// Quasi-stuck and not a mixed value.
bool is_stuck(const Term& m);

/// Progress: a closed, standard, typable term either has a call-by-value
/// redex or is a standard value. Throws std::invalid_argument when the
/// precondition fails.
bool progress_check(const Term& t);

struct SafetyOutcome {
  enum class Kind { Value, Stuck, FuelExhausted };
  Kind kind;
  Term final_term;
  int steps;
};

/// Drives call-by-value reduction to a normal form or the fuel bound.
/// Requires a closed standard term.
SafetyOutcome type_safety_run(const Term& t, int fuel = kDefaultFuel);

}  // namespace rewlab

#endif
