// Copyright (c) 2026, the rewlab authors
// Licensed under the Apache License Version 2.0.

#include "rewlab/safety.hpp"

#include <stdexcept>

namespace rewlab {

namespace {

// The embedded type A->A, the abstraction of the constant f.
bool is_embedded_f_type(const Term& m) {
  return m.is(Term::Kind::ArrowAbs) && m.ann().is_base() &&
         m.body().is(Term::Kind::TyBase);
}

bool is_const_a_or_base(const Term& m) {
  return m.is(Term::Kind::ConstA) || m.is(Term::Kind::TyBase);
}

}  // namespace

bool is_quasi_stuck(const Term& m) {
  if (is_mixed_value(m)) return true;
  if (!m.is(Term::Kind::App)) return false;
  Term head = m.fun();
  Term s = m.arg();
  if (is_const_a_or_base(head)) return is_quasi_stuck(s);
  if (head.is(Term::Kind::ConstF) || is_embedded_f_type(head))
    if (is_quasi_stuck(s) && !is_const_a_or_base(s)) return true;
  if (head.is(Term::Kind::Lam) || head.is(Term::Kind::ArrowAbs))
    return is_quasi_stuck(s) && !is_mixed_value(s);
  return !is_mixed_value(head) && is_quasi_stuck(head) && is_quasi_stuck(s);
}

bool is_stuck(const Term& m) { return is_quasi_stuck(m) && !is_mixed_value(m); }

bool progress_check(const Term& t) {
  if (!is_standard(t)) throw std::invalid_argument("progress_check: term not standard");
  if (!is_closed(t)) throw std::invalid_argument("progress_check: term not closed");
  if (!typable(t)) throw std::invalid_argument("progress_check: term not typable");
  return !redexes(t, Relation::c).empty() || is_standard_value(t);
}

SafetyOutcome type_safety_run(const Term& t, int fuel) {
  if (!is_standard(t)) throw std::invalid_argument("type_safety_run: term not standard");
  if (!is_closed(t)) throw std::invalid_argument("type_safety_run: term not closed");
  RunResult r = run(t, Relation::c, fuel);
  if (!r.reached_normal_form)
    return {SafetyOutcome::Kind::FuelExhausted, r.final(), static_cast<int>(r.steps.size())};
  const Term& nf = r.final();
  auto kind = is_standard_value(nf) ? SafetyOutcome::Kind::Value : SafetyOutcome::Kind::Stuck;
  return {kind, nf, static_cast<int>(r.steps.size())};
}

}  // namespace rewlab
