// Copyright (c) 2026, the rewlab authors
// Licensed under the Apache License Version 2.0.

#ifndef REWLAB_REDUCTION_HPP
#define REWLAB_REDUCTION_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rewlab/term.hpp"

namespace rewlab {

/// Path from the root: 0 selects an application's function, a lambda body,
/// or an arrow abstraction's domain; 1 selects an argument or codomain.
using Position = std::vector<int>;

/// One-step contraction rules. Tags partition into the call-by-value rules
/// (c_*), full-beta rules (b_*), and abstract rules (a_*).
enum class RuleTag { c_fbeta, c_beta, b_fbeta, b_beta, a_beta, a_lambda, a_f, a_a };

enum class Relation { a, b, c, ca, ba };

const char* rule_tag_name(RuleTag tag);
const char* relation_name(Relation rel);
std::optional<Relation> relation_from_name(const std::string& name);
bool relation_contains(Relation rel, RuleTag tag);

/// A position plus the rule firing there. Valid occurrences satisfy the
/// context discipline of the rule's relation: c-rules fire only inside
/// call-by-value contexts (application spines with evaluated functions),
/// a- and b-rules fire anywhere.
struct RedexOccurrence {
  Position pos;
  RuleTag tag;

  bool operator==(const RedexOccurrence& other) const {
    return pos == other.pos && tag == other.tag;
  }
};

struct InvalidOccurrence : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// All redexes of `m` under `rel`, leftmost-outermost order, duplicate-free.
std::vector<RedexOccurrence> redexes(const Term& m, Relation rel);

/// Contracts the redex at `occ`; throws InvalidOccurrence if `occ` is not a
/// redex occurrence of `m` under the tag's own relation.
Term step(const Term& m, const RedexOccurrence& occ);

Term subterm_at(const Term& m, const Position& pos);

/// One-step successors up to alpha-equivalence, in redex order.
std::vector<Term> successors(const Term& m, Relation rel);

/// The termination measure for abstract reduction: strictly decreases on
/// every a-step.
std::uint64_t mu(const Term& m);

/// The unique a-normal form (abstract reduction is convergent). Uses the
/// leftmost-outermost strategy and checks that mu decreases at each step.
Term normalize_a(const Term& m);

/// Some(T) iff m a-reduces to the embedding of T.
std::optional<Type> typable(const Term& m);

struct TraceStep {
  RedexOccurrence occ;
  Term term;  // result after the step
};

struct RunResult {
  Term start;
  std::vector<TraceStep> steps;
  bool reached_normal_form = false;

  const Term& final() const { return steps.empty() ? start : steps.back().term; }
};

inline constexpr int kDefaultFuel = 10000;

/// Leftmost-outermost reduction under `rel`, at most `fuel` steps.
/// reached_normal_form is false iff the fuel bound was hit first.
RunResult run(const Term& m, Relation rel, int fuel = kDefaultFuel);

/// Replays a given occurrence sequence (the "given-trace" strategy).
RunResult replay(const Term& m, const std::vector<RedexOccurrence>& occs);

/// JSON list of {rule, position, term} objects, one per step.
std::string trace_json(const RunResult& result);

}  // namespace rewlab

#endif
