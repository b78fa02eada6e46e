// Copyright (c) 2026, the rewlab authors
// Licensed under the Apache License Version 2.0.

#ifndef REWLAB_GENERALIZED_HPP
#define REWLAB_GENERALIZED_HPP

#include <optional>
#include <vector>

#include "rewlab/reduction.hpp"
#include "rewlab/term.hpp"

namespace rewlab {

/// Bounds for the breadth-first search over the ca-relation (which is not
/// terminating, so generalized typability is only semi-decided).
struct GenSearchLimits {
  int max_depth = 200;
  int node_cap = 50000;
};

struct GenTypableResult {
  enum class Status {
    Found,              // a type was reached; witness holds the trace
    NotFoundComplete,   // the whole ca-graph was explored, no type in it
    NotFoundBounded,    // a bound was hit before the search could finish
  };
  Status status;
  std::optional<Type> type;
  std::vector<TraceStep> witness;
  int explored = 0;

  bool found() const { return status == Status::Found; }
};

/// Breadth-first search of ca-successors (alpha-deduplicated) for an
/// embedded type. The witness is the shortest reduction, leftmost-first.
GenTypableResult generalized_typable(const Term& m, GenSearchLimits limits = {});

/// Same search, but only a specific target type counts as success.
GenTypableResult search_type_target(const Term& m, const Type& target,
                                    GenSearchLimits limits = {});

struct GenPreservationReport {
  enum class Verdict { Ok, BoundExhausted, Violation };
  Verdict verdict;
  Type type;                       // the type found for the starting term
  int c_successors_checked = 0;
  int bound_exhausted = 0;
  std::vector<Term> violations;    // c-successors that provably miss the type
};

/// For every c-successor of a generalized-typable term, re-searches for the
/// same type. Bound exhaustion is reported separately, never as failure.
/// Throws std::invalid_argument when m is not generalized typable within
/// the limits.
GenPreservationReport generalized_preservation_check(const Term& m,
                                                     GenSearchLimits limits = {});

struct CaWitness {
  Term term;           // a generalized-typable term whose ca-graph splits
  Term type_outcome;   // the reachable embedded type
  Term stuck_outcome;  // the reachable ca-normal non-value
};

/// The built-in witness that the ca-relation is not confluent.
CaWitness ca_confluence_witness();

}  // namespace rewlab

#endif
