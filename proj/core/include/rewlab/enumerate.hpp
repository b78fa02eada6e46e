// Copyright (c) 2026, the rewlab authors
// Licensed under the Apache License Version 2.0.

#ifndef REWLAB_ENUMERATE_HPP
#define REWLAB_ENUMERATE_HPP

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "rewlab/ars.hpp"
#include "rewlab/reduction.hpp"
#include "rewlab/term.hpp"

namespace rewlab {

/// All types of arrow-nesting depth at most `depth`, shallower first.
std::vector<Type> enum_types(int depth);

/// Exhaustive closed standard terms of AST size <= max_size (annotations
/// not counted toward the size but drawn from enum_types(type_depth)).
/// Canonical binder naming (v0, v1, ...) makes the stream duplicate-free
/// up to alpha-equivalence.
void for_each_closed_term(int max_size, int type_depth,
                          const std::function<void(const Term&)>& fn);
std::vector<Term> enum_closed_terms(int max_size, int type_depth);

/// Terms of exactly `size` with free variables drawn from v0..v<free_slots-1>.
std::vector<Term> enum_open_terms(int size, int type_depth, int free_slots);

/// A finite window onto a reduction relation.
struct ReductionGraph {
  struct Edge {
    int from;
    RedexOccurrence occ;
    int to;
  };
  Relation rel;
  std::vector<Term> nodes;  // alpha-canonical representatives; node 0 = root
  std::vector<Edge> edges;
  bool truncated = false;

  std::vector<int> normal_form_indices() const;
  std::vector<std::vector<int>> adjacency() const;
};

ReductionGraph build_graph(const Term& m, Relation rel, int node_cap = 10000);

/// Everything a-reachable from m, including m (finite: a-reduction
/// terminates).
std::vector<Term> a_closure(const Term& m);

struct TruncatedGraph : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class ConfluenceOracleVerdict { Confluent, NotConfluent };

/// Joinability of every peak inside an untruncated graph.
/// Throws TruncatedGraph when the verdict would be unreliable.
ConfluenceOracleVerdict confluence_oracle(const ReductionGraph& g);

struct OracleReport {
  std::uint64_t checked = 0;
  std::vector<std::string> violations;
  std::uint64_t truncated = 0;

  bool ok() const { return violations.empty(); }
  std::string json() const;
};

/// Type preservation, brute force: every one-step concrete successor of a
/// typable corpus term is typable with the same type.
OracleReport preservation_oracle(const std::vector<Term>& corpus,
                                 Relation rel_concrete);

/// Completion of a/b-peaks from typable terms: for m0 ->a m1, m0 ->b m2
/// there is m3 with m2 ->a* m3 and m1 ->b m3 or m1 ->a* m3. When the b-step
/// is call-by-value, the single joining b-step must be call-by-value too.
OracleReport peak_completion_oracle(const std::vector<Term>& corpus);

struct ArsExport {
  ars::FiniteARS graph;
  std::set<int> type_nodes;
};

/// Image of an untruncated ba-graph as a two-relation ARS (a-edges vs
/// b-edges), with the embedded-type nodes as the distinguished set.
ArsExport export_ars(const ReductionGraph& g);

/// DOT rendering: a-edges dashed, b/c-edges solid.
std::string graph_dot(const ReductionGraph& g);

}  // namespace rewlab

#endif
