// Copyright (c) 2026, the rewlab authors
// Licensed under the Apache License Version 2.0.

#ifndef REWLAB_ARS_HPP
#define REWLAB_ARS_HPP

#include <set>
#include <string>
#include <utility>

namespace rewlab::ars {

/// A finite abstract reduction system with two labeled relations.
struct FiniteARS {
  std::set<int> nodes;
  std::set<std::pair<int, int>> edges_a;
  std::set<std::pair<int, int>> edges_b;

  void add_node(int n) { nodes.insert(n); }
  void add_edge_a(int src, int dst);
  void add_edge_b(int src, int dst);
};

enum class Rel { a, b, ab };

/// Image of {from} under the reflexive-transitive closure of rel.
std::set<int> reach(const FiniteARS& g, Rel rel, int from);

// Exact decisions on the finite graph.
bool is_terminating(const FiniteARS& g, Rel rel);        // no reachable cycle
bool is_deterministic(const FiniteARS& g, Rel rel);      // at most one successor
bool has_diamond(const FiniteARS& g, Rel rel);           // peaks join in <=1 step
bool is_locally_confluent(const FiniteARS& g, Rel rel);  // one-step peaks join
bool is_confluent(const FiniteARS& g, Rel rel);          // all peaks join

/// Conditions under which b-steps out of a-predecessors of S rejoin their
/// a-reduct in S, together with a brute-force check of that conclusion.
struct PreservationConditionsReport {
  bool cond1_s_normal;        // no a-step leaves S
  bool cond2_a_confluent;     // CR(a)
  bool cond3_completion;      // <-a . Id_{<-a*(S)} . ->b  within  (->b u ->a*) . <-a*
  bool cond4_normal_forms;    // a-normal implies b-normal
  bool conclusion;            // T in S, T <-a* m ->b m'  implies  m' ->a* T
};
PreservationConditionsReport check_preservation_conditions(const FiniteARS& g,
                                                    const std::set<int>& s);

/// Conditions implying confluence of the union relation, with a brute-force
/// check of union confluence. cond3_strong records the sharper inclusion
/// <-a . ->b within ->ba . <-a= observed on the ten-node example.
struct UnionConfluenceReport {
  bool cond1_a_terminating;
  bool cond2_a_confluent;
  bool cond3_completion;      // <-a . ->b  within  (->b u ->a*) . <-a*
  bool cond3_strong;          // <-a . ->b  within  ->ba . <-a=
  bool cond4_normal_forms;    // a-normal implies b-normal
  bool union_confluent;       // CR(ab), brute force
};
UnionConfluenceReport check_union_confluence_conditions(const FiniteARS& g);

/// Three nodes with an a-self-loop: every condition except termination
/// holds, yet the union is not confluent.
FiniteARS example_3();

/// The ten-node system where a and b are separately convergent and a is
/// deterministic, yet the union has two reachable normal forms. The
/// constructor validates those properties and throws on mismatch.
FiniteARS example_10();

/// Text format: lines "node <id>", "a <src> <dst>", "b <src> <dst>".
/// '#' starts a comment. Edge lines add their endpoints implicitly.
FiniteARS parse_ars(const std::string& text);
std::string to_text(const FiniteARS& g);

/// DOT rendering: a-edges dashed, b-edges solid.
std::string to_dot(const FiniteARS& g);

}  // namespace rewlab::ars

#endif
