// Copyright (c) 2026, the rewlab authors
// Licensed under the Apache License Version 2.0.

#include "rewlab/generalized.hpp"

#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace rewlab {

namespace {

struct SearchNode {
  Term term;
  int parent;  // -1 for the root
  RedexOccurrence occ;
  int depth;
};

GenTypableResult bfs(const Term& start, const std::optional<Type>& target,
                     GenSearchLimits limits) {
  auto accepts = [&](const Term& t) -> std::optional<Type> {
    auto ty = as_type(t);
    if (!ty) return std::nullopt;
    if (target && !(*ty == *target)) return std::nullopt;
    return ty;
  };

  std::vector<SearchNode> nodes;
  nodes.push_back({start, -1, {}, 0});
  std::unordered_set<std::string> visited{alpha_key(start)};

  auto make_result = [&](int idx, Type ty) {
    GenTypableResult r{GenTypableResult::Status::Found, std::move(ty), {},
                       static_cast<int>(nodes.size())};
    std::vector<TraceStep> rev;
    for (int i = idx; i > 0; i = nodes[i].parent)
      rev.push_back({nodes[i].occ, nodes[i].term});
    r.witness.assign(rev.rbegin(), rev.rend());
    return r;
  };

  if (auto ty = accepts(start)) return make_result(0, *ty);

  bool bounded = false;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int idx = queue.front();
    queue.pop_front();
    Term current = nodes[idx].term;  // copy: nodes may reallocate below
    int depth = nodes[idx].depth;
    auto occs = redexes(current, Relation::ca);
    if (depth >= limits.max_depth) {
      if (!occs.empty()) bounded = true;  // frontier dropped
      continue;
    }
    for (const auto& occ : occs) {
      Term next = step(current, occ);
      if (!visited.insert(alpha_key(next)).second) continue;
      if (static_cast<int>(nodes.size()) >= limits.node_cap) {
        bounded = true;
        queue.clear();
        break;
      }
      nodes.push_back({next, idx, occ, depth + 1});
      if (auto ty = accepts(next))
        return make_result(static_cast<int>(nodes.size()) - 1, *ty);
      queue.push_back(static_cast<int>(nodes.size()) - 1);
    }
    if (bounded) break;
  }

  GenTypableResult r;
  r.status = bounded ? GenTypableResult::Status::NotFoundBounded
                     : GenTypableResult::Status::NotFoundComplete;
  r.explored = static_cast<int>(nodes.size());
  return r;
}

}  // namespace

GenTypableResult generalized_typable(const Term& m, GenSearchLimits limits) {
  return bfs(m, std::nullopt, limits);
}

GenTypableResult search_type_target(const Term& m, const Type& target,
                                    GenSearchLimits limits) {
  return bfs(m, target, limits);
}

GenPreservationReport generalized_preservation_check(const Term& m,
                                                     GenSearchLimits limits) {
  auto base = generalized_typable(m, limits);
  if (!base.found())
    throw std::invalid_argument(
        "generalized_preservation_check: term is not generalized typable "
        "within the given bounds");
  GenPreservationReport report{GenPreservationReport::Verdict::Ok, *base.type,
                               0, 0, {}};
  for (const auto& occ : redexes(m, Relation::c)) {
    Term next = step(m, occ);
    ++report.c_successors_checked;
    auto r = search_type_target(next, *base.type, limits);
    switch (r.status) {
      case GenTypableResult::Status::Found:
        break;
      case GenTypableResult::Status::NotFoundBounded:
        ++report.bound_exhausted;
        break;
      case GenTypableResult::Status::NotFoundComplete:
        report.violations.push_back(next);
        break;
    }
  }
  if (!report.violations.empty())
    report.verdict = GenPreservationReport::Verdict::Violation;
  else if (report.bound_exhausted > 0)
    report.verdict = GenPreservationReport::Verdict::BoundExhausted;
  return report;
}

CaWitness ca_confluence_witness() {
  Type base = Type::base();
  Term x = Term::var("x");
  Term y = Term::var("y");
  // (\x:A. \y:A. y) (\x:A. x x)
  Term term = Term::app(Term::lam("x", base, Term::lam("y", base, y)),
                        Term::lam("x", base, Term::app(x, x)));
  Term type_outcome = Term::embed(Type::arrow(base, base));
  // (A->(A->A)) (A=>(A A)): ca-normal and not a mixed-value application.
  Term stuck_outcome =
      Term::app(Term::embed(Type::arrow(base, Type::arrow(base, base))),
                Term::arrow_abs(base, Term::app(Term::ty_base(), Term::ty_base())));
  return {term, type_outcome, stuck_outcome};
}

}  // namespace rewlab
