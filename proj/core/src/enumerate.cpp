// Copyright (c) 2026, the rewlab authors
// Licensed under the Apache License Version 2.0.

#include "rewlab/enumerate.hpp"

#include <deque>
#include <map>
#include <nlohmann/json.hpp>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "rewlab/syntax.hpp"

namespace rewlab {

std::vector<Type> enum_types(int depth) {
  std::vector<Type> out{Type::base()};
  for (int d = 1; d <= depth; ++d) {
    size_t prev = out.size();
    for (size_t i = 0; i < prev; ++i)
      for (size_t j = 0; j < prev; ++j) {
        Type arrow = Type::arrow(out[i], out[j]);
        if (arrow.depth() == d) out.push_back(arrow);
      }
  }
  return out;
}

namespace {

std::string slot_name(int k) { return "v" + std::to_string(k); }

// Memoized generation of terms of exact size with free slots v0..v<k-1>.
class TermEnumerator {
public:
  TermEnumerator(int type_depth) : types_(enum_types(type_depth)) {}

  const std::vector<Term>& exact(int size, int slots) {
    auto key = std::make_pair(size, slots);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    std::vector<Term> out;
    if (size == 1) {
      out.push_back(Term::constant_a());
      out.push_back(Term::constant_f());
      for (int v = 0; v < slots; ++v) out.push_back(Term::var(slot_name(v)));
    } else if (size >= 2) {
      for (int left = 1; left + 1 < size; ++left) {
        const auto& ls = exact(left, slots);
        const auto& rs = exact(size - 1 - left, slots);
        for (const auto& l : ls)
          for (const auto& r : rs) out.push_back(Term::app(l, r));
      }
      for (const auto& ty : types_)
        for (const auto& body : exact(size - 1, slots + 1))
          out.push_back(Term::lam(slot_name(slots), ty, body));
    }
    return memo_.emplace(key, std::move(out)).first->second;
  }

  // Streams size-n closed terms without materializing the top level.
  void stream_closed(int size, const std::function<void(const Term&)>& fn) {
    if (size == 1) {
      fn(Term::constant_a());
      fn(Term::constant_f());
      return;
    }
    for (int left = 1; left + 1 < size; ++left)
      for (const auto& l : exact(left, 0))
        for (const auto& r : exact(size - 1 - left, 0)) fn(Term::app(l, r));
    for (const auto& ty : types_)
      for (const auto& body : exact(size - 1, 1))
        fn(Term::lam(slot_name(0), ty, body));
  }

private:
  struct PairHash {
    size_t operator()(const std::pair<int, int>& p) const {
      return std::hash<int>()(p.first * 97 + p.second);
    }
  };
  std::vector<Type> types_;
  std::unordered_map<std::pair<int, int>, std::vector<Term>, PairHash> memo_;
};

}  // namespace

void for_each_closed_term(int max_size, int type_depth,
                          const std::function<void(const Term&)>& fn) {
  TermEnumerator gen(type_depth);
  for (int size = 1; size <= max_size; ++size) gen.stream_closed(size, fn);
}

std::vector<Term> enum_closed_terms(int max_size, int type_depth) {
  std::vector<Term> out;
  for_each_closed_term(max_size, type_depth, [&](const Term& t) { out.push_back(t); });
  return out;
}

std::vector<Term> enum_open_terms(int size, int type_depth, int free_slots) {
  TermEnumerator gen(type_depth);
  return gen.exact(size, free_slots);
}

std::vector<int> ReductionGraph::normal_form_indices() const {
  std::vector<bool> has_out(nodes.size(), false);
  for (const auto& e : edges) has_out[e.from] = true;
  std::vector<int> out;
  for (size_t i = 0; i < nodes.size(); ++i)
    if (!has_out[i]) out.push_back(static_cast<int>(i));
  return out;
}

std::vector<std::vector<int>> ReductionGraph::adjacency() const {
  std::vector<std::vector<int>> adj(nodes.size());
  for (const auto& e : edges) adj[e.from].push_back(e.to);
  return adj;
}

ReductionGraph build_graph(const Term& m, Relation rel, int node_cap) {
  ReductionGraph g;
  g.rel = rel;
  std::unordered_map<std::string, int> index;
  g.nodes.push_back(m);
  index.emplace(alpha_key(m), 0);
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int from = queue.front();
    queue.pop_front();
    Term current = g.nodes[from];
    for (const auto& occ : redexes(current, rel)) {
      Term next = step(current, occ);
      std::string key = alpha_key(next);
      auto it = index.find(key);
      int to;
      if (it != index.end()) {
        to = it->second;
      } else if (static_cast<int>(g.nodes.size()) >= node_cap) {
        g.truncated = true;
        continue;
      } else {
        to = static_cast<int>(g.nodes.size());
        g.nodes.push_back(next);
        index.emplace(std::move(key), to);
        queue.push_back(to);
      }
      g.edges.push_back({from, occ, to});
    }
  }
  return g;
}

std::vector<Term> a_closure(const Term& m) {
  std::vector<Term> out{m};
  std::unordered_set<std::string> seen{alpha_key(m)};
  for (size_t i = 0; i < out.size(); ++i) {
    Term current = out[i];
    for (const auto& next : successors(current, Relation::a))
      if (seen.insert(alpha_key(next)).second) out.push_back(next);
  }
  return out;
}

ConfluenceOracleVerdict confluence_oracle(const ReductionGraph& g) {
  if (g.truncated)
    throw TruncatedGraph("confluence_oracle: graph truncated, verdict withheld");
  auto adj = g.adjacency();
  size_t n = g.nodes.size();
  // reach[i] = reflexive-transitive closure, as bitsets.
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (size_t i = 0; i < n; ++i) {
    std::deque<int> queue{static_cast<int>(i)};
    reach[i][i] = true;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int v : adj[u])
        if (!reach[i][v]) {
          reach[i][v] = true;
          queue.push_back(v);
        }
    }
  }
  auto joinable = [&](size_t u, size_t v) {
    for (size_t w = 0; w < n; ++w)
      if (reach[u][w] && reach[v][w]) return true;
    return false;
  };
  for (size_t x = 0; x < n; ++x)
    for (size_t u = 0; u < n; ++u) {
      if (!reach[x][u]) continue;
      for (size_t v = 0; v < n; ++v)
        if (reach[x][v] && !joinable(u, v))
          return ConfluenceOracleVerdict::NotConfluent;
    }
  return ConfluenceOracleVerdict::Confluent;
}

std::string OracleReport::json() const {
  nlohmann::json j{{"checked", checked},
                   {"violations", violations},
                   {"truncated", truncated}};
  return j.dump();
}

OracleReport preservation_oracle(const std::vector<Term>& corpus,
                                 Relation rel_concrete) {
  OracleReport report;
  for (const auto& m : corpus) {
    auto type = typable(m);
    if (!type) continue;
    for (const auto& occ : redexes(m, rel_concrete)) {
      Term next = step(m, occ);
      ++report.checked;
      auto next_type = typable(next);
      if (!next_type || *next_type != *type)
        report.violations.push_back(print_term(m) + " --" + rule_tag_name(occ.tag) +
                                    "--> " + print_term(next));
    }
  }
  return report;
}

namespace {

bool occurrence_is_cbv(const Term& m, const RedexOccurrence& b_occ) {
  for (const auto& c_occ : redexes(m, Relation::c))
    if (c_occ.pos == b_occ.pos) return true;
  return false;
}

}  // namespace

OracleReport peak_completion_oracle(const std::vector<Term>& corpus) {
  OracleReport report;
  for (const auto& m0 : corpus) {
    if (!typable(m0)) continue;
    auto a_occs = redexes(m0, Relation::a);
    auto b_occs = redexes(m0, Relation::b);
    if (a_occs.empty() || b_occs.empty()) continue;
    for (const auto& ao : a_occs) {
      Term m1 = step(m0, ao);
      std::unordered_set<std::string> a_reach_m1;
      for (const auto& t : a_closure(m1)) a_reach_m1.insert(alpha_key(t));
      std::unordered_set<std::string> b_succ_m1, c_succ_m1;
      for (const auto& t : successors(m1, Relation::b))
        b_succ_m1.insert(alpha_key(t));
      for (const auto& t : successors(m1, Relation::c))
        c_succ_m1.insert(alpha_key(t));
      for (const auto& bo : b_occs) {
        Term m2 = step(m0, bo);
        bool cbv = occurrence_is_cbv(m0, bo);
        ++report.checked;
        bool complete = false;
        for (const auto& m3 : a_closure(m2)) {
          std::string key = alpha_key(m3);
          if (a_reach_m1.count(key)) {
            complete = true;
            break;
          }
          if (cbv ? c_succ_m1.count(key) : b_succ_m1.count(key)) {
            complete = true;
            break;
          }
        }
        if (!complete)
          report.violations.push_back(print_term(m0) + " with a-step to " +
                                      print_term(m1) + " and b-step to " +
                                      print_term(m2));
      }
    }
  }
  return report;
}

ArsExport export_ars(const ReductionGraph& g) {
  if (g.truncated) throw TruncatedGraph("export_ars: graph truncated");
  ArsExport out;
  for (size_t i = 0; i < g.nodes.size(); ++i) {
    out.graph.add_node(static_cast<int>(i));
    if (is_type(g.nodes[i])) out.type_nodes.insert(static_cast<int>(i));
  }
  for (const auto& e : g.edges) {
    if (relation_contains(Relation::a, e.occ.tag))
      out.graph.add_edge_a(e.from, e.to);
    else
      out.graph.add_edge_b(e.from, e.to);
  }
  return out;
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '\\' || c == '"') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string graph_dot(const ReductionGraph& g) {
  std::ostringstream out;
  out << "digraph reduction {\n";
  for (size_t i = 0; i < g.nodes.size(); ++i) {
    out << "  n" << i << " [label=\"" << dot_escape(print_term(g.nodes[i])) << "\"";
    if (is_type(g.nodes[i])) out << ", shape=box";
    out << "];\n";
  }
  for (const auto& e : g.edges) {
    bool abstract_edge = relation_contains(Relation::a, e.occ.tag);
    out << "  n" << e.from << " -> n" << e.to << " [label=\""
        << rule_tag_name(e.occ.tag) << "\"";
    if (abstract_edge) out << ", style=dashed";
    out << "];\n";
  }
  if (g.truncated) out << "  truncated [shape=plaintext, label=\"(truncated)\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace rewlab
