// Copyright (c) 2026, the rewlab authors
// Licensed under the Apache License Version 2.0.

#include <algorithm>
#include <numeric>
#include <sstream>

#include "rewlab/trs.hpp"

namespace rewlab::trs {

namespace {

FoTerm rename_vars(const FoTerm& t, const FoSubst& renaming) {
  return apply_subst(t, renaming);
}

FoSubst renaming_apart(const FoTerm& from, const std::set<std::string>& avoid) {
  FoSubst renaming;
  std::set<std::string> taken = avoid;
  for (const auto& v : fo_vars(from)) {
    if (!taken.count(v)) {
      taken.insert(v);
      continue;
    }
    std::string fresh = v;
    while (taken.count(fresh)) fresh += "'";
    taken.insert(fresh);
    renaming.emplace(v, FoTerm::var(fresh));
  }
  return renaming;
}

FoTerm replace_at(const FoTerm& t, const FoPosition& pos, size_t i,
                  const FoTerm& repl) {
  if (i == pos.size()) return repl;
  auto args = t.args();
  args[pos[i]] = replace_at(args[pos[i]], pos, i + 1, repl);
  return FoTerm::fun(t.symbol(), std::move(args));
}

void non_var_positions(const FoTerm& t, FoPosition& pos,
                       std::vector<FoPosition>& out) {
  if (t.is_var()) return;
  out.push_back(pos);
  for (size_t i = 0; i < t.args().size(); ++i) {
    pos.push_back(static_cast<int>(i));
    non_var_positions(t.args()[i], pos, out);
    pos.pop_back();
  }
}

FoTerm subterm_at(const FoTerm& t, const FoPosition& pos) {
  FoTerm cur = t;
  for (int i : pos) cur = cur.args()[i];
  return cur;
}

}  // namespace

std::string CriticalPair::describe() const {
  std::ostringstream out;
  out << "rule " << inner_rule + 1 << " into rule " << outer_rule + 1 << " at [";
  for (size_t i = 0; i < pos.size(); ++i) out << (i ? "," : "") << pos[i];
  out << "]: " << peak.str() << "  ~>  " << left.str() << "  |  " << right.str();
  return out.str();
}

std::vector<CriticalPair> critical_pairs(const FoTRS& trs) {
  std::vector<CriticalPair> out;
  for (size_t outer = 0; outer < trs.rules.size(); ++outer) {
    const auto& outer_rule = trs.rules[outer];
    auto outer_vars = fo_vars(outer_rule.lhs);
    std::vector<FoPosition> positions;
    FoPosition scratch;
    non_var_positions(outer_rule.lhs, scratch, positions);
    for (size_t inner = 0; inner < trs.rules.size(); ++inner) {
      auto renaming = renaming_apart(trs.rules[inner].lhs, outer_vars);
      FoTerm inner_lhs = rename_vars(trs.rules[inner].lhs, renaming);
      FoTerm inner_rhs = rename_vars(trs.rules[inner].rhs, renaming);
      for (const auto& pos : positions) {
        if (outer == inner && pos.empty()) continue;  // trivial self-overlap
        auto mgu = unify(subterm_at(outer_rule.lhs, pos), inner_lhs);
        if (!mgu) continue;
        FoTerm peak = apply_subst(outer_rule.lhs, *mgu);
        FoTerm left = apply_subst(replace_at(outer_rule.lhs, pos, 0, inner_rhs), *mgu);
        FoTerm right = apply_subst(outer_rule.rhs, *mgu);
        out.push_back({peak, left, right, static_cast<int>(outer),
                       static_cast<int>(inner), pos});
      }
    }
  }
  return out;
}

bool lpo_greater(const FoTerm& s, const FoTerm& t,
                 const std::map<std::string, int>& precedence) {
  if (s.is_var()) return false;
  if (t.is_var()) return fo_occurs(t.symbol(), s);
  for (const auto& si : s.args())
    if (si == t || lpo_greater(si, t, precedence)) return true;
  int fs = precedence.at(s.symbol());
  int ft = precedence.at(t.symbol());
  if (fs > ft) {
    for (const auto& tj : t.args())
      if (!lpo_greater(s, tj, precedence)) return false;
    return true;
  }
  if (fs == ft && s.symbol() == t.symbol() &&
      s.args().size() == t.args().size()) {
    size_t i = 0;
    while (i < s.args().size() && s.args()[i] == t.args()[i]) ++i;
    if (i == s.args().size()) return false;  // equal terms
    if (!lpo_greater(s.args()[i], t.args()[i], precedence)) return false;
    for (const auto& tj : t.args())
      if (!(lpo_greater(s, tj, precedence) ||
            std::find(s.args().begin(), s.args().end(), tj) != s.args().end()))
        return false;
    return true;
  }
  return false;
}

LpoResult lpo_terminates(const FoTRS& trs) {
  std::vector<std::string> symbols;
  for (const auto& [sym, arity] : trs.signature) symbols.push_back(sym);
  if (symbols.size() > 8) return {};  // factorial search would be unreasonable

  std::vector<int> order(symbols.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end());
  do {
    std::map<std::string, int> precedence;
    for (size_t rank = 0; rank < order.size(); ++rank)
      precedence[symbols[order[rank]]] = static_cast<int>(rank);
    bool all = true;
    for (const auto& rule : trs.rules)
      if (!lpo_greater(rule.lhs, rule.rhs, precedence)) {
        all = false;
        break;
      }
    if (all) {
      LpoResult r;
      r.found = true;
      r.precedence.resize(symbols.size());
      for (size_t rank = 0; rank < order.size(); ++rank)
        r.precedence[symbols.size() - 1 - rank] = symbols[order[rank]];
      return r;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return {};
}

ConfluenceResult confluence(const FoTRS& trs, std::uint64_t joinability_fuel) {
  ConfluenceResult res{ConfluenceVerdict::Unknown, lpo_terminates(trs),
                       critical_pairs(trs), std::nullopt, std::nullopt};
  if (!res.termination.found) {
    res.loop = find_loop(trs);
    return res;
  }
  // Terminating: normalization decides joinability of each critical pair,
  // and unequal normal forms exhibit two distinct normal forms of the peak.
  for (const auto& cp : res.pairs) {
    auto nl = fo_normalize(trs, cp.left, joinability_fuel);
    auto nr = fo_normalize(trs, cp.right, joinability_fuel);
    if (nl.fuel_exhausted || nr.fuel_exhausted) return res;  // stay unknown
    if (nl.term != nr.term) {
      res.verdict = ConfluenceVerdict::NotConfluent;
      res.witness = {nl.term, nr.term};
      return res;
    }
  }
  res.verdict = ConfluenceVerdict::Confluent;
  return res;
}

std::optional<std::vector<FoTerm>> find_loop(const FoTRS& trs, int max_depth,
                                             std::size_t history_window) {
  for (const auto& rule : trs.rules) {
    std::vector<FoTerm> path{rule.lhs};
    std::size_t visited = 0;
    std::optional<std::vector<FoTerm>> found;
    auto dfs = [&](auto&& self) -> bool {
      if (static_cast<int>(path.size()) > max_depth) return false;
      if (++visited > history_window) return false;
      for (const auto& rw : rewrite_step(trs, path.back())) {
        auto hit = std::find(path.begin(), path.end(), rw.result);
        if (hit != path.end()) {
          std::vector<FoTerm> loop(hit, path.end());
          loop.push_back(rw.result);
          found = std::move(loop);
          return true;
        }
        path.push_back(rw.result);
        if (self(self)) return true;
        path.pop_back();
      }
      return false;
    };
    if (dfs(dfs)) return found;
  }
  return std::nullopt;
}

}  // namespace rewlab::trs
