// Copyright (c) 2026, the rewlab authors
// Licensed under the Apache License Version 2.0.

#include "rewlab/reduction.hpp"

#include <nlohmann/json.hpp>
#include <unordered_set>

#include "rewlab/syntax.hpp"

namespace rewlab {

const char* rule_tag_name(RuleTag tag) {
  switch (tag) {
    case RuleTag::c_fbeta: return "c_fbeta";
    case RuleTag::c_beta: return "c_beta";
    case RuleTag::b_fbeta: return "b_fbeta";
    case RuleTag::b_beta: return "b_beta";
    case RuleTag::a_beta: return "a_beta";
    case RuleTag::a_lambda: return "a_lambda";
    case RuleTag::a_f: return "a_f";
    case RuleTag::a_a: return "a_a";
  }
  return "?";
}

const char* relation_name(Relation rel) {
  switch (rel) {
    case Relation::a: return "a";
    case Relation::b: return "b";
    case Relation::c: return "c";
    case Relation::ca: return "ca";
    case Relation::ba: return "ba";
  }
  return "?";
}

std::optional<Relation> relation_from_name(const std::string& name) {
  if (name == "a") return Relation::a;
  if (name == "b") return Relation::b;
  if (name == "c") return Relation::c;
  if (name == "ca") return Relation::ca;
  if (name == "ba") return Relation::ba;
  return std::nullopt;
}

namespace {

bool is_c_tag(RuleTag t) { return t == RuleTag::c_fbeta || t == RuleTag::c_beta; }
bool is_b_tag(RuleTag t) { return t == RuleTag::b_fbeta || t == RuleTag::b_beta; }

bool has_c(Relation r) { return r == Relation::c || r == Relation::ca; }
bool has_b(Relation r) { return r == Relation::b || r == Relation::ba; }
bool has_a(Relation r) { return r != Relation::b && r != Relation::c; }

}  // namespace

bool relation_contains(Relation rel, RuleTag tag) {
  if (is_c_tag(tag)) return has_c(rel);
  if (is_b_tag(tag)) return has_b(rel);
  return has_a(rel);
}

namespace {

// Redex shapes at a single node, context legality aside.
bool matches_fbeta(const Term& t) {
  return t.is(Term::Kind::App) && t.fun().is(Term::Kind::ConstF) &&
         t.arg().is(Term::Kind::ConstA);
}

bool matches_c_beta(const Term& t) {
  return t.is(Term::Kind::App) && t.fun().is(Term::Kind::Lam) &&
         is_mixed_value(t.arg());
}

bool matches_b_beta(const Term& t) {
  return t.is(Term::Kind::App) && t.fun().is(Term::Kind::Lam);
}

bool matches_a_beta(const Term& t) {
  if (!t.is(Term::Kind::App) || !t.fun().is(Term::Kind::ArrowAbs)) return false;
  auto arg_type = as_type(t.arg());
  return arg_type && *arg_type == t.fun().ann();
}

bool matches(const Term& t, RuleTag tag) {
  switch (tag) {
    case RuleTag::c_fbeta:
    case RuleTag::b_fbeta: return matches_fbeta(t);
    case RuleTag::c_beta: return matches_c_beta(t);
    case RuleTag::b_beta: return matches_b_beta(t);
    case RuleTag::a_beta: return matches_a_beta(t);
    case RuleTag::a_lambda: return t.is(Term::Kind::Lam);
    case RuleTag::a_f: return t.is(Term::Kind::ConstF);
    case RuleTag::a_a: return t.is(Term::Kind::ConstA);
  }
  return false;
}

Term contract(const Term& t, RuleTag tag) {
  switch (tag) {
    case RuleTag::c_fbeta:
    case RuleTag::b_fbeta:
      return Term::constant_a();
    case RuleTag::c_beta:
    case RuleTag::b_beta:
      return subst(t.fun().body(), t.fun().name(), t.arg());
    case RuleTag::a_beta:
      return t.fun().body();
    case RuleTag::a_lambda:
      return Term::arrow_abs(
          t.ann(), subst(t.body(), t.name(), Term::embed(t.ann())));
    case RuleTag::a_f:
      return Term::embed(Type::arrow(Type::base(), Type::base()));
    case RuleTag::a_a:
      return Term::ty_base();
  }
  throw std::logic_error("contract: unreachable");
}

// Preorder scan. c_ok tracks whether the current position is a legal
// call-by-value context hole: application spines only, descending into an
// argument only when the function part is already a value.
void scan(const Term& t, Relation rel, bool c_ok, Position& pos,
          std::vector<RedexOccurrence>& out) {
  if (has_c(rel) && c_ok) {
    if (matches_fbeta(t)) out.push_back({pos, RuleTag::c_fbeta});
    if (matches_c_beta(t)) out.push_back({pos, RuleTag::c_beta});
  }
  if (has_b(rel)) {
    if (matches_fbeta(t)) out.push_back({pos, RuleTag::b_fbeta});
    if (matches_b_beta(t)) out.push_back({pos, RuleTag::b_beta});
  }
  if (has_a(rel)) {
    switch (t.kind()) {
      case Term::Kind::App:
        if (matches_a_beta(t)) out.push_back({pos, RuleTag::a_beta});
        break;
      case Term::Kind::Lam: out.push_back({pos, RuleTag::a_lambda}); break;
      case Term::Kind::ConstF: out.push_back({pos, RuleTag::a_f}); break;
      case Term::Kind::ConstA: out.push_back({pos, RuleTag::a_a}); break;
      default: break;
    }
  }
  switch (t.kind()) {
    case Term::Kind::App: {
      pos.push_back(0);
      scan(t.fun(), rel, c_ok, pos, out);
      pos.back() = 1;
      scan(t.arg(), rel, c_ok && is_mixed_value(t.fun()), pos, out);
      pos.pop_back();
      return;
    }
    case Term::Kind::Lam: {
      pos.push_back(0);
      scan(t.body(), rel, false, pos, out);
      pos.pop_back();
      return;
    }
    case Term::Kind::ArrowAbs: {
      pos.push_back(1);
      scan(t.body(), rel, false, pos, out);
      pos.pop_back();
      return;
    }
    default:
      return;
  }
}

bool c_context_legal(const Term& root, const Position& pos) {
  Term t = root;
  for (int idx : pos) {
    if (!t.is(Term::Kind::App)) return false;
    if (idx == 0) {
      t = t.fun();
    } else if (idx == 1) {
      if (!is_mixed_value(t.fun())) return false;
      t = t.arg();
    } else {
      return false;
    }
  }
  return true;
}

Term replace_at(const Term& t, const Position& pos, size_t i, const Term& repl) {
  if (i == pos.size()) return repl;
  int idx = pos[i];
  switch (t.kind()) {
    case Term::Kind::App:
      if (idx == 0) return Term::app(replace_at(t.fun(), pos, i + 1, repl), t.arg());
      if (idx == 1) return Term::app(t.fun(), replace_at(t.arg(), pos, i + 1, repl));
      break;
    case Term::Kind::Lam:
      if (idx == 0)
        return Term::lam(t.name(), t.ann(), replace_at(t.body(), pos, i + 1, repl));
      break;
    case Term::Kind::ArrowAbs:
      if (idx == 1)
        return Term::arrow_abs(t.ann(), replace_at(t.body(), pos, i + 1, repl));
      break;
    default:
      break;
  }
  throw InvalidOccurrence("position does not exist in term");
}

}  // namespace

std::vector<RedexOccurrence> redexes(const Term& m, Relation rel) {
  std::vector<RedexOccurrence> out;
  Position pos;
  scan(m, rel, true, pos, out);
  return out;
}

Term subterm_at(const Term& m, const Position& pos) {
  Term t = m;
  for (int idx : pos) {
    switch (t.kind()) {
      case Term::Kind::App:
        if (idx == 0) { t = t.fun(); continue; }
        if (idx == 1) { t = t.arg(); continue; }
        break;
      case Term::Kind::Lam:
        if (idx == 0) { t = t.body(); continue; }
        break;
      case Term::Kind::ArrowAbs:
        if (idx == 1) { t = t.body(); continue; }
        break;
      default:
        break;
    }
    throw InvalidOccurrence("position does not exist in term");
  }
  return t;
}

Term step(const Term& m, const RedexOccurrence& occ) {
  Term sub = subterm_at(m, occ.pos);
  if (!matches(sub, occ.tag))
    throw InvalidOccurrence(std::string("subterm does not match rule ") +
                            rule_tag_name(occ.tag));
  if (is_c_tag(occ.tag) && !c_context_legal(m, occ.pos))
    throw InvalidOccurrence("position is not a call-by-value context hole");
  return replace_at(m, occ.pos, 0, contract(sub, occ.tag));
}

std::vector<Term> successors(const Term& m, Relation rel) {
  std::vector<Term> out;
  std::unordered_set<std::string> seen;
  for (const auto& occ : redexes(m, rel)) {
    Term next = step(m, occ);
    if (seen.insert(alpha_key(next)).second) out.push_back(next);
  }
  return out;
}

std::uint64_t mu(const Term& m) {
  switch (m.kind()) {
    case Term::Kind::Var:
    case Term::Kind::ConstA:
    case Term::Kind::ConstF:
      return 1;
    case Term::Kind::TyBase:
      return 0;
    case Term::Kind::Lam:
      return 1 + mu(m.body());
    case Term::Kind::ArrowAbs:
      return mu(m.body());
    case Term::Kind::App:
      return 1 + mu(m.fun()) + mu(m.arg());
  }
  return 0;
}

Term normalize_a(const Term& m) {
  Term t = m;
  std::uint64_t measure = mu(t);
  for (;;) {
    auto occs = redexes(t, Relation::a);
    if (occs.empty()) return t;
    Term next = step(t, occs.front());
    std::uint64_t next_measure = mu(next);
    if (next_measure >= measure)
      throw std::logic_error("normalize_a: measure failed to decrease");
    t = next;
    measure = next_measure;
  }
}

std::optional<Type> typable(const Term& m) { return as_type(normalize_a(m)); }

RunResult run(const Term& m, Relation rel, int fuel) {
  RunResult result{m, {}, false};
  Term t = m;
  for (int i = 0; i < fuel; ++i) {
    auto occs = redexes(t, rel);
    if (occs.empty()) {
      result.reached_normal_form = true;
      return result;
    }
    t = step(t, occs.front());
    result.steps.push_back({occs.front(), t});
  }
  result.reached_normal_form = redexes(t, rel).empty();
  return result;
}

RunResult replay(const Term& m, const std::vector<RedexOccurrence>& occs) {
  RunResult result{m, {}, false};
  Term t = m;
  for (const auto& occ : occs) {
    t = step(t, occ);
    result.steps.push_back({occ, t});
  }
  return result;
}

std::string trace_json(const RunResult& result) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : result.steps) {
    steps.push_back({{"rule", rule_tag_name(s.occ.tag)},
                     {"position", s.occ.pos},
                     {"term", print_term(s.term)}});
  }
  return steps.dump();
}

}  // namespace rewlab
