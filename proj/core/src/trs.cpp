// Copyright (c) 2026, the rewlab authors
// Licensed under the Apache License Version 2.0.

#include "rewlab/trs.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace rewlab::trs {

FoTerm FoTerm::var(std::string name) {
  return FoTerm(std::make_shared<const Node>(Node{true, std::move(name), {}}));
}

FoTerm FoTerm::fun(std::string symbol, std::vector<FoTerm> args) {
  return FoTerm(
      std::make_shared<const Node>(Node{false, std::move(symbol), std::move(args)}));
}

bool FoTerm::operator==(const FoTerm& other) const {
  if (node_ == other.node_) return true;
  if (node_->is_var != other.node_->is_var || node_->symbol != other.node_->symbol)
    return false;
  if (node_->args.size() != other.node_->args.size()) return false;
  for (size_t i = 0; i < node_->args.size(); ++i)
    if (node_->args[i] != other.node_->args[i]) return false;
  return true;
}

int FoTerm::size() const {
  int n = 1;
  for (const auto& a : args()) n += a.size();
  return n;
}

std::string FoTerm::str() const {
  if (is_var() || args().empty()) return symbol();
  std::string out = symbol() + "(";
  for (size_t i = 0; i < args().size(); ++i) {
    if (i) out += ",";
    out += args()[i].str();
  }
  return out + ")";
}

FoTerm apply_subst(const FoTerm& t, const FoSubst& s) {
  if (t.is_var()) {
    auto it = s.find(t.symbol());
    return it == s.end() ? t : it->second;
  }
  if (t.args().empty()) return t;
  std::vector<FoTerm> args;
  args.reserve(t.args().size());
  for (const auto& a : t.args()) args.push_back(apply_subst(a, s));
  return FoTerm::fun(t.symbol(), std::move(args));
}

std::set<std::string> fo_vars(const FoTerm& t) {
  std::set<std::string> out;
  if (t.is_var()) {
    out.insert(t.symbol());
    return out;
  }
  for (const auto& a : t.args()) {
    auto sub = fo_vars(a);
    out.insert(sub.begin(), sub.end());
  }
  return out;
}

bool fo_occurs(const std::string& var, const FoTerm& t) {
  if (t.is_var()) return t.symbol() == var;
  for (const auto& a : t.args())
    if (fo_occurs(var, a)) return true;
  return false;
}

namespace {

bool match_rec(const FoTerm& pattern, const FoTerm& subject, FoSubst& out) {
  if (pattern.is_var()) {
    auto [it, inserted] = out.emplace(pattern.symbol(), subject);
    return inserted || it->second == subject;
  }
  if (subject.is_var() || pattern.symbol() != subject.symbol() ||
      pattern.args().size() != subject.args().size())
    return false;
  for (size_t i = 0; i < pattern.args().size(); ++i)
    if (!match_rec(pattern.args()[i], subject.args()[i], out)) return false;
  return true;
}

}  // namespace

std::optional<FoSubst> match(const FoTerm& pattern, const FoTerm& subject) {
  FoSubst out;
  if (!match_rec(pattern, subject, out)) return std::nullopt;
  return out;
}

std::optional<FoSubst> unify(const FoTerm& s, const FoTerm& t) {
  FoSubst mgu;
  std::vector<std::pair<FoTerm, FoTerm>> work{{s, t}};
  auto resolve = [&](FoTerm u) {
    while (u.is_var()) {
      auto it = mgu.find(u.symbol());
      if (it == mgu.end()) break;
      u = it->second;
    }
    return u;
  };
  while (!work.empty()) {
    auto [u, v] = work.back();
    work.pop_back();
    u = resolve(u);
    v = resolve(v);
    if (u.is_var() && v.is_var() && u.symbol() == v.symbol()) continue;
    if (u.is_var() || v.is_var()) {
      if (v.is_var()) std::swap(u, v);
      FoTerm bound = apply_subst(v, mgu);
      if (fo_occurs(u.symbol(), bound)) return std::nullopt;
      FoSubst single{{u.symbol(), bound}};
      for (auto& [k, val] : mgu) val = apply_subst(val, single);
      mgu.emplace(u.symbol(), bound);
      continue;
    }
    if (u.symbol() != v.symbol() || u.args().size() != v.args().size())
      return std::nullopt;
    for (size_t i = 0; i < u.args().size(); ++i)
      work.push_back({u.args()[i], v.args()[i]});
  }
  // Fully resolve bindings so the result is idempotent.
  for (auto& [k, val] : mgu) val = apply_subst(val, mgu);
  return mgu;
}

FoTRS FoTRS::make(std::set<std::string> variables, std::vector<FoRule> rules) {
  FoTRS trs;
  trs.variables = std::move(variables);
  trs.rules = std::move(rules);
  auto record = [&](const FoTerm& t, auto&& self) -> void {
    if (t.is_var()) return;
    auto [it, inserted] = trs.signature.emplace(t.symbol(), t.args().size());
    if (!inserted && it->second != static_cast<int>(t.args().size()))
      throw std::invalid_argument("TRS: symbol " + t.symbol() +
                                  " used with two arities");
    for (const auto& a : t.args()) self(a, self);
  };
  for (const auto& rule : trs.rules) {
    if (rule.lhs.is_var())
      throw std::invalid_argument("TRS: left-hand side may not be a variable");
    auto lhs_vars = fo_vars(rule.lhs);
    for (const auto& v : fo_vars(rule.rhs))
      if (!lhs_vars.count(v))
        throw std::invalid_argument("TRS: rhs variable " + v + " not in lhs");
    record(rule.lhs, record);
    record(rule.rhs, record);
  }
  return trs;
}

namespace {

struct FoParser {
  const std::string& src;
  size_t i = 0;
  const std::set<std::string>* vars;

  void skip() {
    while (i < src.size() && std::isspace(static_cast<unsigned char>(src[i]))) ++i;
  }

  bool eat(char c) {
    skip();
    if (i < src.size() && src[i] == c) {
      ++i;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c))
      throw std::invalid_argument(std::string("TRS parse: expected '") + c +
                                  "' at offset " + std::to_string(i));
  }

  bool eat_word(const char* w) {
    skip();
    size_t len = std::string::traits_type::length(w);
    if (src.compare(i, len, w) == 0) {
      i += len;
      return true;
    }
    return false;
  }

  std::string ident() {
    skip();
    size_t start = i;
    while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) ||
                              src[i] == '_' || src[i] == '\''))
      ++i;
    if (start == i)
      throw std::invalid_argument("TRS parse: expected identifier at offset " +
                                  std::to_string(i));
    return src.substr(start, i - start);
  }

  FoTerm term() {
    std::string name = ident();
    skip();
    if (i < src.size() && src[i] == '(') {
      ++i;
      std::vector<FoTerm> args;
      skip();
      if (!eat(')')) {
        args.push_back(term());
        while (eat(',')) args.push_back(term());
        expect(')');
      }
      return FoTerm::fun(name, std::move(args));
    }
    if (vars && vars->count(name)) return FoTerm::var(name);
    return FoTerm::fun(name);
  }

  bool at_end() {
    skip();
    return i >= src.size();
  }
};

}  // namespace

FoTRS FoTRS::parse(const std::string& text) {
  FoParser p{text, 0, nullptr};
  p.expect('(');
  if (!p.eat_word("VAR"))
    throw std::invalid_argument("TRS parse: expected (VAR ...) block");
  std::set<std::string> vars;
  while (!p.eat(')')) vars.insert(p.ident());
  p.vars = &vars;

  p.expect('(');
  if (!p.eat_word("RULES"))
    throw std::invalid_argument("TRS parse: expected (RULES ...) block");
  std::vector<FoRule> rules;
  while (!p.eat(')')) {
    FoTerm lhs = p.term();
    p.skip();
    if (!p.eat_word("->"))
      throw std::invalid_argument("TRS parse: expected '->' at offset " +
                                  std::to_string(p.i));
    FoTerm rhs = p.term();
    rules.push_back({std::move(lhs), std::move(rhs)});
  }
  if (!p.at_end())
    throw std::invalid_argument("TRS parse: trailing input at offset " +
                                std::to_string(p.i));
  return make(std::move(vars), std::move(rules));
}

std::string FoTRS::to_text() const {
  std::ostringstream out;
  out << "(VAR";
  for (const auto& v : variables) out << " " << v;
  out << ")\n(RULES\n";
  for (const auto& r : rules) out << "  " << r.str() << "\n";
  out << ")\n";
  return out.str();
}

FoTerm FoTRS::parse_term(const std::string& text) const {
  FoParser p{text, 0, &variables};
  FoTerm t = p.term();
  if (!p.at_end())
    throw std::invalid_argument("term parse: trailing input at offset " +
                                std::to_string(p.i));
  return t;
}

namespace {

FoTerm fo_replace_at(const FoTerm& t, const FoPosition& pos, size_t i,
                     const FoTerm& repl) {
  if (i == pos.size()) return repl;
  auto args = t.args();
  args[pos[i]] = fo_replace_at(args[pos[i]], pos, i + 1, repl);
  return FoTerm::fun(t.symbol(), std::move(args));
}

void collect_rewrites(const FoTRS& trs, const FoTerm& root, const FoTerm& t,
                      FoPosition& pos, std::vector<FoRewrite>& out) {
  for (size_t r = 0; r < trs.rules.size(); ++r) {
    if (auto s = match(trs.rules[r].lhs, t)) {
      out.push_back({static_cast<int>(r), pos,
                     fo_replace_at(root, pos, 0, apply_subst(trs.rules[r].rhs, *s))});
    }
  }
  if (t.is_var()) return;
  for (size_t i = 0; i < t.args().size(); ++i) {
    pos.push_back(static_cast<int>(i));
    collect_rewrites(trs, root, t.args()[i], pos, out);
    pos.pop_back();
  }
}

// Leftmost-innermost single step; nullopt when t is in normal form.
std::optional<FoTerm> innermost_step(const FoTRS& trs, const FoTerm& t) {
  if (t.is_fun()) {
    for (size_t i = 0; i < t.args().size(); ++i) {
      if (auto stepped = innermost_step(trs, t.args()[i])) {
        auto args = t.args();
        args[i] = *stepped;
        return FoTerm::fun(t.symbol(), std::move(args));
      }
    }
  }
  for (const auto& rule : trs.rules)
    if (auto s = match(rule.lhs, t)) return apply_subst(rule.rhs, *s);
  return std::nullopt;
}

}  // namespace

std::vector<FoRewrite> rewrite_step(const FoTRS& trs, const FoTerm& t) {
  std::vector<FoRewrite> out;
  FoPosition pos;
  collect_rewrites(trs, t, t, pos, out);
  return out;
}

FoNormalizeResult fo_normalize(const FoTRS& trs, const FoTerm& t,
                               std::uint64_t fuel) {
  FoTerm current = t;
  for (std::uint64_t steps = 0; steps < fuel; ++steps) {
    auto next = innermost_step(trs, current);
    if (!next) return {current, false, steps};
    current = *next;
  }
  bool normal = !innermost_step(trs, current).has_value();
  return {current, !normal, fuel};
}

}  // namespace rewlab::trs
