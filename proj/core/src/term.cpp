// Copyright (c) 2026, the rewlab authors
// Licensed under the Apache License Version 2.0.

#include "rewlab/term.hpp"

#include <map>
#include <stdexcept>

namespace rewlab {

Term Term::var(std::string name) {
  return Term(std::make_shared<const Node>(
      Node{Kind::Var, std::move(name), {}, nullptr, nullptr}));
}

Term Term::constant_a() {
  static const auto node = std::make_shared<const Node>(
      Node{Kind::ConstA, {}, {}, nullptr, nullptr});
  return Term(node);
}

Term Term::constant_f() {
  static const auto node = std::make_shared<const Node>(
      Node{Kind::ConstF, {}, {}, nullptr, nullptr});
  return Term(node);
}

Term Term::ty_base() {
  static const auto node = std::make_shared<const Node>(
      Node{Kind::TyBase, {}, {}, nullptr, nullptr});
  return Term(node);
}

Term Term::lam(std::string binder, Type ann, Term body) {
  return Term(std::make_shared<const Node>(
      Node{Kind::Lam, std::move(binder), std::move(ann), body.node_, nullptr}));
}

Term Term::arrow_abs(Type dom, Term body) {
  return Term(std::make_shared<const Node>(
      Node{Kind::ArrowAbs, {}, std::move(dom), body.node_, nullptr}));
}

Term Term::app(Term fun, Term arg) {
  return Term(std::make_shared<const Node>(
      Node{Kind::App, {}, {}, fun.node_, arg.node_}));
}

Term Term::embed(const Type& t) {
  if (t.is_base()) return ty_base();
  return arrow_abs(t.dom(), embed(t.cod()));
}

bool Term::operator==(const Term& other) const {
  if (node_ == other.node_) return true;
  if (kind() != other.kind()) return false;
  switch (kind()) {
    case Kind::Var:
      return node_->name == other.node_->name;
    case Kind::ConstA:
    case Kind::ConstF:
    case Kind::TyBase:
      return true;
    case Kind::Lam:
      return node_->name == other.node_->name && node_->type == other.node_->type &&
             body() == other.body();
    case Kind::ArrowAbs:
      return node_->type == other.node_->type && body() == other.body();
    case Kind::App:
      return fun() == other.fun() && arg() == other.arg();
  }
  return false;
}

int Term::size() const {
  switch (kind()) {
    case Kind::Var:
    case Kind::ConstA:
    case Kind::ConstF:
    case Kind::TyBase:
      return 1;
    case Kind::Lam:
    case Kind::ArrowAbs:
      return 1 + body().size();
    case Kind::App:
      return 1 + fun().size() + arg().size();
  }
  return 0;
}

bool is_standard(const Term& m) {
  switch (m.kind()) {
    case Term::Kind::TyBase:
    case Term::Kind::ArrowAbs:
      return false;
    case Term::Kind::Lam:
      return is_standard(m.body());
    case Term::Kind::App:
      return is_standard(m.fun()) && is_standard(m.arg());
    default:
      return true;
  }
}

bool is_type(const Term& m) {
  if (m.is(Term::Kind::TyBase)) return true;
  return m.is(Term::Kind::ArrowAbs) && is_type(m.body());
}

bool is_mixed_value(const Term& m) {
  switch (m.kind()) {
    case Term::Kind::Lam:
    case Term::Kind::ArrowAbs:
    case Term::Kind::TyBase:
    case Term::Kind::ConstA:
    case Term::Kind::ConstF:
      return true;
    default:
      return false;
  }
}

bool is_standard_value(const Term& m) {
  switch (m.kind()) {
    case Term::Kind::ConstA:
    case Term::Kind::ConstF:
      return true;
    case Term::Kind::Lam:
      return is_standard(m.body());
    default:
      return false;
  }
}

Classification classify(const Term& m) {
  return Classification{is_standard(m), is_type(m), is_mixed_value(m),
                        is_standard_value(m)};
}

std::optional<Type> as_type(const Term& m) {
  if (m.is(Term::Kind::TyBase)) return Type::base();
  if (m.is(Term::Kind::ArrowAbs)) {
    auto cod = as_type(m.body());
    if (!cod) return std::nullopt;
    return Type::arrow(m.ann(), *cod);
  }
  return std::nullopt;
}

namespace {

void collect_free(const Term& m, std::vector<std::string>& bound,
                  std::set<std::string>& out) {
  switch (m.kind()) {
    case Term::Kind::Var:
      for (auto it = bound.rbegin(); it != bound.rend(); ++it)
        if (*it == m.name()) return;
      out.insert(m.name());
      return;
    case Term::Kind::Lam:
      bound.push_back(m.name());
      collect_free(m.body(), bound, out);
      bound.pop_back();
      return;
    case Term::Kind::ArrowAbs:
      collect_free(m.body(), bound, out);
      return;
    case Term::Kind::App:
      collect_free(m.fun(), bound, out);
      collect_free(m.arg(), bound, out);
      return;
    default:
      return;
  }
}

}  // namespace

std::set<std::string> free_vars(const Term& m) {
  std::set<std::string> out;
  std::vector<std::string> bound;
  collect_free(m, bound, out);
  return out;
}

bool is_free_in(const std::string& name, const Term& m) {
  switch (m.kind()) {
    case Term::Kind::Var:
      return m.name() == name;
    case Term::Kind::Lam:
      return m.name() != name && is_free_in(name, m.body());
    case Term::Kind::ArrowAbs:
      return is_free_in(name, m.body());
    case Term::Kind::App:
      return is_free_in(name, m.fun()) || is_free_in(name, m.arg());
    default:
      return false;
  }
}

bool is_closed(const Term& m) { return free_vars(m).empty(); }

std::string fresh_name(const std::string& base, const std::set<std::string>& avoid) {
  std::string candidate = base;
  while (avoid.count(candidate)) candidate += "'";
  return candidate;
}

Term subst(const Term& body, const std::string& var, const Term& replacement) {
  switch (body.kind()) {
    case Term::Kind::Var:
      return body.name() == var ? replacement : body;
    case Term::Kind::ConstA:
    case Term::Kind::ConstF:
    case Term::Kind::TyBase:
      return body;
    case Term::Kind::App:
      return Term::app(subst(body.fun(), var, replacement),
                       subst(body.arg(), var, replacement));
    case Term::Kind::ArrowAbs:
      return Term::arrow_abs(body.ann(), subst(body.body(), var, replacement));
    case Term::Kind::Lam: {
      if (body.name() == var) return body;  // shadowed
      if (!is_free_in(var, body.body())) return body;
      if (is_free_in(body.name(), replacement)) {
        std::set<std::string> avoid = free_vars(replacement);
        auto body_fv = free_vars(body.body());
        avoid.insert(body_fv.begin(), body_fv.end());
        avoid.insert(var);
        std::string renamed = fresh_name(body.name(), avoid);
        Term new_body = subst(body.body(), body.name(), Term::var(renamed));
        return Term::lam(renamed, body.ann(), subst(new_body, var, replacement));
      }
      return Term::lam(body.name(), body.ann(), subst(body.body(), var, replacement));
    }
  }
  throw std::logic_error("subst: unreachable");
}

namespace {

bool alpha_eq_rec(const Term& m1, const Term& m2,
                  std::vector<std::pair<std::string, std::string>>& env) {
  if (m1.kind() != m2.kind()) return false;
  switch (m1.kind()) {
    case Term::Kind::Var: {
      for (auto it = env.rbegin(); it != env.rend(); ++it) {
        bool hit1 = it->first == m1.name();
        bool hit2 = it->second == m2.name();
        if (hit1 || hit2) return hit1 && hit2;
      }
      return m1.name() == m2.name();  // both free
    }
    case Term::Kind::ConstA:
    case Term::Kind::ConstF:
    case Term::Kind::TyBase:
      return true;
    case Term::Kind::Lam: {
      if (m1.ann() != m2.ann()) return false;
      env.emplace_back(m1.name(), m2.name());
      bool ok = alpha_eq_rec(m1.body(), m2.body(), env);
      env.pop_back();
      return ok;
    }
    case Term::Kind::ArrowAbs:
      return m1.ann() == m2.ann() && alpha_eq_rec(m1.body(), m2.body(), env);
    case Term::Kind::App:
      return alpha_eq_rec(m1.fun(), m2.fun(), env) &&
             alpha_eq_rec(m1.arg(), m2.arg(), env);
  }
  return false;
}

void alpha_key_rec(const Term& m, std::vector<std::string>& binders,
                   std::string& out) {
  switch (m.kind()) {
    case Term::Kind::Var: {
      for (size_t i = binders.size(); i-- > 0;) {
        if (binders[i] == m.name()) {
          out += '#';
          out += std::to_string(binders.size() - 1 - i);
          return;
        }
      }
      out += '$';
      out += m.name();
      return;
    }
    case Term::Kind::ConstA: out += 'a'; return;
    case Term::Kind::ConstF: out += 'f'; return;
    case Term::Kind::TyBase: out += 'A'; return;
    case Term::Kind::Lam:
      out += 'L';
      out += m.ann().str();
      out += '.';
      binders.push_back(m.name());
      alpha_key_rec(m.body(), binders, out);
      binders.pop_back();
      return;
    case Term::Kind::ArrowAbs:
      out += 'R';
      out += m.ann().str();
      out += '.';
      alpha_key_rec(m.body(), binders, out);
      return;
    case Term::Kind::App:
      out += '(';
      alpha_key_rec(m.fun(), binders, out);
      out += ' ';
      alpha_key_rec(m.arg(), binders, out);
      out += ')';
      return;
  }
}

}  // namespace

bool alpha_eq(const Term& m1, const Term& m2) {
  if (m1 == m2) return true;
  std::vector<std::pair<std::string, std::string>> env;
  return alpha_eq_rec(m1, m2, env);
}

std::string alpha_key(const Term& m) {
  std::string out;
  out.reserve(64);
  std::vector<std::string> binders;
  alpha_key_rec(m, binders, out);
  return out;
}

TypingContext::TypingContext(
    std::initializer_list<std::pair<std::string, Type>> bindings) {
  for (const auto& [name, type] : bindings) push(name, type);
}

void TypingContext::push(const std::string& name, const Type& type) {
  if (binds(name))
    throw std::invalid_argument("TypingContext: duplicate binding for " + name);
  bindings_.emplace_back(name, type);
}

bool TypingContext::binds(const std::string& name) const {
  for (const auto& [n, t] : bindings_)
    if (n == name) return true;
  return false;
}

std::optional<Type> TypingContext::lookup(const std::string& name) const {
  for (auto it = bindings_.rbegin(); it != bindings_.rend(); ++it)
    if (it->first == name) return it->second;
  return std::nullopt;
}

namespace {

// Replacements are embedded types, hence closed: binders only shadow.
Term ctx_subst_rec(const Term& t, const std::map<std::string, Term>& map) {
  switch (t.kind()) {
    case Term::Kind::Var: {
      auto it = map.find(t.name());
      return it == map.end() ? t : it->second;
    }
    case Term::Kind::Lam: {
      if (map.count(t.name())) {
        auto inner = map;
        inner.erase(t.name());
        return Term::lam(t.name(), t.ann(), ctx_subst_rec(t.body(), inner));
      }
      return Term::lam(t.name(), t.ann(), ctx_subst_rec(t.body(), map));
    }
    case Term::Kind::ArrowAbs:
      return Term::arrow_abs(t.ann(), ctx_subst_rec(t.body(), map));
    case Term::Kind::App:
      return Term::app(ctx_subst_rec(t.fun(), map), ctx_subst_rec(t.arg(), map));
    default:
      return t;
  }
}

}  // namespace

Term ctx_subst(const TypingContext& ctx, const Term& t) {
  if (ctx.empty()) return t;
  std::map<std::string, Term> map;
  for (const auto& [name, type] : ctx.bindings())
    map.emplace(name, Term::embed(type));
  return ctx_subst_rec(t, map);
}

}  // namespace rewlab
