// Copyright (c) 2026, the rewlab authors
// Licensed under the Apache License Version 2.0.

#ifndef REWLAB_TERM_HPP
#define REWLAB_TERM_HPP

#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rewlab/type.hpp"

namespace rewlab {

/// Mixed terms: ordinary lambda syntax plus embedded types.
///
///   m ::= x | \x:T. m | m m' | a | f | A | T => m
///
/// Standard terms are the fragment without the last two forms. Terms are
/// immutable and share structure; all operations return fresh values.
class Term {
public:
  enum class Kind { Var, ConstA, ConstF, TyBase, Lam, ArrowAbs, App };

  static Term var(std::string name);
  static Term constant_a();
  static Term constant_f();
  static Term ty_base();
  static Term lam(std::string binder, Type ann, Term body);
  static Term arrow_abs(Type dom, Term body);
  static Term app(Term fun, Term arg);

  /// Structural embedding of a Type into term syntax: A becomes the
  /// embedded base type, T1->T2 becomes T1 => embed(T2).
  static Term embed(const Type& t);

  Kind kind() const;
  bool is(Kind k) const;

  const std::string& name() const;  // Var name or Lam binder
  const Type& ann() const;          // Lam annotation or ArrowAbs domain
  Term body() const;                // Lam or ArrowAbs
  Term fun() const;                 // App
  Term arg() const;                 // App

  /// Number of AST nodes (annotation types not counted).
  int size() const;

  /// Syntactic equality (binder names matter; see alpha_eq otherwise).
  bool operator==(const Term& other) const;
  bool operator!=(const Term& other) const { return !(*this == other); }

private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct Term::Node {
  Kind kind;
  std::string name;               // Var, Lam
  Type type;                      // Lam, ArrowAbs
  std::shared_ptr<const Node> a;  // Lam/ArrowAbs body, App fun
  std::shared_ptr<const Node> b;  // App arg
};

inline Term::Kind Term::kind() const { return node_->kind; }
inline bool Term::is(Kind k) const { return kind() == k; }

inline const std::string& Term::name() const {
  if (kind() != Kind::Var && kind() != Kind::Lam)
    throw std::logic_error("Term::name on node without a name");
  return node_->name;
}

inline const Type& Term::ann() const {
  if (kind() != Kind::Lam && kind() != Kind::ArrowAbs)
    throw std::logic_error("Term::ann on node without an annotation");
  return node_->type;
}

inline Term Term::body() const {
  if (kind() != Kind::Lam && kind() != Kind::ArrowAbs)
    throw std::logic_error("Term::body on node without a body");
  return Term(node_->a);
}

inline Term Term::fun() const {
  if (kind() != Kind::App) throw std::logic_error("Term::fun on non-application");
  return Term(node_->a);
}

inline Term Term::arg() const {
  if (kind() != Kind::App) throw std::logic_error("Term::arg on non-application");
  return Term(node_->b);
}

// Classification predicates, following the mixed-term grammar.
bool is_standard(const Term& m);
bool is_type(const Term& m);
bool is_mixed_value(const Term& m);
bool is_standard_value(const Term& m);

struct Classification {
  bool standard = false;
  bool type = false;
  bool mixed_value = false;
  bool standard_value = false;
};
Classification classify(const Term& m);

/// Inverse of Term::embed on the image of embed; nullopt otherwise.
std::optional<Type> as_type(const Term& m);

std::set<std::string> free_vars(const Term& m);
bool is_free_in(const std::string& name, const Term& m);
bool is_closed(const Term& m);

/// Capture-avoiding substitution [replacement/var]body. Bound variables are
/// renamed with a prime-suffix fresh-name supply when needed.
Term subst(const Term& body, const std::string& var, const Term& replacement);

/// A name based on `base` that avoids every name in `avoid`.
std::string fresh_name(const std::string& base, const std::set<std::string>& avoid);

bool alpha_eq(const Term& m1, const Term& m2);

/// Deterministic string key identifying the alpha-equivalence class
/// (bound variables rendered as de Bruijn indices). Used for dedup.
std::string alpha_key(const Term& m);

/// Ordered typing context. Each variable is bound at most once.
class TypingContext {
public:
  TypingContext() = default;
  TypingContext(std::initializer_list<std::pair<std::string, Type>> bindings);

  /// Appends a binding; throws std::invalid_argument on duplicate names.
  void push(const std::string& name, const Type& type);

  bool binds(const std::string& name) const;
  std::optional<Type> lookup(const std::string& name) const;  // innermost

  const std::vector<std::pair<std::string, Type>>& bindings() const {
    return bindings_;
  }
  bool empty() const { return bindings_.empty(); }

private:
  std::vector<std::pair<std::string, Type>> bindings_;
};

/// Simultaneous substitution of every context variable by the embedding of
/// its type: [T1/x1,...,Tn/xn]t.
Term ctx_subst(const TypingContext& ctx, const Term& t);

}  // namespace rewlab

#endif
