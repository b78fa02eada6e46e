// Copyright (c) 2026, the rewlab authors
// Licensed under the Apache License Version 2.0.

#ifndef REWLAB_TRS_HPP
#define REWLAB_TRS_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace rewlab::trs {

/// First-order terms over a fixed-arity signature.
class FoTerm {
public:
  static FoTerm var(std::string name);
  static FoTerm fun(std::string symbol, std::vector<FoTerm> args = {});

  bool is_var() const { return node_->is_var; }
  bool is_fun() const { return !node_->is_var; }
  const std::string& symbol() const { return node_->symbol; }  // var name or function symbol
  const std::vector<FoTerm>& args() const { return node_->args; }

  bool operator==(const FoTerm& other) const;
  bool operator!=(const FoTerm& other) const { return !(*this == other); }
  bool operator<(const FoTerm& other) const { return str() < other.str(); }

  int size() const;
  std::string str() const;  // prefix syntax: f(a,g(x))

private:
  struct Node {
    bool is_var;
    std::string symbol;
    std::vector<FoTerm> args;
  };
  explicit FoTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

using FoSubst = std::map<std::string, FoTerm>;
using FoPosition = std::vector<int>;

FoTerm apply_subst(const FoTerm& t, const FoSubst& s);
std::set<std::string> fo_vars(const FoTerm& t);
bool fo_occurs(const std::string& var, const FoTerm& t);

/// One-sided matching: substitution over pattern variables only. Repeated
/// pattern variables must match structurally identical subjects.
std::optional<FoSubst> match(const FoTerm& pattern, const FoTerm& subject);

/// Most general unifier (terms assumed renamed apart by the caller when that
/// matters; unify itself treats shared names as the same variable).
std::optional<FoSubst> unify(const FoTerm& s, const FoTerm& t);

struct FoRule {
  FoTerm lhs;
  FoTerm rhs;
  std::string str() const { return lhs.str() + " -> " + rhs.str(); }
};

/// An ordered list of rules over a signature inferred from the rules and
/// the declared variable names. Construction validates: left-hand sides are
/// non-variables, rhs variables appear in the lhs, and every symbol keeps
/// one arity.
struct FoTRS {
  std::vector<FoRule> rules;
  std::set<std::string> variables;
  std::map<std::string, int> signature;  // symbol -> arity

  static FoTRS make(std::set<std::string> variables, std::vector<FoRule> rules);

  /// Block syntax: (VAR x y ...) (RULES lhs -> rhs ...), prefix application
  /// with comma-separated arguments, whitespace-insensitive.
  static FoTRS parse(const std::string& text);
  std::string to_text() const;

  /// Parses a term whose variables are the TRS's declared ones.
  FoTerm parse_term(const std::string& text) const;
};

struct FoRewrite {
  int rule;
  FoPosition pos;
  FoTerm result;
};

/// Every one-step rewrite of t, all rules at all positions, outermost-first.
std::vector<FoRewrite> rewrite_step(const FoTRS& trs, const FoTerm& t);

inline constexpr std::uint64_t kFoDefaultFuel = 10000;

struct FoNormalizeResult {
  FoTerm term;
  bool fuel_exhausted;
  std::uint64_t steps;
};

/// Leftmost-innermost rewriting until normal or out of fuel.
FoNormalizeResult fo_normalize(const FoTRS& trs, const FoTerm& t,
                               std::uint64_t fuel = kFoDefaultFuel);

struct CriticalPair {
  FoTerm peak;
  FoTerm left;   // inner rule applied at the overlap position
  FoTerm right;  // outer rule applied at the root
  int outer_rule;
  int inner_rule;
  FoPosition pos;
  std::string describe() const;
};

/// All critical pairs from overlaps at non-variable positions of renamed-
/// apart rule pairs, excluding the trivial root overlap of a rule with
/// itself.
std::vector<CriticalPair> critical_pairs(const FoTRS& trs);

struct LpoResult {
  bool found = false;
  std::vector<std::string> precedence;  // greatest symbol first
};

/// Strict lexicographic path order check under a total precedence.
bool lpo_greater(const FoTerm& s, const FoTerm& t,
                 const std::map<std::string, int>& precedence);

/// Exhaustive search over total symbol precedences for one that orients
/// every rule strictly. Signatures beyond 8 symbols report unknown.
LpoResult lpo_terminates(const FoTRS& trs);

enum class ConfluenceVerdict { Confluent, NotConfluent, Unknown };

struct ConfluenceResult {
  ConfluenceVerdict verdict;
  LpoResult termination;
  std::vector<CriticalPair> pairs;
  std::optional<std::pair<FoTerm, FoTerm>> witness;  // unjoinable reducts
  std::optional<std::vector<FoTerm>> loop;           // term recurrence, if found
};

/// Newman-based decision: with an LPO termination proof, joinability of all
/// critical pairs decides confluence either way; otherwise the result is
/// unknown (with a non-termination loop witness when one is found).
ConfluenceResult confluence(const FoTRS& trs,
                            std::uint64_t joinability_fuel = kFoDefaultFuel);

/// Searches for a derivation that revisits a term, starting from each rule's
/// left-hand side. Returns the cyclic segment (first == last) if found.
std::optional<std::vector<FoTerm>> find_loop(const FoTRS& trs, int max_depth = 8,
                                             std::size_t history_window = 1000);

}  // namespace rewlab::trs

#endif
