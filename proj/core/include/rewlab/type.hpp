// Copyright (c) 2026, the rewlab authors
// Licensed under the Apache License Version 2.0.

#ifndef REWLAB_TYPE_HPP
#define REWLAB_TYPE_HPP

#include <memory>
#include <string>

namespace rewlab {

/// Simple types: the base type A and arrow types T1 -> T2.
///
/// Values are immutable and share structure; copying is cheap. A
/// default-constructed Type is the base type.
class Type {
public:
  Type() = default;  // base type A

  static Type base() { return Type(); }
  static Type arrow(Type dom, Type cod);

  bool is_base() const { return node_ == nullptr; }
  bool is_arrow() const { return node_ != nullptr; }

  const Type& dom() const;  // requires is_arrow()
  const Type& cod() const;  // requires is_arrow()

  /// Arrow-nesting depth: depth(A) = 0, depth(T1->T2) = 1 + max of children.
  int depth() const;

  /// Structural (syntactic) equality; no subtyping.
  bool operator==(const Type& other) const;
  bool operator!=(const Type& other) const { return !(*this == other); }

  /// Canonical surface syntax, right-associative: "A", "A->A", "(A->A)->A".
  std::string str() const;

private:
  struct Node;
  std::shared_ptr<const Node> node_;
};

struct Type::Node {
  Type dom;
  Type cod;
};

}  // namespace rewlab

#endif
