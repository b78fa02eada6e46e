// Copyright (c) 2026, the rewlab authors
// Licensed under the Apache License Version 2.0.

#include "rewlab/type.hpp"

#include <algorithm>
#include <stdexcept>

namespace rewlab {

Type Type::arrow(Type dom, Type cod) {
  Type t;
  t.node_ = std::make_shared<const Node>(Node{std::move(dom), std::move(cod)});
  return t;
}

const Type& Type::dom() const {
  if (!node_) throw std::logic_error("Type::dom on base type");
  return node_->dom;
}

const Type& Type::cod() const {
  if (!node_) throw std::logic_error("Type::cod on base type");
  return node_->cod;
}

int Type::depth() const {
  if (is_base()) return 0;
  return 1 + std::max(node_->dom.depth(), node_->cod.depth());
}

bool Type::operator==(const Type& other) const {
  if (node_ == other.node_) return true;
  if (is_base() || other.is_base()) return false;
  return node_->dom == other.node_->dom && node_->cod == other.node_->cod;
}

std::string Type::str() const {
  if (is_base()) return "A";
  std::string lhs = dom().str();
  if (dom().is_arrow()) lhs = "(" + lhs + ")";
  return lhs + "->" + cod().str();
}

}  // namespace rewlab
