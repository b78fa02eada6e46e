// Copyright (c) 2026, the rewlab authors
// Licensed under the Apache License Version 2.0.

#include "rewlab/uniform.hpp"

#include <algorithm>
#include <stdexcept>

namespace rewlab::trs {

const FoTRS& uniform_stc_abstract() {
  static const FoTRS trs = FoTRS::parse(R"((VAR t1 t2 t3 t)
(RULES
  S(t1,t2,t3) -> kind(t1,kind(t2,kind(t3,arrow(arrow(t1,arrow(t2,t3)),arrow(arrow(t1,t2),arrow(t1,t3))))))
  K(t1,t2) -> kind(t1,kind(t2,arrow(t1,arrow(t2,t1))))
  app(arrow(t1,t2),t1) -> kind(t1,t2)
  kind(arrow(t1,t2),t) -> kind(t1,kind(t2,t))
  kind(A,t) -> t
))");
  return trs;
}

const FoTRS& uniform_stc_extended() {
  static const FoTRS trs = FoTRS::parse(R"((VAR a b c A B C D)
(RULES
  S(A,B,C) -> kind(A,kind(B,kind(C,
              arrow(arrow(arrow(A,arrow(B,C)),arrow(A,B)),arrow(A,C)))))
  K(A,B) -> kind(A,kind(B,arrow(A,arrow(B,A))))
  app(arrow(A,b),A) -> kind(A,b)
  kind(base,a) -> a
  kind(arrow(A,B),a) -> kind(A, kind(B, a))
  kind(A,kind(A,a)) -> kind(A,a)
  kind(A,kind(B,a)) -> kind(B,kind(A,a))
  app(kind(A,b),c) -> kind(A,app(b,c))
  app(c,kind(A,b)) -> kind(A,app(c,b))
  arrow(kind(A,b),c) -> kind(A,arrow(b,c))
  arrow(c,kind(A,b)) -> kind(A,arrow(c,b))
  kind(kind(a,b),c) -> kind(a,kind(b,c))
))");
  return trs;
}

bool uniform_is_value(const FoTerm& t) {
  if (t.is_var()) return false;
  const auto& sym = t.symbol();
  return (sym == "S" && t.args().size() == 3) ||
         (sym == "K" && t.args().size() == 2) ||
         (sym == "A" && t.args().empty()) ||
         (sym == "arrow" && t.args().size() == 2);
}

namespace {

bool is_app(const FoTerm& t) {
  return t.is_fun() && t.symbol() == "app" && t.args().size() == 2;
}

bool is_comb(const FoTerm& t, const char* sym, size_t arity) {
  return t.is_fun() && t.symbol() == sym && t.args().size() == arity;
}

}  // namespace

std::optional<FoTerm> uniform_cbv_step(const FoTerm& t) {
  if (!is_app(t)) return std::nullopt;
  const FoTerm& l = t.args()[0];
  const FoTerm& r = t.args()[1];
  // K<t1,t2> u u' -> u
  if (is_app(l) && is_comb(l.args()[0], "K", 2) && uniform_is_value(l.args()[1]) &&
      uniform_is_value(r))
    return l.args()[1];
  // S<t1,t2,t3> u u' u'' -> u u'' (u' u'')
  if (is_app(l) && is_app(l.args()[0]) && is_comb(l.args()[0].args()[0], "S", 3) &&
      uniform_is_value(l.args()[0].args()[1]) && uniform_is_value(l.args()[1]) &&
      uniform_is_value(r)) {
    const FoTerm& u = l.args()[0].args()[1];
    const FoTerm& u1 = l.args()[1];
    return FoTerm::fun("app", {FoTerm::fun("app", {u, r}),
                               FoTerm::fun("app", {u1, r})});
  }
  if (auto s = uniform_cbv_step(l)) return FoTerm::fun("app", {*s, r});
  if (uniform_is_value(l))
    if (auto s = uniform_cbv_step(r)) return FoTerm::fun("app", {l, *s});
  return std::nullopt;
}

bool uniform_kindable(const FoTerm& u, std::uint64_t fuel) {
  auto r = fo_normalize(uniform_stc_abstract(),
                        FoTerm::fun("kind", {u, FoTerm::fun("A")}), fuel);
  return !r.fuel_exhausted && r.term == FoTerm::fun("A");
}

std::optional<FoTerm> uniform_typable(const FoTerm& t, std::uint64_t fuel) {
  auto r = fo_normalize(uniform_stc_abstract(), t, fuel);
  if (r.fuel_exhausted) return std::nullopt;
  if (!uniform_is_value(r.term) || !uniform_kindable(r.term, fuel))
    return std::nullopt;
  return r.term;
}

UniformPreservationReport uniform_preservation_check(const FoTerm& t,
                                                     std::uint64_t fuel) {
  auto type = uniform_typable(t, fuel);
  if (!type)
    throw std::invalid_argument("uniform_preservation_check: term not typable");
  UniformPreservationReport report{true, 0};
  FoTerm current = t;
  for (std::uint64_t i = 0; i < fuel; ++i) {
    auto next = uniform_cbv_step(current);
    if (!next) break;
    ++report.c_steps_checked;
    auto nf = fo_normalize(uniform_stc_abstract(), *next, fuel);
    if (nf.fuel_exhausted || nf.term != *type) {
      report.ok = false;
      return report;
    }
    current = *next;
  }
  return report;
}

std::vector<FoTerm> enum_uniform_terms(int max_size, int type_depth) {
  std::vector<FoTerm> types{FoTerm::fun("A")};
  for (int d = 1; d <= type_depth; ++d) {
    std::vector<FoTerm> next = types;
    for (const auto& l : types)
      for (const auto& r : types) {
        FoTerm arrow = FoTerm::fun("arrow", {l, r});
        if (std::find(next.begin(), next.end(), arrow) == next.end())
          next.push_back(arrow);
      }
    types = std::move(next);
  }

  std::vector<std::vector<FoTerm>> by_size(max_size + 1);
  if (max_size >= 1) {
    by_size[1].push_back(FoTerm::fun("A"));
    for (const auto& t1 : types)
      for (const auto& t2 : types)
        by_size[1].push_back(FoTerm::fun("K", {t1, t2}));
    for (const auto& t1 : types)
      for (const auto& t2 : types)
        for (const auto& t3 : types)
          by_size[1].push_back(FoTerm::fun("S", {t1, t2, t3}));
  }
  for (int n = 3; n <= max_size; ++n)
    for (int ls = 1; ls + 2 <= n; ++ls)
      for (const auto& l : by_size[ls])
        for (const auto& r : by_size[n - 1 - ls])
          by_size[n].push_back(FoTerm::fun("app", {l, r}));

  std::vector<FoTerm> out;
  for (const auto& bucket : by_size)
    out.insert(out.end(), bucket.begin(), bucket.end());
  return out;
}

}  // namespace rewlab::trs
