// Copyright (c) 2026, the rewlab authors
// Licensed under the Apache License Version 2.0.
//
// Command-line front end: typing as abstract reduction, reduction traces
// and graphs, enumeration-backed meta-theory checks, finite-ARS condition
// reports, and the first-order rewriting engine.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "rewlab/ars.hpp"
#include "rewlab/enumerate.hpp"
#include "rewlab/generalized.hpp"
#include "rewlab/reduction.hpp"
#include "rewlab/safety.hpp"
#include "rewlab/syntax.hpp"
#include "rewlab/trs.hpp"
#include "rewlab/typing.hpp"
#include "rewlab/uniform.hpp"

namespace {

using nlohmann::json;
using namespace rewlab;

int g_exit = 0;

void fail(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  g_exit = 1;
}

Relation parse_relation(const std::string& name) {
  auto rel = relation_from_name(name);
  if (!rel) throw CLI::ValidationError("--rel", "unknown relation " + name);
  return *rel;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void cmd_type(const std::string& input, bool as_json) {
  Term t = parse_term(input);
  auto ty = typable(t);
  if (as_json) {
    json j{{"term", print_term(t)},
           {"typable", ty.has_value()},
           {"type", ty ? json(ty->str()) : json(nullptr)}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << (ty ? ty->str() : "untypable") << "\n";
  }
}

void cmd_infer(const std::string& input, bool as_json) {
  Term t = parse_term(input);
  auto ty = infer(TypingContext{}, t);
  if (as_json) {
    json j{{"term", print_term(t)},
           {"typable", ty.has_value()},
           {"type", ty ? json(ty->str()) : json(nullptr)}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << (ty ? ty->str() : "untypable") << "\n";
  }
}

void cmd_reduce(const std::string& input, const std::string& rel_name, int fuel,
                bool as_json) {
  Term t = parse_term(input);
  RunResult r = run(t, parse_relation(rel_name), fuel);
  if (as_json) {
    json j{{"start", print_term(t)},
           {"trace", json::parse(trace_json(r))},
           {"normal_form", r.reached_normal_form}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << print_term(t) << "\n";
    for (const auto& s : r.steps) {
      std::cout << "  --" << rule_tag_name(s.occ.tag) << "@[";
      for (size_t i = 0; i < s.occ.pos.size(); ++i)
        std::cout << (i ? "," : "") << s.occ.pos[i];
      std::cout << "]--> " << print_term(s.term) << "\n";
    }
    if (r.reached_normal_form)
      std::cout << "normal form after " << r.steps.size() << " step(s)\n";
    else
      std::cout << "fuel exhausted after " << r.steps.size() << " step(s)\n";
  }
  if (!r.reached_normal_form) g_exit = 1;
}

void cmd_graph(const std::string& input, const std::string& rel_name, int cap,
               bool dot, bool as_json) {
  Term t = parse_term(input);
  ReductionGraph g = build_graph(t, parse_relation(rel_name), cap);
  if (dot) {
    std::cout << graph_dot(g);
  } else if (as_json) {
    json nodes = json::array();
    for (const auto& n : g.nodes) nodes.push_back(print_term(n));
    json edges = json::array();
    for (const auto& e : g.edges)
      edges.push_back({{"from", e.from},
                       {"rule", rule_tag_name(e.occ.tag)},
                       {"position", e.occ.pos},
                       {"to", e.to}});
    json j{{"relation", rel_name},
           {"nodes", nodes},
           {"edges", edges},
           {"truncated", g.truncated}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << g.nodes.size() << " node(s), " << g.edges.size() << " edge(s)"
              << (g.truncated ? " (truncated)" : "") << "\n";
    for (int i : g.normal_form_indices())
      std::cout << "normal form: " << print_term(g.nodes[i]) << "\n";
  }
  if (g.truncated) g_exit = 1;
}

void cmd_gentype(const std::string& input, int fuel, int cap, bool as_json) {
  Term t = parse_term(input);
  auto r = generalized_typable(t, {fuel, cap});
  if (as_json) {
    json j{{"term", print_term(t)}, {"explored", r.explored}};
    switch (r.status) {
      case GenTypableResult::Status::Found: {
        RunResult replayed = replay(t, [&] {
          std::vector<RedexOccurrence> occs;
          for (const auto& s : r.witness) occs.push_back(s.occ);
          return occs;
        }());
        j["result"] = "found";
        j["type"] = r.type->str();
        j["trace"] = json::parse(trace_json(replayed));
        break;
      }
      case GenTypableResult::Status::NotFoundComplete:
        j["result"] = "not-generalized-typable";
        break;
      case GenTypableResult::Status::NotFoundBounded:
        j["result"] = "not-found-within-bounds";
        break;
    }
    std::cout << j.dump() << "\n";
  } else {
    switch (r.status) {
      case GenTypableResult::Status::Found:
        std::cout << r.type->str() << "\n";
        std::cout << print_term(t) << "\n";
        for (const auto& s : r.witness)
          std::cout << "  --" << rule_tag_name(s.occ.tag) << "--> "
                    << print_term(s.term) << "\n";
        break;
      case GenTypableResult::Status::NotFoundComplete:
        std::cout << "not generalized typable (ca-graph exhausted, "
                  << r.explored << " terms)\n";
        break;
      case GenTypableResult::Status::NotFoundBounded:
        std::cout << "not found within bounds (" << r.explored << " terms)\n";
        break;
    }
  }
  if (r.status == GenTypableResult::Status::NotFoundBounded) g_exit = 1;
}

void report_out(const std::string& name, const OracleReport& report, bool as_json) {
  if (as_json) {
    json j = json::parse(report.json());
    j["check"] = name;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << name << ": checked " << report.checked << ", violations "
              << report.violations.size() << ", truncated " << report.truncated
              << "\n";
    for (const auto& v : report.violations) std::cout << "  violation: " << v << "\n";
  }
  if (!report.ok() || report.truncated) g_exit = 1;
}

void cmd_check(const std::string& which, int size, int type_depth, bool as_json) {
  if (which == "correspondence") {
    OracleReport report;
    for_each_closed_term(size, type_depth, [&](const Term& t) {
      ++report.checked;
      if (!correspondence_check(TypingContext{}, t))
        report.violations.push_back(print_term(t));
    });
    report_out("correspondence", report, as_json);
    return;
  }
  std::vector<Term> corpus = enum_closed_terms(size, type_depth);
  if (which == "preservation") {
    report_out("preservation(b)", preservation_oracle(corpus, Relation::b), as_json);
    report_out("preservation(c)", preservation_oracle(corpus, Relation::c), as_json);
  } else if (which == "peaks") {
    report_out("peaks", peak_completion_oracle(corpus), as_json);
  } else if (which == "progress") {
    OracleReport report;
    for (const auto& t : corpus) {
      if (!typable(t)) continue;
      ++report.checked;
      if (!progress_check(t)) report.violations.push_back(print_term(t));
    }
    report_out("progress", report, as_json);
  } else if (which == "safety") {
    OracleReport report;
    for (const auto& t : corpus) {
      if (!typable(t)) continue;
      ++report.checked;
      auto outcome = type_safety_run(t);
      if (outcome.kind == SafetyOutcome::Kind::Stuck)
        report.violations.push_back(print_term(t) + " sticks at " +
                                    print_term(outcome.final_term));
      else if (outcome.kind == SafetyOutcome::Kind::FuelExhausted)
        ++report.truncated;
    }
    report_out("safety", report, as_json);
  } else if (which == "confluence") {
    OracleReport report;
    for (const auto& t : corpus) {
      if (!typable(t)) continue;
      ++report.checked;
      ReductionGraph g = build_graph(t, Relation::ba);
      if (g.truncated) {
        ++report.truncated;
        continue;
      }
      if (confluence_oracle(g) != ConfluenceOracleVerdict::Confluent)
        report.violations.push_back(print_term(t));
    }
    report_out("confluence", report, as_json);
  } else if (which == "quasistuck") {
    OracleReport report;
    for (const auto& t : corpus) {
      for (const auto& m : a_closure(t)) {
        ++report.checked;
        bool qs = is_quasi_stuck(m);
        if (qs && !redexes(m, Relation::c).empty())
          report.violations.push_back("c-redex in quasi-stuck " + print_term(m));
        if (is_standard(m) && is_closed(m) && redexes(m, Relation::c).empty() &&
            !is_quasi_stuck(m))
          report.violations.push_back("c-normal non-quasi-stuck " + print_term(m));
        if (qs)
          for (const auto& next : successors(m, Relation::a)) {
            if (!is_quasi_stuck(next))
              report.violations.push_back("a-step leaves quasi-stuck set: " +
                                          print_term(m));
            if (is_mixed_value(m) != is_mixed_value(next))
              report.violations.push_back("a-step flips value-ness: " +
                                          print_term(m));
          }
      }
    }
    report_out("quasistuck", report, as_json);
  } else {
    throw CLI::ValidationError("check", "unknown check " + which);
  }
}

json preservation_report_json(const ars::PreservationConditionsReport& r) {
  return json{{"cond1_s_normal", r.cond1_s_normal},
              {"cond2_a_confluent", r.cond2_a_confluent},
              {"cond3_completion", r.cond3_completion},
              {"cond4_normal_forms", r.cond4_normal_forms},
              {"conclusion", r.conclusion}};
}

json union_confluence_report_json(const ars::UnionConfluenceReport& r) {
  return json{{"cond1_a_terminating", r.cond1_a_terminating},
              {"cond2_a_confluent", r.cond2_a_confluent},
              {"cond3_completion", r.cond3_completion},
              {"cond3_strong", r.cond3_strong},
              {"cond4_normal_forms", r.cond4_normal_forms},
              {"union_confluent", r.union_confluent}};
}

void cmd_ars(const std::string& what, const std::string& file, bool dot,
             bool as_json) {
  ars::FiniteARS g;
  if (what == "example3") g = ars::example_3();
  else if (what == "example10") g = ars::example_10();
  else g = ars::parse_ars(read_file(file));

  if (dot) {
    std::cout << ars::to_dot(g);
    return;
  }

  std::set<int> a_normal;
  for (int n : g.nodes) {
    bool normal = true;
    for (const auto& [s, d] : g.edges_a)
      if (s == n) normal = false;
    if (normal) a_normal.insert(n);
  }
  auto preservation = ars::check_preservation_conditions(g, a_normal);
  auto union_conf = ars::check_union_confluence_conditions(g);

  if (as_json) {
    json j{{"nodes", g.nodes.size()},
           {"a_deterministic", ars::is_deterministic(g, ars::Rel::a)},
           {"a_terminating", ars::is_terminating(g, ars::Rel::a)},
           {"b_terminating", ars::is_terminating(g, ars::Rel::b)},
           {"a_confluent", ars::is_confluent(g, ars::Rel::a)},
           {"b_confluent", ars::is_confluent(g, ars::Rel::b)},
           {"union_confluent", ars::is_confluent(g, ars::Rel::ab)},
           {"preservation_conditions_with_a_normal_S", preservation_report_json(preservation)},
           {"union_confluence_conditions", union_confluence_report_json(union_conf)}};
    std::cout << j.dump() << "\n";
  } else {
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    std::cout << "nodes: " << g.nodes.size() << ", a-edges: " << g.edges_a.size()
              << ", b-edges: " << g.edges_b.size() << "\n";
    std::cout << "a deterministic: " << yn(ars::is_deterministic(g, ars::Rel::a))
              << ", a terminating: " << yn(ars::is_terminating(g, ars::Rel::a))
              << ", b terminating: " << yn(ars::is_terminating(g, ars::Rel::b))
              << "\n";
    std::cout << "a confluent: " << yn(ars::is_confluent(g, ars::Rel::a))
              << ", b confluent: " << yn(ars::is_confluent(g, ars::Rel::b))
              << ", union confluent: " << yn(ars::is_confluent(g, ars::Rel::ab))
              << "\n";
    std::cout << "union-confluence conditions: termination " << yn(union_conf.cond1_a_terminating)
              << ", a-confluence " << yn(union_conf.cond2_a_confluent) << ", completion "
              << yn(union_conf.cond3_completion) << " (strong " << yn(union_conf.cond3_strong)
              << "), normal-forms " << yn(union_conf.cond4_normal_forms) << "\n";
    std::cout << "preservation conditions with S = a-normal nodes: (1) "
              << yn(preservation.cond1_s_normal) << " (2) " << yn(preservation.cond2_a_confluent)
              << " (3) " << yn(preservation.cond3_completion) << " (4) "
              << yn(preservation.cond4_normal_forms) << ", conclusion "
              << yn(preservation.conclusion) << "\n";
  }
}

const trs::FoTRS& resolve_trs(const std::string& name, trs::FoTRS& storage) {
  if (name == "builtin:uniform") return trs::uniform_stc_abstract();
  if (name == "builtin:extended") return trs::uniform_stc_extended();
  storage = trs::FoTRS::parse(read_file(name));
  return storage;
}

void cmd_trs(const std::string& sub, const std::string& system,
             const std::string& term_text, bool as_json) {
  trs::FoTRS storage;
  const trs::FoTRS& system_trs = resolve_trs(system, storage);
  if (sub == "normalize") {
    if (term_text.empty()) throw CLI::ValidationError("trs", "normalize needs a term");
    auto t = system_trs.parse_term(term_text);
    auto r = fo_normalize(system_trs, t);
    if (as_json) {
      json j{{"input", t.str()},
             {"normal_form", r.term.str()},
             {"steps", r.steps},
             {"fuel_exhausted", r.fuel_exhausted}};
      std::cout << j.dump() << "\n";
    } else {
      std::cout << r.term.str() << "\n";
      if (r.fuel_exhausted) std::cout << "(fuel exhausted)\n";
    }
    if (r.fuel_exhausted) g_exit = 1;
  } else if (sub == "cps") {
    auto pairs = trs::critical_pairs(system_trs);
    if (as_json) {
      json arr = json::array();
      for (const auto& cp : pairs)
        arr.push_back({{"peak", cp.peak.str()},
                       {"left", cp.left.str()},
                       {"right", cp.right.str()},
                       {"outer_rule", cp.outer_rule + 1},
                       {"inner_rule", cp.inner_rule + 1}});
      std::cout << json{{"critical_pairs", arr}}.dump() << "\n";
    } else {
      std::cout << pairs.size() << " critical pair(s)\n";
      for (const auto& cp : pairs) std::cout << "  " << cp.describe() << "\n";
    }
  } else if (sub == "termination") {
    auto r = trs::lpo_terminates(system_trs);
    if (as_json) {
      json j{{"termination", r.found ? "yes" : "unknown"},
             {"precedence", r.precedence}};
      std::cout << j.dump() << "\n";
    } else if (r.found) {
      std::cout << "terminating (lexicographic path order)\nprecedence:";
      for (const auto& s : r.precedence) std::cout << " " << s;
      std::cout << "\n";
    } else {
      std::cout << "unknown\n";
    }
  } else if (sub == "confluence") {
    auto r = trs::confluence(system_trs);
    std::string verdict = r.verdict == trs::ConfluenceVerdict::Confluent
                              ? "confluent"
                              : r.verdict == trs::ConfluenceVerdict::NotConfluent
                                    ? "not-confluent"
                                    : "unknown";
    if (as_json) {
      json j{{"termination", r.termination.found ? "yes" : "unknown"},
             {"precedence", r.termination.precedence},
             {"critical_pairs", r.pairs.size()},
             {"confluence", verdict}};
      if (r.witness) j["witness"] = {r.witness->first.str(), r.witness->second.str()};
      if (r.loop) {
        json loop = json::array();
        for (const auto& t : *r.loop) loop.push_back(t.str());
        j["loop"] = loop;
      }
      std::cout << j.dump() << "\n";
    } else {
      std::cout << verdict << "\n";
      std::cout << "termination: " << (r.termination.found ? "yes" : "unknown")
                << ", critical pairs: " << r.pairs.size() << "\n";
      if (r.witness)
        std::cout << "unjoinable normal forms: " << r.witness->first.str() << "  |  "
                  << r.witness->second.str() << "\n";
      if (r.loop) {
        std::cout << "loop (" << r.loop->size() - 1 << " steps):";
        for (const auto& t : *r.loop) std::cout << "  " << t.str();
        std::cout << "\n";
      }
    }
  } else {
    throw CLI::ValidationError("trs", "unknown subcommand " + sub);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rewlab: simple typing as small-step abstract rewriting"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit JSON reports");

  std::string term_text, rel_name = "a", check_name, ars_what, ars_file;
  std::string trs_sub, trs_system, trs_term;
  int fuel = kDefaultFuel, cap = 10000, size = 7, type_depth = 2;
  int gen_fuel = 200, gen_cap = 50000;
  bool dot = false;

  auto* c_type = app.add_subcommand("type", "abstract typability of a mixed term");
  c_type->add_option("term", term_text)->required();

  auto* c_infer = app.add_subcommand("infer", "standard type inference");
  c_infer->add_option("term", term_text)->required();

  std::string strategy = "leftmost";
  auto* c_reduce = app.add_subcommand("reduce", "print a reduction trace");
  c_reduce->add_option("term", term_text)->required();
  c_reduce->add_option("--rel", rel_name, "a|b|c|ca|ba")->required();
  c_reduce->add_option("--strategy", strategy, "reduction strategy")
      ->check(CLI::IsMember({"leftmost"}));
  c_reduce->add_option("--fuel", fuel, "step bound");

  auto* c_graph = app.add_subcommand("graph", "bounded reduction graph");
  c_graph->add_option("term", term_text)->required();
  c_graph->add_option("--rel", rel_name, "a|b|c|ca|ba")->required();
  c_graph->add_option("--cap", cap, "node cap");
  c_graph->add_flag("--dot", dot, "emit DOT");

  auto* c_gentype = app.add_subcommand("gentype", "generalized typability (ca-search)");
  c_gentype->add_option("term", term_text)->required();
  c_gentype->add_option("--fuel", gen_fuel, "search depth bound");
  c_gentype->add_option("--cap", gen_cap, "distinct-term cap");

  auto* c_check = app.add_subcommand("check", "enumeration oracles");
  c_check->add_option("which", check_name,
                      "correspondence|preservation|peaks|progress|safety|"
                      "confluence|quasistuck")
      ->required();
  c_check->add_option("--size", size, "max term size");
  c_check->add_option("--type-depth", type_depth, "max annotation depth");

  auto* c_ars = app.add_subcommand("ars", "finite ARS condition reports");
  c_ars->add_option("what", ars_what, "analyze|example3|example10")->required();
  c_ars->add_option("file", ars_file, "ARS text file (with analyze)");
  c_ars->add_flag("--dot", dot, "emit DOT");

  auto* c_trs = app.add_subcommand("trs", "first-order rewriting engine");
  c_trs->add_option("what", trs_sub, "normalize|cps|termination|confluence")
      ->required();
  c_trs->add_option("system", trs_system, "file path or builtin:uniform|builtin:extended")
      ->required();
  c_trs->add_option("term", trs_term, "term (for normalize)");

  for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_type->parsed()) cmd_type(term_text, as_json);
    else if (c_infer->parsed()) cmd_infer(term_text, as_json);
    else if (c_reduce->parsed()) cmd_reduce(term_text, rel_name, fuel, as_json);
    else if (c_graph->parsed()) cmd_graph(term_text, rel_name, cap, dot, as_json);
    else if (c_gentype->parsed()) cmd_gentype(term_text, gen_fuel, gen_cap, as_json);
    else if (c_check->parsed()) cmd_check(check_name, size, type_depth, as_json);
    else if (c_ars->parsed()) {
      if (ars_what == "analyze" && ars_file.empty())
        throw CLI::ValidationError("ars", "analyze needs a file");
      cmd_ars(ars_what, ars_file, dot, as_json);
    } else if (c_trs->parsed()) {
      cmd_trs(trs_sub, trs_system, trs_term, as_json);
    }
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    fail(e.what());
  }
  return g_exit;
}
