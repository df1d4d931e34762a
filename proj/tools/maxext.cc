// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// maxext: command-line front end for the maximal-extension library.
//
// Exit status: 0 on success, 1 on malformed input or a violated
// precondition, 2 when a budget runs out, 3 when `verify` finds a failing
// check.

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "CLI11.hpp"
#include "maxext/closure.h"
#include "maxext/errors.h"
#include "maxext/fcp.h"
#include "maxext/finset.h"
#include "maxext/formula.h"
#include "maxext/ndclosure.h"
#include "maxext/oracle.h"
#include "maxext/orders.h"
#include "maxext/property.h"

namespace maxext {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitBudget = 2;
constexpr int kExitVerifyFailed = 3;

constexpr std::uint64_t kDefaultSeed = 20260101;
constexpr Nat kDefaultSearchCap = 64;

struct Options {
  // Global.
  std::optional<Nat> universe;
  std::uint64_t budget = kDefaultSearchBudget;
  std::uint64_t seed = kDefaultSeed;

  // Instance.
  std::string set;
  std::string within;
  std::string start;
  std::string witness;
  std::string formula_path;
  std::string op_path;
  std::string poset_path;
  std::string semilattice_path;
  std::string order;
  std::string function;
  std::string kind;
  std::string choice = "least";
  std::vector<std::string> vars;
  std::optional<Nat> index;
  Nat search_cap = kDefaultSearchCap;
  bool stages = false;
  bool check = false;
  bool all = false;
  bool solve = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream contents;
  contents << in.rdbuf();
  return contents.str();
}

// Runs `parse` on the contents of `path`, prefixing syntax errors with the
// file name.
template <typename Parse>
auto parse_file(const std::string& path, Parse&& parse) {
  const std::string text = read_file(path);
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw InputError(path + ":" + e.what());
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

FinSet parse_set_flag(const std::string& value, std::string_view flag) {
  try {
    return parse_set(value);
  } catch (const ParseError& e) {
    throw InputError(std::string(flag) + ":" + e.what());
  }
}

std::optional<FinSet> optional_set(const std::string& value,
                                   std::string_view flag) {
  if (value.empty()) return std::nullopt;
  return parse_set_flag(value, flag);
}

FinSet required_set(const std::string& value, std::string_view flag) {
  if (value.empty()) throw InputError(std::string(flag) + " is required");
  return parse_set_flag(value, flag);
}

Nat parse_number(std::string_view text, std::string_view what) {
  const auto first = text.find_first_not_of(' ');
  const auto last = text.find_last_not_of(' ');
  if (first == std::string_view::npos) {
    throw InputError(std::string(what) + ": expected a number");
  }
  text = text.substr(first, last - first + 1);
  Nat value = 0;
  const auto [end, error] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (error != std::errc() || end != text.data() + text.size()) {
    throw InputError(std::string(what) + ": '" + std::string(text) +
                     "' is not a natural number");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char separator) {
  std::vector<std::string_view> parts;
  if (text.find_first_not_of(' ') == std::string_view::npos) return parts;
  std::size_t begin = 0;
  while (true) {
    const std::size_t end = text.find(separator, begin);
    parts.push_back(text.substr(begin, end - begin));
    if (end == std::string_view::npos) break;
    begin = end + 1;
  }
  return parts;
}

// "3,1,0,2".
std::vector<Nat> parse_order(const std::string& text) {
  std::vector<Nat> order;
  for (std::string_view part : split(text, ',')) {
    order.push_back(parse_number(part, "--order"));
  }
  return order;
}

// "0:3,1:3,2:5" lists the pairs (argument, value).
FiniteFunction parse_function(const std::string& text) {
  FiniteFunction f;
  for (std::string_view part : split(text, ',')) {
    const std::size_t colon = part.find(':');
    if (colon == std::string_view::npos) {
      throw InputError("--function: expected argument:value, got '" +
                       std::string(part) + "'");
    }
    f.emplace_back(parse_number(part.substr(0, colon), "--function"),
                   parse_number(part.substr(colon + 1), "--function"));
  }
  return f;
}

// "x=3" pairs from repeated --var flags.
Environment parse_vars(const std::vector<std::string>& vars) {
  Environment env;
  for (const std::string& entry : vars) {
    const std::size_t eq = entry.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw InputError("--var: expected name=value, got '" + entry + "'");
    }
    env[entry.substr(0, eq)] =
        parse_number(std::string_view(entry).substr(eq + 1), "--var");
  }
  return env;
}

// The explicit --universe, or one past the largest element mentioned.
Universe resolve_universe(const Options& options,
                          std::initializer_list<std::optional<FinSet>> sets,
                          Nat at_least = 0) {
  if (options.universe) {
    const Universe universe(*options.universe);
    for (const auto& set : sets) {
      if (set) universe.require(*set, "input set");
    }
    return universe;
  }
  Nat size = at_least;
  for (const auto& set : sets) {
    if (set && !set->empty()) size = std::max(size, set->max() + 1);
  }
  if (size == 0) {
    throw InputError("cannot infer the universe; pass --universe");
  }
  return Universe(size);
}

Nat largest_rule_element(const std::vector<Rule>& rules) {
  Nat size = 0;
  for (const Rule& rule : rules) {
    size = std::max(size, rule.conclusion + 1);
    if (!rule.premise.empty()) size = std::max(size, rule.premise.max() + 1);
  }
  return size;
}

Nat largest_rule_element(const std::vector<NdRule>& rules) {
  Nat size = 0;
  for (const NdRule& rule : rules) {
    size = std::max(size, rule.choices.max() + 1);
    if (!rule.premise.empty()) size = std::max(size, rule.premise.max() + 1);
  }
  return size;
}

FormulaSource load_formula(const std::string& path,
                           const std::vector<std::string>& implicit = {
                               std::string(kUniverseVariable)}) {
  return parse_file(path, [&](const std::string& text) {
    return parse_formula_file(text, implicit);
  });
}

Property load_property(const Options& options, const Universe& universe) {
  if (options.formula_path.empty()) return Property::always(universe);
  const FormulaSource source = load_formula(options.formula_path);
  return Property::from_formula(source.formula, universe, source.params,
                                parse_vars(options.vars));
}

std::vector<Rule> load_rules(const std::string& path) {
  if (path.empty()) throw InputError("--op is required");
  return parse_file(path, [](const std::string& text) {
    return parse_rules(text);
  });
}

std::vector<NdRule> load_nd_rules(const std::string& path) {
  if (path.empty()) throw InputError("--op is required");
  return parse_file(path, [](const std::string& text) {
    return parse_nd_rules(text);
  });
}

void print_report(const Report& report) {
  for (const Check& check : report) {
    std::cout << (check.passed ? "PASS " : "FAIL ") << check.name << "\n";
  }
}

int run_fcp(const Options& options) {
  const FinSet a = required_set(options.set, "--set");
  const Universe universe = resolve_universe(options, {a});
  const Property phi = load_property(options, universe);
  const std::vector<Nat> order = parse_order(options.order);
  std::cout << greedy_maximal(a, phi, order) << "\n";
  return kExitOk;
}

int run_sigma1(const Options& options) {
  const FinSet a = required_set(options.set, "--set");
  if (options.formula_path.empty()) throw InputError("--formula is required");
  const FormulaSource source =
      load_formula(options.formula_path, {std::string(kUniverseVariable), "m"});
  Environment env = parse_vars(options.vars);
  if (!env.count(std::string(kUniverseVariable))) {
    env[std::string(kUniverseVariable)] =
        resolve_universe(options, {a}).size();
  }
  const Sigma1Result result =
      sigma1_maximal(a, prefix_predicate(source.formula, source.params, env),
                     options.search_cap);
  std::cout << result.result << "\n";
  std::cerr << "c_phi = " << result.c_phi << "\n";
  return kExitOk;
}

int run_close(const Options& options) {
  const std::vector<Rule> rules = load_rules(options.op_path);
  const FinSet x = required_set(options.set, "--set");
  const ClosureOperator d(
      rules, resolve_universe(options, {x}, largest_rule_element(rules)));
  if (options.stages) {
    for (const FinSet& stage : closure_stages(x, d)) {
      std::cout << stage << "\n";
    }
  } else {
    std::cout << cl(x, d) << "\n";
  }
  return kExitOk;
}

int run_ce(const Options& options) {
  const std::vector<Rule> rules = load_rules(options.op_path);
  const std::optional<FinSet> within = optional_set(options.within, "--within");
  const FinSet start = optional_set(options.start, "--start").value_or(FinSet{});
  const Universe universe =
      resolve_universe(options, {within, start}, largest_rule_element(rules));
  const ClosureOperator d(rules, universe);
  const Property phi = load_property(options, universe);
  std::cout << ce_maximal(within.value_or(universe.ground()), start, phi, d)
            << "\n";
  return kExitOk;
}

int run_nce(const Options& options) {
  const std::vector<NdRule> rules = load_nd_rules(options.op_path);
  const std::optional<FinSet> within = optional_set(options.within, "--within");
  const FinSet start = optional_set(options.start, "--start").value_or(FinSet{});
  const Universe universe =
      resolve_universe(options, {within, start}, largest_rule_element(rules));
  const NdClosureOperator n(rules, universe);
  const Property phi = load_property(options, universe);
  std::cout << nce_maximal(within.value_or(universe.ground()), start, phi, n,
                           options.budget)
            << "\n";
  return kExitOk;
}

int run_nclose(const Options& options) {
  const std::vector<NdRule> rules = load_nd_rules(options.op_path);
  const std::optional<FinSet> within = optional_set(options.within, "--within");
  const std::optional<FinSet> x = optional_set(options.set, "--set");
  const Universe universe =
      resolve_universe(options, {within, x}, largest_rule_element(rules));
  const NdClosureOperator n(rules, universe);
  if (x) {
    std::cout << (is_nclosed(*x, n) ? "closed" : "not closed") << "\n";
    return kExitOk;
  }
  for (const FinSet& closed :
       nclosed_family(n, within.value_or(universe.ground()))) {
    std::cout << closed << "\n";
  }
  return kExitOk;
}

int run_ideal(const Options& options) {
  const FinSet start = optional_set(options.start, "--start").value_or(FinSet{});
  if (!options.semilattice_path.empty()) {
    const JoinSemilattice l =
        parse_file(options.semilattice_path, [](const std::string& text) {
          return parse_semilattice(text);
        });
    std::cout << extend_to_maximal_ideal_semilattice(l, start) << "\n";
    return kExitOk;
  }
  if (!options.poset_path.empty()) {
    const Poset p = parse_file(options.poset_path, [](const std::string& text) {
      return parse_poset(text);
    });
    std::cout << extend_to_maximal_ideal_poset(p, start, options.budget)
              << "\n";
    return kExitOk;
  }
  throw InputError("one of --poset or --semilattice is required");
}

int run_eval(const Options& options) {
  if (options.formula_path.empty()) throw InputError("--formula is required");
  const FormulaSource source = load_formula(options.formula_path);
  const std::optional<FinSet> x = optional_set(options.set, "--set");
  const std::optional<FinSet> from_index =
      options.index ? std::optional<FinSet>(members(*options.index))
                    : std::nullopt;
  const Universe universe = resolve_universe(options, {x, from_index});
  Environment env = parse_vars(options.vars);
  env.emplace(std::string(kUniverseVariable), universe.size());

  if (options.check) {
    const FiniteCharacterReport report = check_finite_character(
        source.formula, universe, source.params, env);
    if (report.finite_character()) {
      std::cout << "finite character\n";
    } else if (!report.holds_on_empty) {
      std::cout << "not finite character: false on {}\n";
    } else {
      const auto& [larger, smaller] = *report.counterexample;
      std::cout << "not finite character: true on " << larger
                << ", false on " << smaller << "\n";
    }
    return kExitOk;
  }
  bool value = false;
  if (options.index) {
    value = eval_hat(source.formula, *options.index, env, source.params);
  } else if (x) {
    value = holds(source.formula, *x, env, source.params);
  } else {
    throw InputError("one of --set, --index or --check is required");
  }
  std::cout << (value ? "true" : "false") << "\n";
  return kExitOk;
}

// Smallest universe holding p_i for every value i of f and p_i^(n+1) for
// every pair (n, i).
Nat gadget_universe(const FiniteFunction& f) {
  Nat largest_value = 0;
  for (const auto& [argument, value] : f) {
    largest_value = std::max(largest_value, value);
  }
  std::vector<Nat> primes;
  for (Nat bound = 16; primes.size() <= largest_value; bound *= 2) {
    primes = primes_below(bound);
  }
  Nat size = primes[largest_value] + 1;
  for (const auto& [argument, value] : f) {
    Nat power = 1;
    for (Nat k = 0; k <= argument; ++k) {
      if (power > (Nat{1} << 40) / primes[value]) {
        throw InputError("--function: prime power for argument " +
                         std::to_string(argument) + " is too large");
      }
      power *= primes[value];
    }
    size = std::max(size, power + 1);
  }
  return size;
}

int run_gadget_fcp(const Options& options) {
  const FiniteFunction f = parse_function(options.function);
  Nat largest_value = 0;
  for (const auto& pair : f) largest_value = std::max(largest_value, pair.second);
  const Universe universe =
      options.universe ? Universe(*options.universe)
                       : Universe(largest_value + 1);
  const std::vector<FinSet> stages = range_gadget_fcp(f, universe);
  std::vector<Nat> range;
  for (Nat i = 0; i < stages.size(); ++i) {
    if (options.all) std::cout << "B_" << i << " = " << stages[i] << "\n";
    if (stages[i].contains(i)) range.push_back(i);
  }
  if (!options.all) std::cout << FinSet::from_sorted(range) << "\n";
  return kExitOk;
}

int run_gadget_op(const Options& options) {
  const FiniteFunction f = parse_function(options.function);
  const Universe universe(options.universe.value_or(gadget_universe(f)));
  const ClosureOperator d = range_gadget_operator(f, universe);
  if (!options.solve) {
    std::cout << format_operator(d);
    return kExitOk;
  }
  const FinSet b = ce_maximal(universe.ground(), FinSet{},
                              Property::avoiding(FinSet{0}, universe), d);
  if (options.all) std::cout << b << "\n";
  std::vector<Nat> range;
  const std::vector<Nat> primes = primes_below(universe.size());
  for (Nat i = 0; i < primes.size(); ++i) {
    if (!b.contains(primes[i])) range.push_back(i);
  }
  std::cout << FinSet::from_sorted(range) << "\n";
  return kExitOk;
}

int run_determinize(const Options& options) {
  const std::vector<NdRule> rules = load_nd_rules(options.op_path);
  const NdClosureOperator n(
      rules, resolve_universe(options, {}, largest_rule_element(rules)));
  ChoiceRule choose = least_choice;
  std::mt19937_64 rng(options.seed);
  if (options.choice == "greatest") {
    choose = [](const FinSet& s) { return s.max(); };
  } else if (options.choice == "random") {
    choose = [&rng](const FinSet& s) {
      std::uniform_int_distribution<std::size_t> pick(0, s.size() - 1);
      return s.elements()[pick(rng)];
    };
  } else if (options.choice != "least") {
    throw InputError("--choice must be least, greatest or random");
  }
  std::cout << format_operator(determinize(n, choose));
  return kExitOk;
}

bool looks_deterministic(const std::string& path) {
  const std::string text = read_file(path);
  try {
    parse_rules(text);
    return true;
  } catch (const ParseError&) {
    return false;
  }
}

std::string infer_kind(const Options& options) {
  if (!options.kind.empty()) return options.kind;
  if (!options.poset_path.empty() || !options.semilattice_path.empty()) {
    return "ideal";
  }
  if (!options.op_path.empty()) {
    if (!looks_deterministic(options.op_path)) return "nce";
    return options.within.empty() && options.start.empty() ? "close" : "ce";
  }
  if (!options.formula_path.empty()) return "fcp";
  throw InputError("cannot infer the instance kind; pass --kind");
}

int run_verify(const Options& options) {
  const FinSet w = required_set(options.witness, "--witness");
  const std::string kind = infer_kind(options);
  Report report;
  if (kind == "fcp") {
    const FinSet a = required_set(options.set, "--set");
    const Universe universe = resolve_universe(options, {a, w});
    report = verify_fcp(a, load_property(options, universe), w);
  } else if (kind == "close") {
    const std::vector<Rule> rules = load_rules(options.op_path);
    const FinSet x = required_set(options.set, "--set");
    const ClosureOperator d(
        rules, resolve_universe(options, {x, w}, largest_rule_element(rules)));
    report = verify_closure(d, x, w);
  } else if (kind == "ce") {
    const std::vector<Rule> rules = load_rules(options.op_path);
    const std::optional<FinSet> within =
        optional_set(options.within, "--within");
    const FinSet start =
        optional_set(options.start, "--start").value_or(FinSet{});
    const Universe universe = resolve_universe(options, {within, start, w},
                                               largest_rule_element(rules));
    report = verify_ce(within.value_or(universe.ground()), start,
                       load_property(options, universe),
                       ClosureOperator(rules, universe), w);
  } else if (kind == "nce") {
    const std::vector<NdRule> rules = load_nd_rules(options.op_path);
    const std::optional<FinSet> within =
        optional_set(options.within, "--within");
    const FinSet start =
        optional_set(options.start, "--start").value_or(FinSet{});
    const Universe universe = resolve_universe(options, {within, start, w},
                                               largest_rule_element(rules));
    report = verify_nce(within.value_or(universe.ground()), start,
                        load_property(options, universe),
                        NdClosureOperator(rules, universe), w);
  } else if (kind == "ideal") {
    const FinSet start =
        optional_set(options.start, "--start").value_or(FinSet{});
    if (!options.semilattice_path.empty()) {
      const JoinSemilattice l =
          parse_file(options.semilattice_path, [](const std::string& text) {
            return parse_semilattice(text);
          });
      report = verify_semilattice_ideal(l, start, w);
    } else if (!options.poset_path.empty()) {
      const Poset p =
          parse_file(options.poset_path, [](const std::string& text) {
            return parse_poset(text);
          });
      report = verify_poset_ideal(p, start, w);
    } else {
      throw InputError("one of --poset or --semilattice is required");
    }
  } else {
    throw InputError("unknown --kind '" + kind +
                     "' (fcp, close, ce, nce, ideal)");
  }
  print_report(report);
  return all_passed(report) ? kExitOk : kExitVerifyFailed;
}

struct Command {
  std::string name;
  std::string description;
  std::function<int(const Options&)> run;
  std::vector<std::string> flags;
};

void add_flag(CLI::App& sub, const std::string& flag, Options& o) {
  if (flag == "set") {
    sub.add_option("--set", o.set, "Set literal, e.g. \"{0,1,2}\"");
  } else if (flag == "within") {
    sub.add_option("--within", o.within, "Ambient set A (default: universe)");
  } else if (flag == "start") {
    sub.add_option("--start", o.start, "Starting set C (default: {})");
  } else if (flag == "witness") {
    sub.add_option("--witness", o.witness, "Set to check");
  } else if (flag == "formula") {
    sub.add_option("--formula", o.formula_path, "Formula file");
  } else if (flag == "var") {
    sub.add_option("--var", o.vars, "Free variable value, name=value");
  } else if (flag == "op") {
    sub.add_option("--op", o.op_path, "Operator file");
  } else if (flag == "poset") {
    sub.add_option("--poset", o.poset_path, "Poset file");
  } else if (flag == "semilattice") {
    sub.add_option("--semilattice", o.semilattice_path, "Semilattice file");
  } else if (flag == "order") {
    sub.add_option("--order", o.order, "Enumeration of A, e.g. \"3,1,0,2\"");
  } else if (flag == "function") {
    sub.add_option("--function", o.function,
                   "Finite function as argument:value pairs, e.g. \"0:3,1:5\"");
  } else if (flag == "kind") {
    sub.add_option("--kind", o.kind, "fcp, close, ce, nce or ideal");
  } else if (flag == "choice") {
    sub.add_option("--choice", o.choice, "least, greatest or random");
  } else if (flag == "index") {
    sub.add_option("--index", o.index, "Canonical index of X");
  } else if (flag == "search-cap") {
    sub.add_option("--search-cap", o.search_cap,
                   "Largest prefix length searched");
  } else if (flag == "stages") {
    sub.add_flag("--stages", o.stages, "Print every stage");
  } else if (flag == "check") {
    sub.add_flag("--check", o.check, "Check finite character");
  } else if (flag == "all") {
    sub.add_flag("--all", o.all, "Print every intermediate set");
  } else if (flag == "solve") {
    sub.add_flag("--solve", o.solve, "Compute the maximal set and the range");
  }
}

int run(int argc, char** argv) {
  Options options;
  CLI::App app{"Maximal subsets, closures and maximal ideals of finite sets"};
  app.name("maxext");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--universe", options.universe, "Universe size u");
  app.add_option("--budget", options.budget, "Search node budget");
  app.add_option("--seed", options.seed, "Seed for randomized choices");

  const std::vector<Command> commands = {
      {"fcp", "Greedy maximal subset of --set satisfying --formula", run_fcp,
       {"set", "formula", "var", "order"}},
      {"sigma1", "Maximal subset for an existential prefix formula",
       run_sigma1, {"set", "formula", "var", "search-cap"}},
      {"close", "Least closed superset of --set", run_close,
       {"op", "set", "stages"}},
      {"ce", "Maximal closed extension", run_ce,
       {"op", "formula", "var", "within", "start"}},
      {"nce", "Maximal closed extension, nondeterministic operator", run_nce,
       {"op", "formula", "var", "within", "start"}},
      {"nclose", "Closed subsets under a nondeterministic operator",
       run_nclose, {"op", "within", "set"}},
      {"ideal", "Maximal ideal extending --start", run_ideal,
       {"poset", "semilattice", "start"}},
      {"eval", "Evaluate a formula", run_eval,
       {"formula", "var", "set", "index", "check"}},
      {"gadget-range-fcp", "Range of a finite function via maximal subsets",
       run_gadget_fcp, {"function", "all"}},
      {"gadget-range-op", "Prime-power operator coding a finite function",
       run_gadget_op, {"function", "solve", "all"}},
      {"determinize", "Replace each choice set by one element",
       run_determinize, {"op", "choice"}},
      {"verify", "Check a set with the brute-force oracles", run_verify,
       {"kind", "witness", "set", "formula", "var", "op", "within", "start",
        "poset", "semilattice"}},
  };

  const Command* selected = nullptr;
  for (const Command& command : commands) {
    CLI::App* sub = app.add_subcommand(command.name, command.description);
    for (const std::string& flag : command.flags) add_flag(*sub, flag, options);
    sub->callback([&selected, &command] { selected = &command; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    return selected->run(options);
  } catch (const BudgetError& e) {
    std::cerr << "maxext: budget exhausted: " << e.what() << "\n";
    return kExitBudget;
  } catch (const Error& e) {
    std::cerr << "maxext: " << e.what() << "\n";
    return kExitInput;
  }
}

}  // namespace
}  // namespace maxext

int main(int argc, char** argv) { return maxext::run(argc, argv); }
