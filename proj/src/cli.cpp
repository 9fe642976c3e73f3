// Copyright 2026 The digroot Authors
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

#include "digroot/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>

#include "digroot/experiment.hpp"
#include "digroot/graph_io.hpp"
#include "digroot/isomorphism.hpp"
#include "digroot/power.hpp"
#include "digroot/reduction.hpp"
#include "digroot/rootsearch.hpp"
#include "digroot/subdivision.hpp"

namespace digroot::cli {
namespace {

using Json = nlohmann::json;

struct Options {
  std::vector<std::string> inputs;
  std::size_t k = 2;
  std::string out;
  std::string out2;
  std::string dot;
  bool json = false;
  std::uint64_t budget = 100'000'000;
  std::size_t trials = 0;
  std::size_t max_n = 4;
  std::vector<std::size_t> k_values{2, 3};
  std::uint64_t seed = 1;
  bool cross_check = false;
};

// Collects the outcome of one subcommand and renders it either as a JSON
// record or as '#' report lines followed by an optional graph.
class Report {
 public:
  Report(std::string command, const Options& opt) : opt_(opt) {
    record_["command"] = std::move(command);
    record_["inputs"] = opt.inputs;
    record_["statistics"] = Json::object();
  }

  void k(std::size_t value) { record_["k"] = value; }
  void result(const std::string& value) { record_["result"] = value; }
  void stat(const std::string& key, Json value) {
    record_["statistics"][key] = std::move(value);
  }
  void evidence(Json value) { record_["evidence"] = std::move(value); }
  void note(const std::string& key, Json value) { record_[key] = std::move(value); }

  /// Writes `graph` to --out when given, otherwise emits it after the report.
  void graph(const std::string& text, const std::string& path) {
    if (!path.empty()) {
      write_text_file(path, text);
      record_["witness_file"] = path;
    } else {
      record_["graph"] = text;
      inline_graph_ = text;
    }
  }

  int finish(int code, std::ostream& out) const {
    if (opt_.json) {
      out << record_.dump(2) << "\n";
      return code;
    }
    for (const auto& [key, value] : record_.items()) {
      if (key == "graph") continue;
      out << "# " << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
          << "\n";
    }
    out << inline_graph_;
    return code;
  }

 private:
  const Options& opt_;
  Json record_;
  std::string inline_graph_;
};

Digraph load(const std::string& path) { return parse_graph(read_text_file(path)); }

Json map_json(const VertexBijection& phi) { return phi.forward(); }

int cmd_power(const Options& opt, std::ostream& out) {
  Report report("power", opt);
  report.k(opt.k);
  const Digraph result = power(load(opt.inputs.at(0)), opt.k);
  report.result("computed");
  report.stat("vertices", result.vertex_count());
  report.stat("arcs", result.arc_count());
  if (!opt.dot.empty()) write_text_file(opt.dot, to_dot(result));
  report.graph(serialize_graph(result), opt.out);
  return report.finish(kPositive, out);
}

int cmd_verify_root(const Options& opt, std::ostream& out) {
  Report report("verify-root", opt);
  report.k(opt.k);
  const bool ok = verify_root(load(opt.inputs.at(0)), opt.k, load(opt.inputs.at(1)));
  report.result(ok ? "root" : "not-root");
  return report.finish(ok ? kPositive : kNegative, out);
}

int cmd_root_exhaustive(const Options& opt, std::ostream& out) {
  Report report("root-exhaustive", opt);
  report.k(opt.k);
  const auto roots = exhaustive_roots(load(opt.inputs.at(0)), opt.k);
  report.result(roots.empty() ? "no-root" : "root-found");
  report.stat("roots", roots.size());
  if (!roots.empty()) report.graph(serialize_graph(roots.front()), opt.out);
  return report.finish(roots.empty() ? kNegative : kPositive, out);
}

int cmd_root_search(const Options& opt, std::ostream& out) {
  Report report("root-search", opt);
  report.k(opt.k);
  const SearchOutcome outcome = backtracking_root_search(load(opt.inputs.at(0)), opt.k, opt.budget);
  report.result(to_string(outcome.status));
  report.stat("nodes", outcome.statistics.nodes);
  report.stat("work_units", outcome.statistics.work_units);
  report.stat("budget", opt.budget);
  if (outcome.witness) report.graph(serialize_graph(*outcome.witness), opt.out);
  switch (outcome.status) {
    case SearchStatus::kRootFound:
      return report.finish(kPositive, out);
    case SearchStatus::kNoRoot:
      return report.finish(kNegative, out);
    case SearchStatus::kBudgetExhausted:
      break;
  }
  return report.finish(kBudgetExhausted, out);
}

int cmd_reduce(const Options& opt, std::ostream& out) {
  Report report("reduce", opt);
  report.k(opt.k);
  const ReductionInstance instance = reduce(load(opt.inputs.at(0)), load(opt.inputs.at(1)), opt.k);
  GraphFile file{std::nullopt, instance.graph, {}};
  std::vector<std::string> labels;
  for (Vertex v = 0; v < instance.graph.vertex_count(); ++v) {
    const VertexOrigin& o = instance.provenance[v];
    std::string label = "copy " + std::to_string(o.copy) + " " + to_string(o.role);
    if (o.role == Role::kOriginal) label += " " + std::to_string(o.source);
    if (o.role == Role::kSubdivision) {
      label += " " + std::to_string(o.replaced.from) + "->" + std::to_string(o.replaced.to);
    }
    file.labels.emplace(v, label);
    labels.push_back(label);
  }
  report.result("reduced");
  report.stat("vertices", instance.graph.vertex_count());
  report.stat("arcs", instance.graph.arc_count());
  report.stat("components", instance.component_offsets.size());
  if (!opt.dot.empty()) write_text_file(opt.dot, to_dot(instance.graph, labels));
  report.graph(serialize_graph_file(file), opt.out);
  return report.finish(kPositive, out);
}

int cmd_suspend(const Options& opt, std::ostream& out) {
  Report report("suspend", opt);
  const Suspension hat = suspend(load(opt.inputs.at(0)));
  report.result("suspended");
  report.stat("r", hat.r);
  report.stat("s", hat.s);
  report.stat("arcs", hat.graph.arc_count());
  if (!opt.dot.empty()) write_text_file(opt.dot, to_dot(hat.graph));
  report.graph(serialize_graph(hat.graph), opt.out);
  return report.finish(kPositive, out);
}

int cmd_subdivide(const Options& opt, std::ostream& out) {
  Report report("subdivide", opt);
  const Subdivision bar = subdivide(load(opt.inputs.at(0)));
  report.result("subdivided");
  report.stat("core_vertices", bar.core.core.size());
  report.stat("subdivision_vertices", bar.core.complement.size());
  if (!opt.dot.empty()) write_text_file(opt.dot, to_dot(bar.graph));
  report.graph(serialize_graph(bar.graph), opt.out);
  return report.finish(kPositive, out);
}

int cmd_find_core(const Options& opt, std::ostream& out) {
  Report report("find-core", opt);
  const CoreResult result = find_core(load(opt.inputs.at(0)));
  if (const auto* bad = std::get_if<NotASubdivision>(&result)) {
    report.result("not-a-subdivision");
    report.evidence({{"defect", to_string(bad->defect)},
                     {"vertex", bad->vertex},
                     {"arc", {bad->arc.from, bad->arc.to}},
                     {"message", bad->describe()}});
    return report.finish(kNegative, out);
  }
  const auto& witness = std::get<CoreWitness>(result);
  report.result("subdivision");
  report.note("core", witness.core);
  report.stat("core_vertices", witness.core.size());
  report.stat("parent_arcs", witness.parent.arc_count());
  report.graph(serialize_graph(witness.parent), opt.out);
  return report.finish(kPositive, out);
}

int cmd_extract_iso(const Options& opt, std::ostream& out) {
  Report report("extract-iso", opt);
  report.k(opt.k);
  try {
    const auto maps = extract_isomorphisms(load(opt.inputs.at(0)), load(opt.inputs.at(1)), opt.k);
    Json list = Json::array();
    for (const auto& phi : maps) list.push_back(map_json(phi));
    report.result("isomorphisms");
    report.note("maps", list);
    return report.finish(kPositive, out);
  } catch (const InconsistentRoot& e) {
    report.result("inconsistent");
    report.evidence({{"step", e.step()}, {"message", e.what()}});
    return report.finish(kNegative, out);
  } catch (const IncompleteCover& e) {
    report.result("incomplete-cover");
    report.evidence({{"residue", e.residue()}});
    return report.finish(kNegative, out);
  }
}

int cmd_decide_class_root(const Options& opt, std::ostream& out) {
  Report report("decide-class-root", opt);
  report.k(opt.k);
  const ClassRootDecision decision = decide_root_in_class(load(opt.inputs.at(0)), opt.k);
  if (!decision.has_root()) {
    report.result("no-root");
    const auto [first, second] = *decision.non_isomorphic_pair;
    report.evidence({{"non_isomorphic_components", {first, second}}});
    return report.finish(kNegative, out);
  }
  report.result("root");
  report.stat("root_arcs", decision.root->arc_count());
  report.graph(serialize_graph(*decision.root), opt.out);
  return report.finish(kPositive, out);
}

int cmd_split_components(const Options& opt, std::ostream& out) {
  Report report("split-components", opt);
  report.k(opt.k);
  const ComponentSplit split = split_components(load(opt.inputs.at(0)), opt.k);
  report.result("split");
  report.stat("vertices", split.first_copies.vertex_count());
  if (!opt.out2.empty()) {
    write_text_file(opt.out2, serialize_graph(split.rest));
    report.note("second_file", opt.out2);
  } else {
    report.note("second_graph", serialize_graph(split.rest));
  }
  report.graph(serialize_graph(split.first_copies), opt.out);
  return report.finish(kPositive, out);
}

int cmd_iso(const Options& opt, std::ostream& out) {
  Report report("iso", opt);
  const auto phi = find_isomorphism(load(opt.inputs.at(0)), load(opt.inputs.at(1)));
  report.result(phi ? "isomorphic" : "not-isomorphic");
  if (phi) report.note("map", map_json(*phi));
  return report.finish(phi ? kPositive : kNegative, out);
}

int cmd_experiment(const Options& opt, std::ostream& out) {
  Report report("experiment", opt);
  ExperimentConfig config;
  config.trials = opt.trials;
  config.max_n = opt.max_n;
  config.k_values = opt.k_values;
  config.seed = opt.seed;
  config.cross_check = opt.cross_check;
  config.cross_check_budget = opt.budget;
  const ExperimentSummary summary = run_experiment(config);

  report.note("config", {{"trials", config.trials},
                         {"max_n", config.max_n},
                         {"k_values", config.k_values},
                         {"seed", config.seed},
                         {"cross_check", config.cross_check}});
  report.result(summary.diagonal() ? "agree" : "disagree");
  report.stat("iso_root", summary.agreement[1][1]);
  report.stat("iso_no_root", summary.agreement[1][0]);
  report.stat("non_iso_root", summary.agreement[0][1]);
  report.stat("non_iso_no_root", summary.agreement[0][0]);
  if (config.cross_check) {
    report.stat("cross_check_conflicts", summary.cross_check_conflicts);
    report.stat("cross_check_exhausted", summary.cross_check_exhausted);
  }
  Json trials = Json::array();
  for (const ExperimentTrial& t : summary.trials) {
    Json row{{"k", t.k},
             {"n1", t.n1},
             {"n2", t.n2},
             {"planted", t.planted},
             {"isomorphic", t.isomorphic},
             {"root", t.root_found}};
    if (t.cross_check) row["search"] = to_string(*t.cross_check);
    trials.push_back(std::move(row));
  }
  if (opt.json) {
    report.note("trials", trials);
  } else {
    std::ostringstream table;
    table << "#                 root   no-root\n";
    table << "# isomorphic     " << std::setw(5) << summary.agreement[1][1] << "  " << std::setw(7)
          << summary.agreement[1][0] << "\n";
    table << "# non-isomorphic " << std::setw(5) << summary.agreement[0][1] << "  " << std::setw(7)
          << summary.agreement[0][0] << "\n";
    const int code = report.finish(summary.diagonal() ? kPositive : kNegative, out);
    out << table.str();
    return code;
  }
  return report.finish(summary.diagonal() ? kPositive : kNegative, out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Digraph powers, roots and the isomorphism reduction"};
  app.require_subcommand(1);

  auto k_option = [&](CLI::App* sub) {
    sub->add_option("--k", opt.k, "Power / root degree")->required()->check(CLI::PositiveNumber);
  };
  auto common = [&](CLI::App* sub, std::size_t inputs) {
    sub->add_option("inputs", opt.inputs, "Input graph files")->required()->expected(static_cast<int>(inputs));
    sub->add_flag("--json", opt.json, "Emit a JSON record instead of the text report");
    sub->add_option("--out", opt.out, "Write the result graph here");
    sub->add_option("--dot", opt.dot, "Also write a Graphviz rendering here");
  };

  std::vector<std::pair<CLI::App*, int (*)(const Options&, std::ostream&)>> commands;
  auto add = [&](const char* name, const char* help, std::size_t inputs, bool needs_k,
                 int (*handler)(const Options&, std::ostream&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    common(sub, inputs);
    if (needs_k) k_option(sub);
    commands.emplace_back(sub, handler);
    return sub;
  };

  add("power", "k-th power of a digraph", 1, true, cmd_power);
  add("verify-root", "Check ROOT^k == TARGET (inputs: ROOT TARGET)", 2, true, cmd_verify_root);
  add("root-exhaustive", "Enumerate all k-th roots (at most 5 vertices)", 1, true,
      cmd_root_exhaustive);
  add("root-search", "Backtracking k-th root search", 1, true, cmd_root_search)
      ->add_option("--budget", opt.budget, "Search-tree node budget");
  add("reduce", "Isomorphism-to-root reduction of two digraphs", 2, true, cmd_reduce);
  add("suspend", "Suspension of a digraph", 1, false, cmd_suspend);
  add("subdivide", "Complete subdivision of a digraph", 1, false, cmd_subdivide);
  add("find-core", "Recognise a subdivision digraph and contract its core", 1, false,
      cmd_find_core);
  add("extract-iso", "Isomorphisms between components from a root (inputs: D R)", 2, true,
      cmd_extract_iso);
  add("decide-class-root", "Decide root existence for a class digraph", 1, true,
      cmd_decide_class_root);
  add("split-components", "Split a k-component digraph into an isomorphism instance", 1, true,
      cmd_split_components)
      ->add_option("--out2", opt.out2, "Write the second graph here");
  add("iso", "Digraph isomorphism test", 2, false, cmd_iso);

  CLI::App* experiment = app.add_subcommand("experiment", "Randomised reduction agreement check");
  experiment->add_option("--trials", opt.trials, "Number of sampled pairs");
  experiment->add_option("--max-n", opt.max_n, "Largest sampled vertex count");
  experiment->add_option("--k-values", opt.k_values, "Root degrees to sample from")->delimiter(',');
  experiment->add_option("--seed", opt.seed, "Random seed");
  experiment->add_flag("--cross-check", opt.cross_check, "Also run the backtracking search");
  experiment->add_option("--budget", opt.budget, "Node budget per cross-check search");
  experiment->add_flag("--json", opt.json, "Emit a JSON record instead of the text report");
  commands.emplace_back(experiment, cmd_experiment);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPositive : kUsageError;
  }

  for (const auto& [sub, handler] : commands) {
    if (!sub->parsed()) continue;
    try {
      return handler(opt, out);
    } catch (const Error& e) {
      err << "error: " << e.what() << "\n";
      return kUsageError;
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return kUsageError;
    }
  }
  return kUsageError;
}

}  // namespace digroot::cli
