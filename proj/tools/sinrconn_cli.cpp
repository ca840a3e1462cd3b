#include "sinrconn/aggregation.hpp"
#include "sinrconn/bidirectional.hpp"
#include "sinrconn/errors.hpp"
#include "sinrconn/instances.hpp"
#include "sinrconn/io.hpp"
#include "sinrconn/netdesign.hpp"
#include "sinrconn/oblivious.hpp"
#include "sinrconn/scheduler.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace sinrconn;
using nlohmann::json;

enum ExitCode { kOk = 0, kVerificationFailed = 2, kPrecondition = 3, kIoSchema = 4 };

struct Options {
  std::string params;
  std::string out;
  std::string in;
  std::string schedule;
  std::string csv;
  std::string power_fn = "mean";
  std::string gen = "uniform";
  std::string ns = "64,256,1024";
  std::string algo = "connect";
  int n = 16;
  int t = 1;
  int k = 1;
  int copies = 2;
  int seeds = 1;
  std::uint64_t seed = 0;
  double side = 1.0;
  double spacing = 1.0;
  std::optional<double> gamma;
};

SinrParams parse_params(const std::string& text) {
  SinrParams p;
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw PreconditionError("--params expects alpha,beta,noise; got '" + text + "'");
    }
  }
  if (values.size() != 3) throw PreconditionError("--params expects alpha,beta,noise; got '" + text + "'");
  p = SinrParams{values[0], values[1], values[2]};
  p.validate();
  return p;
}

SinrParams params_or(const Options& o, const SinrParams& fallback) {
  if (o.params.empty()) {
    fallback.validate();
    return fallback;
  }
  return parse_params(o.params);
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw IoError("cannot write " + o.out);
  f << text;
}

void emit_json(const Options& o, const json& doc) { emit(o, doc.dump(2) + "\n"); }

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw IoError("cannot write " + path);
  f << text;
}

Instance input_instance(const Options& o) {
  if (o.in.empty()) throw PreconditionError("--in is required");
  Instance inst = load_instance(o.in);
  inst.params = params_or(o, inst.params);
  return inst;
}

SchedulerConfig scheduler_config(const Options& o) {
  SchedulerConfig c;
  c.gamma_override = o.gamma;
  return c;
}

std::vector<Link> mst_toward_root(const PointSet& points) {
  return orient(points, euclidean_mst(points), 0, Direction::toward);
}

Schedule concat(const Schedule& a, const Schedule& b, const std::string& source) {
  Schedule s = a;
  s.slots.insert(s.slots.end(), b.slots.begin(), b.slots.end());
  s.source = source;
  return s;
}

// ---- gen ---------------------------------------------------------------

Instance line_instance(const std::vector<double>& xs, const SinrParams& params, json metadata) {
  Instance inst;
  inst.points = PointSet::on_line(xs);
  inst.params = params;
  inst.metadata = std::move(metadata);
  return inst;
}

Instance run_gen(const std::string& kind, const Options& o) {
  const SinrParams params = params_or(o, SinrParams{});
  if (kind == "uniform") return gen_uniform(o.n, o.seed, o.side, params);
  if (kind == "grid") return gen_grid(o.n, o.spacing, params);
  if (kind == "gadget-g") {
    GadgetOptions opts;
    opts.max_copies = o.copies;
    const GadgetBuild b = gadget_gt(o.t, params, opts);
    return line_instance(b.gadget.to_doubles(), params,
                         {{"generator", "gadget-g"},
                          {"t", o.t},
                          {"copies", b.copies},
                          {"full_copies", b.full_copies},
                          {"truncated", b.truncated}});
  }
  if (kind == "bidi-lb") {
    Instance inst;
    inst.points = symmetric_lb_instance(o.n);
    inst.params = params;
    inst.metadata = {{"generator", "bidi-lb"}, {"n", o.n}};
    return inst;
  }
  if (kind == "oblivious-lb") {
    const PowerFunction p = parse_power_function(o.power_fn);
    Instance inst;
    inst.points = oblivious_lb_instance(o.n, p, params);
    inst.params = params;
    inst.metadata = {{"generator", "oblivious-lb"}, {"n", o.n}, {"power_fn", p.name()}};
    return inst;
  }
  throw PreconditionError("unknown generator '" + kind + "'");
}

// ---- schedule ----------------------------------------------------------

std::string mean_power_note(const Schedule& s, const SinrParams& params) {
  int ok = 0;
  for (const auto& slot : s.slots) {
    const auto logp = oblivious_log_powers(slot.links, PowerFunction::mean(), params);
    if (is_feasible_log(slot.links, logp, params).pass) ++ok;
  }
  return "mean-power feasible slots: " + std::to_string(ok) + "/" + std::to_string(s.slots.size());
}

Schedule run_schedule(const std::string& algo, const Instance& inst, const Options& o, std::ostream& log) {
  const SchedulerConfig config = scheduler_config(o);
  if (algo == "connect") {
    Schedule s = connect(mst_toward_root(inst.points), inst.params, config);
    s.source = "connect";
    log << mean_power_note(s, inst.params) << '\n';
    return s;
  }
  if (algo == "strong") {
    const auto [toward, away] = strong_connect(inst.points, inst.params, config);
    return concat(toward, away, "strong");
  }
  if (algo == "bidi") {
    BidiConfig bc;
    Schedule s = bidi_connect(inst.points, inst.params, bc);
    s.source = "bidi";
    return s;
  }
  if (algo == "uniform-power" || algo == "linear-power") {
    const auto links = mst_toward_root(inst.points);
    ObliviousSchedule os = algo == "uniform-power" ? uniform_power_schedule(links, inst.params)
                                                   : linear_power_schedule(links, inst.params);
    os.schedule.source = algo;
    log << "length diversity: " << os.diversity << ", max colors per class: " << os.max_colors_per_class
        << ", color bound: " << os.color_bound << '\n';
    for (const auto& d : os.diagnostics) log << d << '\n';
    return os.schedule;
  }
  throw PreconditionError("unknown scheduler '" + algo + "'");
}

// ---- verify ------------------------------------------------------------

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

bool slots_feasible(const Schedule& s, const SinrParams& params, std::string& detail) {
  for (std::size_t i = 0; i < s.slots.size(); ++i) {
    const Slot& slot = s.slots[i];
    try {
      const FeasibilityReport r = s.model == LinkModel::bidirectional
                                      ? bidi_feasible(pairs_from_slot(slot), params)
                                      : is_feasible(slot.links, slot.powers, params);
      if (!r.pass) {
        detail = "slot " + std::to_string(i) + " min SINR/beta " + std::to_string(r.min_margin);
        return false;
      }
    } catch (const PreconditionError& e) {
      detail = "slot " + std::to_string(i) + ": " + e.what();
      return false;
    }
  }
  return true;
}

Check feasibility_check(const Schedule& s, const SinrParams& params) {
  Check c{"slots_feasible", true, ""};
  c.pass = slots_feasible(s, params, c.detail);
  return c;
}

int report_checks(const std::vector<Check>& checks, std::ostream& os) {
  bool all = true;
  for (const auto& c : checks) {
    os << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) os << " (" << c.detail << ")";
    os << '\n';
    all = all && c.pass;
  }
  return all ? kOk : kVerificationFailed;
}

int run_verify(const std::string& what, const Options& o) {
  const Instance inst = input_instance(o);
  if (o.schedule.empty()) throw PreconditionError("--schedule is required");
  const json doc = load_json(o.schedule);
  std::vector<Check> checks;
  if (what == "aggregation") {
    const AggregationSchedule a = aggregation_from_json(doc, inst.points);
    const AggregationReport r = verify_aggregation(a, inst.points.size(), inst.params);
    std::string issues;
    for (const auto& i : r.issues) issues += (issues.empty() ? "" : "; ") + i;
    checks.push_back({"slots_feasible", r.slots_feasible, ""});
    checks.push_back({"spanning_in_arborescence", r.spanning_in_arborescence, ""});
    checks.push_back({"ordering", r.ordering, ""});
    checks.push_back({"shrinkage", true, "max " + std::to_string(r.max_shrinkage)});
    if (!issues.empty()) checks.push_back({"issues", false, issues});
    return report_checks(checks, std::cout);
  }
  const Schedule s = schedule_from_json(doc, inst.points);
  checks.push_back(feasibility_check(s, inst.params));
  const Digraph g = digraph_from_links(inst.points.size(), s.all_links());
  if (what == "schedule") {
  } else if (what == "kconn") {
    if (o.k < 1) throw PreconditionError("--k must be >= 1");
    checks.push_back({"k_edge_strong", verify_k_edge_strong(g, o.k), "k=" + std::to_string(o.k)});
  } else if (what == "biconn") {
    checks.push_back({"bi_connectivity", verify_bi_connectivity(g), ""});
  } else {
    throw PreconditionError("unknown verification target '" + what + "'");
  }
  return report_checks(checks, std::cout);
}

// ---- report ------------------------------------------------------------

std::vector<int> parse_ns(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw PreconditionError("--ns expects a comma-separated list of sizes");
    }
    if (out.back() < 2) throw PreconditionError("--ns sizes must be >= 2");
  }
  if (out.empty()) throw PreconditionError("--ns is empty");
  return out;
}

std::string run_report(const Options& o) {
  const SinrParams params = params_or(o, SinrParams{});
  if (o.seeds < 1) throw PreconditionError("--seeds must be >= 1");
  std::ostringstream os;
  os << "n,seed,slots,links,verified\n";
  std::ostringstream sink;
  for (int n : parse_ns(o.ns)) {
    for (int i = 0; i < o.seeds; ++i) {
      const std::uint64_t seed = o.seed + static_cast<std::uint64_t>(i);
      Instance inst;
      if (o.gen == "uniform") {
        inst = gen_uniform(n, seed, o.side, params);
      } else if (o.gen == "grid") {
        inst = gen_grid(n, o.spacing, params);
      } else {
        throw PreconditionError("report supports --gen uniform|grid");
      }
      const Schedule s = run_schedule(o.algo, inst, o, sink);
      std::string detail;
      const bool ok = slots_feasible(s, params, detail);
      os << n << ',' << seed << ',' << s.slots.size() << ',' << s.link_count() << ',' << (ok ? 1 : 0) << '\n';
    }
  }
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SINR connectivity scheduling toolkit"};
  app.require_subcommand(1);
  Options o;
  std::string choice;

  auto common = [&](CLI::App* cmd) {
    cmd->add_option("--params", o.params, "alpha,beta,noise");
    cmd->add_option("--out", o.out, "output file (default: stdout)");
  };
  auto input = [&](CLI::App* cmd) { cmd->add_option("--in", o.in, "instance JSON")->required(); };

  auto* gen = app.add_subcommand("gen", "generate an instance");
  gen->add_option("kind", choice, "uniform|grid|gadget-g|bidi-lb|oblivious-lb")
      ->required()
      ->check(CLI::IsMember({"uniform", "grid", "gadget-g", "bidi-lb", "oblivious-lb"}));
  gen->add_option("--n", o.n, "number of points");
  gen->add_option("--seed", o.seed, "PRNG seed");
  gen->add_option("--side", o.side, "square side for uniform points");
  gen->add_option("--spacing", o.spacing, "grid spacing");
  gen->add_option("--t", o.t, "gadget level");
  gen->add_option("--copies", o.copies, "gadget copies materialized per level");
  gen->add_option("--power-fn", o.power_fn, "uniform|linear|mean|exponent:<tau>");
  common(gen);

  auto* mst = app.add_subcommand("mst", "minimum spanning tree of an instance");
  input(mst);
  common(mst);

  auto* sched = app.add_subcommand("schedule", "schedule the MST links");
  sched->add_option("algo", choice, "connect|strong|bidi|uniform-power|linear-power")
      ->required()
      ->check(CLI::IsMember({"connect", "strong", "bidi", "uniform-power", "linear-power"}));
  sched->add_option("--csv", o.csv, "per-slot statistics CSV");
  sched->add_option("--gamma", o.gamma, "selection threshold override");
  input(sched);
  common(sched);

  auto* agg = app.add_subcommand("mlas", "aggregation schedule");
  agg->add_option("--gamma", o.gamma, "selection threshold override");
  input(agg);
  common(agg);

  auto* design = app.add_subcommand("design", "connectivity structures");
  design->add_option("kind", choice, "biconnect|kedge")
      ->required()
      ->check(CLI::IsMember({"biconnect", "kedge"}));
  design->add_option("--k", o.k, "edge connectivity");
  design->add_option("--gamma", o.gamma, "selection threshold override");
  input(design);
  common(design);

  auto* verify = app.add_subcommand("verify", "verify a saved schedule");
  verify->add_option("target", choice, "schedule|aggregation|kconn|biconn")
      ->required()
      ->check(CLI::IsMember({"schedule", "aggregation", "kconn", "biconn"}));
  verify->add_option("--schedule", o.schedule, "schedule JSON")->required();
  verify->add_option("--k", o.k, "edge connectivity");
  input(verify);
  common(verify);

  auto* report = app.add_subcommand("report", "slot count sweep over n and seeds");
  report->add_option("--gen", o.gen, "uniform|grid");
  report->add_option("--ns", o.ns, "comma-separated sizes");
  report->add_option("--seeds", o.seeds, "seeds per size");
  report->add_option("--seed", o.seed, "first seed");
  report->add_option("--algo", o.algo, "scheduler");
  report->add_option("--gamma", o.gamma, "selection threshold override");
  common(report);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kPrecondition;
  }

  try {
    if (*gen) {
      emit_json(o, instance_to_json(run_gen(choice, o)));
    } else if (*mst) {
      const Instance inst = input_instance(o);
      emit_json(o, tree_to_json(inst.points, euclidean_mst(inst.points)));
    } else if (*sched) {
      const Instance inst = input_instance(o);
      const Schedule s = run_schedule(choice, inst, o, std::cerr);
      std::cerr << "slots: " << s.slots.size() << ", links: " << s.link_count() << '\n';
      if (!o.csv.empty()) write_file(o.csv, slot_stats_csv(s, inst.params));
      emit_json(o, schedule_to_json(s));
    } else if (*agg) {
      const Instance inst = input_instance(o);
      const AggregationSchedule a = mlas(inst.points, inst.params, scheduler_config(o));
      const AggregationReport r = verify_aggregation(a, inst.points.size(), inst.params);
      std::cerr << "latency: " << a.latency() << ", max shrinkage: " << r.max_shrinkage
                << ", verified: " << (r.pass() ? "yes" : "no") << '\n';
      emit_json(o, aggregation_to_json(a));
      if (!r.pass()) return kVerificationFailed;
    } else if (*design) {
      const Instance inst = input_instance(o);
      const SchedulerConfig config = scheduler_config(o);
      const DesignResult d = choice == "biconnect" ? biconnect_structure(inst.points, inst.params, config)
                                                   : k_edge_structure(inst.points, inst.params, o.k, config);
      Schedule s = d.schedule;
      s.source = choice;
      json doc = schedule_to_json(s);
      json trees = json::array();
      for (const auto& t : d.trees) trees.push_back(tree_to_json(inst.points, t));
      doc["trees"] = trees;
      emit_json(o, doc);
      std::vector<Check> checks{feasibility_check(s, inst.params)};
      const Digraph g = digraph_from_links(inst.points.size(), d.links);
      if (choice == "biconnect") {
        checks.push_back({"bi_connectivity", verify_bi_connectivity(g), ""});
      } else {
        checks.push_back({"k_edge_strong", verify_k_edge_strong(g, o.k), "k=" + std::to_string(o.k)});
      }
      std::cerr << "slots: " << s.slots.size() << '\n';
      return report_checks(checks, std::cerr);
    } else if (*verify) {
      return run_verify(choice, o);
    } else if (*report) {
      emit(o, run_report(o));
    }
  } catch (const PreconditionError& e) {
    std::cerr << "precondition error: " << e.what() << '\n';
    return kPrecondition;
  } catch (const SchemaError& e) {
    std::cerr << "schema error: " << e.what() << '\n';
    return kIoSchema;
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << '\n';
    return kIoSchema;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return kOk;
}
