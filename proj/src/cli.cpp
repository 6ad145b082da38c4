#include "argeq/cli.hpp"

#include <fmt/format.h>

#include <map>
#include <ostream>

#include "CLI11.hpp"
#include "argeq/cp_labelling.hpp"
#include "argeq/enhanced.hpp"
#include "argeq/error.hpp"
#include "argeq/fixtures.hpp"
#include "argeq/gr_engine.hpp"
#include "argeq/io.hpp"
#include "argeq/related_models.hpp"
#include "argeq/report.hpp"
#include "json.hpp"

namespace argeq {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string af_path;
  std::string af_format;
  std::string init_path;
  std::string function = "max";
  std::string combine = "product";
  std::string format = "json";
  std::string semantics = "complete";
  std::string votes_path;
  std::string weights_path;
  std::string demo;
  double tolerance = 1e-12;
  double snap = 1e-6;
  std::size_t max_iterations = 100000;
  bool trace = false;
  bool iterative = false;
  double epsilon = 0.01;
  double damping = 0.5;
};

AfnKind kind_from(const std::string& name) {
  if (name == "max" || name == "min") return AfnKind::min();
  if (name == "product") return AfnKind::product();
  throw InputError("unknown function '" + name + "'");
}

GRConfig config_from(const Options& o) {
  GRConfig cfg;
  cfg.change_tolerance = o.tolerance;
  cfg.snap_tolerance = o.snap;
  cfg.max_iterations = o.max_iterations;
  cfg.record_trajectory = o.trace;
  cfg.validate();
  return cfg;
}

Framework load_framework(const Options& o) {
  if (o.af_path.empty()) throw InputError("--af is required");
  const auto format = o.af_format.empty() ? format_for_path(o.af_path) : parse_framework_format(o.af_format);
  return parse_framework(read_file(o.af_path), format);
}

Valuation load_initial(const Options& o, const Framework& fw) {
  if (o.init_path.empty()) return Valuation::constant(fw.size(), 0.5);
  return parse_initial_values(read_file(o.init_path), fw);
}

Json valuation_json(const Framework& fw, const Valuation& v) {
  Json obj = Json::object();
  for (ArgIndex i = 0; i < fw.size(); ++i) obj[fw.name(i)] = v[i];
  return obj;
}

Json labelling_json(const Framework& fw, const Labelling& l) {
  Json obj = Json::object();
  for (ArgIndex i = 0; i < fw.size(); ++i) obj[fw.name(i)] = to_string(l[i]);
  return obj;
}

Json trace_json(const Framework& fw, const SequenceTrace& trace) {
  Json steps = Json::array();
  for (const auto& s : trace.steps)
    steps.push_back({{"argument", fw.name(s.argument)}, {"from", to_string(s.from)}, {"to", to_string(s.to)}});
  return {{"steps", steps}, {"final", labelling_json(fw, trace.final)}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

int status_exit(GRStatus status) { return status == GRStatus::converged ? kExitOk : kExitNotConverged; }

int cmd_run(const Options& o, std::ostream& out) {
  const Framework fw = load_framework(o);
  const Valuation v0 = load_initial(o, fw);
  GRConfig cfg = config_from(o);
  const auto format = parse_report_format(o.format);
  if (format == ReportFormat::csv) cfg.record_trajectory = true;
  const auto report = run_to_equilibrium(fw, v0, kind_from(o.function), cfg);
  out << emit_report(make_run_document(fw, v0, report, o.function, cfg), format);
  return status_exit(report.status);
}

int cmd_stable(const Options& o, std::ostream& out) {
  const Framework fw = load_framework(o);
  const Valuation v0 = load_initial(o, fw);
  const AfnKind kind = kind_from(o.function);
  const auto format = parse_report_format(o.format);
  const auto stable = run_to_stable(fw, v0, kind);
  auto doc = make_stable_document(fw, v0, stable, o.function);
  if (o.trace || format == ReportFormat::csv) {
    Valuation v = v0;
    for (std::size_t i = 0; i <= stable.k + 1; ++i) {
      doc.trajectory.emplace_back(v.values().begin(), v.values().end());
      if (i <= stable.k) v = gr_step(fw, v, kind);
    }
  }
  out << emit_report(doc, format);
  return kExitOk;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  const Framework fw = load_framework(o);
  const Semantics s = parse_semantics(o.semantics);
  const auto extensions = enumerate_extensions(fw, s);
  if (parse_report_format(o.format) == ReportFormat::structured) {
    Json list = Json::array();
    for (const auto& e : extensions) list.push_back(fw.names_of(e));
    out << dump({{"semantics", to_string(s)}, {"extensions", list}});
  } else {
    for (const auto& e : extensions) out << "{" << fmt::format("{}", fmt::join(fw.names_of(e), ",")) << "}\n";
  }
  return kExitOk;
}

int cmd_cp(const Options& o, std::ostream& out) {
  const Framework fw = load_framework(o);
  const Valuation v0 = load_initial(o, fw);
  const auto start = valuation_to_labelling(v0);
  const auto down = down_admissible(fw, start);
  const auto up = up_complete(fw, down.final);
  if (parse_report_format(o.format) == ReportFormat::structured) {
    out << dump({{"initial", labelling_json(fw, start)},
                 {"down_admissible", trace_json(fw, down)},
                 {"up_complete", trace_json(fw, up)},
                 {"extension", fw.names_of(in_out_sets(up.final).in)}});
  } else {
    out << fmt::format("{:<10} {:>8} {:>8} {:>8}\n", "argument", "initial", "down", "up");
    for (ArgIndex a = 0; a < fw.size(); ++a)
      out << fmt::format("{:<10} {:>8} {:>8} {:>8}\n", fw.name(a), to_string(start[a]), to_string(down.final[a]),
                         to_string(up.final[a]));
  }
  return kExitOk;
}

int cmd_enhanced(const Options& o, std::ostream& out) {
  const Framework fw = load_framework(o);
  const Valuation v0 = load_initial(o, fw);
  const auto report = enhanced_run(fw, v0, config_from(o),
                                   o.iterative ? EquilibriumMode::iterative : EquilibriumMode::cp_oracle);
  out << emit_report(fw, v0, report, parse_report_format(o.format));
  return kExitOk;
}

int cmd_compare(const Options& o, std::ostream& out) {
  const Framework fw = load_framework(o);
  const Valuation v0 = load_initial(o, fw);
  const auto bundle = compare_models(fw, v0, config_from(o));
  out << emit_report(bundle, parse_report_format(o.format));
  return status_exit(bundle.gr.status);
}

int cmd_social(const Options& o, std::ostream& out) {
  const Framework fw = load_framework(o);
  if (o.votes_path.empty()) throw InputError("--votes is required");
  const auto sf = parse_votes(read_file(o.votes_path), fw, o.epsilon);
  const auto model = social_solve(sf, o.damping, config_from(o));
  std::vector<double> support(fw.size());
  for (ArgIndex x = 0; x < fw.size(); ++x) support[x] = sf.argument_support(x);
  if (parse_report_format(o.format) == ReportFormat::structured) {
    out << dump({{"epsilon", o.epsilon},
                 {"support", valuation_json(fw, Valuation(support))},
                 {"model", valuation_json(fw, model)}});
  } else {
    out << fmt::format("{:<10} {:>10} {:>10}\n", "argument", "support", "model");
    for (ArgIndex a = 0; a < fw.size(); ++a)
      out << fmt::format("{:<10} {:>10.6f} {:>10.6f}\n", fw.name(a), support[a], model[a]);
  }
  return kExitOk;
}

int cmd_numafn(const Options& o, std::ostream& out) {
  NumericalNetwork net;
  net.framework = load_framework(o);
  net.initial = load_initial(o, net.framework);
  if (!o.weights_path.empty()) net.weights = parse_weights(read_file(o.weights_path), net.framework);
  net.g_kind = kind_from(o.function);
  net.h_kind = kind_from(o.combine);
  const auto values = numafn_solve(net, o.damping, config_from(o));
  if (parse_report_format(o.format) == ReportFormat::structured) {
    out << dump({{"initial", valuation_json(net.framework, net.initial)},
                 {"equilibrium", valuation_json(net.framework, values)}});
  } else {
    for (ArgIndex a = 0; a < net.framework.size(); ++a)
      out << fmt::format("{:<10} {:.17g}\n", net.framework.name(a), values[a]);
  }
  return kExitOk;
}

// --- demos ------------------------------------------------------------------

struct DemoCase {
  std::string label;
  Framework fw;
  Valuation seed;
};

int demo_cases(const std::vector<DemoCase>& cases, const Options& o, std::ostream& out) {
  GRConfig cfg = config_from(o);
  std::vector<GRReport> reports;
  int code = kExitOk;
  for (const auto& c : cases) {
    reports.push_back(run_to_equilibrium(c.fw, c.seed, AfnKind::min(), cfg));
    if (reports.back().status != GRStatus::converged) code = kExitNotConverged;
  }
  if (parse_report_format(o.format) == ReportFormat::structured) {
    Json list = Json::array();
    for (std::size_t i = 0; i < cases.size(); ++i)
      list.push_back({{"case", cases[i].label},
                      {"report", Json::parse(to_json(make_run_document(cases[i].fw, cases[i].seed, reports[i],
                                                                        "max", cfg)))}});
    out << dump({{"cases", list}});
    return code;
  }
  // Table: one row per argument, one (V0, Vk, Ve) column per case.
  const Framework& fw = cases.front().fw;
  out << fmt::format("{:<4}", "");
  for (const auto& c : cases) out << fmt::format(" {:<22}", c.label);
  out << "\n";
  for (ArgIndex a = 0; a < fw.size(); ++a) {
    out << fmt::format("{:<4}", fw.name(a));
    for (std::size_t i = 0; i < cases.size(); ++i)
      out << fmt::format(" {:<22}", "(" + short_value(cases[i].seed[a]) + ", " +
                                        short_value(reports[i].settled[a]) + ", " +
                                        short_value(reports[i].equilibrium[a]) + ")");
    out << "\n";
  }
  out << fmt::format("{:<4}", "S,E");
  for (const auto& r : reports) out << fmt::format(" {:<22}", fmt::format("({},{})", r.stable_index, r.iterations));
  out << "\n";
  return code;
}

int demo_adf(const Options& o, std::ostream& out) {
  const Framework fw = fixtures::adf_framework();
  const auto conditions = fixtures::adf_conditions();
  const std::vector<std::pair<std::string, Valuation>> seeds = {
      {"m1", Valuation({1, 1, 0.5, 0.5})}, {"m2", Valuation({1, 1, 1, 1})}, {"m3", Valuation({0, 0, 0, 0})}};
  const GRConfig cfg = config_from(o);
  Json list = Json::array();
  std::string table = fmt::format("{:<4} {:<24} {}\n", "", "seed (a,b,c,d)", "model (a,b,c,d)");
  int code = kExitOk;
  for (const auto& [label, seed] : seeds) {
    const auto r = adf_run(conditions, seed, cfg);
    if (r.status != GRStatus::converged) code = kExitNotConverged;
    list.push_back({{"model", label},
                    {"seed", valuation_json(fw, seed)},
                    {"equilibrium", valuation_json(fw, r.equilibrium)},
                    {"status", to_string(r.status)}});
    std::vector<std::string> s, m;
    for (ArgIndex a = 0; a < fw.size(); ++a) {
      s.push_back(short_value(seed[a]));
      m.push_back(short_value(r.equilibrium[a]));
    }
    table += fmt::format("{:<4} {:<24} ({})\n", label, "(" + fmt::format("{}", fmt::join(s, ",")) + ")",
                         fmt::join(m, ","));
  }
  Json conds = Json::object();
  for (ArgIndex a = 0; a < fw.size(); ++a) conds[fw.name(a)] = conditions[a].to_string(fw);
  if (parse_report_format(o.format) == ReportFormat::structured)
    out << dump({{"conditions", conds}, {"runs", list}});
  else
    out << table;
  return code;
}

int demo_hassell(const Options& o, std::ostream& out) {
  const HassellParams p{2.0, 3.0, 2.0};
  const auto fixed = hassell_fixed_point(p);
  const std::vector<std::pair<std::string, HassellState>> starts = {
      {"compromise", {0.5, 0.5, 0.5}}, {"no parasites", {1.0, 0.0, 0.0}}, {"fixed point", fixed}};
  Json runs = Json::array();
  std::string table = fmt::format("fixed point (N,P,Q) = ({:.6g}, {:.6g}, {:.6g})\n", fixed[0], fixed[1], fixed[2]);
  for (const auto& [label, start] : starts) {
    const auto traj = hassell_simulate(p, start, 10);
    Json rows = Json::array();
    table += label + ":\n";
    for (std::size_t t = 0; t < traj.size(); ++t) {
      rows.push_back(traj[t]);
      table += fmt::format("  t={:<3} N={:<12.6g} P={:<12.6g} Q={:.6g}\n", t, traj[t][0], traj[t][1], traj[t][2]);
    }
    runs.push_back({{"start", label}, {"trajectory", rows}});
  }
  if (parse_report_format(o.format) == ReportFormat::structured)
    out << dump({{"params", {{"a1", p.a1}, {"a2", p.a2}, {"lambda", p.growth_lambda}}},
                 {"fixed_point", fixed},
                 {"runs", runs}});
  else
    out << table;
  return kExitOk;
}

int demo_npq(const Options& o, std::ostream& out) {
  const Framework fw = fixtures::npq();
  const Valuation v0({1.0, 0.0, 0.5});
  const auto naive = naive_iteration(fw, AfnKind::min(), v0, 6);
  const auto gr = run_to_equilibrium(fw, v0, AfnKind::min(), config_from(o));
  if (parse_report_format(o.format) == ReportFormat::structured) {
    Json rows = Json::array();
    for (const auto& v : naive) rows.push_back(valuation_json(fw, v));
    out << dump({{"naive", rows}, {"gr_equilibrium", valuation_json(fw, gr.equilibrium)},
                 {"gr_status", to_string(gr.status)}});
  } else {
    out << "naive substitution (N,P,Q):\n";
    for (std::size_t i = 0; i < naive.size(); ++i)
      out << fmt::format("  {}: ({}, {}, {})\n", i, short_value(naive[i][0]), short_value(naive[i][1]),
                         short_value(naive[i][2]));
    out << fmt::format("schema equilibrium: ({}, {}, {})\n", short_value(gr.equilibrium[0]),
                       short_value(gr.equilibrium[1]), short_value(gr.equilibrium[2]));
  }
  return status_exit(gr.status);
}

int demo_selfloop(const Options& o, std::ostream& out) {
  const Framework fw = fixtures::self_loop();
  const GRConfig cfg = config_from(o);
  const std::vector<AfnKind> kinds = {AfnKind::min(), AfnKind::product(), AfnKind::lambda(0.25, AfnKind::min())};
  Json runs = Json::array();
  std::string table;
  int code = kExitOk;
  for (const auto& kind : kinds) {
    for (double start : {0.0, 1.0}) {
      const auto r = run_to_equilibrium(fw, Valuation({start}), kind, cfg);
      if (r.status != GRStatus::converged) code = kExitNotConverged;
      runs.push_back({{"function", kind.name()}, {"start", start}, {"equilibrium", r.equilibrium[0]},
                      {"residual", equation_residual(fw, kind, r.equilibrium)}});
      table += fmt::format("{:<18} V0={}  Ve={}\n", kind.name(), short_value(start), short_value(r.equilibrium[0]));
    }
  }
  if (parse_report_format(o.format) == ReportFormat::structured)
    out << dump({{"runs", runs}});
  else
    out << table;
  return code;
}

int cmd_demo(const Options& o, std::ostream& out) {
  if (o.demo == "fig6") {
    std::vector<DemoCase> cases;
    for (int i = 1; i <= 3; ++i) cases.push_back({std::to_string(i), fixtures::fig6(), fixtures::fig6_case(i)});
    return demo_cases(cases, o, out);
  }
  if (o.demo == "fig9") {
    std::vector<DemoCase> cases;
    for (const auto& c : fixtures::fig9_cases()) cases.push_back({c.label, c.framework, c.seed});
    return demo_cases(cases, o, out);
  }
  if (o.demo == "adf") return demo_adf(o, out);
  if (o.demo == "hassell") return demo_hassell(o, out);
  if (o.demo == "npq") return demo_npq(o, out);
  if (o.demo == "selfloop") return demo_selfloop(o, out);
  throw InputError("unknown demo '" + o.demo + "'");
}

void add_af(CLI::App* cmd, Options& o) {
  cmd->add_option("--af", o.af_path, "Framework file (.apx or edge list)");
  cmd->add_option("--af-format", o.af_format, "Force the framework format: apx | edge-list");
}

void add_init(CLI::App* cmd, Options& o) {
  cmd->add_option("--init", o.init_path, "Initial values file (default: all 1/2)");
}

void add_schema(CLI::App* cmd, Options& o) {
  cmd->add_option("--tolerance", o.tolerance, "Convergence tolerance on the max per-node change");
  cmd->add_option("--snap", o.snap, "Snap window around 0, 1/2 and 1");
  cmd->add_option("--max-iterations", o.max_iterations, "Iteration cap");
}

void add_format(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "Output: json | table | csv");
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Equilibrium-based extension computation for argumentation frameworks", "argeq"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "Iterate the schema to its equilibrium");
  add_af(run, o);
  add_init(run, o);
  add_schema(run, o);
  add_format(run, o);
  run->add_option("--function", o.function, "Attack aggregate: max | product");
  run->add_flag("--trace", o.trace, "Include every iterate in the report");

  auto* stable = app.add_subcommand("stable", "Iterate only until crisp values stop changing");
  add_af(stable, o);
  add_init(stable, o);
  add_format(stable, o);
  stable->add_option("--function", o.function, "Attack aggregate: max | product");
  stable->add_flag("--trace", o.trace, "Include V0 through V(k+1) in the report");

  auto* oracle = app.add_subcommand("oracle", "Enumerate extensions by brute force");
  add_af(oracle, o);
  add_format(oracle, o);
  oracle->add_option("--semantics", o.semantics, "complete | preferred | stable | grounded");

  auto* cp = app.add_subcommand("cp", "Contraction and expansion sequences from the initial labelling");
  add_af(cp, o);
  add_init(cp, o);
  add_format(cp, o);

  auto* enhanced = app.add_subcommand("enhanced", "Crisp-propagation loop over repeated runs");
  add_af(enhanced, o);
  add_init(enhanced, o);
  add_schema(enhanced, o);
  add_format(enhanced, o);
  enhanced->add_flag("--iterative", o.iterative, "Use the numeric schema instead of the exact construction");

  auto* compare = app.add_subcommand("compare", "Schema, labelling construction, Pereira and naive side by side");
  add_af(compare, o);
  add_init(compare, o);
  add_schema(compare, o);
  add_format(compare, o);

  auto* social = app.add_subcommand("social", "Product-semantics social model from vote tallies");
  add_af(social, o);
  add_schema(social, o);
  add_format(social, o);
  social->add_option("--votes", o.votes_path, "Vote file");
  social->add_option("--epsilon", o.epsilon, "Vote aggregation constant (> 0)");
  social->add_option("--damping", o.damping, "Damping factor in (0,1]");

  auto* numafn = app.add_subcommand("numafn", "Weighted numerical network equilibrium");
  add_af(numafn, o);
  add_init(numafn, o);
  add_schema(numafn, o);
  add_format(numafn, o);
  numafn->add_option("--weights", o.weights_path, "Attack weight file");
  numafn->add_option("--function", o.function, "Attack aggregate g: max | product");
  numafn->add_option("--combine", o.combine, "Initial-value combination h: max | product");
  numafn->add_option("--damping", o.damping, "Damping factor in (0,1]");

  auto* demo = app.add_subcommand("demo", "Built-in worked examples");
  demo->add_option("name", o.demo, "fig6 | fig9 | adf | hassell | npq | selfloop")->required();
  add_schema(demo, o);
  add_format(demo, o);

  std::vector<const char*> argv{"argeq"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*run) return cmd_run(o, out);
    if (*stable) return cmd_stable(o, out);
    if (*oracle) return cmd_oracle(o, out);
    if (*cp) return cmd_cp(o, out);
    if (*enhanced) return cmd_enhanced(o, out);
    if (*compare) return cmd_compare(o, out);
    if (*social) return cmd_social(o, out);
    if (*numafn) return cmd_numafn(o, out);
    if (*demo) return cmd_demo(o, out);
  } catch (const ConvergenceError& e) {
    err << "argeq: " << e.what() << " (last residual " << e.last_residual() << ")\n";
    return kExitNotConverged;
  } catch (const InputError& e) {
    err << "argeq: " << e.what() << "\n";
    return kExitInputError;
  } catch (const OracleCapExceeded& e) {
    err << "argeq: " << e.what() << "\n";
    return kExitInputError;
  } catch (const CycleError& e) {
    err << "argeq: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace argeq
