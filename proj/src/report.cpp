#include "argeq/report.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <sstream>

#include "argeq/cp_labelling.hpp"
#include "argeq/error.hpp"
#include "argeq/related_models.hpp"
#include "json.hpp"

namespace argeq {

using Json = nlohmann::ordered_json;

ReportFormat parse_report_format(std::string_view name) {
  if (name == "json" || name == "structured") return ReportFormat::structured;
  if (name == "table") return ReportFormat::table;
  if (name == "csv") return ReportFormat::csv;
  throw InputError("unknown report format '" + std::string(name) + "'");
}

std::string short_value(double v) { return fmt::format("{:.3g}", v); }

namespace {

NamedValues named(const Framework& fw, const Valuation& v) {
  NamedValues out;
  out.reserve(v.size());
  for (ArgIndex i = 0; i < v.size(); ++i) out.emplace_back(fw.name(i), v[i]);
  return out;
}

Json values_json(const NamedValues& values) {
  Json obj = Json::object();
  for (const auto& [name, value] : values) obj[name] = value;
  return obj;
}

NamedValues values_from(const Json& obj) {
  NamedValues out;
  for (const auto& [name, value] : obj.items()) out.emplace_back(name, value.get<double>());
  return out;
}

Json valuation_json(const Framework& fw, const Valuation& v) { return values_json(named(fw, v)); }

std::string set_text(const std::vector<std::string>& names) {
  return "{" + fmt::format("{}", fmt::join(names, ",")) + "}";
}

}  // namespace

RunReportDocument make_run_document(const Framework& fw, const Valuation& v0, const GRReport& report,
                                    const std::string& function, const GRConfig& cfg) {
  RunReportDocument doc;
  doc.argument_count = fw.size();
  doc.attack_count = fw.attacks().size();
  doc.mode = "run";
  doc.function = function;
  doc.change_tolerance = cfg.change_tolerance;
  doc.snap_tolerance = cfg.snap_tolerance;
  doc.max_iterations = cfg.max_iterations;
  doc.stable_index = report.stable_index;
  doc.initial = named(fw, v0);
  doc.settled = named(fw, report.settled);
  doc.equilibrium = named(fw, report.equilibrium);
  doc.extension = fw.names_of(report.extension());
  const auto labelling = valuation_to_labelling(report.equilibrium);
  for (ArgIndex i = 0; i < fw.size(); ++i) doc.labelling.emplace_back(fw.name(i), to_string(labelling[i]));
  doc.iterations = report.iterations;
  doc.status = to_string(report.status);
  if (report.unresolved) doc.unresolved_argument = fw.name(*report.unresolved);
  for (const auto& v : report.trajectory) doc.trajectory.emplace_back(v.values().begin(), v.values().end());
  return doc;
}

RunReportDocument make_stable_document(const Framework& fw, const Valuation& v0, const StableResult& stable,
                                       const std::string& function) {
  RunReportDocument doc;
  doc.argument_count = fw.size();
  doc.attack_count = fw.attacks().size();
  doc.mode = "stable";
  doc.function = function;
  doc.stable_index = stable.k;
  doc.initial = named(fw, v0);
  doc.settled = named(fw, stable.settled);
  const auto labelling = valuation_to_labelling(stable.settled);
  for (ArgIndex i = 0; i < fw.size(); ++i) doc.labelling.emplace_back(fw.name(i), to_string(labelling[i]));
  doc.iterations = stable.k + 1;
  doc.status = "converged";
  return doc;
}

std::string to_json(const RunReportDocument& doc) {
  Json j;
  j["framework"] = {{"arguments", doc.argument_count}, {"attacks", doc.attack_count}};
  j["mode"] = doc.mode;
  j["config"] = {{"function", doc.function},
                 {"change_tolerance", doc.change_tolerance},
                 {"snap_tolerance", doc.snap_tolerance},
                 {"max_iterations", doc.max_iterations}};
  j["stable_index"] = doc.stable_index;
  j["initial"] = values_json(doc.initial);
  j["settled"] = values_json(doc.settled);
  j["equilibrium"] = values_json(doc.equilibrium);
  j["extension"] = doc.extension;
  Json labels = Json::object();
  for (const auto& [name, label] : doc.labelling) labels[name] = label;
  j["labelling"] = labels;
  j["iterations"] = doc.iterations;
  j["status"] = doc.status;
  if (doc.unresolved_argument) j["unresolved_argument"] = *doc.unresolved_argument;
  if (!doc.trajectory.empty()) j["trajectory"] = doc.trajectory;
  return j.dump(2) + "\n";
}

RunReportDocument parse_run_document(std::string_view text) {
  try {
    const Json j = Json::parse(text);
    RunReportDocument doc;
    doc.argument_count = j.at("framework").at("arguments").get<std::size_t>();
    doc.attack_count = j.at("framework").at("attacks").get<std::size_t>();
    doc.mode = j.at("mode").get<std::string>();
    const auto& cfg = j.at("config");
    doc.function = cfg.at("function").get<std::string>();
    doc.change_tolerance = cfg.at("change_tolerance").get<double>();
    doc.snap_tolerance = cfg.at("snap_tolerance").get<double>();
    doc.max_iterations = cfg.at("max_iterations").get<std::size_t>();
    doc.stable_index = j.at("stable_index").get<std::size_t>();
    doc.initial = values_from(j.at("initial"));
    doc.settled = values_from(j.at("settled"));
    doc.equilibrium = values_from(j.at("equilibrium"));
    doc.extension = j.at("extension").get<std::vector<std::string>>();
    for (const auto& [name, label] : j.at("labelling").items())
      doc.labelling.emplace_back(name, label.get<std::string>());
    doc.iterations = j.at("iterations").get<std::size_t>();
    doc.status = j.at("status").get<std::string>();
    if (j.contains("unresolved_argument")) doc.unresolved_argument = j["unresolved_argument"].get<std::string>();
    if (j.contains("trajectory")) doc.trajectory = j["trajectory"].get<std::vector<std::vector<double>>>();
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed report document: ") + e.what());
  }
}

std::string emit_report(const RunReportDocument& doc, ReportFormat format) {
  switch (format) {
    case ReportFormat::structured:
      return to_json(doc);
    case ReportFormat::csv: {
      std::string out = "iteration,argument,value\n";
      for (std::size_t i = 0; i < doc.trajectory.size(); ++i)
        for (std::size_t a = 0; a < doc.trajectory[i].size(); ++a)
          out += fmt::format("{},{},{:.17g}\n", i, doc.initial.at(a).first, doc.trajectory[i][a]);
      return out;
    }
    case ReportFormat::table: {
      const bool full = !doc.equilibrium.empty();
      std::string out = full ? fmt::format("{:<10} {}\n", "argument", "(V0, Vk, Ve)")
                             : fmt::format("{:<10} {}\n", "argument", "(V0, Vk)");
      for (std::size_t a = 0; a < doc.initial.size(); ++a) {
        std::string cell = "(" + short_value(doc.initial[a].second) + ", " + short_value(doc.settled.at(a).second);
        if (full) cell += ", " + short_value(doc.equilibrium.at(a).second);
        out += fmt::format("{:<10} {})\n", doc.initial[a].first, cell);
      }
      if (full) {
        out += fmt::format("(S,E) = ({},{})  status = {}\n", doc.stable_index, doc.iterations, doc.status);
        out += "extension: " + set_text(doc.extension) + "\n";
      } else {
        out += fmt::format("k = {}\n", doc.stable_index);
      }
      return out;
    }
  }
  return {};
}

std::string emit_report(const Framework& fw, const Valuation& v0, const EnhancedReport& report,
                        ReportFormat format) {
  if (format == ReportFormat::structured) {
    Json j;
    j["initial"] = valuation_json(fw, v0);
    Json rounds = Json::array();
    for (const auto& r : report.rounds)
      rounds.push_back({{"seed", valuation_json(fw, r.seed)},
                        {"equilibrium", valuation_json(fw, r.equilibrium)},
                        {"crisp", fw.names_of(r.crisp)}});
    j["rounds"] = rounds;
    j["extension"] = fw.names_of(report.extension);
    return j.dump(2) + "\n";
  }
  std::string out;
  if (format == ReportFormat::csv) {
    out = "round,argument,seed,equilibrium\n";
    for (std::size_t r = 0; r < report.rounds.size(); ++r)
      for (ArgIndex a = 0; a < fw.size(); ++a)
        out += fmt::format("{},{},{:.17g},{:.17g}\n", r + 1, fw.name(a), report.rounds[r].seed[a],
                           report.rounds[r].equilibrium[a]);
    return out;
  }
  for (std::size_t r = 0; r < report.rounds.size(); ++r) {
    const auto& round = report.rounds[r];
    out += fmt::format("round {}: crisp = {}\n", r + 1, set_text(fw.names_of(round.crisp)));
    for (ArgIndex a = 0; a < fw.size(); ++a)
      out += fmt::format("  {:<10} seed {:<6} -> {}\n", fw.name(a), short_value(round.seed[a]),
                         short_value(round.equilibrium[a]));
  }
  out += "extension: " + set_text(fw.names_of(report.extension)) + "\n";
  return out;
}

ComparisonBundle compare_models(const Framework& fw, const Valuation& v0, const GRConfig& cfg,
                                std::size_t naive_steps, std::size_t pereira_steps) {
  ComparisonBundle b{fw, v0, run_to_equilibrium(fw, v0, AfnKind::min(), cfg), equilibrium_oracle(fw, v0),
                     pereira_alpha(fw, v0, pereira_steps).back(), pereira_steps, {}, false, false};
  auto naive = naive_iteration(fw, AfnKind::min(), v0, std::max<std::size_t>(naive_steps, 2));
  b.naive_tail.assign(naive.end() - 3, naive.end());
  b.naive_fixed = b.naive_tail[2] == b.naive_tail[1];
  b.naive_period_two = !b.naive_fixed && b.naive_tail[2] == b.naive_tail[0];
  return b;
}

std::string emit_report(const ComparisonBundle& b, ReportFormat format) {
  const Framework& fw = b.framework;
  if (format == ReportFormat::structured) {
    Json j;
    j["initial"] = valuation_json(fw, b.initial);
    j["gr"] = {{"equilibrium", valuation_json(fw, b.gr.equilibrium)},
               {"status", to_string(b.gr.status)},
               {"stable_index", b.gr.stable_index},
               {"iterations", b.gr.iterations}};
    j["cp"] = valuation_json(fw, b.cp);
    j["pereira"] = {{"steps", b.pereira_steps}, {"values", valuation_json(fw, b.pereira)}};
    Json tail = Json::array();
    for (const auto& v : b.naive_tail) tail.push_back(valuation_json(fw, v));
    j["naive"] = {{"tail", tail}, {"fixed", b.naive_fixed}, {"period_two", b.naive_period_two}};
    return j.dump(2) + "\n";
  }
  std::string out;
  if (format == ReportFormat::csv) {
    out = "argument,initial,gr,cp,pereira,naive_last\n";
    for (ArgIndex a = 0; a < fw.size(); ++a)
      out += fmt::format("{},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g}\n", fw.name(a), b.initial[a],
                         b.gr.equilibrium[a], b.cp[a], b.pereira[a], b.naive_tail.back()[a]);
    return out;
  }
  out = fmt::format("{:<10} {:>8} {:>8} {:>8} {:>8} {:>12}\n", "argument", "V0", "GR", "CP", "Pereira", "naive");
  for (ArgIndex a = 0; a < fw.size(); ++a) {
    std::string naive = short_value(b.naive_tail.back()[a]);
    if (b.naive_period_two) naive = short_value(b.naive_tail[1][a]) + "<->" + naive;
    out += fmt::format("{:<10} {:>8} {:>8} {:>8} {:>8} {:>12}\n", fw.name(a), short_value(b.initial[a]),
                       short_value(b.gr.equilibrium[a]), short_value(b.cp[a]), short_value(b.pereira[a]), naive);
  }
  out += fmt::format("GR status = {}; naive iteration {}\n", to_string(b.gr.status),
                     b.naive_fixed ? "fixed" : b.naive_period_two ? "oscillates with period 2" : "not settled");
  return out;
}

}  // namespace argeq
