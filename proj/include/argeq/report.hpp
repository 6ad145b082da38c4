#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "argeq/enhanced.hpp"
#include "argeq/framework.hpp"
#include "argeq/gr_engine.hpp"
#include "argeq/semantics.hpp"

namespace argeq {

enum class ReportFormat { structured, table, csv };

/// "json"/"structured", "table" or "csv".
ReportFormat parse_report_format(std::string_view name);

using NamedValues = std::vector<std::pair<std::string, double>>;

/// Serializable summary of a single schema run.
struct RunReportDocument {
  std::size_t argument_count = 0;
  std::size_t attack_count = 0;
  std::string mode;
  std::string function;
  double change_tolerance = 0.0;
  double snap_tolerance = 0.0;
  std::size_t max_iterations = 0;
  std::size_t stable_index = 0;
  NamedValues initial;
  NamedValues settled;
  NamedValues equilibrium;
  std::vector<std::string> extension;
  std::vector<std::pair<std::string, std::string>> labelling;
  std::size_t iterations = 0;
  std::string status;
  std::optional<std::string> unresolved_argument;
  /// One row per iterate, values in argument order.
  std::vector<std::vector<double>> trajectory;

  friend bool operator==(const RunReportDocument&, const RunReportDocument&) = default;
};

RunReportDocument make_run_document(const Framework& fw, const Valuation& v0, const GRReport& report,
                                    const std::string& function, const GRConfig& cfg);

/// Document for a run stopped at the stable index (no equilibrium fields).
RunReportDocument make_stable_document(const Framework& fw, const Valuation& v0, const StableResult& stable,
                                       const std::string& function);

/// JSON text; doubles use shortest round-trip formatting.
std::string to_json(const RunReportDocument& doc);
/// Inverse of to_json. Throws InputError on malformed documents.
RunReportDocument parse_run_document(std::string_view text);

/// Renders in the requested format. csv lists the trajectory as
/// `iteration,argument,value` rows.
std::string emit_report(const RunReportDocument& doc, ReportFormat format);
std::string emit_report(const Framework& fw, const Valuation& v0, const EnhancedReport& report,
                        ReportFormat format);

/// Several models evaluated from the same initial values.
struct ComparisonBundle {
  Framework framework;
  Valuation initial;
  GRReport gr;
  Valuation cp;
  Valuation pereira;
  std::size_t pereira_steps = 0;
  std::vector<Valuation> naive_tail;  // the last three naive iterates
  bool naive_period_two = false;
  bool naive_fixed = false;
};

ComparisonBundle compare_models(const Framework& fw, const Valuation& v0, const GRConfig& cfg,
                                std::size_t naive_steps = 64, std::size_t pereira_steps = 200);

std::string emit_report(const ComparisonBundle& bundle, ReportFormat format);

/// Short numeric rendering used by the tables: up to three significant digits.
std::string short_value(double v);

}  // namespace argeq
