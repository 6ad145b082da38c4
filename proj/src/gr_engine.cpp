#include "argeq/gr_engine.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "argeq/cp_labelling.hpp"
#include "argeq/error.hpp"

namespace argeq {

void GRConfig::validate() const {
  if (!(change_tolerance > 0.0)) throw InputError("change tolerance must be positive");
  if (!(snap_tolerance > 0.0 && snap_tolerance < 0.25))
    throw InputError("snap tolerance must lie in (0, 1/4)");
  if (!(change_tolerance < snap_tolerance))
    throw InputError("change tolerance must be smaller than the snap tolerance");
}

const char* to_string(GRStatus status) {
  switch (status) {
    case GRStatus::converged: return "converged";
    case GRStatus::iteration_cap_hit: return "iteration_cap_hit";
    case GRStatus::unresolved_value: return "unresolved_value";
  }
  return "?";
}

ArgSet GRReport::extension() const { return in_out_sets(equilibrium).in; }

namespace {

// Aggregate a for node x given the current snapshot.
using NodeAggregate = std::function<double(std::span<const double>, ArgIndex)>;

// An undecided value never becomes crisp in exact arithmetic, but one ulp
// below 1 the update rounds up to 1.0 (and repeated halving underflows to 0).
// Such results are held at the nearest interior double instead.
double schema(double value, double a) {
  const double next = (1.0 - value) * std::min(0.5, a) + value * std::max(0.5, a);
  if (value > 0.0 && value < 1.0) {
    if (next >= 1.0) return std::nextafter(1.0, 0.0);
    if (next <= 0.0) return std::numeric_limits<double>::denorm_min();
  }
  return next;
}

std::vector<double> step(const NodeAggregate& aggregate, std::span<const double> v) {
  std::vector<double> next(v.size());
  for (ArgIndex x = 0; x < v.size(); ++x) next[x] = schema(v[x], aggregate(v, x));
  return next;
}

bool crisp(double value) { return value == 0.0 || value == 1.0; }

// Returns (k, V_{k+1}) or nullopt when no stable index is found within `limit`.
std::optional<StableResult> detect_stable(const NodeAggregate& aggregate, const Valuation& v0,
                                          std::size_t limit) {
  std::vector<double> current(v0.values().begin(), v0.values().end());
  for (std::size_t i = 0; i <= limit; ++i) {
    auto next = step(aggregate, current);
    bool stable = true;
    for (ArgIndex x = 0; x < current.size() && stable; ++x)
      if (crisp(current[x]) && next[x] != current[x]) stable = false;
    if (stable) return StableResult{i, Valuation(std::move(next))};
    current = std::move(next);
  }
  return std::nullopt;
}

double snap(double raw, double window, bool& resolved) {
  for (double target : {0.0, 0.5, 1.0}) {
    if (std::fabs(raw - target) <= window) {
      resolved = true;
      return target;
    }
  }
  resolved = false;
  return raw;
}

GRReport iterate(const NodeAggregate& aggregate, const Valuation& v0, const GRConfig& cfg,
                 StableResult stable) {
  cfg.validate();
  GRReport report;
  report.stable_index = stable.k;
  report.settled = std::move(stable.settled);

  std::vector<double> current(v0.values().begin(), v0.values().end());
  if (cfg.record_trajectory) report.trajectory.push_back(v0);

  bool converged = false;
  while (report.iterations < cfg.max_iterations) {
    auto next = step(aggregate, current);
    ++report.iterations;
    double change = 0.0;
    for (ArgIndex x = 0; x < current.size(); ++x) change = std::max(change, std::fabs(next[x] - current[x]));
    current = std::move(next);
    if (cfg.record_trajectory) report.trajectory.emplace_back(current);
    if (change < cfg.change_tolerance) {
      converged = true;
      break;
    }
  }
  // An empty framework is trivially at its limit.
  if (current.empty()) converged = true;

  report.raw_equilibrium = Valuation(current);
  std::vector<double> snapped(current.size());
  for (ArgIndex x = 0; x < current.size(); ++x) {
    bool resolved = false;
    snapped[x] = snap(current[x], cfg.snap_tolerance, resolved);
    if (!resolved && !report.unresolved) report.unresolved = x;
  }
  report.equilibrium = Valuation(std::move(snapped));

  if (!converged)
    report.status = GRStatus::iteration_cap_hit;
  else if (report.unresolved)
    report.status = GRStatus::unresolved_value;
  else
    report.status = GRStatus::converged;
  return report;
}

NodeAggregate framework_aggregate(const Framework& fw, const AfnKind& kind) {
  return [&fw, kind](std::span<const double> v, ArgIndex x) { return node_equation(fw, kind, v, x); };
}

void check_cover(const Framework& fw, const Valuation& v) {
  if (v.size() != fw.size()) throw InputError("valuation does not cover the framework");
}

}  // namespace

Valuation gr_step(const Framework& fw, const Valuation& v, const AfnKind& kind) {
  check_cover(fw, v);
  return Valuation(step(framework_aggregate(fw, kind), v.values()));
}

StableResult run_to_stable(const Framework& fw, const Valuation& v0, const AfnKind& kind) {
  check_cover(fw, v0);
  auto result = detect_stable(framework_aggregate(fw, kind), v0, fw.size());
  if (!result) throw std::logic_error("stable index exceeds the number of arguments");
  return std::move(*result);
}

GRReport run_to_equilibrium(const Framework& fw, const Valuation& v0, const AfnKind& kind,
                            const GRConfig& cfg) {
  auto report = iterate(framework_aggregate(fw, kind), v0, cfg, run_to_stable(fw, v0, kind));
  if (report.status == GRStatus::converged && kind.is_min() &&
      !classify_illegal(fw, valuation_to_labelling(report.equilibrium)).legal())
    throw std::logic_error("max-based equilibrium is not a legal labelling");
  return report;
}

Valuation equilibrium_oracle(const Framework& fw, const Valuation& v0) {
  check_cover(fw, v0);
  return labelling_to_valuation(cp_pipeline(fw, valuation_to_labelling(v0)));
}

struct AcceptanceCondition::Node {
  Op op;
  ArgIndex argument = 0;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
};

AcceptanceCondition AcceptanceCondition::truth() {
  return AcceptanceCondition(std::make_shared<const Node>(Node{Op::truth, 0, nullptr, nullptr}));
}

AcceptanceCondition AcceptanceCondition::falsity() {
  return AcceptanceCondition(std::make_shared<const Node>(Node{Op::falsity, 0, nullptr, nullptr}));
}

AcceptanceCondition AcceptanceCondition::variable(ArgIndex argument) {
  return AcceptanceCondition(std::make_shared<const Node>(Node{Op::variable, argument, nullptr, nullptr}));
}

AcceptanceCondition AcceptanceCondition::negation(AcceptanceCondition operand) {
  return AcceptanceCondition(std::make_shared<const Node>(Node{Op::negation, 0, operand.node_, nullptr}));
}

AcceptanceCondition AcceptanceCondition::conjunction(AcceptanceCondition lhs, AcceptanceCondition rhs) {
  return AcceptanceCondition(std::make_shared<const Node>(Node{Op::conjunction, 0, lhs.node_, rhs.node_}));
}

AcceptanceCondition AcceptanceCondition::disjunction(AcceptanceCondition lhs, AcceptanceCondition rhs) {
  return AcceptanceCondition(std::make_shared<const Node>(Node{Op::disjunction, 0, lhs.node_, rhs.node_}));
}

double AcceptanceCondition::evaluate(const Node& n, std::span<const double> v) {
  switch (n.op) {
    case Op::truth: return 1.0;
    case Op::falsity: return 0.0;
    case Op::variable:
      if (n.argument >= v.size())
        throw InputError("condition variable " + std::to_string(n.argument) + " not declared");
      return v[n.argument];
    case Op::negation: return 1.0 - evaluate(*n.lhs, v);
    case Op::conjunction: return std::min(evaluate(*n.lhs, v), evaluate(*n.rhs, v));
    case Op::disjunction: return std::max(evaluate(*n.lhs, v), evaluate(*n.rhs, v));
  }
  return 0.0;
}

std::string AcceptanceCondition::render(const Node& n, const Framework& fw) {
  switch (n.op) {
    case Op::truth: return "T";
    case Op::falsity: return "F";
    case Op::variable: return fw.name(n.argument);
    case Op::negation: return "!" + render(*n.lhs, fw);
    case Op::conjunction: return "(" + render(*n.lhs, fw) + " & " + render(*n.rhs, fw) + ")";
    case Op::disjunction: return "(" + render(*n.lhs, fw) + " | " + render(*n.rhs, fw) + ")";
  }
  return "?";
}

double AcceptanceCondition::evaluate(std::span<const double> v) const { return evaluate(*node_, v); }

std::string AcceptanceCondition::to_string(const Framework& fw) const { return render(*node_, fw); }

double eval_condition(const AcceptanceCondition& c, const Valuation& v) { return c.evaluate(v.values()); }

GRReport adf_run(const std::vector<AcceptanceCondition>& conditions, const Valuation& v0, const GRConfig& cfg) {
  if (conditions.size() != v0.size()) throw InputError("one acceptance condition per argument required");
  NodeAggregate aggregate = [&conditions](std::span<const double> v, ArgIndex x) {
    return conditions[x].evaluate(v);
  };
  // Conditions are arbitrary, so the |S| bound on the stable index does not
  // apply; fall back to the iteration cap.
  auto stable = detect_stable(aggregate, v0, cfg.max_iterations);
  if (!stable) throw ConvergenceError("crisp values never stabilised", 1.0);
  return iterate(aggregate, v0, cfg, std::move(*stable));
}

}  // namespace argeq
