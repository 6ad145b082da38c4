#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "argeq/afn.hpp"
#include "argeq/framework.hpp"
#include "argeq/semantics.hpp"

namespace argeq {

struct GRConfig {
  /// Convergence when the largest per-node change between two iterates drops
  /// below this.
  double change_tolerance = 1e-12;
  /// Raw limits within this distance of 0, 1/2 or 1 are snapped to that value.
  double snap_tolerance = 1e-6;
  std::size_t max_iterations = 100000;
  bool record_trajectory = false;

  /// Throws InputError unless 0 < change_tolerance < snap_tolerance < 1/4.
  void validate() const;
};

enum class GRStatus { converged, iteration_cap_hit, unresolved_value };

const char* to_string(GRStatus status);

struct GRReport {
  /// First i at which no crisp value of V_i changes in V_{i+1}.
  std::size_t stable_index = 0;
  /// V_{k+1}, the first iterate that confirms stability.
  Valuation settled;
  /// Raw limit snapped to {0, 1/2, 1} where within the snap window.
  Valuation equilibrium;
  Valuation raw_equilibrium;
  std::size_t iterations = 0;
  GRStatus status = GRStatus::converged;
  /// Set when status == unresolved_value: the first offending argument.
  std::optional<ArgIndex> unresolved;
  /// V_0, V_1, ... when GRConfig::record_trajectory is set.
  std::vector<Valuation> trajectory;

  /// Arguments whose equilibrium value is 1.
  ArgSet extension() const;
};

/// One synchronous step of the schema for aggregate `kind`:
///   a = g({1 - v(y) : y in Att(x)})
///   v'(x) = (1 - v(x))·min(1/2, a) + v(x)·max(1/2, a)
Valuation gr_step(const Framework& fw, const Valuation& v, const AfnKind& kind);

struct StableResult {
  std::size_t k = 0;
  Valuation settled;
};

/// Iterates until crisp values stop changing. For argumentation-friendly
/// aggregates k <= |S|; exceeding that bound throws std::logic_error.
StableResult run_to_stable(const Framework& fw, const Valuation& v0, const AfnKind& kind);

GRReport run_to_equilibrium(const Framework& fw, const Valuation& v0, const AfnKind& kind,
                            const GRConfig& cfg = {});

/// The exact limit of the max-based schema, computed through the contraction
/// and expansion sequences instead of iteration.
Valuation equilibrium_oracle(const Framework& fw, const Valuation& v0);

/// Propositional acceptance condition over argument values with the numeric
/// reading true = 1, false = 0, not = 1 - x, and = min, or = max.
class AcceptanceCondition {
 public:
  static AcceptanceCondition truth();
  static AcceptanceCondition falsity();
  static AcceptanceCondition variable(ArgIndex argument);
  static AcceptanceCondition negation(AcceptanceCondition operand);
  static AcceptanceCondition conjunction(AcceptanceCondition lhs, AcceptanceCondition rhs);
  static AcceptanceCondition disjunction(AcceptanceCondition lhs, AcceptanceCondition rhs);

  /// Throws InputError if a variable is not covered by `v`.
  double evaluate(std::span<const double> v) const;

  std::string to_string(const Framework& fw) const;

 private:
  enum class Op { truth, falsity, variable, negation, conjunction, disjunction };
  struct Node;

  explicit AcceptanceCondition(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  static double evaluate(const Node& node, std::span<const double> v);
  static std::string render(const Node& node, const Framework& fw);

  std::shared_ptr<const Node> node_;
};

double eval_condition(const AcceptanceCondition& c, const Valuation& v);

/// The generalised schema where each node's aggregate is its acceptance
/// condition. `conditions[i]` belongs to argument i of v0.
GRReport adf_run(const std::vector<AcceptanceCondition>& conditions, const Valuation& v0,
                 const GRConfig& cfg = {});

}  // namespace argeq
