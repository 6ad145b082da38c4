#pragma once

#include <vector>

#include "argeq/framework.hpp"
#include "argeq/gr_engine.hpp"
#include "argeq/semantics.hpp"

namespace argeq {

/// How each round computes its equilibrium.
enum class EquilibriumMode {
  cp_oracle,  // exact, via contraction and expansion sequences
  iterative,  // the numeric schema with snapping
};

struct EnhancedRound {
  Valuation seed;
  Valuation equilibrium;
  /// Accumulated crisp set after this round.
  ArgSet crisp;
};

struct EnhancedReport {
  std::vector<EnhancedRound> rounds;
  ArgSet extension;
};

/// Repeated equilibrium runs that freeze newly crisp values and reset every
/// other argument to its original initial value, stopping once a round
/// produces no crisp argument outside the accumulated set or the next seed
/// would repeat the current one.
///
/// Throws ConvergenceError in iterative mode when a round does not converge.
EnhancedReport enhanced_run(const Framework& fw, const Valuation& v0, const GRConfig& cfg = {},
                            EquilibriumMode mode = EquilibriumMode::cp_oracle);

}  // namespace argeq
