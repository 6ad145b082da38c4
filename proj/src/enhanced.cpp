#include "argeq/enhanced.hpp"

#include <algorithm>

#include "argeq/error.hpp"

namespace argeq {

EnhancedReport enhanced_run(const Framework& fw, const Valuation& v0, const GRConfig& cfg,
                            EquilibriumMode mode) {
  if (v0.size() != fw.size()) throw InputError("valuation does not cover the framework");
  EnhancedReport report;
  std::vector<bool> in_crisp(fw.size(), false);
  Valuation seed = v0;

  // Each productive round adds at least one argument, so |S| + 1 rounds suffice.
  for (std::size_t round = 0; round <= fw.size(); ++round) {
    Valuation equilibrium;
    if (mode == EquilibriumMode::cp_oracle) {
      equilibrium = equilibrium_oracle(fw, seed);
    } else {
      auto gr = run_to_equilibrium(fw, seed, AfnKind::min(), cfg);
      if (gr.status != GRStatus::converged)
        throw ConvergenceError(std::string("enhanced round did not converge: ") + to_string(gr.status),
                               cfg.change_tolerance);
      equilibrium = gr.equilibrium;
    }

    bool grew = false;
    for (ArgIndex x = 0; x < fw.size(); ++x) {
      if ((equilibrium[x] == 0.0 || equilibrium[x] == 1.0) && !in_crisp[x]) {
        in_crisp[x] = true;
        grew = true;
      }
    }
    EnhancedRound record{seed, equilibrium, {}};
    for (ArgIndex x = 0; x < fw.size(); ++x)
      if (in_crisp[x]) record.crisp.push_back(x);
    report.rounds.push_back(std::move(record));

    std::vector<double> next(v0.values().begin(), v0.values().end());
    for (ArgIndex x = 0; x < fw.size(); ++x)
      if (equilibrium[x] == 0.0 || equilibrium[x] == 1.0) next[x] = equilibrium[x];
    Valuation next_seed(std::move(next));

    // A round that adds no crisp argument, or whose successor would rerun the
    // same seed, is final.
    if (!grew || next_seed == seed) {
      report.extension = in_out_sets(equilibrium).in;
      return report;
    }
    seed = std::move(next_seed);
  }
  throw std::logic_error("enhanced procedure exceeded |S| + 1 rounds");
}

}  // namespace argeq
