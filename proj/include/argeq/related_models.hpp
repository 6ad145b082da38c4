#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <vector>

#include "argeq/afn.hpp"
#include "argeq/framework.hpp"
#include "argeq/gr_engine.hpp"
#include "argeq/semantics.hpp"

namespace argeq {

// ---------------------------------------------------------------------------
// Naive substitution

/// V_{i+1}(x) = g({1 - V_i(y)}) with no damping; returns V_0 .. V_steps.
std::vector<Valuation> naive_iteration(const Framework& fw, const AfnKind& kind, const Valuation& v0,
                                       std::size_t steps);

// ---------------------------------------------------------------------------
// Pereira et al. propagation

/// alpha_0 = f; alpha_i(x) = 1/2 alpha_{i-1}(x) + 1/2 min{f(x), 1 - max_att alpha_{i-1}}.
/// Returns alpha_0 .. alpha_steps. Runs on cyclic frameworks too, where the
/// limit carries no guarantee.
std::vector<Valuation> pereira_alpha(const Framework& fw, const Valuation& f, std::size_t steps);

/// beta(x) = f(x) at depth 0, else min{f(x), 1 - max_att beta}. Throws
/// CycleError on cyclic frameworks.
Valuation pereira_beta(const Framework& fw, const Valuation& f);

// ---------------------------------------------------------------------------
// h-categoriser

/// h(x) = 1 / (1 + sum of attacker strengths). Exact by depth on acyclic
/// frameworks, damped fixed-point iteration otherwise (ConvergenceError when
/// the cap is hit).
Valuation h_categoriser(const Framework& fw, const GRConfig& cfg = {});

// ---------------------------------------------------------------------------
// Weighted numerical networks

struct NumericalNetwork {
  Framework framework;
  Valuation initial;
  /// Attack strengths in [0,1]; attacks without an entry have strength 1.
  std::map<Attack, double> weights;
  AfnKind g_kind = AfnKind::product();
  AfnKind h_kind = AfnKind::product();

  /// Throws InputError on weights for missing attacks or out of range.
  void validate() const;
  double weight(const Attack& attack) const;
};

/// Damped fixed point of V(x) = h(V_0(x), g({1 - w(y,x)·V(y)})) seeded at V_0.
/// Returns the attractor of that seed; other fixed points may exist.
Valuation numafn_solve(const NumericalNetwork& net, double damping = 0.5, const GRConfig& cfg = {});

/// Closed-form limit kappa / (1 + kappa) of the scaled two-cycle
/// V(X) = kappa (1 - V(Y)), V(Y) = kappa (1 - V(X)). Requires 0 < kappa < 1.
double kappa_two_cycle(double kappa);

// ---------------------------------------------------------------------------
// Social abstract argumentation

struct VoteTally {
  unsigned long positive = 0;
  unsigned long negative = 0;

  friend bool operator==(const VoteTally&, const VoteTally&) = default;
};

/// p / (p + m + epsilon). Throws InputError for epsilon <= 0.
double tau_epsilon(const VoteTally& t, double epsilon);

struct SocialFramework {
  Framework framework;
  /// One tally per argument, indexed like the framework.
  std::vector<VoteTally> argument_votes;
  /// Voted attacks; attacks without a tally count with full strength 1.
  std::map<Attack, VoteTally> attack_votes;
  double epsilon = 0.01;

  void validate() const;
  double argument_support(ArgIndex x) const;
  double attack_support(const Attack& attack) const;
};

/// Product-semantics social model M(x) = tau(x) · prod(1 - tau(y,x) · M(y)),
/// found by damped iteration seeded at the argument supports.
Valuation social_solve(const SocialFramework& sf, double damping = 0.5, const GRConfig& cfg = {});

// ---------------------------------------------------------------------------
// Host/parasitoid population model (linearised escape functions)

struct HassellParams {
  double a1 = 2.0;
  double a2 = 3.0;
  double growth_lambda = 2.0;

  void validate() const;
};

/// (N, P, Q); plain non-negative reals, not argument values.
using HassellState = std::array<double, 3>;

enum class HassellUpdate {
  /// N, P and Q are updated in that order, each using the newest values.
  sequential,
  /// All three from the same previous state.
  simultaneous,
};

/// N' = lambda N (1 - a1 P)(1 - a2 Q); P' = a1 N P; Q' = a2 Q N (1 - a1 P).
/// Returns state_0 .. state_steps.
std::vector<HassellState> hassell_simulate(const HassellParams& p, const HassellState& state0,
                                           std::size_t steps,
                                           HassellUpdate update = HassellUpdate::sequential);

/// Non-trivial fixed point N = 1/a1, P = (a2 - a1)/(a1 a2),
/// Q = (lambda a1 - a2)/(lambda a1 a2). Throws InputError unless
/// lambda a1 >= a2 >= a1.
HassellState hassell_fixed_point(const HassellParams& p);

}  // namespace argeq
