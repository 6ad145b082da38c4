#include "argeq/related_models.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "argeq/error.hpp"

namespace argeq {

namespace {

void check_cover(const Framework& fw, const Valuation& v) {
  if (v.size() != fw.size()) throw InputError("valuation does not cover the framework");
}

void check_damping(double damping) {
  if (!(damping > 0.0 && damping <= 1.0)) throw InputError("damping must lie in (0, 1]");
}

double strongest_attacker(const Framework& fw, std::span<const double> v, ArgIndex x) {
  double m = 0.0;
  for (ArgIndex y : fw.attackers(x)) m = std::max(m, v[y]);
  return m;
}

// V <- (1 - d) V + d F(V) from `seed` until the max change drops below the
// tolerance.
std::vector<double> damped_fixed_point(std::vector<double> v,
                                       const std::function<double(std::span<const double>, ArgIndex)>& f,
                                       double damping, const GRConfig& cfg, const char* what) {
  std::vector<double> next(v.size());
  double change = 0.0;
  for (std::size_t it = 0; it < cfg.max_iterations; ++it) {
    change = 0.0;
    for (ArgIndex x = 0; x < v.size(); ++x) {
      next[x] = (1.0 - damping) * v[x] + damping * f(v, x);
      change = std::max(change, std::fabs(next[x] - v[x]));
    }
    v.swap(next);
    if (change < cfg.change_tolerance) return v;
  }
  if (v.empty()) return v;
  throw ConvergenceError(std::string(what) + " did not converge", change);
}

std::vector<ArgIndex> topological_order(const Framework& fw) {
  std::vector<ArgIndex> order;
  auto components = sccs(fw);
  for (auto it = components.rbegin(); it != components.rend(); ++it)
    order.insert(order.end(), it->begin(), it->end());
  return order;
}

}  // namespace

std::vector<Valuation> naive_iteration(const Framework& fw, const AfnKind& kind, const Valuation& v0,
                                       std::size_t steps) {
  check_cover(fw, v0);
  std::vector<Valuation> out{v0};
  out.reserve(steps + 1);
  for (std::size_t i = 0; i < steps; ++i) {
    const auto& prev = out.back();
    std::vector<double> next(fw.size());
    for (ArgIndex x = 0; x < fw.size(); ++x) next[x] = node_equation(fw, kind, prev.values(), x);
    out.emplace_back(std::move(next));
  }
  return out;
}

std::vector<Valuation> pereira_alpha(const Framework& fw, const Valuation& f, std::size_t steps) {
  check_cover(fw, f);
  std::vector<Valuation> out{f};
  out.reserve(steps + 1);
  for (std::size_t i = 0; i < steps; ++i) {
    const auto prev = out.back().values();
    std::vector<double> next(fw.size());
    for (ArgIndex x = 0; x < fw.size(); ++x)
      next[x] = 0.5 * prev[x] + 0.5 * std::min(f[x], 1.0 - strongest_attacker(fw, prev, x));
    out.emplace_back(std::move(next));
  }
  return out;
}

Valuation pereira_beta(const Framework& fw, const Valuation& f) {
  check_cover(fw, f);
  if (!is_acyclic(fw)) throw CycleError("beta propagation needs an acyclic framework");
  std::vector<double> beta(fw.size());
  for (ArgIndex x : topological_order(fw))
    beta[x] = fw.attackers(x).empty() ? f[x] : std::min(f[x], 1.0 - strongest_attacker(fw, beta, x));
  return Valuation(std::move(beta));
}

Valuation h_categoriser(const Framework& fw, const GRConfig& cfg) {
  auto rhs = [&fw](std::span<const double> h, ArgIndex x) {
    double sum = 0.0;
    for (ArgIndex y : fw.attackers(x)) sum += h[y];
    return 1.0 / (1.0 + sum);
  };
  if (is_acyclic(fw)) {
    std::vector<double> h(fw.size(), 1.0);
    for (ArgIndex x : topological_order(fw)) h[x] = rhs(h, x);
    return Valuation(std::move(h));
  }
  return Valuation(damped_fixed_point(std::vector<double>(fw.size(), 1.0), rhs, 0.5, cfg, "h-categoriser"));
}

void NumericalNetwork::validate() const {
  check_cover(framework, initial);
  for (const auto& [attack, w] : weights) {
    if (attack.first >= framework.size() || attack.second >= framework.size() ||
        !framework.has_attack(attack.first, attack.second))
      throw InputError("weight given for an attack that does not exist");
    if (!(w >= 0.0 && w <= 1.0)) throw InputError("attack weight outside [0,1]");
  }
}

double NumericalNetwork::weight(const Attack& attack) const {
  auto it = weights.find(attack);
  return it == weights.end() ? 1.0 : it->second;
}

Valuation numafn_solve(const NumericalNetwork& net, double damping, const GRConfig& cfg) {
  net.validate();
  check_damping(damping);
  const Framework& fw = net.framework;
  auto rhs = [&net, &fw](std::span<const double> v, ArgIndex x) {
    std::vector<double> complemented;
    for (ArgIndex y : fw.attackers(x)) complemented.push_back(1.0 - net.weight({y, x}) * v[y]);
    const double attack = net.g_kind.apply(complemented);
    const double pair[] = {net.initial[x], attack};
    return net.h_kind.apply(pair);
  };
  std::vector<double> seed(net.initial.values().begin(), net.initial.values().end());
  return Valuation(damped_fixed_point(std::move(seed), rhs, damping, cfg, "numerical network"));
}

double kappa_two_cycle(double kappa) {
  if (!(kappa > 0.0 && kappa < 1.0)) throw InputError("kappa must lie in (0,1)");
  return kappa / (1.0 + kappa);
}

double tau_epsilon(const VoteTally& t, double epsilon) {
  if (!(epsilon > 0.0)) throw InputError("epsilon must be positive");
  const double p = static_cast<double>(t.positive);
  const double m = static_cast<double>(t.negative);
  return p / (p + m + epsilon);
}

void SocialFramework::validate() const {
  if (!(epsilon > 0.0)) throw InputError("epsilon must be positive");
  if (argument_votes.size() != framework.size()) throw InputError("every argument needs a vote tally");
  for (const auto& [attack, tally] : attack_votes) {
    (void)tally;
    if (attack.first >= framework.size() || attack.second >= framework.size() ||
        !framework.has_attack(attack.first, attack.second))
      throw InputError("votes given for an attack that does not exist");
  }
}

double SocialFramework::argument_support(ArgIndex x) const { return tau_epsilon(argument_votes.at(x), epsilon); }

double SocialFramework::attack_support(const Attack& attack) const {
  auto it = attack_votes.find(attack);
  return it == attack_votes.end() ? 1.0 : tau_epsilon(it->second, epsilon);
}

Valuation social_solve(const SocialFramework& sf, double damping, const GRConfig& cfg) {
  sf.validate();
  check_damping(damping);
  const Framework& fw = sf.framework;
  std::vector<double> support(fw.size());
  for (ArgIndex x = 0; x < fw.size(); ++x) support[x] = sf.argument_support(x);
  auto rhs = [&](std::span<const double> m, ArgIndex x) {
    double value = support[x];
    for (ArgIndex y : fw.attackers(x)) value *= 1.0 - sf.attack_support({y, x}) * m[y];
    return value;
  };
  return Valuation(damped_fixed_point(support, rhs, damping, cfg, "social model"));
}

void HassellParams::validate() const {
  if (!(a1 > 0.0 && a2 > 0.0 && growth_lambda > 0.0))
    throw InputError("Hassell parameters must be strictly positive");
}

std::vector<HassellState> hassell_simulate(const HassellParams& p, const HassellState& state0, std::size_t steps,
                                           HassellUpdate update) {
  p.validate();
  std::vector<HassellState> out{state0};
  out.reserve(steps + 1);
  for (std::size_t i = 0; i < steps; ++i) {
    const auto [n, pp, q] = out.back();
    HassellState next;
    next[0] = p.growth_lambda * n * (1.0 - p.a1 * pp) * (1.0 - p.a2 * q);
    if (update == HassellUpdate::sequential) {
      next[1] = p.a1 * next[0] * pp;
      next[2] = p.a2 * q * next[0] * (1.0 - p.a1 * next[1]);
    } else {
      next[1] = p.a1 * n * pp;
      next[2] = p.a2 * q * n * (1.0 - p.a1 * pp);
    }
    for (double& x : next) x += 0.0;  // fold -0 into +0
    out.push_back(next);
  }
  return out;
}

HassellState hassell_fixed_point(const HassellParams& p) {
  p.validate();
  if (!(p.a2 >= p.a1 && p.growth_lambda * p.a1 >= p.a2))
    throw InputError("fixed point needs lambda*a1 >= a2 >= a1 for non-negative populations");
  const double n = 1.0 / p.a1;
  const double pp = (p.a2 - p.a1) / (p.a1 * p.a2);
  const double q = (p.growth_lambda * p.a1 - p.a2) / (p.growth_lambda * p.a1 * p.a2);

  const double residual = std::max({std::fabs(n - p.growth_lambda * n * (1 - p.a1 * pp) * (1 - p.a2 * q)),
                                    std::fabs(pp - p.a1 * n * pp), std::fabs(q - p.a2 * q * n * (1 - p.a1 * pp))});
  if (residual >= 1e-12) throw std::logic_error("Hassell fixed point does not satisfy its equations");
  return {n, pp, q};
}

}  // namespace argeq
