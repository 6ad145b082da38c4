#include "argeq/afn.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "argeq/error.hpp"

namespace argeq {

AfnKind AfnKind::min() { return AfnKind(Tag::min); }

AfnKind AfnKind::product() { return AfnKind(Tag::product); }

AfnKind AfnKind::lambda(double weight, AfnKind base) {
  if (!(weight >= 0.0 && weight <= 1.0)) throw InputError("lambda weight must lie in [0,1]");
  AfnKind k(Tag::lambda);
  k.weight_ = weight;
  k.base_ = std::make_shared<const AfnKind>(std::move(base));
  return k;
}

double AfnKind::apply(std::span<const double> values) const {
  switch (tag_) {
    case Tag::min: {
      double m = 1.0;
      for (double x : values) m = std::min(m, x);
      return m;
    }
    case Tag::product: {
      double p = 1.0;
      for (double x : values) p *= x;
      return p;
    }
    case Tag::lambda: {
      const double g = base_->apply(values);
      return (1.0 - weight_) * std::min(0.5, g) + weight_ * std::max(0.5, g);
    }
  }
  return 0.0;
}

std::string AfnKind::name() const {
  switch (tag_) {
    case Tag::min: return "min";
    case Tag::product: return "product";
    case Tag::lambda: {
      std::ostringstream os;
      os << "lambda(" << weight_ << "," << base_->name() << ")";
      return os.str();
    }
  }
  return "?";
}

double eval_afn(const AfnKind& kind, std::span<const double> values) {
  for (double x : values)
    if (!(x >= 0.0 && x <= 1.0)) throw InputError("aggregate input " + std::to_string(x) + " outside [0,1]");
  return kind.apply(values);
}

namespace {

// T2 and T3 compare two evaluations that may differ by rounding (product
// reorders its factors); everything else is checked exactly.
constexpr double kRoundingSlack = 1e-12;

void record(AxiomResult& r, bool ok, const std::vector<double>& seq) {
  if (!ok && r.passed) {
    r.passed = false;
    r.witness = seq;
  }
}

void check_sequence(const AggregateFunction& g, const std::vector<double>& seq, AxiomReport& report,
                    std::mt19937_64& rng) {
  const double value = g(seq);

  std::vector<double> with_one = seq;
  with_one.insert(with_one.begin(), 1.0);
  record(report.t2, std::fabs(g(with_one) - value) <= kRoundingSlack, seq);

  if (seq.size() >= 2) {
    std::vector<double> swapped = seq;
    std::uniform_int_distribution<std::size_t> pick(0, seq.size() - 1);
    std::swap(swapped[pick(rng)], swapped[pick(rng)]);
    std::vector<double> reversed(seq.rbegin(), seq.rend());
    record(report.t3,
           std::fabs(g(swapped) - value) <= kRoundingSlack && std::fabs(g(reversed) - value) <= kRoundingSlack,
           seq);
  }

  const bool has_zero = std::find(seq.begin(), seq.end(), 0.0) != seq.end();
  record(report.t4, (value == 0.0) == has_zero, seq);

  const bool all_one = std::all_of(seq.begin(), seq.end(), [](double x) { return x == 1.0; });
  record(report.t5, (value == 1.0) == all_one, seq);

  const bool all_positive = std::all_of(seq.begin(), seq.end(), [](double x) { return x > 0.0; });
  const bool some_below_one = std::any_of(seq.begin(), seq.end(), [](double x) { return x < 1.0; });
  if (all_positive && some_below_one) record(report.t6_interior, value > 0.0 && value < 1.0, seq);
}

}  // namespace

AxiomReport check_afn_axioms(const AggregateFunction& g, std::size_t samples, std::uint64_t seed) {
  AxiomReport report;
  std::mt19937_64 rng(seed);

  report.t1.passed = g(std::vector<double>{}) == 1.0;

  const double grid[] = {0.0, 0.25, 0.5, 0.75, 1.0};
  std::vector<double> seq;
  auto grid_walk = [&](auto&& self, std::size_t remaining) -> void {
    check_sequence(g, seq, report, rng);
    if (remaining == 0) return;
    for (double x : grid) {
      seq.push_back(x);
      self(self, remaining - 1);
      seq.pop_back();
    }
  };
  grid_walk(grid_walk, 4);

  for (const auto& fixed : std::vector<std::vector<double>>{{0.0}, {1.0}, {1.0, 1.0}, {0.0, 1.0}, {0.5}})
    check_sequence(g, fixed, report, rng);

  std::uniform_int_distribution<std::size_t> length(0, 6);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> kind(0, 9);
  for (std::size_t s = 0; s < samples; ++s) {
    std::vector<double> random_seq(length(rng));
    for (double& x : random_seq) {
      // Mostly interior values, with exact boundary points mixed in so the
      // "if and only if" directions of T4/T5 are exercised.
      const int k = kind(rng);
      x = k == 0 ? 0.0 : k == 1 ? 1.0 : unit(rng);
    }
    check_sequence(g, random_seq, report, rng);
  }
  return report;
}

AxiomReport check_afn_axioms(const AfnKind& kind, std::size_t samples, std::uint64_t seed) {
  return check_afn_axioms([kind](std::span<const double> v) { return kind.apply(v); }, samples, seed);
}

double node_equation(const Framework& fw, const AfnKind& kind, std::span<const double> v, ArgIndex x) {
  const auto& att = fw.attackers(x);
  std::vector<double> complemented;
  complemented.reserve(att.size());
  for (ArgIndex y : att) complemented.push_back(1.0 - v[y]);
  return kind.apply(complemented);
}

double equation_residual(const Framework& fw, const AfnKind& kind, const Valuation& v) {
  if (v.size() != fw.size()) throw InputError("valuation does not cover the framework");
  double worst = 0.0;
  for (ArgIndex x = 0; x < fw.size(); ++x)
    worst = std::max(worst, std::fabs(v[x] - node_equation(fw, kind, v.values(), x)));
  return worst;
}

namespace {

void require_complete(const Framework& fw, const ArgSet& e) {
  ArgSet sorted = e;
  std::sort(sorted.begin(), sorted.end());
  const auto attacked = attacked_set(fw, sorted);
  for (ArgIndex x : sorted)
    if (std::binary_search(attacked.begin(), attacked.end(), x))
      throw InputError("extension is not conflict-free");
  for (ArgIndex x = 0; x < fw.size(); ++x) {
    const auto& att = fw.attackers(x);
    const bool defended = std::all_of(att.begin(), att.end(), [&](ArgIndex y) {
      return std::binary_search(attacked.begin(), attacked.end(), y);
    });
    const bool member = std::binary_search(sorted.begin(), sorted.end(), x);
    if (member && !defended) throw InputError("extension is not admissible");
    if (!member && defended) throw InputError("extension is not complete: '" + fw.name(x) + "' is defended");
  }
}

}  // namespace

Valuation extension_to_solution(const Framework& fw, const ArgSet& e) {
  require_complete(fw, e);
  std::vector<double> values(fw.size(), 0.5);
  for (ArgIndex x : attacked_set(fw, e)) values[x] = 0.0;
  for (ArgIndex x : e) values[x] = 1.0;
  Valuation v(std::move(values));
  if (equation_residual(fw, AfnKind::min(), v) != 0.0)
    throw std::logic_error("complete extension did not induce an exact solution");
  return v;
}

Valuation preferred_solution(const Framework& fw, const AfnKind& kind, const ArgSet& e, double tolerance,
                             std::size_t max_iterations) {
  require_complete(fw, e);
  std::vector<double> values(fw.size(), 0.5);
  std::vector<bool> undecided(fw.size(), true);
  for (ArgIndex x : attacked_set(fw, e)) {
    values[x] = 0.0;
    undecided[x] = false;
  }
  for (ArgIndex x : e) {
    values[x] = 1.0;
    undecided[x] = false;
  }

  // Damped Jacobi on the undecided block; the crisp part is already exact.
  constexpr double kDamping = 0.5;
  std::vector<double> next = values;
  double change = 0.0;
  for (std::size_t it = 0; it < max_iterations; ++it) {
    change = 0.0;
    for (ArgIndex x = 0; x < fw.size(); ++x) {
      if (!undecided[x]) continue;
      next[x] = (1.0 - kDamping) * values[x] + kDamping * node_equation(fw, kind, values, x);
      change = std::max(change, std::fabs(next[x] - values[x]));
    }
    values.swap(next);
    if (change < tolerance) {
      for (ArgIndex x = 0; x < fw.size(); ++x)
        if (undecided[x] && !(values[x] > 0.0 && values[x] < 1.0))
          throw ConvergenceError("undecided block collapsed onto a crisp value", change);
      return Valuation(std::move(values));
    }
    next = values;
  }
  throw ConvergenceError("undecided block did not converge", change);
}

}  // namespace argeq
