#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "argeq/framework.hpp"

namespace argeq {

/// Total map from arguments (by index) to values in [0,1].
class Valuation {
 public:
  Valuation() = default;
  /// Throws InputError if any value lies outside [0,1] or is NaN.
  explicit Valuation(std::vector<double> values);

  static Valuation constant(std::size_t n, double value);
  /// Builds a valuation from name/value pairs that must cover every argument.
  static Valuation of(const Framework& fw,
                      std::initializer_list<std::pair<std::string_view, double>> values);

  std::size_t size() const { return values_.size(); }
  double operator[](ArgIndex i) const { return values_[i]; }
  double at(ArgIndex i) const { return values_.at(i); }
  void set(ArgIndex i, double value);

  std::span<const double> values() const { return values_; }

  friend bool operator==(const Valuation&, const Valuation&) = default;

 private:
  std::vector<double> values_;
};

enum class Label { in, out, und };

using Labelling = std::vector<Label>;

const char* to_string(Label label);

/// 1 -> in, 0 -> out, anything strictly between -> und.
Labelling valuation_to_labelling(const Valuation& v);

/// in -> 1, out -> 0, und -> 1/2.
Valuation labelling_to_valuation(const Labelling& labelling);

struct InOut {
  ArgSet in;
  ArgSet out;
};

InOut in_out_sets(const Valuation& v);
InOut in_out_sets(const Labelling& labelling);

/// Arguments whose label violates the Caminada legality condition.
struct IllegalSets {
  ArgSet in;
  ArgSet out;
  ArgSet und;

  bool legal() const { return in.empty() && out.empty() && und.empty(); }
};

IllegalSets classify_illegal(const Framework& fw, const Labelling& labelling);

/// Numeric legality: 1 with all attackers 0; 0 with some attacker 1; or an
/// interior value with no attacker at 1 and some attacker above 0.
bool is_legal_assignment(const Framework& fw, const Valuation& v);

struct ExtensionReport {
  bool conflict_free = false;
  bool admissible = false;
  bool complete = false;
  bool stable = false;
  /// Empty when the framework exceeds the oracle cap and the set is complete
  /// (maximality then needs enumeration).
  std::optional<bool> preferred;
};

ExtensionReport extension_properties(const Framework& fw, const ArgSet& e);

enum class Semantics { complete, preferred, stable, grounded };

const char* to_string(Semantics s);
/// Throws InputError for unknown names.
Semantics parse_semantics(std::string_view name);

/// Largest framework the brute-force oracles accept. Defaults to 20 and can be
/// overridden through the ARGEQ_MAX_ORACLE_ARGS environment variable.
std::size_t oracle_cap();

/// Exact extension enumeration by search over legal labellings. Results are
/// duplicate-free and sorted lexicographically by member indices.
/// Throws OracleCapExceeded when fw.size() > cap.
std::vector<ArgSet> enumerate_extensions(const Framework& fw, Semantics semantics);
std::vector<ArgSet> enumerate_extensions(const Framework& fw, Semantics semantics, std::size_t cap);

/// Every legal (complete) labelling of fw, same order as the complete extensions.
std::vector<Labelling> enumerate_complete_labellings(const Framework& fw, std::size_t cap);

/// Least fixed point of the characteristic function, computed directly.
ArgSet grounded_extension(const Framework& fw);

/// Sorted-set helpers used across modules.
bool is_subset(const ArgSet& a, const ArgSet& b);

}  // namespace argeq
