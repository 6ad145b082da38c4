#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace argeq {

/// Arguments are addressed by their position in declaration order.
using ArgIndex = std::size_t;

/// A set of arguments, kept sorted ascending by index.
using ArgSet = std::vector<ArgIndex>;

using Attack = std::pair<ArgIndex, ArgIndex>;

/// An abstract argumentation framework <S, R>.
///
/// Immutable once built. Argument order is the order of first appearance in
/// the input and is used for every deterministic tie-break in the library.
/// Self-attacks are allowed; duplicate attacks and duplicate names are not.
class Framework {
 public:
  Framework() = default;

  /// Throws InputError on invalid names, duplicate names, out-of-range
  /// endpoints or duplicate attacks.
  Framework(std::vector<std::string> names, std::vector<Attack> attacks);

  /// Name-based convenience constructor; attack endpoints must be declared.
  static Framework from_names(std::vector<std::string> names,
                              const std::vector<std::pair<std::string, std::string>>& attacks);

  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }

  const std::string& name(ArgIndex i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<ArgIndex> find(std::string_view name) const;
  /// Like find() but throws InputError for undeclared names.
  ArgIndex at(std::string_view name) const;

  const std::vector<Attack>& attacks() const { return attacks_; }
  const std::vector<ArgIndex>& attackers(ArgIndex x) const { return attackers_.at(x); }
  const std::vector<ArgIndex>& targets(ArgIndex x) const { return targets_.at(x); }
  bool has_attack(ArgIndex from, ArgIndex to) const;

  /// Names of the given arguments, in the given order.
  std::vector<std::string> names_of(const ArgSet& set) const;
  /// Indices of the given names, sorted. Throws InputError on unknown names.
  ArgSet set_of(const std::vector<std::string>& names) const;

  friend bool operator==(const Framework& a, const Framework& b) {
    return a.names_ == b.names_ && a.attacks_ == b.attacks_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<Attack> attacks_;
  std::vector<std::vector<ArgIndex>> attackers_;
  std::vector<std::vector<ArgIndex>> targets_;
  std::unordered_map<std::string, ArgIndex> index_;
};

/// True if `name` is a usable argument identifier (non-empty, no whitespace,
/// no parentheses or commas).
bool valid_argument_name(std::string_view name);

/// Attackers of x, ascending. Empty for sources.
ArgSet attackers_of(const Framework& fw, ArgIndex x);

/// E^+ : every argument attacked by some member of `e`.
ArgSet attacked_set(const Framework& fw, const ArgSet& e);

/// Induced subframework on `subset`; argument order is preserved.
Framework restrict(const Framework& fw, const ArgSet& subset);

/// Strongly connected components in reverse topological order of the
/// condensation: a component is listed before every component that attacks it.
std::vector<ArgSet> sccs(const Framework& fw);

/// Longest backward attack path from x. Throws CycleError if a cycle is
/// reachable backwards from x.
std::size_t attack_depth(const Framework& fw, ArgIndex x);

/// True if the framework contains no directed cycle (self-loops included).
bool is_acyclic(const Framework& fw);

}  // namespace argeq
