#include "argeq/semantics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "argeq/error.hpp"

namespace argeq {

namespace {

void check_range(double value) {
  if (!(value >= 0.0 && value <= 1.0))
    throw InputError("value " + std::to_string(value) + " outside [0,1]");
}

std::vector<bool> membership(std::size_t n, const ArgSet& set) {
  std::vector<bool> member(n, false);
  for (ArgIndex i : set) {
    if (i >= n) throw InputError("argument index " + std::to_string(i) + " not declared");
    member[i] = true;
  }
  return member;
}

}  // namespace

Valuation::Valuation(std::vector<double> values) : values_(std::move(values)) {
  for (double v : values_) check_range(v);
}

Valuation Valuation::constant(std::size_t n, double value) {
  return Valuation(std::vector<double>(n, value));
}

Valuation Valuation::of(const Framework& fw,
                        std::initializer_list<std::pair<std::string_view, double>> values) {
  std::vector<double> out(fw.size(), 0.0);
  std::vector<bool> seen(fw.size(), false);
  for (const auto& [name, value] : values) {
    ArgIndex i = fw.at(name);
    if (seen[i]) throw InputError("duplicate value for '" + std::string(name) + "'");
    seen[i] = true;
    out[i] = value;
  }
  for (ArgIndex i = 0; i < fw.size(); ++i)
    if (!seen[i]) throw InputError("no value for '" + fw.name(i) + "'");
  return Valuation(std::move(out));
}

void Valuation::set(ArgIndex i, double value) {
  check_range(value);
  values_.at(i) = value;
}

const char* to_string(Label label) {
  switch (label) {
    case Label::in: return "in";
    case Label::out: return "out";
    case Label::und: return "und";
  }
  return "?";
}

Labelling valuation_to_labelling(const Valuation& v) {
  Labelling out(v.size());
  for (ArgIndex i = 0; i < v.size(); ++i) {
    check_range(v[i]);
    out[i] = v[i] == 1.0 ? Label::in : v[i] == 0.0 ? Label::out : Label::und;
  }
  return out;
}

Valuation labelling_to_valuation(const Labelling& labelling) {
  std::vector<double> out(labelling.size());
  for (std::size_t i = 0; i < labelling.size(); ++i)
    out[i] = labelling[i] == Label::in ? 1.0 : labelling[i] == Label::out ? 0.0 : 0.5;
  return Valuation(std::move(out));
}

InOut in_out_sets(const Valuation& v) {
  return in_out_sets(valuation_to_labelling(v));
}

InOut in_out_sets(const Labelling& labelling) {
  InOut result;
  for (ArgIndex i = 0; i < labelling.size(); ++i) {
    if (labelling[i] == Label::in) result.in.push_back(i);
    if (labelling[i] == Label::out) result.out.push_back(i);
  }
  return result;
}

IllegalSets classify_illegal(const Framework& fw, const Labelling& labelling) {
  if (labelling.size() != fw.size()) throw InputError("labelling does not cover the framework");
  IllegalSets result;
  for (ArgIndex x = 0; x < fw.size(); ++x) {
    bool all_out = true;
    bool some_in = false;
    for (ArgIndex y : fw.attackers(x)) {
      all_out = all_out && labelling[y] == Label::out;
      some_in = some_in || labelling[y] == Label::in;
    }
    switch (labelling[x]) {
      case Label::in:
        if (!all_out) result.in.push_back(x);
        break;
      case Label::out:
        if (!some_in) result.out.push_back(x);
        break;
      case Label::und:
        if (all_out || some_in) result.und.push_back(x);
        break;
    }
  }
  return result;
}

bool is_legal_assignment(const Framework& fw, const Valuation& v) {
  if (v.size() != fw.size()) throw InputError("valuation does not cover the framework");
  for (ArgIndex x = 0; x < fw.size(); ++x) {
    double strongest = 0.0;
    for (ArgIndex y : fw.attackers(x)) strongest = std::max(strongest, v[y]);
    const double value = v[x];
    bool ok;
    if (value == 1.0)
      ok = strongest == 0.0;
    else if (value == 0.0)
      ok = strongest == 1.0;
    else
      ok = strongest < 1.0 && strongest > 0.0;
    if (!ok) return false;
  }
  return true;
}

bool is_subset(const ArgSet& a, const ArgSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

ExtensionReport extension_properties(const Framework& fw, const ArgSet& e) {
  const auto member = membership(fw.size(), e);
  const auto attacked = membership(fw.size(), attacked_set(fw, e));

  ExtensionReport report;
  report.conflict_free = std::none_of(e.begin(), e.end(), [&](ArgIndex x) { return attacked[x]; });

  // x is defended when every attacker of x is attacked by e.
  auto defended = [&](ArgIndex x) {
    const auto& att = fw.attackers(x);
    return std::all_of(att.begin(), att.end(), [&](ArgIndex y) { return attacked[y]; });
  };
  report.admissible =
      report.conflict_free && std::all_of(e.begin(), e.end(), [&](ArgIndex x) { return defended(x); });

  bool contains_defended = true;
  for (ArgIndex x = 0; x < fw.size(); ++x)
    if (!member[x] && defended(x)) contains_defended = false;
  report.complete = report.admissible && contains_defended;

  bool covers = true;
  for (ArgIndex x = 0; x < fw.size(); ++x)
    if (!member[x] && !attacked[x]) covers = false;
  report.stable = report.conflict_free && covers;

  if (!report.complete) {
    report.preferred = false;
  } else if (fw.size() <= oracle_cap()) {
    ArgSet sorted = e;
    std::sort(sorted.begin(), sorted.end());
    bool maximal = true;
    for (const auto& other : enumerate_extensions(fw, Semantics::complete))
      if (other.size() > sorted.size() && is_subset(sorted, other)) maximal = false;
    report.preferred = maximal;
  }
  return report;
}

const char* to_string(Semantics s) {
  switch (s) {
    case Semantics::complete: return "complete";
    case Semantics::preferred: return "preferred";
    case Semantics::stable: return "stable";
    case Semantics::grounded: return "grounded";
  }
  return "?";
}

Semantics parse_semantics(std::string_view name) {
  if (name == "complete") return Semantics::complete;
  if (name == "preferred") return Semantics::preferred;
  if (name == "stable") return Semantics::stable;
  if (name == "grounded") return Semantics::grounded;
  throw InputError("unknown semantics '" + std::string(name) + "'");
}

std::size_t oracle_cap() {
  if (const char* env = std::getenv("ARGEQ_MAX_ORACLE_ARGS")) {
    char* end = nullptr;
    unsigned long long parsed = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return static_cast<std::size_t>(parsed);
  }
  return 20;
}

// Backtracking over labellings. Arguments are assigned in topological order of
// the SCC condensation so that each argument's legality can be checked as soon
// as it and all of its attackers carry a label.
std::vector<Labelling> enumerate_complete_labellings(const Framework& fw, std::size_t cap) {
  const std::size_t n = fw.size();
  if (n > cap)
    throw OracleCapExceeded("framework has " + std::to_string(n) + " arguments; oracle cap is " +
                            std::to_string(cap));

  std::vector<ArgIndex> order;
  auto components = sccs(fw);
  for (auto it = components.rbegin(); it != components.rend(); ++it)
    order.insert(order.end(), it->begin(), it->end());

  std::vector<std::size_t> position(n);
  for (std::size_t p = 0; p < n; ++p) position[order[p]] = p;
  std::vector<std::vector<ArgIndex>> check_at(n);
  for (ArgIndex x = 0; x < n; ++x) {
    std::size_t ready = position[x];
    for (ArgIndex y : fw.attackers(x)) ready = std::max(ready, position[y]);
    check_at[ready].push_back(x);
  }

  Labelling labelling(n, Label::und);
  std::vector<Labelling> found;

  auto legal = [&](ArgIndex x) {
    bool all_out = true;
    bool some_in = false;
    for (ArgIndex y : fw.attackers(x)) {
      all_out = all_out && labelling[y] == Label::out;
      some_in = some_in || labelling[y] == Label::in;
    }
    switch (labelling[x]) {
      case Label::in: return all_out;
      case Label::out: return some_in;
      case Label::und: return !all_out && !some_in;
    }
    return false;
  };

  auto search = [&](auto&& self, std::size_t p) -> void {
    if (p == n) {
      found.push_back(labelling);
      return;
    }
    for (Label l : {Label::in, Label::out, Label::und}) {
      labelling[order[p]] = l;
      if (std::all_of(check_at[p].begin(), check_at[p].end(), legal)) self(self, p + 1);
    }
    labelling[order[p]] = Label::und;
  };
  search(search, 0);

  std::sort(found.begin(), found.end(), [](const Labelling& a, const Labelling& b) {
    return in_out_sets(a).in < in_out_sets(b).in;
  });
  return found;
}

std::vector<ArgSet> enumerate_extensions(const Framework& fw, Semantics semantics) {
  return enumerate_extensions(fw, semantics, oracle_cap());
}

std::vector<ArgSet> enumerate_extensions(const Framework& fw, Semantics semantics, std::size_t cap) {
  const auto labellings = enumerate_complete_labellings(fw, cap);
  std::vector<ArgSet> complete;
  complete.reserve(labellings.size());
  for (const auto& l : labellings) complete.push_back(in_out_sets(l).in);

  std::vector<ArgSet> result;
  switch (semantics) {
    case Semantics::complete:
      result = complete;
      break;
    case Semantics::preferred:
      for (const auto& e : complete) {
        bool maximal = std::none_of(complete.begin(), complete.end(), [&](const ArgSet& other) {
          return other.size() > e.size() && is_subset(e, other);
        });
        if (maximal) result.push_back(e);
      }
      break;
    case Semantics::stable:
      for (const auto& l : labellings)
        if (std::find(l.begin(), l.end(), Label::und) == l.end()) result.push_back(in_out_sets(l).in);
      break;
    case Semantics::grounded: {
      // The grounded extension is the unique minimal complete extension; the
      // direct least-fixed-point computation must agree.
      auto minimal = std::min_element(complete.begin(), complete.end(),
                                      [](const ArgSet& a, const ArgSet& b) { return a.size() < b.size(); });
      for (const auto& e : complete)
        if (!is_subset(*minimal, e)) throw std::logic_error("complete extensions lack a least element");
      if (*minimal != grounded_extension(fw))
        throw std::logic_error("enumerated grounded extension disagrees with the fixed-point computation");
      result.push_back(*minimal);
      break;
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

ArgSet grounded_extension(const Framework& fw) {
  ArgSet current;
  while (true) {
    const auto attacked = membership(fw.size(), attacked_set(fw, current));
    ArgSet next;
    for (ArgIndex x = 0; x < fw.size(); ++x) {
      const auto& att = fw.attackers(x);
      if (std::all_of(att.begin(), att.end(), [&](ArgIndex y) { return attacked[y]; })) next.push_back(x);
    }
    if (next == current) return current;
    current = std::move(next);
  }
}

}  // namespace argeq
