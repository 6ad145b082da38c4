#include "argeq/framework.hpp"

#include <algorithm>
#include <functional>

#include "argeq/error.hpp"

namespace argeq {

bool valid_argument_name(std::string_view name) {
  if (name.empty()) return false;
  return std::none_of(name.begin(), name.end(), [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f' ||
           c == '(' || c == ')' || c == ',';
  });
}

Framework::Framework(std::vector<std::string> names, std::vector<Attack> attacks)
    : names_(std::move(names)), attacks_(std::move(attacks)) {
  index_.reserve(names_.size());
  for (ArgIndex i = 0; i < names_.size(); ++i) {
    if (!valid_argument_name(names_[i]))
      throw InputError("invalid argument name '" + names_[i] + "'");
    if (!index_.emplace(names_[i], i).second)
      throw InputError("duplicate argument '" + names_[i] + "'");
  }
  attackers_.assign(names_.size(), {});
  targets_.assign(names_.size(), {});
  for (const auto& [from, to] : attacks_) {
    if (from >= names_.size() || to >= names_.size())
      throw InputError("attack endpoint out of range");
    attackers_[to].push_back(from);
    targets_[from].push_back(to);
  }
  for (auto& list : attackers_) std::sort(list.begin(), list.end());
  for (auto& list : targets_) std::sort(list.begin(), list.end());
  for (ArgIndex i = 0; i < names_.size(); ++i) {
    if (std::adjacent_find(attackers_[i].begin(), attackers_[i].end()) != attackers_[i].end())
      throw InputError("duplicate attack on '" + names_[i] + "'");
  }
}

Framework Framework::from_names(std::vector<std::string> names,
                                const std::vector<std::pair<std::string, std::string>>& attacks) {
  std::unordered_map<std::string, ArgIndex> index;
  for (ArgIndex i = 0; i < names.size(); ++i) index.emplace(names[i], i);
  std::vector<Attack> edges;
  edges.reserve(attacks.size());
  for (const auto& [from, to] : attacks) {
    auto f = index.find(from);
    auto t = index.find(to);
    if (f == index.end()) throw InputError("attack references undeclared argument '" + from + "'");
    if (t == index.end()) throw InputError("attack references undeclared argument '" + to + "'");
    edges.emplace_back(f->second, t->second);
  }
  return Framework(std::move(names), std::move(edges));
}

std::optional<ArgIndex> Framework::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ArgIndex Framework::at(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw InputError("unknown argument '" + std::string(name) + "'");
}

bool Framework::has_attack(ArgIndex from, ArgIndex to) const {
  const auto& list = attackers_.at(to);
  return std::binary_search(list.begin(), list.end(), from);
}

std::vector<std::string> Framework::names_of(const ArgSet& set) const {
  std::vector<std::string> out;
  out.reserve(set.size());
  for (ArgIndex i : set) out.push_back(name(i));
  return out;
}

ArgSet Framework::set_of(const std::vector<std::string>& names) const {
  ArgSet out;
  out.reserve(names.size());
  for (const auto& n : names) out.push_back(at(n));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

void check_members(const Framework& fw, const ArgSet& set) {
  for (ArgIndex i : set)
    if (i >= fw.size()) throw InputError("argument index " + std::to_string(i) + " not declared");
}

}  // namespace

ArgSet attackers_of(const Framework& fw, ArgIndex x) {
  if (x >= fw.size()) throw InputError("argument index " + std::to_string(x) + " not declared");
  return fw.attackers(x);
}

ArgSet attacked_set(const Framework& fw, const ArgSet& e) {
  check_members(fw, e);
  std::vector<bool> hit(fw.size(), false);
  for (ArgIndex x : e)
    for (ArgIndex y : fw.targets(x)) hit[y] = true;
  ArgSet out;
  for (ArgIndex i = 0; i < fw.size(); ++i)
    if (hit[i]) out.push_back(i);
  return out;
}

Framework restrict(const Framework& fw, const ArgSet& subset) {
  check_members(fw, subset);
  ArgSet keep = subset;
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());

  std::vector<std::size_t> remap(fw.size(), fw.size());
  std::vector<std::string> names;
  for (ArgIndex i : keep) {
    remap[i] = names.size();
    names.push_back(fw.name(i));
  }
  std::vector<Attack> edges;
  for (const auto& [from, to] : fw.attacks())
    if (remap[from] != fw.size() && remap[to] != fw.size()) edges.emplace_back(remap[from], remap[to]);
  return Framework(std::move(names), std::move(edges));
}

// Iterative Tarjan; roots and successors are visited in index order so the
// output is a pure function of the framework.
std::vector<ArgSet> sccs(const Framework& fw) {
  const std::size_t n = fw.size();
  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> number(n, kUnvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<ArgIndex> stack;
  std::vector<ArgSet> components;
  std::size_t counter = 0;

  struct Frame {
    ArgIndex node;
    std::size_t next_child;
  };
  std::vector<Frame> call;

  for (ArgIndex root = 0; root < n; ++root) {
    if (number[root] != kUnvisited) continue;
    call.push_back({root, 0});
    number[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;

    while (!call.empty()) {
      Frame& frame = call.back();
      const auto& succ = fw.targets(frame.node);
      if (frame.next_child < succ.size()) {
        ArgIndex w = succ[frame.next_child++];
        if (number[w] == kUnvisited) {
          number[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[frame.node] = std::min(low[frame.node], number[w]);
        }
        continue;
      }
      ArgIndex v = frame.node;
      call.pop_back();
      if (!call.empty()) low[call.back().node] = std::min(low[call.back().node], low[v]);
      if (low[v] == number[v]) {
        ArgSet component;
        ArgIndex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          component.push_back(w);
        } while (w != v);
        std::sort(component.begin(), component.end());
        components.push_back(std::move(component));
      }
    }
  }
  return components;
}

std::size_t attack_depth(const Framework& fw, ArgIndex x) {
  if (x >= fw.size()) throw InputError("argument index " + std::to_string(x) + " not declared");
  // 0 = unseen, 1 = on the current path, 2 = finished
  std::vector<int> state(fw.size(), 0);
  std::vector<std::size_t> depth(fw.size(), 0);
  std::function<void(ArgIndex)> visit = [&](ArgIndex v) {
    state[v] = 1;
    std::size_t best = 0;
    bool any = false;
    for (ArgIndex y : fw.attackers(v)) {
      if (state[y] == 1)
        throw CycleError("attack depth of '" + fw.name(x) + "' undefined: cycle through '" +
                         fw.name(y) + "'");
      if (state[y] == 0) visit(y);
      best = std::max(best, depth[y]);
      any = true;
    }
    depth[v] = any ? best + 1 : 0;
    state[v] = 2;
  };
  visit(x);
  return depth[x];
}

bool is_acyclic(const Framework& fw) {
  for (const auto& component : sccs(fw)) {
    if (component.size() > 1) return false;
    if (fw.has_attack(component.front(), component.front())) return false;
  }
  return true;
}

}  // namespace argeq
