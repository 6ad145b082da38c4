#include "argeq/cp_labelling.hpp"

#include <optional>
#include <stdexcept>

#include "argeq/error.hpp"

namespace argeq {

namespace {

struct AttackerSummary {
  bool all_out = true;
  bool some_in = false;
};

AttackerSummary summarize(const Framework& fw, const Labelling& l, ArgIndex x) {
  AttackerSummary s;
  for (ArgIndex y : fw.attackers(x)) {
    s.all_out = s.all_out && l[y] == Label::out;
    s.some_in = s.some_in || l[y] == Label::in;
  }
  return s;
}

template <typename Pred>
std::optional<ArgIndex> pick(std::size_t n, TieBreak tie_break, Pred&& qualifies) {
  if (tie_break == TieBreak::first) {
    for (ArgIndex x = 0; x < n; ++x)
      if (qualifies(x)) return x;
  } else {
    for (ArgIndex x = n; x-- > 0;)
      if (qualifies(x)) return x;
  }
  return std::nullopt;
}

void check_size(const Framework& fw, const Labelling& l) {
  if (l.size() != fw.size()) throw InputError("labelling does not cover the framework");
}

}  // namespace

SequenceTrace down_admissible(const Framework& fw, const Labelling& labelling, TieBreak tie_break) {
  check_size(fw, labelling);
  SequenceTrace trace{{}, labelling};
  Labelling& l = trace.final;
  while (auto x = pick(fw.size(), tie_break, [&](ArgIndex a) {
           const auto s = summarize(fw, l, a);
           return (l[a] == Label::in && !s.all_out) || (l[a] == Label::out && !s.some_in);
         })) {
    trace.steps.push_back({*x, l[*x], Label::und});
    l[*x] = Label::und;
  }
  return trace;
}

SequenceTrace up_complete(const Framework& fw, const Labelling& admissible, TieBreak tie_break) {
  check_size(fw, admissible);
  const auto illegal = classify_illegal(fw, admissible);
  if (!illegal.in.empty() || !illegal.out.empty())
    throw InputError("up_complete requires an admissible labelling");

  SequenceTrace trace{{}, admissible};
  Labelling& l = trace.final;
  while (auto x = pick(fw.size(), tie_break, [&](ArgIndex a) {
           if (l[a] != Label::und) return false;
           const auto s = summarize(fw, l, a);
           return s.all_out || s.some_in;
         })) {
    const auto s = summarize(fw, l, *x);
    if (s.all_out && s.some_in) throw std::logic_error("argument qualifies for both in and out");
    const Label to = s.all_out ? Label::in : Label::out;
    trace.steps.push_back({*x, Label::und, to});
    l[*x] = to;
  }
  return trace;
}

Labelling cp_pipeline(const Framework& fw, const Labelling& labelling) {
  return up_complete(fw, down_admissible(fw, labelling).final).final;
}

}  // namespace argeq
