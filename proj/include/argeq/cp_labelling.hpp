#pragma once

#include <vector>

#include "argeq/framework.hpp"
#include "argeq/semantics.hpp"

namespace argeq {

struct RelabelStep {
  ArgIndex argument;
  Label from;
  Label to;

  friend bool operator==(const RelabelStep&, const RelabelStep&) = default;
};

/// One-argument-at-a-time relabelling sequence and its endpoint.
struct SequenceTrace {
  std::vector<RelabelStep> steps;
  Labelling final;
};

/// Which candidate a contraction/expansion step picks when several qualify.
/// The endpoint does not depend on it; the trace does.
enum class TieBreak { first, last };

/// Contraction: relabel illegally-in or illegally-out arguments to und, one per
/// step, until none remain. The endpoint is the down-admissible labelling.
SequenceTrace down_admissible(const Framework& fw, const Labelling& labelling,
                              TieBreak tie_break = TieBreak::first);

/// Expansion: relabel illegally-und arguments to in (all attackers out) or out
/// (some attacker in) until none remain. Throws InputError if the input has
/// illegal in or out labels.
SequenceTrace up_complete(const Framework& fw, const Labelling& admissible,
                          TieBreak tie_break = TieBreak::first);

/// up_complete(down_admissible(labelling)); always a complete labelling.
Labelling cp_pipeline(const Framework& fw, const Labelling& labelling);

}  // namespace argeq
