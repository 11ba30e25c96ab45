#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "intnfa/interaction.hpp"
#include "intnfa/signature.hpp"

namespace intnfa {

/// True iff `i` can express a trace with no action on a lifeline of `ell`.
bool evades(const Interaction& i, const LifelineSet& ell);

/// True iff the empty trace belongs to the semantics of `i`, i.e. `i`
/// evades every lifeline.
bool accepts_empty(const Interaction& i);

/// The unique sub-interaction of `i` that keeps exactly the behaviors with no
/// action on `ell`; absent iff `i` does not evade `ell`.
std::optional<Interaction> prune(const Interaction& i, const LifelineSet& ell);

/// True iff no transition of `i` is labelled by `a`. Computed from its own
/// inference rules, not from next_steps.
bool cannot_express(const Interaction& i, const Action& a);

struct Step {
  Action action;
  Interaction target;

  friend bool operator==(const Step&, const Step&) = default;
};

/// Every `(a, i')` with `i --a--> i'` under the execution rules with delayed
/// choice. Sorted by action; duplicate-free; order is deterministic.
std::vector<Step> next_steps(const Interaction& i);

/// Successors of `i` for one action.
std::vector<Interaction> successors(const Interaction& i, const Action& a);

struct EnumerationLimits {
  /// Maximum number of (trace, term) pairs alive in one breadth-first layer.
  std::size_t node_cap = 1'000'000;
};

/// Every trace of the semantics of `i` of length at most `max_len`, by
/// breadth-first unfolding of the execution relation. Throws ResourceError
/// when a layer exceeds `limits.node_cap`.
std::set<Trace> enumerate_traces(const Interaction& i, std::size_t max_len,
                                 const EnumerationLimits& limits = {});

}  // namespace intnfa
