#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "intnfa/interaction.hpp"
#include "intnfa/nfa.hpp"
#include "intnfa/signature.hpp"

namespace intnfa {

/// Dense numbering of interaction terms, in order of first discovery.
class StateIndex {
public:
  std::optional<StateId> find(const Interaction& i) const;
  /// Returns the id of `i`, allocating the next one if it is new.
  std::pair<StateId, bool> intern(const Interaction& i);
  const Interaction& term(StateId q) const { return terms_.at(q); }
  std::size_t size() const noexcept { return terms_.size(); }

private:
  std::unordered_map<Interaction, StateId> ids_;
  std::vector<Interaction> terms_;
};

struct TranslationOptions {
  /// Merge reachable terms up to their normal form.
  bool simplified = true;
  std::size_t state_cap = 1'000'000;
};

struct Translation {
  Nfa nfa;
  /// State q of `nfa` is the interaction `states.term(q)`.
  StateIndex states;
};

/// Breadth-first exploration of the interactions reachable from `i0`. The
/// alphabet is the full alphabet of `sig`; a state accepts iff its term
/// accepts the empty trace. Throws ResourceError past `state_cap` states.
Translation build_nfa(const Signature& sig, const Interaction& i0,
                      const TranslationOptions& options = {});

/// One line per state: "<id>\t<term>".
std::string dump_states(const Translation& t, const Signature& sig);

/// True iff `i` only uses the empty interaction, actions, strict and seq.
bool is_basic(const Interaction& i);

/// Compositional baseline: maximal basic sub-terms go through build_nfa,
/// then alt, strict, loopS and par become union, concatenation, star and
/// shuffle. Throws UnsupportedScope on a seq or partial co-region above a
/// non-basic sub-term; the position is a dotted path of 1-based child
/// indices ("root" for the whole term).
Nfa compo(const Signature& sig, const Interaction& i);

}  // namespace intnfa
