#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "intnfa/interaction.hpp"
#include "intnfa/nfa.hpp"
#include "intnfa/signature.hpp"

namespace intnfa::testing {

/// Lifelines l1..lL and messages m1..mM.
Signature make_signature(std::size_t lifelines, std::size_t messages);

/// Random interaction terms over a signature. Every operator of the term
/// language appears, including partial co-regions with random lifeline sets.
class TermGenerator {
public:
  TermGenerator(const Signature& sig, std::uint64_t seed, std::size_t max_depth);

  Interaction next();
  Action action();
  LifelineSet lifelines();
  std::mt19937_64& rng() { return rng_; }

private:
  Interaction build(std::size_t depth);

  const Signature& sig_;
  std::mt19937_64 rng_;
  std::size_t max_depth_;
};

/// Random automaton over `alphabet` with `states` states; each (state,
/// symbol, state) triple is an edge with probability `density`.
Nfa random_nfa(std::mt19937_64& rng, std::size_t states, const std::vector<Action>& alphabet,
               double density, double accepting_probability = 0.3);

/// Random word over `alphabet`.
Trace random_word(std::mt19937_64& rng, const std::vector<Action>& alphabet, std::size_t length);

}  // namespace intnfa::testing
