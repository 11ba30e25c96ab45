#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "intnfa/signature.hpp"

namespace intnfa {

using StateId = std::uint32_t;
/// Index of an action in an automaton's alphabet.
using Symbol = std::uint32_t;

struct Edge {
  Symbol symbol;
  StateId target;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Transition {
  StateId source;
  Action action;
  StateId target;

  friend auto operator<=>(const Transition&, const Transition&) = default;
};

/// Finite automaton without epsilon transitions. States are 0..n-1.
/// Immutable; edges are stored per state, sorted by (symbol, target) and
/// duplicate-free.
class Nfa {
public:
  /// Single non-accepting state, empty alphabet.
  Nfa();

  /// Throws InputError on out-of-range state ids or actions outside the
  /// alphabet. The alphabet is sorted and deduplicated; transitions are
  /// deduplicated.
  Nfa(std::vector<Action> alphabet, std::size_t state_count, StateId initial,
      const std::vector<StateId>& accepting, const std::vector<Transition>& transitions);

  /// Automaton for the single word `w`.
  static Nfa word(std::vector<Action> alphabet, const Trace& w);

  const std::vector<Action>& alphabet() const noexcept { return alphabet_; }
  std::optional<Symbol> symbol_of(const Action& a) const;
  const Action& action_of(Symbol s) const { return alphabet_.at(s); }

  std::size_t state_count() const noexcept { return accepting_.size(); }
  std::size_t transition_count() const noexcept { return edges_.size(); }
  std::size_t accepting_count() const noexcept;
  StateId initial() const noexcept { return initial_; }
  bool is_accepting(StateId q) const { return accepting_.at(q) != 0; }
  std::vector<StateId> accepting_states() const;

  std::span<const Edge> edges(StateId q) const;
  std::vector<Transition> transitions() const;

  /// At most one edge per (state, symbol).
  bool is_deterministic() const noexcept;

  friend bool operator==(const Nfa&, const Nfa&) = default;

private:
  friend class NfaBuilder;

  std::vector<Action> alphabet_;
  StateId initial_ = 0;
  std::vector<char> accepting_;
  std::vector<std::uint32_t> offsets_;
  std::vector<Edge> edges_;
};

/// Incremental construction by symbol index over a fixed alphabet.
class NfaBuilder {
public:
  explicit NfaBuilder(std::vector<Action> alphabet);

  StateId add_state(bool accepting = false);
  void set_accepting(StateId q, bool accepting = true);
  void set_initial(StateId q) { initial_ = q; }
  void add_edge(StateId source, Symbol symbol, StateId target);
  std::size_t state_count() const noexcept { return accepting_.size(); }
  const std::vector<Action>& alphabet() const noexcept { return alphabet_; }

  Nfa build() &&;

private:
  std::vector<Action> alphabet_;
  StateId initial_ = 0;
  std::vector<char> accepting_;
  std::vector<std::pair<StateId, Edge>> edges_;
};

/// Deterministic automaton; missing transitions go to an implicit sink.
class Dfa {
public:
  /// Throws InputError if `a` is not deterministic.
  explicit Dfa(Nfa a);

  const Nfa& nfa() const noexcept { return nfa_; }
  std::size_t state_count() const noexcept { return nfa_.state_count(); }
  std::optional<StateId> next(StateId q, Symbol s) const;

  friend bool operator==(const Dfa&, const Dfa&) = default;

private:
  Nfa nfa_;
};

enum class Mode : std::uint8_t { Exact, Prefix };

struct RunResult {
  bool accepted = false;
  /// Actions read before the set of live states became empty (|w| if never).
  std::size_t consumed = 0;
};

/// States from which an accepting state is reachable.
std::vector<char> coreachable(const Nfa& a);

/// Subset simulation restricted to `live` states (see coreachable).
/// Throws InputError if an action of `w` is outside the alphabet.
RunResult simulate(const Nfa& a, const Trace& w, Mode mode, const std::vector<char>& live);

/// Exact: w is in L(A). Prefix: w is a prefix of some word of L(A).
bool run_word(const Nfa& a, const Trace& w, Mode mode);

/// Same automaton over a larger alphabet. Throws InputError if `alphabet`
/// misses an action of `a`.
Nfa with_alphabet(const Nfa& a, std::vector<Action> alphabet);

Nfa nfa_union(const Nfa& a, const Nfa& b);
Nfa concat(const Nfa& a, const Nfa& b);
Nfa star(const Nfa& a);
Nfa shuffle(const Nfa& a, const Nfa& b);

/// Restriction to the states reachable from the initial state.
Nfa accessible(const Nfa& a);
/// Restriction to states both reachable and co-reachable; the initial state
/// is always kept.
Nfa trim(const Nfa& a);

struct DeterminizeLimits {
  std::size_t state_cap = 1'000'000;
};

/// Subset construction over reachable non-empty subsets. Throws
/// ResourceError when more than `state_cap` subsets are created.
Dfa determinize(const Nfa& a, const DeterminizeLimits& limits = {});

enum class MinimizeAlgorithm : std::uint8_t { Hopcroft, Brzozowski };

/// Minimal partial DFA (no sink state), canonically numbered.
Dfa minimize_dfa(const Dfa& d, MinimizeAlgorithm algorithm = MinimizeAlgorithm::Hopcroft,
                 const DeterminizeLimits& limits = {});

/// Breadth-first renumbering from the initial state, edges taken in symbol
/// order; unreachable states are dropped.
Dfa canonicalize(const Dfa& d);

/// Equal canonical forms (meaningful for minimal DFAs over one alphabet).
bool isomorphic(const Dfa& a, const Dfa& b);

/// L(a) = L(b), by comparing canonical minimal DFAs over the union of the
/// alphabets.
bool equivalent(const Nfa& a, const Nfa& b, const DeterminizeLimits& limits = {});

/// Every word of L(A) of length at most `max_len`. Throws ResourceError
/// beyond `cap` explored nodes.
std::set<Trace> enumerate_language(const Nfa& a, std::size_t max_len,
                                   std::size_t cap = 1'000'000);

/// Graphviz digraph with action labels rendered through `sig`.
std::string to_dot(const Nfa& a, const Signature& sig);

/// `{"states":..,"transitions":..,"accepting":..,"build_time_us":..}`.
std::string stats_json(const Nfa& a, std::int64_t build_time_us);

}  // namespace intnfa
