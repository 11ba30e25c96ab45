#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "intnfa/interaction.hpp"
#include "intnfa/nfa.hpp"
#include "intnfa/signature.hpp"

namespace intnfa {

enum class Outcome : std::uint8_t { Pass, Fail, Timeout };
enum class Method : std::uint8_t { Interaction, Nfa };

struct Verdict {
  Outcome outcome = Outcome::Fail;
  /// Actions read before failure; the trace length on Pass.
  std::size_t consumed = 0;
  std::chrono::nanoseconds elapsed{0};
  Method method = Method::Interaction;
  Mode mode = Mode::Exact;
};

struct AnalysisOptions {
  Mode mode = Mode::Exact;
  std::chrono::nanoseconds timeout = std::chrono::seconds(10);
};

std::string_view to_string(Outcome o) noexcept;
std::string_view to_string(Method m) noexcept;
std::string_view to_string(Mode m) noexcept;

/// Re-enacts `t` on a frontier of simplified, deduplicated interaction
/// terms. Throws InputError if an action is invalid for `sig`.
Verdict analyze_interaction(const Signature& sig, const Interaction& i, const Trace& t,
                            const AnalysisOptions& options = {});

/// Subset simulation on a fixed automaton; the set of live states is
/// computed once so one runner can analyze many traces.
class NfaRunner {
public:
  explicit NfaRunner(Nfa a);

  const Nfa& nfa() const noexcept { return nfa_; }
  Verdict analyze(const Trace& t, const AnalysisOptions& options = {}) const;

private:
  Nfa nfa_;
  std::vector<char> live_;
};

Verdict analyze_nfa(const Nfa& a, const Trace& t, const AnalysisOptions& options = {});

/// `count` words of L(A) with lengths in [min_len, max_len]: each picks a
/// length uniformly among those with an accepted word, then walks uniformly
/// among edges that can still reach acceptance in the remaining steps.
/// Throws Unsatisfiable when no length in the window is feasible.
std::vector<Trace> gen_accepted(const Nfa& a, std::size_t count, std::size_t min_len,
                                std::size_t max_len, std::uint64_t seed);

struct ErrorGenOptions {
  Mode mode = Mode::Exact;
  /// Maximum number of actions appended to one base trace.
  std::size_t max_extensions = 64;
};

/// Extends each base trace with uniformly random actions until it fails
/// `options.mode`. Throws CannotFalsify if a trace survives every extension.
std::vector<Trace> gen_errors(const Nfa& a, const std::vector<Trace>& base, std::uint64_t seed,
                              const ErrorGenOptions& options = {});

/// One trace per non-blank line; `#` starts a comment; `.` is the empty trace.
std::vector<Trace> parse_trace_file(const Signature& sig, std::string_view text);

/// `{"trace_index":..,"method":..,"mode":..,"outcome":..,"consumed":..,"elapsed_us":..}`.
std::string verdict_json(std::size_t trace_index, const Verdict& v);

}  // namespace intnfa
