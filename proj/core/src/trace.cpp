#include "intnfa/trace.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "intnfa/errors.hpp"
#include "intnfa/semantics.hpp"
#include "intnfa/simplifier.hpp"

namespace intnfa {

using Clock = std::chrono::steady_clock;

std::string_view to_string(Outcome o) noexcept {
  switch (o) {
    case Outcome::Pass:
      return "pass";
    case Outcome::Fail:
      return "fail";
    case Outcome::Timeout:
      return "timeout";
  }
  return "?";
}

std::string_view to_string(Method m) noexcept {
  return m == Method::Interaction ? "interaction" : "nfa";
}

std::string_view to_string(Mode m) noexcept { return m == Mode::Exact ? "exact" : "prefix"; }

Verdict analyze_interaction(const Signature& sig, const Interaction& i, const Trace& t,
                            const AnalysisOptions& options) {
  for (const auto& a : t) {
    if (!sig.valid(a)) throw InputError("trace action outside the signature");
  }
  const auto start = Clock::now();
  Verdict v;
  v.method = Method::Interaction;
  v.mode = options.mode;

  std::vector<Interaction> frontier{simplify(i)};
  std::unordered_set<Interaction> seen;
  std::vector<Interaction> next;
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (Clock::now() - start > options.timeout) {
      v.outcome = Outcome::Timeout;
      v.consumed = k;
      v.elapsed = Clock::now() - start;
      return v;
    }
    seen.clear();
    next.clear();
    for (const auto& term : frontier) {
      for (auto& target : successors(term, t[k])) {
        auto s = simplify(target);
        if (seen.insert(s).second) next.push_back(std::move(s));
      }
    }
    if (next.empty()) {
      v.outcome = Outcome::Fail;
      v.consumed = k;
      v.elapsed = Clock::now() - start;
      return v;
    }
    frontier.swap(next);
  }
  bool pass = options.mode == Mode::Prefix ||
              std::any_of(frontier.begin(), frontier.end(),
                          [](const Interaction& term) { return accepts_empty(term); });
  v.outcome = pass ? Outcome::Pass : Outcome::Fail;
  v.consumed = t.size();
  v.elapsed = Clock::now() - start;
  return v;
}

NfaRunner::NfaRunner(Nfa a) : nfa_(std::move(a)), live_(coreachable(nfa_)) {}

Verdict NfaRunner::analyze(const Trace& t, const AnalysisOptions& options) const {
  const auto start = Clock::now();
  auto r = simulate(nfa_, t, options.mode, live_);
  Verdict v;
  v.method = Method::Nfa;
  v.mode = options.mode;
  v.outcome = r.accepted ? Outcome::Pass : Outcome::Fail;
  v.consumed = r.consumed;
  v.elapsed = Clock::now() - start;
  if (v.elapsed > options.timeout) v.outcome = Outcome::Timeout;
  return v;
}

Verdict analyze_nfa(const Nfa& a, const Trace& t, const AnalysisOptions& options) {
  return NfaRunner(a).analyze(t, options);
}

std::vector<Trace> gen_accepted(const Nfa& a, std::size_t count, std::size_t min_len,
                                std::size_t max_len, std::uint64_t seed) {
  if (min_len > max_len) throw InputError("minimum length exceeds maximum length");
  const auto n = a.state_count();
  // feasible[r][q]: some accepting state is reachable from q in exactly r steps.
  std::vector<std::vector<char>> feasible(max_len + 1, std::vector<char>(n, 0));
  for (StateId q = 0; q < n; ++q) feasible[0][q] = a.is_accepting(q) ? 1 : 0;
  for (std::size_t r = 1; r <= max_len; ++r) {
    for (StateId q = 0; q < n; ++q) {
      for (const auto& e : a.edges(q)) {
        if (feasible[r - 1][e.target]) {
          feasible[r][q] = 1;
          break;
        }
      }
    }
  }
  std::vector<std::size_t> lengths;
  for (auto len = min_len; len <= max_len; ++len) {
    if (feasible[len][a.initial()]) lengths.push_back(len);
  }
  if (lengths.empty()) {
    throw Unsatisfiable("no accepted word with length in [" + std::to_string(min_len) + ", " +
                        std::to_string(max_len) + "]");
  }

  std::mt19937_64 rng(seed);
  std::vector<Trace> out;
  out.reserve(count);
  std::vector<const Edge*> choices;
  for (std::size_t k = 0; k < count; ++k) {
    auto len = lengths[std::uniform_int_distribution<std::size_t>(0, lengths.size() - 1)(rng)];
    Trace w;
    w.reserve(len);
    StateId q = a.initial();
    for (auto r = len; r > 0; --r) {
      choices.clear();
      for (const auto& e : a.edges(q)) {
        if (feasible[r - 1][e.target]) choices.push_back(&e);
      }
      const auto* e =
          choices[std::uniform_int_distribution<std::size_t>(0, choices.size() - 1)(rng)];
      w.push_back(a.action_of(e->symbol));
      q = e->target;
    }
    out.push_back(std::move(w));
  }
  return out;
}

std::vector<Trace> gen_errors(const Nfa& a, const std::vector<Trace>& base, std::uint64_t seed,
                              const ErrorGenOptions& options) {
  if (a.alphabet().empty()) throw CannotFalsify("the automaton has an empty alphabet");
  NfaRunner runner(a);
  AnalysisOptions analysis;
  analysis.mode = options.mode;
  std::vector<Trace> out;
  out.reserve(base.size());
  for (std::size_t k = 0; k < base.size(); ++k) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(k)};
    std::mt19937_64 rng(seq);
    std::uniform_int_distribution<std::size_t> pick(0, a.alphabet().size() - 1);
    Trace t = base[k];
    bool failed = false;
    for (std::size_t step = 0; step < options.max_extensions && !failed; ++step) {
      t.push_back(a.alphabet()[pick(rng)]);
      failed = runner.analyze(t, analysis).outcome == Outcome::Fail;
    }
    if (!failed) {
      throw CannotFalsify("trace " + std::to_string(k) + " still passes after " +
                          std::to_string(options.max_extensions) + " random extensions");
    }
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<Trace> parse_trace_file(const Signature& sig, std::string_view text) {
  std::vector<Trace> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    try {
      out.push_back(sig.parse_trace(line));
    } catch (const InputError& e) {
      throw InputError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

std::string verdict_json(std::size_t trace_index, const Verdict& v) {
  nlohmann::ordered_json j;
  j["trace_index"] = trace_index;
  j["method"] = to_string(v.method);
  j["mode"] = to_string(v.mode);
  j["outcome"] = to_string(v.outcome);
  j["consumed"] = v.consumed;
  j["elapsed_us"] = std::chrono::duration_cast<std::chrono::microseconds>(v.elapsed).count();
  return j.dump();
}

}  // namespace intnfa
