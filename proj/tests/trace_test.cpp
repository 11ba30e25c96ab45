#include <gtest/gtest.h>

#include <regex>

#include <json.hpp>

#include "intnfa/errors.hpp"
#include "intnfa/locks.hpp"
#include "intnfa/model.hpp"
#include "intnfa/semantics.hpp"
#include "intnfa/trace.hpp"
#include "intnfa/translator.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace intnfa {
namespace {

using testing::make_signature;
using testing::TermGenerator;

constexpr AnalysisOptions kExact{.mode = Mode::Exact};
constexpr AnalysisOptions kPrefix{.mode = Mode::Prefix};

Model fig5() {
  return parse_model(
      "lifelines l1 l2; messages m1 m2 m3;"
      "loopS(alt(seq(strict(l2!m1, l1?m1), l1!m2), l2?m3))");
}

std::string lock_letters(const Model& m, const Trace& t) {
  return testing::encode(t, [&](const Action& a) {
    return m.signature.message_name(a.message)[0];
  });
}

const std::regex kLockRegex("^[ab]*aab[ab]{3}u$");

TEST(TraceTest, InteractionMethodExamples) {
  auto sig = make_signature(2, 1);
  auto one = parse_term(sig, "l1!m1");
  EXPECT_EQ(analyze_interaction(sig, one, sig.parse_trace("l1!m1")).outcome, Outcome::Pass);

  auto strict = parse_term(sig, "strict(l1!m1, l2?m1)");
  auto partial = sig.parse_trace("l1!m1");
  auto exact = analyze_interaction(sig, strict, partial, kExact);
  EXPECT_EQ(exact.outcome, Outcome::Fail);
  EXPECT_EQ(exact.consumed, 1u);
  EXPECT_EQ(analyze_interaction(sig, strict, partial, kPrefix).outcome, Outcome::Pass);

  auto m = fig5();
  auto t = m.signature.parse_trace("l2!m1 l1?m1 l1!m2 l2?m3");
  EXPECT_EQ(analyze_interaction(m.signature, m.term, t).outcome, Outcome::Pass);
  EXPECT_EQ(enumerate_traces(m.term, 4).count(t), 1u);
}

TEST(TraceTest, InvalidActionsAreInputErrors) {
  auto small = make_signature(1, 1);
  Trace bad{Action{1, Direction::Emission, 0}};
  EXPECT_THROW(analyze_interaction(small, parse_term(small, "l1!m1"), bad), InputError);
  auto nfa = build_nfa(small, parse_term(small, "l1!m1")).nfa;
  EXPECT_THROW(analyze_nfa(nfa, bad), InputError);
}

TEST(TraceTest, NfaMethodExamples) {
  auto sig = make_signature(1, 1);
  auto empty = build_nfa(sig, Interaction::empty()).nfa;
  EXPECT_EQ(analyze_nfa(empty, {}).outcome, Outcome::Pass);

  auto lock = lock_model(LockSpec{});
  auto nfa = build_nfa(lock.signature, lock.term).nfa;
  auto v = analyze_nfa(nfa, lock.signature.parse_trace("l?a l!u"));
  EXPECT_EQ(v.outcome, Outcome::Fail);
  EXPECT_EQ(v.consumed, 1u);
  EXPECT_EQ(v.method, Method::Nfa);

  auto w = lock.signature.parse_trace("l?a l?a l?a l?b l?a l?b l?a l!u");
  ASSERT_TRUE(std::regex_match(lock_letters(lock, w), kLockRegex));
  EXPECT_EQ(analyze_nfa(nfa, w).outcome, Outcome::Pass);
  EXPECT_TRUE(run_word(nfa, w, Mode::Exact));
}

TEST(TraceTest, MethodsAgreeOnRandomPairs) {
  auto sig = make_signature(3, 2);
  TermGenerator gen(sig, 1234, 4);
  auto alphabet = sig.alphabet();
  std::mt19937_64 rng(99);
  int checked = 0;
  for (int n = 0; n < 500; ++n) {
    auto i = gen.next();
    NfaRunner runner(build_nfa(sig, i).nfa);
    // Half of the traces come from the semantics, half are random words.
    std::vector<Trace> accepted;
    try {
      accepted = gen_accepted(trim(runner.nfa()), 1, 0, 6, rng());
    } catch (const Unsatisfiable&) {
    }
    for (int k = 0; k < 20; ++k) {
      Trace t = k % 2 == 0 ? accepted.empty() ? Trace{} : accepted[0]
                           : testing::random_word(rng, alphabet, k % 7);
      if (k % 4 == 2 && !t.empty()) t.pop_back();
      for (auto options : {kExact, kPrefix}) {
        auto vi = analyze_interaction(sig, i, t, options);
        auto vn = runner.analyze(t, options);
        ASSERT_EQ(vi.outcome, vn.outcome) << to_string(i, sig) << " / " << sig.format(t);
        ASSERT_EQ(vi.consumed, vn.consumed) << to_string(i, sig) << " / " << sig.format(t);
        ++checked;
      }
    }
  }
  EXPECT_EQ(checked, 20000);
}

TEST(TraceTest, ExactPassMeansMembershipInTheSemantics) {
  auto sig = make_signature(2, 2);
  TermGenerator gen(sig, 4321, 4);
  auto words = testing::all_words(sig.alphabet(), 3);
  for (int n = 0; n < 40; ++n) {
    auto i = gen.next();
    auto sem = enumerate_traces(i, 3);
    for (const auto& w : words) {
      bool pass = analyze_interaction(sig, i, w).outcome == Outcome::Pass;
      ASSERT_EQ(pass, sem.count(w) == 1) << to_string(i, sig) << " / " << sig.format(w);
    }
  }
}

TEST(TraceTest, PrefixFailurePointIsStableUnderExtension) {
  auto sig = make_signature(3, 2);
  TermGenerator gen(sig, 555, 4);
  std::mt19937_64 rng(5);
  for (int n = 0; n < 200; ++n) {
    auto i = gen.next();
    auto t = testing::random_word(rng, sig.alphabet(), 4);
    auto v = analyze_interaction(sig, i, t, kPrefix);
    if (v.outcome != Outcome::Fail) continue;
    for (int k = 0; k < 5; ++k) {
      auto longer = t;
      auto tail = testing::random_word(rng, sig.alphabet(), 1 + k);
      longer.insert(longer.end(), tail.begin(), tail.end());
      auto w = analyze_interaction(sig, i, longer, kPrefix);
      EXPECT_EQ(w.outcome, Outcome::Fail);
      EXPECT_EQ(w.consumed, v.consumed);
    }
  }
}

TEST(TraceTest, TimeoutIsReported) {
  auto lock = lock_model(LockSpec{});
  Trace t(2000, lock.signature.parse_action("l?a"));
  auto v = analyze_interaction(lock.signature, lock.term, t,
                               {.mode = Mode::Exact, .timeout = std::chrono::nanoseconds(1)});
  EXPECT_EQ(v.outcome, Outcome::Timeout);
  EXPECT_LT(v.consumed, t.size());
}

TEST(TraceTest, GeneratedAcceptedTracesPassAndRespectTheWindow) {
  auto lock = lock_model(LockSpec{});
  auto nfa = trim(build_nfa(lock.signature, lock.term).nfa);
  auto traces = gen_accepted(nfa, 50, 7, 30, 11);
  ASSERT_EQ(traces.size(), 50u);
  for (const auto& t : traces) {
    EXPECT_GE(t.size(), 7u);
    EXPECT_LE(t.size(), 30u);
    EXPECT_EQ(analyze_nfa(nfa, t).outcome, Outcome::Pass);
    EXPECT_EQ(analyze_interaction(lock.signature, lock.term, t).outcome, Outcome::Pass);
    EXPECT_TRUE(std::regex_match(lock_letters(lock, t), kLockRegex));
  }
  EXPECT_EQ(gen_accepted(nfa, 50, 7, 30, 11), traces);
  EXPECT_NE(gen_accepted(nfa, 50, 7, 30, 12), traces);
}

TEST(TraceTest, GeneratingFromTheEmptyInteraction) {
  auto sig = make_signature(1, 1);
  auto nfa = build_nfa(sig, Interaction::empty()).nfa;
  auto traces = gen_accepted(nfa, 3, 0, 0, 1);
  EXPECT_EQ(traces, (std::vector<Trace>(3, Trace{})));
  EXPECT_THROW(gen_accepted(nfa, 3, 1, 5, 1), Unsatisfiable);
}

TEST(TraceTest, GeneratedErrorTracesFailBothMethods) {
  auto lock = lock_model(LockSpec{});
  auto nfa = trim(build_nfa(lock.signature, lock.term).nfa);
  auto base = gen_accepted(nfa, 40, 7, 20, 3);
  for (auto mode : {Mode::Exact, Mode::Prefix}) {
    auto errors = gen_errors(nfa, base, 8, {.mode = mode});
    ASSERT_EQ(errors.size(), base.size());
    for (std::size_t k = 0; k < errors.size(); ++k) {
      EXPECT_TRUE(std::equal(base[k].begin(), base[k].end(), errors[k].begin()));
      EXPECT_GT(errors[k].size(), base[k].size());
      AnalysisOptions opts{.mode = mode};
      EXPECT_EQ(analyze_nfa(nfa, errors[k], opts).outcome, Outcome::Fail);
      EXPECT_EQ(analyze_interaction(lock.signature, lock.term, errors[k], opts).outcome,
                Outcome::Fail);
    }
    EXPECT_EQ(gen_errors(nfa, base, 8, {.mode = mode}), errors);
  }
}

TEST(TraceTest, AppendingASecondUnlockFails) {
  auto lock = lock_model(LockSpec{});
  auto nfa = build_nfa(lock.signature, lock.term).nfa;
  for (auto t : gen_accepted(trim(nfa), 20, 7, 15, 5)) {
    t.push_back(lock.signature.parse_action("l!u"));
    EXPECT_FALSE(std::regex_match(lock_letters(lock, t), kLockRegex));
    EXPECT_EQ(analyze_nfa(nfa, t, kPrefix).outcome, Outcome::Fail);
  }
}

TEST(TraceTest, UniversalLanguagesCannotBeFalsified) {
  auto sig = make_signature(1, 1);
  auto nfa = build_nfa(sig, parse_term(sig, "loopS(alt(l1!m1, l1?m1))")).nfa;
  EXPECT_THROW(gen_errors(nfa, {Trace{}}, 1), CannotFalsify);
}

TEST(TraceTest, TraceFilesSkipCommentsAndBlankLines) {
  auto sig = make_signature(2, 1);
  auto traces = parse_trace_file(sig, "# header\nl1!m1 l2?m1\n\n.\n  l2?m1 # trailing\n");
  ASSERT_EQ(traces.size(), 3u);
  EXPECT_EQ(traces[0], sig.parse_trace("l1!m1 l2?m1"));
  EXPECT_TRUE(traces[1].empty());
  EXPECT_EQ(traces[2], sig.parse_trace("l2?m1"));
  EXPECT_THROW(parse_trace_file(sig, "l1!m1\nl9!m1\n"), InputError);
  try {
    parse_trace_file(sig, "l1!m1\nl1!zz\n");
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}

TEST(TraceTest, VerdictJsonLine) {
  Verdict v;
  v.outcome = Outcome::Fail;
  v.consumed = 3;
  v.elapsed = std::chrono::microseconds(17);
  v.method = Method::Nfa;
  v.mode = Mode::Prefix;
  auto j = nlohmann::json::parse(verdict_json(4, v));
  EXPECT_EQ(j["trace_index"], 4);
  EXPECT_EQ(j["method"], "nfa");
  EXPECT_EQ(j["mode"], "prefix");
  EXPECT_EQ(j["outcome"], "fail");
  EXPECT_EQ(j["consumed"], 3);
  EXPECT_EQ(j["elapsed_us"], 17);
}

}  // namespace
}  // namespace intnfa
