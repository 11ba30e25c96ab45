#include <gtest/gtest.h>

#include <regex>

#include <json.hpp>

#include "intnfa/errors.hpp"
#include "intnfa/nfa.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace intnfa {
namespace {

using testing::Language;

class NfaTest : public ::testing::Test {
protected:
  Signature sig = testing::make_signature(2, 1);
  Action a = sig.parse_action("l1!m1");
  Action b = sig.parse_action("l2!m1");
  std::vector<Action> ab{a, b};

  Nfa random(std::mt19937_64& rng, std::size_t states = 4, double density = 0.25) const {
    return testing::random_nfa(rng, states, ab, density);
  }

  // (a|b)* a (a|b)^n with n + 2 states.
  Nfa nth_from_last(std::size_t n) const {
    std::vector<Transition> ts{{0, a, 0}, {0, b, 0}, {0, a, 1}};
    for (StateId q = 1; q <= n; ++q) {
      ts.push_back({q, a, q + 1});
      ts.push_back({q, b, q + 1});
    }
    return Nfa(ab, n + 2, 0, {static_cast<StateId>(n + 1)}, ts);
  }
};

TEST_F(NfaTest, ConstructionValidatesAndDeduplicates) {
  Nfa n(ab, 2, 0, {1}, {{0, a, 1}, {0, a, 1}, {1, b, 0}});
  EXPECT_EQ(n.transition_count(), 2u);
  EXPECT_THROW(Nfa(ab, 2, 2, {}, {}), InputError);
  EXPECT_THROW(Nfa(ab, 2, 0, {5}, {}), InputError);
  EXPECT_THROW(Nfa(ab, 2, 0, {}, {{0, a, 3}}), InputError);
  EXPECT_THROW(Nfa({a}, 2, 0, {}, {{0, b, 1}}), InputError);
  EXPECT_THROW(Dfa(Nfa(ab, 2, 0, {}, {{0, a, 0}, {0, a, 1}})), InputError);
}

TEST_F(NfaTest, RunWordOnTheEmptyWord) {
  Nfa accept_all(ab, 1, 0, {0}, {});
  EXPECT_TRUE(run_word(accept_all, {}, Mode::Exact));
  EXPECT_THROW(run_word(Nfa({a}, 1, 0, {0}, {}), {b}, Mode::Exact), InputError);
}

TEST_F(NfaTest, ExactRunsAgreeWithPathSearch) {
  std::mt19937_64 rng(1);
  auto words = testing::all_words(ab, 5);
  for (int n = 0; n < 50; ++n) {
    auto nfa = random(rng);
    for (const auto& w : words) {
      ASSERT_EQ(run_word(nfa, w, Mode::Exact), testing::path_accepts(nfa, w));
    }
  }
}

TEST_F(NfaTest, PrefixRunsAgreeWithBoundedLanguage) {
  std::mt19937_64 rng(2);
  for (int n = 0; n < 30; ++n) {
    auto nfa = random(rng);
    // Any live state reaches acceptance within state_count steps.
    auto lang = enumerate_language(nfa, 3 + nfa.state_count());
    for (const auto& w : testing::all_words(ab, 3)) {
      bool is_prefix = std::any_of(lang.begin(), lang.end(), [&](const Trace& v) {
        return v.size() >= w.size() && std::equal(w.begin(), w.end(), v.begin());
      });
      ASSERT_EQ(run_word(nfa, w, Mode::Prefix), is_prefix);
    }
  }
}

TEST_F(NfaTest, SimulateReportsTheFailurePoint) {
  Nfa n = Nfa::word(ab, {a, b, a});
  auto live = coreachable(n);
  EXPECT_EQ(simulate(n, {a, a}, Mode::Prefix, live).consumed, 1u);
  EXPECT_EQ(simulate(n, {a, b}, Mode::Exact, live).consumed, 2u);
  EXPECT_FALSE(simulate(n, {a, b}, Mode::Exact, live).accepted);
  EXPECT_TRUE(simulate(n, {a, b}, Mode::Prefix, live).accepted);
}

TEST_F(NfaTest, ShuffleOfTwoLettersGivesBothOrders) {
  auto s = shuffle(Nfa::word(ab, {a}), Nfa::word(ab, {b}));
  EXPECT_EQ(enumerate_language(s, 4), (Language{{a, b}, {b, a}}));
}

TEST_F(NfaTest, StarAcceptsEmptyAndRepetitions) {
  auto s = star(Nfa::word({a}, {a}));
  EXPECT_TRUE(run_word(s, {}, Mode::Exact));
  EXPECT_TRUE(run_word(s, {a, a}, Mode::Exact));
  EXPECT_EQ(enumerate_language(s, 3), (Language{{}, {a}, {a, a}, {a, a, a}}));
}

TEST_F(NfaTest, RegularOperationsMatchLanguageOracles) {
  std::mt19937_64 rng(3);
  constexpr std::size_t k = 5;
  for (int n = 0; n < 60; ++n) {
    auto x = random(rng, 3, 0.3);
    auto y = random(rng, 3, 0.3);
    auto lx = enumerate_language(x, k);
    auto ly = enumerate_language(y, k);
    auto lu = lx;
    lu.insert(ly.begin(), ly.end());
    EXPECT_EQ(enumerate_language(nfa_union(x, y), k), lu);
    EXPECT_EQ(enumerate_language(concat(x, y), k), testing::concat_lang(lx, ly, k));
    EXPECT_EQ(enumerate_language(star(x), k), testing::star_lang(lx, k));
    EXPECT_EQ(enumerate_language(shuffle(x, y), k), testing::shuffle_lang(lx, ly, k));
  }
}

TEST_F(NfaTest, RegularOperationsMergeAlphabets) {
  auto u = nfa_union(Nfa::word({a}, {a}), Nfa::word({b}, {b}));
  EXPECT_EQ(u.alphabet(), ab);
  EXPECT_EQ(enumerate_language(u, 2), (Language{{a}, {b}}));
}

TEST_F(NfaTest, DeterminizeAndMinimizePreserveBoundedLanguage) {
  std::mt19937_64 rng(4);
  for (int n = 0; n < 100; ++n) {
    auto nfa = random(rng, 5, 0.2);
    auto dfa = determinize(nfa);
    EXPECT_TRUE(dfa.nfa().is_deterministic());
    auto lang = enumerate_language(nfa, 6);
    EXPECT_EQ(enumerate_language(dfa.nfa(), 6), lang);
    for (auto algo : {MinimizeAlgorithm::Hopcroft, MinimizeAlgorithm::Brzozowski}) {
      auto min = minimize_dfa(dfa, algo);
      EXPECT_EQ(enumerate_language(min.nfa(), 6), lang);
      EXPECT_LE(min.state_count(), dfa.state_count());
    }
  }
}

TEST_F(NfaTest, HopcroftAndBrzozowskiAgreeUpToIsomorphism) {
  std::mt19937_64 rng(5);
  for (int n = 0; n < 200; ++n) {
    auto dfa = determinize(random(rng, 6, 0.2));
    auto h = minimize_dfa(dfa, MinimizeAlgorithm::Hopcroft);
    auto z = minimize_dfa(dfa, MinimizeAlgorithm::Brzozowski);
    ASSERT_TRUE(isomorphic(h, z));
    EXPECT_TRUE(isomorphic(minimize_dfa(h), h));
  }
}

TEST_F(NfaTest, MinimalDfaOfNthFromLastGrowsExponentially) {
  auto four = minimize_dfa(determinize(nth_from_last(1)));
  EXPECT_EQ(four.state_count(), 4u);
  for (std::size_t n = 1; n <= 8; ++n) {
    auto min = minimize_dfa(determinize(nth_from_last(n)));
    EXPECT_EQ(min.state_count(), std::size_t{1} << (n + 1)) << n;
  }
}

TEST_F(NfaTest, DeterminizeHonoursItsCap) {
  EXPECT_THROW(determinize(nth_from_last(10), {.state_cap = 100}), ResourceError);
}

TEST_F(NfaTest, EquivalenceChecks) {
  std::mt19937_64 rng(6);
  for (int n = 0; n < 50; ++n) {
    auto x = random(rng);
    EXPECT_TRUE(equivalent(x, nfa_union(x, x)));
    EXPECT_TRUE(equivalent(x, trim(x)));
    EXPECT_TRUE(equivalent(x, determinize(x).nfa()));
  }
  EXPECT_FALSE(equivalent(Nfa::word(ab, {a}), Nfa::word(ab, {b})));
  EXPECT_TRUE(equivalent(Nfa::word({a}, {}), Nfa::word({b}, {})));
}

TEST_F(NfaTest, TrimKeepsTheLanguage) {
  std::mt19937_64 rng(7);
  for (int n = 0; n < 50; ++n) {
    auto x = random(rng, 6, 0.15);
    auto t = trim(x);
    EXPECT_LE(t.state_count(), x.state_count());
    EXPECT_EQ(enumerate_language(t, 6), enumerate_language(x, 6));
    auto live = coreachable(t);
    for (StateId q = 0; q < t.state_count(); ++q) {
      if (q != t.initial()) EXPECT_TRUE(live[q]);
    }
  }
}

TEST_F(NfaTest, EnumerateLanguageOfSingleAcceptingState) {
  EXPECT_EQ(enumerate_language(Nfa(ab, 1, 0, {0}, {}), 3), (Language{Trace{}}));
}

TEST_F(NfaTest, CanonicalNumberingIsBreadthFirst) {
  // States listed in reverse order; canonical form renumbers from the initial state.
  Dfa d(Nfa(ab, 3, 2, {0}, {{2, a, 1}, {1, b, 0}}));
  auto c = canonicalize(d);
  EXPECT_EQ(c.nfa().initial(), 0u);
  EXPECT_EQ(c.next(0, 0), 1u);
  EXPECT_EQ(c.next(1, 1), 2u);
  EXPECT_TRUE(c.nfa().is_accepting(2));
}

TEST_F(NfaTest, DotExportListsStatesAndEdges) {
  auto dot = to_dot(Nfa::word(ab, {a, b}), sig);
  EXPECT_NE(dot.find("digraph"), std::string::npos);
  EXPECT_NE(dot.find("2 [shape=doublecircle]"), std::string::npos);
  EXPECT_NE(dot.find("__start -> 0"), std::string::npos);
  EXPECT_NE(dot.find("0 -> 1 [label=\"l1!m1\"]"), std::string::npos);
  EXPECT_NE(dot.find("1 -> 2 [label=\"l2!m1\"]"), std::string::npos);
}

TEST_F(NfaTest, StatsJsonHasTheFourFields) {
  auto j = nlohmann::json::parse(stats_json(Nfa::word(ab, {a, b}), 42));
  EXPECT_EQ(j["states"], 3);
  EXPECT_EQ(j["transitions"], 2);
  EXPECT_EQ(j["accepting"], 1);
  EXPECT_EQ(j["build_time_us"], 42);
}

}  // namespace
}  // namespace intnfa
