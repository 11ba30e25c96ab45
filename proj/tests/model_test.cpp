#include <gtest/gtest.h>

#include <regex>

#include "intnfa/errors.hpp"
#include "intnfa/locks.hpp"
#include "intnfa/model.hpp"
#include "intnfa/nfa.hpp"
#include "intnfa/semantics.hpp"
#include "intnfa/translator.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace intnfa {
namespace {

using testing::make_signature;

std::string parse_error(std::string_view text) {
  try {
    parse_model(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return {};
}

TEST(ModelTest, ParsesEveryOperator) {
  auto m = parse_model(R"(
    # three lifelines
    lifelines l1 l2 l3;
    messages m1 m2 m3;
    coreg[l2](strict(l1!m1, l2?m1), seq(l3!m2, strict(l3!m3, l2?m3)))
  )");
  EXPECT_EQ(m.signature.lifeline_count(), 3u);
  EXPECT_EQ(to_string(m.term, m.signature),
            "coreg[l2](strict(l1!m1,l2?m1),seq(l3!m2,strict(l3!m3,l2?m3)))");
  EXPECT_EQ(m.term.lifelines(), LifelineSet{1});
}

TEST(ModelTest, NaryOperatorsNestToTheRight) {
  auto sig = make_signature(2, 1);
  auto t = parse_term(sig, "alt(l1!m1, l2!m1, 0)");
  EXPECT_EQ(to_string(t, sig), "alt(l1!m1,alt(l2!m1,0))");
  auto p = parse_term(sig, "par(l1!m1, l2?m1)");
  EXPECT_EQ(p.lifelines(), sig.all_lifelines());
  EXPECT_EQ(parse_term(sig, "seq(l1!m1, l2?m1);"), parse_term(sig, "seq(l1!m1,l2?m1)"));
}

TEST(ModelTest, ErrorsCarryPositions) {
  auto eoi = parse_error("lifelines a; messages m; seq(a!m, 0");
  EXPECT_NE(eoi.find("end of input"), std::string::npos) << eoi;
  EXPECT_NE(eoi.find("1:"), std::string::npos) << eoi;

  auto undeclared = parse_error("lifelines a; messages m;\nstrict(a!m, b?m)");
  EXPECT_NE(undeclared.find("2:"), std::string::npos) << undeclared;
  EXPECT_NE(undeclared.find("b"), std::string::npos) << undeclared;

  EXPECT_FALSE(parse_error("lifelines a; messages m; strict(a!m)").empty());
  EXPECT_FALSE(parse_error("lifelines a; messages m; loopS(a!m, a!m)").empty());
  EXPECT_FALSE(parse_error("lifelines a a; messages m; 0").empty());
  EXPECT_FALSE(parse_error("lifelines a; messages m; 0 0").empty());
  EXPECT_FALSE(parse_error("lifelines a; messages m; coreg[z](0, 0)").empty());
  EXPECT_FALSE(parse_error("").empty());

  try {
    parse_model("lifelines a; messages m;\n  alt(a!m,\n   a#m)");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(ModelTest, PrintParseRoundTrip) {
  auto sig = make_signature(3, 2);
  testing::TermGenerator gen(sig, 77, 6);
  for (int n = 0; n < 500; ++n) {
    Model m{sig, gen.next()};
    auto text = print_model(m);
    auto back = parse_model(text);
    ASSERT_EQ(back.term, m.term) << text;
    ASSERT_EQ(print_model(back), text);
  }
}

TEST(LocksTest, TopologyNames) {
  LockSpec spec;
  parse_topology("chain:3", spec);
  EXPECT_EQ(spec.topology, Topology::Chain);
  EXPECT_EQ(spec.locks, 3u);
  EXPECT_EQ(topology_name(spec), "chain:3");
  parse_topology("diamond8", spec);
  EXPECT_EQ(lock_stages(spec),
            (std::vector<std::vector<std::size_t>>{{1}, {2, 3}, {4}, {5, 6}, {7}, {8}}));
  parse_topology("diamond4", spec);
  EXPECT_EQ(lock_stages(spec), (std::vector<std::vector<std::size_t>>{{1}, {2, 3}, {4}}));
  EXPECT_THROW(parse_topology("chain:0", spec), InputError);
  EXPECT_THROW(parse_topology("ring", spec), InputError);
}

TEST(LocksTest, SingleLockLanguageMatchesItsRegularExpression) {
  auto m = lock_model(LockSpec{});
  auto nfa = build_nfa(m.signature, m.term).nfa;
  const std::regex re("^[ab]*aab[ab]{3}u$");
  auto letter = [&](const Action& a) { return m.signature.message_name(a.message)[0]; };
  std::vector<Action> used{m.signature.parse_action("l?a"), m.signature.parse_action("l?b"),
                           m.signature.parse_action("l!u")};
  for (const auto& tr : nfa.transitions()) {
    ASSERT_NE(std::find(used.begin(), used.end(), tr.action), used.end());
  }
  std::size_t accepted = 0;
  for (const auto& w : testing::all_words(used, 10)) {
    bool in_nfa = run_word(nfa, w, Mode::Exact);
    ASSERT_EQ(in_nfa, std::regex_match(testing::encode(w, letter), re)) << m.signature.format(w);
    accepted += in_nfa;
  }
  // The six letters before u are pinned up to the three wildcards; the rest is free.
  EXPECT_EQ(accepted, 8u * (1u + 2u + 4u + 8u));
}

TEST(LocksTest, HeadlineStateCounts) {
  auto m = lock_model(LockSpec{});
  EXPECT_EQ(build_nfa(m.signature, m.term).nfa.state_count(), 8u);
  auto raw = build_nfa(m.signature, m.term, {.simplified = false}).nfa;
  EXPECT_GE(raw.state_count(), 8u);
  auto dfa = minimize_dfa(determinize(build_nfa(m.signature, m.term).nfa));
  EXPECT_EQ(dfa.nfa().state_count(), 14u);

  LockSpec sp;
  sp.scheduling = Scheduling::StrictPar;
  auto msp = lock_model(sp);
  EXPECT_EQ(compo(msp.signature, msp.term).state_count(), 13u);
}

TEST(LocksTest, NetworksUseNumberedLifelines) {
  LockSpec spec;
  parse_topology("diamond4", spec);
  for (auto s : {Scheduling::Seq, Scheduling::StrictPar}) {
    spec.scheduling = s;
    auto m = lock_model(spec);
    EXPECT_EQ(m.signature.lifeline_count(), 4u);
    EXPECT_EQ(m.signature.lifeline_name(0), "l1");
    EXPECT_EQ(print_model(parse_model(print_model(m))), print_model(m));
  }
}

TEST(LocksTest, SeqAndStrictParChainsHaveTheSameLanguage) {
  LockSpec spec;
  parse_topology("chain:2", spec);
  auto seq = lock_model(spec);
  spec.scheduling = Scheduling::StrictPar;
  auto sp = lock_model(spec);
  auto a = build_nfa(seq.signature, seq.term).nfa;
  auto b = build_nfa(sp.signature, sp.term).nfa;
  EXPECT_TRUE(equivalent(a, b));
  // Length 15 pins both codes (8 x 8 wildcard choices); length 16 adds one
  // free digit in front of either code.
  EXPECT_EQ(enumerate_language(a, 16).size(), 8u * 8u + 2u * 2u * 8u * 8u);
}

}  // namespace
}  // namespace intnfa
