#include <gtest/gtest.h>

#include "escalade/catalog.hpp"
#include "escalade/cyclic.hpp"
#include "escalade/error.hpp"
#include "escalade/finite_solver.hpp"
#include "support/generators.hpp"
#include "support/oracle.hpp"

using namespace escalade;

namespace {

PositionalProfile prof(const CyclicGame& g, const char* a, const char* b) {
  return positional_profile(g, {{"A", a}, {"B", b}});
}

}  // namespace

TEST(CyclicGame, RejectsBadGraphs) {
  using V = std::vector<CyclicNode>;
  EXPECT_THROW(CyclicGame(V{{"A", kAlice, {{"a", std::string("Z")}}}}, "A"), ValidationError);
  EXPECT_THROW(CyclicGame(V{{"A", kAlice, {}}}, "A"), ValidationError);
  EXPECT_THROW(CyclicGame(V{{"A", kAlice, {{"a", OutcomeVector{0, 0}}}}}, "B"), ValidationError);
  EXPECT_THROW(CyclicGame(V{{"A", kAlice, {{"a", OutcomeVector{0}}}}}, "A"), ValidationError);
  EXPECT_THROW(CyclicGame(V{{"A", kAlice, {{"a", OutcomeVector{0, 0}}, {"a", OutcomeVector{1, 1}}}}},
                          "A"),
               ValidationError);
  EXPECT_THROW(CyclicGame(V{{"A", kAlice, {{"a", OutcomeVector{0, 0}}}},
                            {"A", kBertrand, {{"a", OutcomeVector{0, 0}}}}},
                          "A"),
               ValidationError);
}

TEST(Cyclic, InducedOutcomes) {
  CyclicGame g = catalog::zero_one_cyclic();
  auto r = induced_outcome(g, prof(g, "c", "a"), "A");
  ASSERT_TRUE(std::holds_alternative<Converges>(r));
  EXPECT_EQ(std::get<Converges>(r).outcome, (OutcomeVector{1, 0}));
  EXPECT_EQ(std::get<Converges>(r).path, (std::vector<std::size_t>{0, 1}));

  auto d = induced_outcome(g, prof(g, "c", "c"), "B");
  ASSERT_TRUE(std::holds_alternative<Diverges>(d));
  EXPECT_TRUE(std::get<Diverges>(d).stem.empty());
  EXPECT_EQ(std::get<Diverges>(d).cycle, (std::vector<std::size_t>{1, 0}));
  EXPECT_THROW(induced_outcome(g, prof(g, "c", "c"), "Q"), UnknownNode);
}

TEST(Cyclic, ExactlyTwoPositionalEquilibria) {
  CyclicGame g = catalog::zero_one_cyclic();
  auto all = enumerate_positional_spe(g);
  EXPECT_EQ(all, (std::vector<PositionalProfile>{prof(g, "a", "c"), prof(g, "c", "a")}));
  EXPECT_EQ(describe(g, all[0]), "{A:a,B:c}");
  EXPECT_EQ(describe(g, all[1]), "{A:c,B:a}");
}

TEST(Cyclic, RejectionsCarryReasons) {
  CyclicGame g = catalog::zero_one_cyclic();
  SpeReport cc = check_spe_cyclic(g, prof(g, "c", "c"));
  EXPECT_FALSE(cc.ok);
  EXPECT_EQ(cc.divergent_from, (std::vector<std::string>{"A", "B"}));

  SpeReport aa = check_spe_cyclic(g, prof(g, "a", "a"));
  EXPECT_FALSE(aa.ok);
  EXPECT_TRUE(aa.divergent_from.empty());
  ASSERT_FALSE(aa.violations.empty());
  const auto& v = aa.violations.front();
  EXPECT_EQ(v.location, "A");
  EXPECT_EQ(v.owner, kAlice);
  EXPECT_EQ(v.chosen, "a");
  EXPECT_EQ(v.deviation, "c");
  EXPECT_EQ(v.profile_value, 0);
  EXPECT_EQ(v.deviation_value, 1);
}

TEST(Cyclic, SearchBound) {
  std::vector<CyclicNode> nodes;
  for (int i = 0; i < 12; ++i) {
    nodes.push_back({"N" + std::to_string(i), kAlice,
                     {{"a", OutcomeVector{0, 0}}, {"b", OutcomeVector{0, 0}},
                      {"c", OutcomeVector{0, 0}}, {"d", OutcomeVector{0, 0}}}});
  }
  CyclicGame g(std::move(nodes), "N0");
  EXPECT_THROW(enumerate_positional_spe(g), SearchSpaceTooLarge);
  EXPECT_THROW(enumerate_positional_spe(catalog::zero_one_cyclic(), 3), SearchSpaceTooLarge);
}

TEST(Unfold, MatchesFiniteZeroOne) {
  CyclicGame g = catalog::zero_one_cyclic();
  EXPECT_EQ(unfold(g, 7, {1, 0}), catalog::zero_one(7));
  EXPECT_EQ(unfold(g, 6, {0, 1}), catalog::zero_one(6));
  EXPECT_EQ(unfold(g, 0, {5, 5}), FiniteGame::leaf({5, 5}));
}

// Backward induction on ever deeper truncations oscillates with parity.
TEST(Unfold, NonExtrapolation) {
  CyclicGame g = catalog::zero_one_cyclic();
  for (std::size_t d = 1; d <= 12; ++d) {
    // The terminal is what the next mover would get by abandoning.
    const OutcomeVector terminal = d % 2 == 1 ? OutcomeVector{1, 0} : OutcomeVector{0, 1};
    FiniteGame t = unfold(g, d, terminal);
    const OutcomeVector expected = d % 2 == 1 ? OutcomeVector{1, 0} : OutcomeVector{0, 1};
    Enumeration e = enumerate_equilibria(t);
    for (const auto& p : e.profiles) EXPECT_EQ(induced_play(t, p).outcome, expected) << d;
  }
}

// An accepted positional profile restricted to a truncation, cut with the
// value it induces at the cut, stays subgame perfect.
TEST(Unfold, TruncationConsistency) {
  CyclicGame g = catalog::zero_one_cyclic();
  for (const auto& p : enumerate_positional_spe(g)) {
    for (std::size_t d = 1; d <= 20; ++d) {
      // Layer d+1 is node A when d is even, B when d is odd.
      const std::size_t cut = d % 2 == 0 ? 0 : 1;
      const auto r = induced_outcome(g, p, cut);
      const OutcomeVector t = std::get<Converges>(r).outcome;
      FiniteGame tree = unfold(g, d, t);
      TreeProfile tp = truncate_profile(g, p, d);
      EXPECT_TRUE(check_spe(tree, tp).ok) << describe(g, p) << " d=" << d;
      EXPECT_TRUE(oracle::is_spe(tree, tp));
    }
  }
}

TEST(CyclicProperty, EnumerationMatchesBruteForce) {
  gen::Rng rng(4242);
  for (int i = 0; i < 300; ++i) {
    CyclicGame g = gen::cyclic(rng, 4, 0, 3);
    EXPECT_EQ(enumerate_positional_spe(g), oracle::brute_force_graph_spe(g)) << i;
  }
}

TEST(CyclicProperty, CheckerAgreesOnEveryProfile) {
  gen::Rng rng(77);
  for (int i = 0; i < 100; ++i) {
    CyclicGame g = gen::cyclic(rng, 4, 0, 3);
    std::vector<std::size_t> arity;
    for (const auto& n : g.nodes()) arity.push_back(n.edges.size());
    for (const auto& c : oracle::all_choices(arity)) {
      EXPECT_EQ(check_spe_cyclic(g, {c}).ok, oracle::graph_spe(g, c));
    }
  }
}
