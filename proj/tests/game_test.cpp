#include <gtest/gtest.h>

#include "escalade/catalog.hpp"
#include "escalade/error.hpp"
#include "escalade/game.hpp"

using namespace escalade;

namespace {

PlayLine line(std::initializer_list<const char*> labels) { return {labels.begin(), labels.end()}; }

}  // namespace

TEST(FiniteGame, MatchingPenniesShape) {
  FiniteGame g = catalog::sequential_matching_pennies();
  EXPECT_EQ(g.decision_count(), 7u);
  EXPECT_EQ(g.node_count(), 15u);
  EXPECT_EQ(all_play_lines(g).size(), 8u);
}

TEST(FiniteGame, AllEightPlayLinesPriced) {
  FiniteGame g = catalog::sequential_matching_pennies();
  // Alice scores per consecutive match, Bertrand per mismatch.
  for (const auto& play : all_play_lines(g)) {
    Utility alice = 0;
    for (std::size_t i = 1; i < play.size(); ++i) alice += play[i] == play[i - 1] ? 1 : 0;
    EXPECT_EQ(outcome_of(g, play), (OutcomeVector{alice, 2 - alice})) << play_string(play);
  }
  EXPECT_EQ(outcome_of(g, line({"p", "f", "p"})), (OutcomeVector{0, 2}));
  EXPECT_EQ(outcome_of(g, line({"p", "f", "f"})), (OutcomeVector{1, 1}));
  EXPECT_EQ(outcome_of(g, line({"f", "p", "p"})), (OutcomeVector{1, 1}));
}

TEST(FiniteGame, InvalidPlayReportsPosition) {
  FiniteGame g = catalog::sequential_matching_pennies();
  try {
    outcome_of(g, line({"p", "x"}));
    FAIL();
  } catch (const InvalidPlay& e) {
    EXPECT_EQ(e.position(), 1u);
    EXPECT_EQ(e.label(), "x");
  }
  EXPECT_THROW(outcome_of(g, line({"p", "f"})), InvalidPlay);
  EXPECT_THROW(outcome_of(g, line({"p", "f", "f", "p"})), InvalidPlay);
}

TEST(FiniteGame, SubgameSharesStructure) {
  FiniteGame g = catalog::sequential_matching_pennies();
  FiniteGame sub = subgame_at(g, line({"p", "f"}));
  EXPECT_EQ(sub.owner(), kAlice);
  EXPECT_EQ(sub, g.branches()[0].game.branches()[1].game);
  EXPECT_EQ(subgame_at(g, {}), g);
}

TEST(FiniteGame, LeafOnlyGame) {
  FiniteGame g = FiniteGame::leaf({0, 1});
  EXPECT_EQ(g.decision_count(), 0u);
  EXPECT_EQ(all_play_lines(g), std::vector<PlayLine>{PlayLine{}});
  EXPECT_EQ(outcome_of(g, {}), (OutcomeVector{0, 1}));
}

TEST(Validate, FindsStructuralProblems) {
  FiniteGame dup = FiniteGame::node(
      kAlice, {{"a", FiniteGame::leaf({0, 0})}, {"a", FiniteGame::leaf({1, 1})}});
  auto r = validate(dup);
  ASSERT_EQ(r.findings.size(), 1u);
  EXPECT_EQ(r.findings[0].kind, Finding::Kind::kDuplicateLabel);
  EXPECT_EQ(r.findings[0].path, "/");

  FiniteGame arity = FiniteGame::node(
      kAlice, {{"a", FiniteGame::leaf({0, 0})}, {"b", FiniteGame::leaf({0})}});
  EXPECT_EQ(validate(arity).findings.at(0).kind, Finding::Kind::kArityMismatch);

  FiniteGame empty = FiniteGame::node(kAlice, {});
  EXPECT_EQ(validate(empty).findings.at(0).kind, Finding::Kind::kEmptyBranches);

  FiniteGame owner = FiniteGame::node(PlayerId{2}, {{"a", FiniteGame::leaf({0, 0})}});
  EXPECT_EQ(validate(owner).findings.at(0).kind, Finding::Kind::kBadOwner);

  EXPECT_TRUE(validate(catalog::sequential_matching_pennies()).ok());
}

TEST(Validate, NotTwoPlayer) {
  FiniteGame three = FiniteGame::node(kAlice, {{"a", FiniteGame::leaf({0, 0, 0})}});
  EXPECT_THROW(require_two_players(three), NotTwoPlayer);
  EXPECT_THROW(require_solvable(three), NotTwoPlayer);
  FiniteGame mixed = FiniteGame::node(
      kAlice, {{"a", FiniteGame::leaf({0, 0})}, {"b", FiniteGame::leaf({0})}});
  EXPECT_THROW(require_solvable(mixed), ValidationError);
}

TEST(Profile, EntriesRoundTrip) {
  FiniteGame g = catalog::sequential_matching_pennies();
  TreeProfile p{{1, 0, 1, 0, 1, 1, 0}};
  auto entries = profile_entries(g, p);
  ASSERT_EQ(entries.size(), 7u);
  EXPECT_EQ(path_string(entries[0].path), "/");
  EXPECT_EQ(entries[0].choice, "f");
  EXPECT_EQ(path_string(entries[3].path), "/p/f");
  EXPECT_EQ(profile_from_entries(g, entries), p);
}

TEST(Profile, ShapeMismatch) {
  FiniteGame g = catalog::sequential_matching_pennies();
  EXPECT_THROW(induced_play(g, TreeProfile{{0, 0}}), ShapeMismatch);
  EXPECT_THROW(induced_play(g, TreeProfile{{0, 0, 0, 0, 0, 0, 2}}), ShapeMismatch);
  std::vector<ProfileEntry> missing = {{{}, "p"}};
  EXPECT_THROW(profile_from_entries(g, missing), ShapeMismatch);
}

TEST(ZeroOne, FinitePayoffs) {
  FiniteGame seven = catalog::zero_one(7);
  EXPECT_EQ(seven.decision_count(), 7u);
  EXPECT_EQ(outcome_of(seven, line({"a"})), (OutcomeVector{0, 1}));
  EXPECT_EQ(outcome_of(seven, line({"c", "a"})), (OutcomeVector{1, 0}));
  EXPECT_EQ(outcome_of(seven, line({"c", "c", "c", "c", "c", "c", "c"})), (OutcomeVector{1, 0}));
  FiniteGame six = catalog::zero_one(6);
  EXPECT_EQ(outcome_of(six, line({"c", "c", "c", "c", "c", "c"})), (OutcomeVector{0, 1}));
}
