#pragma once

// Backward induction on finite trees, enumeration of every backward-induction
// profile, and the one-shot deviation check.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "escalade/game.hpp"

namespace escalade {

enum class TiePolicy { kFirstBranch, kLastBranch };

// A deviation that strictly improves the owner's payoff. `location` names the
// decision point: a tree path, a graph node or a game shape. `profile_value`
// is empty when following the profile never reaches a payoff. `stage` is the
// first stage at which the improvement holds, for stage-indexed games.
template <class Value>
struct Deviation {
  std::string location;
  PlayerId owner;
  ActionLabel chosen;
  ActionLabel deviation;
  std::optional<Value> profile_value;
  Value deviation_value;
  std::optional<std::int64_t> stage;
};

template <class Value>
struct BasicSpeReport {
  bool ok = true;
  // Decision points from which the profile's own play never terminates.
  std::vector<std::string> divergent_from;
  std::vector<Deviation<Value>> violations;
};

using SpeReport = BasicSpeReport<Utility>;

struct Enumeration {
  std::vector<TreeProfile> profiles;
  bool truncated = false;
};

inline constexpr std::size_t kDefaultCap = 1024;

// Throws NotTwoPlayer.
TreeProfile solve(const FiniteGame& game, TiePolicy ties = TiePolicy::kFirstBranch);

// Every backward-induction profile, i.e. every way of resolving ties, in
// lexicographic order of the preorder choice vector. Stops at `cap` profiles
// and sets `truncated`. Throws NotTwoPlayer.
Enumeration enumerate_equilibria(const FiniteGame& game, std::size_t cap = kDefaultCap);

// One-shot deviation test at every decision node, reachable or not.
// Throws ShapeMismatch.
SpeReport check_spe(const FiniteGame& game, const TreeProfile& profile);

// Induced play lines of `profiles`, deduplicated, in first-seen order.
std::vector<PlayLine> distinct_play_lines(const FiniteGame& game,
                                          const std::vector<TreeProfile>& profiles);

}  // namespace escalade
