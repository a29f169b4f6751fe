#pragma once

// Finite sequential games: trees of decision nodes owned by one of two
// players, with ordinal integer payoffs at the leaves.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace escalade {

struct PlayerId {
  int index = 0;
  friend constexpr auto operator<=>(PlayerId, PlayerId) = default;
};

inline constexpr PlayerId kAlice{0};
inline constexpr PlayerId kBertrand{1};
inline constexpr int kNumPlayers = 2;

// Only comparisons between utilities are meaningful.
using Utility = std::int64_t;
using OutcomeVector = std::vector<Utility>;
using ActionLabel = std::string;
using PlayLine = std::vector<ActionLabel>;

struct Branch;

// Immutable tree with shared structure; copying is cheap and subgames share
// storage with their parent.
class FiniteGame {
 public:
  static FiniteGame leaf(OutcomeVector outcome);
  static FiniteGame node(PlayerId owner, std::vector<Branch> branches);

  bool is_leaf() const;
  // Precondition: is_leaf().
  const OutcomeVector& outcome() const;
  // Precondition: !is_leaf().
  PlayerId owner() const;
  std::span<const Branch> branches() const;

  // Number of decision nodes in this subtree (0 for a leaf).
  std::size_t decision_count() const;
  // Number of nodes (decision + leaf) in this subtree.
  std::size_t node_count() const;

  // Index of the branch with `label`, or branches().size() if absent.
  std::size_t find_branch(const ActionLabel& label) const;

  friend bool operator==(const FiniteGame& a, const FiniteGame& b);

 private:
  struct Rep;
  explicit FiniteGame(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
  std::shared_ptr<const Rep> rep_;
};

struct Branch {
  ActionLabel label;
  FiniteGame game;
  friend bool operator==(const Branch&, const Branch&) = default;
};

// One chosen branch index for every decision node, including nodes no play
// reaches. Indexed by the preorder position of the decision node (root = 0,
// children visited in branch order).
struct TreeProfile {
  std::vector<std::size_t> choices;
  friend bool operator==(const TreeProfile&, const TreeProfile&) = default;
  friend auto operator<=>(const TreeProfile&, const TreeProfile&) = default;
};

struct InducedPlay {
  PlayLine play;
  OutcomeVector outcome;
};

// Leaf outcome reached by following `play` from the root.
// Throws InvalidPlay.
OutcomeVector outcome_of(const FiniteGame& game, std::span<const ActionLabel> play);

// Throws ShapeMismatch if the profile does not fit the game.
InducedPlay induced_play(const FiniteGame& game, const TreeProfile& profile);

// Throws InvalidPlay.
FiniteGame subgame_at(const FiniteGame& game, std::span<const ActionLabel> prefix);

// Every root-to-leaf play line in branch order.
std::vector<PlayLine> all_play_lines(const FiniteGame& game);

struct Finding {
  enum class Kind { kDuplicateLabel, kArityMismatch, kEmptyBranches, kBadOwner };
  Kind kind;
  std::string path;
  std::string detail;
};

struct ValidationReport {
  std::vector<Finding> findings;
  bool ok() const { return findings.empty(); }
};

ValidationReport validate(const FiniteGame& game);

// Throws NotTwoPlayer unless every owner is 0 or 1 and every leaf has two
// utilities.
void require_two_players(const FiniteGame& game);

// validate() must pass (else ValidationError) and the game must be
// two-player (else NotTwoPlayer).
void require_solvable(const FiniteGame& game);

// Throws ShapeMismatch.
void require_shape(const FiniteGame& game, const TreeProfile& profile);

// "/" for the root, "/p/f" for the node reached by p then f.
std::string path_string(std::span<const ActionLabel> path);
std::string outcome_string(const OutcomeVector& outcome);
std::string play_string(const PlayLine& play);

struct ProfileEntry {
  PlayLine path;
  ActionLabel choice;
};

// (path, chosen label) for every decision node in preorder.
std::vector<ProfileEntry> profile_entries(const FiniteGame& game,
                                          const TreeProfile& profile);

// Inverse of profile_entries. Throws ShapeMismatch on a missing node, an
// unknown path or an unknown label.
TreeProfile profile_from_entries(const FiniteGame& game,
                                 std::span<const ProfileEntry> entries);

}  // namespace escalade
