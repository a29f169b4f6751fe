#include "escalade/game.hpp"

#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "escalade/error.hpp"

namespace escalade {

struct FiniteGame::Rep {
  bool leaf = true;
  OutcomeVector outcome;
  PlayerId owner;
  std::vector<Branch> branches;
  std::size_t decisions = 0;
  std::size_t nodes = 1;
};

FiniteGame FiniteGame::leaf(OutcomeVector outcome) {
  auto rep = std::make_shared<Rep>();
  rep->outcome = std::move(outcome);
  return FiniteGame(std::move(rep));
}

FiniteGame FiniteGame::node(PlayerId owner, std::vector<Branch> branches) {
  auto rep = std::make_shared<Rep>();
  rep->leaf = false;
  rep->owner = owner;
  rep->decisions = 1;
  for (const auto& b : branches) {
    rep->decisions += b.game.decision_count();
    rep->nodes += b.game.node_count();
  }
  rep->branches = std::move(branches);
  return FiniteGame(std::move(rep));
}

bool FiniteGame::is_leaf() const { return rep_->leaf; }
const OutcomeVector& FiniteGame::outcome() const { return rep_->outcome; }
PlayerId FiniteGame::owner() const { return rep_->owner; }
std::span<const Branch> FiniteGame::branches() const { return rep_->branches; }
std::size_t FiniteGame::decision_count() const { return rep_->decisions; }
std::size_t FiniteGame::node_count() const { return rep_->nodes; }

std::size_t FiniteGame::find_branch(const ActionLabel& label) const {
  const auto& bs = rep_->branches;
  for (std::size_t i = 0; i < bs.size(); ++i) {
    if (bs[i].label == label) return i;
  }
  return bs.size();
}

bool operator==(const FiniteGame& a, const FiniteGame& b) {
  if (a.rep_ == b.rep_) return true;
  if (a.is_leaf() != b.is_leaf()) return false;
  if (a.is_leaf()) return a.outcome() == b.outcome();
  return a.owner() == b.owner() && a.rep_->branches == b.rep_->branches;
}

OutcomeVector outcome_of(const FiniteGame& game, std::span<const ActionLabel> play) {
  FiniteGame sub = subgame_at(game, play);
  if (!sub.is_leaf()) throw InvalidPlay(play.size(), "");
  return sub.outcome();
}

FiniteGame subgame_at(const FiniteGame& game, std::span<const ActionLabel> prefix) {
  FiniteGame cur = game;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (cur.is_leaf()) throw InvalidPlay(i, prefix[i]);
    std::size_t b = cur.find_branch(prefix[i]);
    if (b == cur.branches().size()) throw InvalidPlay(i, prefix[i]);
    FiniteGame next = cur.branches()[b].game;
    cur = std::move(next);
  }
  return cur;
}

void require_shape(const FiniteGame& game, const TreeProfile& profile) {
  if (profile.choices.size() != game.decision_count()) {
    throw ShapeMismatch("profile has " + std::to_string(profile.choices.size()) +
                        " choices for " + std::to_string(game.decision_count()) +
                        " decision nodes");
  }
  std::size_t index = 0;
  auto walk = [&](auto&& self, const FiniteGame& g) -> void {
    if (g.is_leaf()) return;
    std::size_t choice = profile.choices[index++];
    if (choice >= g.branches().size()) {
      throw ShapeMismatch("choice " + std::to_string(choice) + " out of range at node " +
                          std::to_string(index - 1));
    }
    for (const auto& b : g.branches()) self(self, b.game);
  };
  walk(walk, game);
}

InducedPlay induced_play(const FiniteGame& game, const TreeProfile& profile) {
  require_shape(game, profile);
  InducedPlay result;
  FiniteGame cur = game;
  std::size_t index = 0;
  while (!cur.is_leaf()) {
    std::size_t choice = profile.choices[index];
    // Skip the preorder blocks of the earlier siblings.
    index += 1;
    for (std::size_t b = 0; b < choice; ++b) index += cur.branches()[b].game.decision_count();
    result.play.push_back(cur.branches()[choice].label);
    FiniteGame next = cur.branches()[choice].game;
    cur = std::move(next);
  }
  result.outcome = cur.outcome();
  return result;
}

std::vector<PlayLine> all_play_lines(const FiniteGame& game) {
  std::vector<PlayLine> lines;
  PlayLine prefix;
  auto walk = [&](auto&& self, const FiniteGame& g) -> void {
    if (g.is_leaf()) {
      lines.push_back(prefix);
      return;
    }
    for (const auto& b : g.branches()) {
      prefix.push_back(b.label);
      self(self, b.game);
      prefix.pop_back();
    }
  };
  walk(walk, game);
  return lines;
}

ValidationReport validate(const FiniteGame& game) {
  ValidationReport report;
  std::optional<std::size_t> arity;
  PlayLine path;
  std::vector<std::pair<PlayerId, std::string>> owners;
  auto walk = [&](auto&& self, const FiniteGame& g) -> void {
    if (g.is_leaf()) {
      if (!arity) {
        arity = g.outcome().size();
      } else if (*arity != g.outcome().size()) {
        report.findings.push_back({Finding::Kind::kArityMismatch, path_string(path),
                                   "leaf has " + std::to_string(g.outcome().size()) +
                                       " utilities, expected " + std::to_string(*arity)});
      }
      return;
    }
    if (g.owner().index < 0) {
      report.findings.push_back(
          {Finding::Kind::kBadOwner, path_string(path), "negative player index"});
    } else {
      owners.emplace_back(g.owner(), path_string(path));
    }
    if (g.branches().empty()) {
      report.findings.push_back(
          {Finding::Kind::kEmptyBranches, path_string(path), "node has no branches"});
    }
    std::set<ActionLabel> seen;
    for (const auto& b : g.branches()) {
      if (!seen.insert(b.label).second) {
        report.findings.push_back({Finding::Kind::kDuplicateLabel, path_string(path),
                                   "duplicate label '" + b.label + "'"});
      }
    }
    for (const auto& b : g.branches()) {
      path.push_back(b.label);
      self(self, b.game);
      path.pop_back();
    }
  };
  walk(walk, game);
  // Owners must index into the utility vectors.
  for (const auto& [owner, where] : owners) {
    if (arity && static_cast<std::size_t>(owner.index) >= *arity) {
      report.findings.push_back({Finding::Kind::kBadOwner, where,
                                 "player " + std::to_string(owner.index) + " has no utility"});
    }
  }
  return report;
}

void require_two_players(const FiniteGame& game) {
  auto walk = [&](auto&& self, const FiniteGame& g) -> void {
    if (g.is_leaf()) {
      if (g.outcome().size() != kNumPlayers) throw NotTwoPlayer();
      return;
    }
    if (g.owner().index < 0 || g.owner().index >= kNumPlayers) throw NotTwoPlayer();
    for (const auto& b : g.branches()) self(self, b.game);
  };
  walk(walk, game);
}

void require_solvable(const FiniteGame& game) {
  ValidationReport report = validate(game);
  if (!report.ok()) {
    const Finding& f = report.findings.front();
    throw ValidationError("malformed game at " + f.path + ": " + f.detail);
  }
  require_two_players(game);
}

std::string path_string(std::span<const ActionLabel> path) {
  if (path.empty()) return "/";
  std::string s;
  for (const auto& label : path) {
    s += '/';
    s += label;
  }
  return s;
}

std::string outcome_string(const OutcomeVector& outcome) {
  std::string s = "(";
  for (std::size_t i = 0; i < outcome.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(outcome[i]);
  }
  return s + ")";
}

std::string play_string(const PlayLine& play) {
  std::string s;
  for (std::size_t i = 0; i < play.size(); ++i) {
    if (i) s += ' ';
    s += play[i];
  }
  return s;
}

std::vector<ProfileEntry> profile_entries(const FiniteGame& game,
                                          const TreeProfile& profile) {
  require_shape(game, profile);
  std::vector<ProfileEntry> entries;
  std::size_t index = 0;
  PlayLine path;
  auto walk = [&](auto&& self, const FiniteGame& g) -> void {
    if (g.is_leaf()) return;
    entries.push_back({path, g.branches()[profile.choices[index++]].label});
    for (const auto& b : g.branches()) {
      path.push_back(b.label);
      self(self, b.game);
      path.pop_back();
    }
  };
  walk(walk, game);
  return entries;
}

TreeProfile profile_from_entries(const FiniteGame& game,
                                 std::span<const ProfileEntry> entries) {
  std::map<PlayLine, ActionLabel> by_path;
  for (const auto& e : entries) {
    if (!by_path.emplace(e.path, e.choice).second) {
      throw ShapeMismatch("node " + path_string(e.path) + " assigned twice");
    }
  }
  TreeProfile profile;
  PlayLine path;
  std::size_t used = 0;
  auto walk = [&](auto&& self, const FiniteGame& g) -> void {
    if (g.is_leaf()) return;
    auto it = by_path.find(path);
    if (it == by_path.end()) throw ShapeMismatch("no choice for node " + path_string(path));
    std::size_t b = g.find_branch(it->second);
    if (b == g.branches().size()) {
      throw ShapeMismatch("node " + path_string(path) + " has no branch '" + it->second + "'");
    }
    ++used;
    profile.choices.push_back(b);
    for (const auto& br : g.branches()) {
      path.push_back(br.label);
      self(self, br.game);
      path.pop_back();
    }
  };
  walk(walk, game);
  if (used != by_path.size()) throw ShapeMismatch("profile names nodes outside the game");
  return profile;
}

}  // namespace escalade
