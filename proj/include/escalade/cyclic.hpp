#pragma once

// Infinite games given as finite graphs: decision nodes whose edges lead to
// other nodes or to payoff leaves. Profiles are positional, one choice per
// node, so the play from any node is either a finite path or a lasso.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "escalade/finite_solver.hpp"
#include "escalade/game.hpp"

namespace escalade {

// Either the name of a node or a payoff leaf.
using CyclicTarget = std::variant<std::string, OutcomeVector>;

struct CyclicEdge {
  ActionLabel label;
  CyclicTarget target;
  friend bool operator==(const CyclicEdge&, const CyclicEdge&) = default;
};

struct CyclicNode {
  std::string name;
  PlayerId owner;
  std::vector<CyclicEdge> edges;
  friend bool operator==(const CyclicNode&, const CyclicNode&) = default;
};

class CyclicGame {
 public:
  // Throws ValidationError on duplicate node names, dangling references,
  // nodes without edges, duplicate sibling labels, owners other than 0/1 or
  // leaves without exactly two utilities.
  CyclicGame(std::vector<CyclicNode> nodes, std::string start);

  const std::vector<CyclicNode>& nodes() const { return nodes_; }
  std::size_t size() const { return nodes_.size(); }
  std::size_t start() const { return start_; }
  const CyclicNode& node(std::size_t i) const { return nodes_[i]; }

  // Throws UnknownNode.
  std::size_t index_of(std::string_view name) const;
  // Node index an edge leads to, or nullopt for a leaf.
  std::optional<std::size_t> successor(std::size_t node, std::size_t edge) const {
    return successors_[node][edge];
  }

  friend bool operator==(const CyclicGame& a, const CyclicGame& b) {
    return a.nodes_ == b.nodes_ && a.start_ == b.start_;
  }

 private:
  std::vector<CyclicNode> nodes_;
  std::size_t start_ = 0;
  std::vector<std::vector<std::optional<std::size_t>>> successors_;
};

// Edge index chosen at each node, indexed like CyclicGame::nodes().
struct PositionalProfile {
  std::vector<std::size_t> choice;
  friend bool operator==(const PositionalProfile&, const PositionalProfile&) = default;
  friend auto operator<=>(const PositionalProfile&, const PositionalProfile&) = default;
};

// Throws UnknownNode, or ShapeMismatch when a node is missing or a label is
// not one of the node's edges.
PositionalProfile positional_profile(const CyclicGame& game,
                                     const std::map<std::string, ActionLabel>& labels);
void require_shape(const CyclicGame& game, const PositionalProfile& profile);
// "{A:a,B:c}"
std::string describe(const CyclicGame& game, const PositionalProfile& profile);

struct Converges {
  std::vector<std::size_t> path;  // nodes visited, no repeats
  OutcomeVector outcome;
};

// The play reaches `cycle.front()` twice; `stem` leads into the cycle.
struct Diverges {
  std::vector<std::size_t> stem;
  std::vector<std::size_t> cycle;
};

using InducedResult = std::variant<Converges, Diverges>;

InducedResult induced_outcome(const CyclicGame& game, const PositionalProfile& profile,
                              std::size_t from);
// Throws UnknownNode.
InducedResult induced_outcome(const CyclicGame& game, const PositionalProfile& profile,
                              std::string_view from);

// A profile is accepted when its play converges from every node and no
// one-shot deviation strictly improves the deviating owner's payoff. A
// deviation whose continuation diverges ranks below every payoff.
SpeReport check_spe_cyclic(const CyclicGame& game, const PositionalProfile& profile);

inline constexpr std::uint64_t kDefaultSearchBound = std::uint64_t{1} << 20;

// Every accepted positional profile, first node's choice most significant.
// Throws SearchSpaceTooLarge when the number of profiles exceeds `bound`.
std::vector<PositionalProfile> enumerate_positional_spe(
    const CyclicGame& game, std::uint64_t bound = kDefaultSearchBound);

// Unrolls the graph from the start node into exactly `depth` decision layers.
// A node that would sit on layer depth+1 becomes Leaf(terminal).
FiniteGame unfold(const CyclicGame& game, std::size_t depth, const OutcomeVector& terminal);

// The tree profile on unfold(game, depth, .) that copies each node's choice.
TreeProfile truncate_profile(const CyclicGame& game, const PositionalProfile& profile,
                             std::size_t depth);

}  // namespace escalade
