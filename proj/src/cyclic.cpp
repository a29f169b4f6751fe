#include "escalade/cyclic.hpp"

#include <set>
#include <unordered_map>

#include "escalade/error.hpp"

namespace escalade {

CyclicGame::CyclicGame(std::vector<CyclicNode> nodes, std::string start)
    : nodes_(std::move(nodes)) {
  if (nodes_.empty()) throw ValidationError("cyclic game has no nodes");
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (!index.emplace(nodes_[i].name, i).second) {
      throw ValidationError("duplicate node '" + nodes_[i].name + "'");
    }
  }
  auto it = index.find(start);
  if (it == index.end()) throw ValidationError("start node '" + start + "' does not exist");
  start_ = it->second;

  successors_.resize(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const CyclicNode& n = nodes_[i];
    if (n.owner.index < 0 || n.owner.index >= kNumPlayers) {
      throw ValidationError("node '" + n.name + "' has an owner other than the two players");
    }
    if (n.edges.empty()) throw ValidationError("node '" + n.name + "' has no edges");
    std::set<ActionLabel> labels;
    for (const auto& e : n.edges) {
      if (!labels.insert(e.label).second) {
        throw ValidationError("node '" + n.name + "' has duplicate label '" + e.label + "'");
      }
      if (const auto* target = std::get_if<std::string>(&e.target)) {
        auto t = index.find(*target);
        if (t == index.end()) {
          throw ValidationError("node '" + n.name + "' refers to unknown node '" + *target +
                                "'");
        }
        successors_[i].push_back(t->second);
      } else {
        if (std::get<OutcomeVector>(e.target).size() != kNumPlayers) {
          throw ValidationError("leaf under node '" + n.name + "' needs two utilities");
        }
        successors_[i].push_back(std::nullopt);
      }
    }
  }
}

std::size_t CyclicGame::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].name == name) return i;
  }
  throw UnknownNode(std::string(name));
}

PositionalProfile positional_profile(const CyclicGame& game,
                                     const std::map<std::string, ActionLabel>& labels) {
  for (const auto& [name, label] : labels) game.index_of(name);
  PositionalProfile p;
  for (const auto& node : game.nodes()) {
    auto it = labels.find(node.name);
    if (it == labels.end()) throw ShapeMismatch("no choice for node '" + node.name + "'");
    std::size_t e = 0;
    while (e < node.edges.size() && node.edges[e].label != it->second) ++e;
    if (e == node.edges.size()) {
      throw ShapeMismatch("node '" + node.name + "' has no edge '" + it->second + "'");
    }
    p.choice.push_back(e);
  }
  return p;
}

void require_shape(const CyclicGame& game, const PositionalProfile& profile) {
  if (profile.choice.size() != game.size()) {
    throw ShapeMismatch("profile covers " + std::to_string(profile.choice.size()) +
                        " nodes, game has " + std::to_string(game.size()));
  }
  for (std::size_t i = 0; i < game.size(); ++i) {
    if (profile.choice[i] >= game.node(i).edges.size()) {
      throw ShapeMismatch("choice out of range at node '" + game.node(i).name + "'");
    }
  }
}

std::string describe(const CyclicGame& game, const PositionalProfile& profile) {
  std::string s = "{";
  for (std::size_t i = 0; i < game.size(); ++i) {
    if (i) s += ',';
    s += game.node(i).name + ":" + game.node(i).edges[profile.choice[i]].label;
  }
  return s + "}";
}

InducedResult induced_outcome(const CyclicGame& game, const PositionalProfile& profile,
                              std::size_t from) {
  require_shape(game, profile);
  std::vector<std::size_t> path;
  std::vector<int> seen_at(game.size(), -1);
  std::size_t cur = from;
  while (true) {
    if (seen_at[cur] >= 0) {
      // Choices are positional, so the first repeat proves a cycle.
      auto split = path.begin() + seen_at[cur];
      return Diverges{{path.begin(), split}, {split, path.end()}};
    }
    seen_at[cur] = static_cast<int>(path.size());
    path.push_back(cur);
    const std::size_t edge = profile.choice[cur];
    auto next = game.successor(cur, edge);
    if (!next) {
      return Converges{std::move(path),
                       std::get<OutcomeVector>(game.node(cur).edges[edge].target)};
    }
    cur = *next;
  }
}

InducedResult induced_outcome(const CyclicGame& game, const PositionalProfile& profile,
                              std::string_view from) {
  return induced_outcome(game, profile, game.index_of(from));
}

SpeReport check_spe_cyclic(const CyclicGame& game, const PositionalProfile& profile) {
  require_shape(game, profile);
  std::vector<std::optional<OutcomeVector>> value(game.size());
  for (std::size_t i = 0; i < game.size(); ++i) {
    InducedResult r = induced_outcome(game, profile, i);
    if (auto* c = std::get_if<Converges>(&r)) value[i] = c->outcome;
  }

  SpeReport report;
  for (std::size_t i = 0; i < game.size(); ++i) {
    if (!value[i]) report.divergent_from.push_back(game.node(i).name);
  }
  for (std::size_t i = 0; i < game.size(); ++i) {
    const CyclicNode& node = game.node(i);
    const int owner = node.owner.index;
    const std::size_t chosen = profile.choice[i];
    std::optional<Utility> follow;
    if (value[i]) follow = (*value[i])[owner];
    for (std::size_t e = 0; e < node.edges.size(); ++e) {
      if (e == chosen) continue;
      std::optional<OutcomeVector> dev;
      if (auto next = game.successor(i, e)) {
        dev = value[*next];
      } else {
        dev = std::get<OutcomeVector>(node.edges[e].target);
      }
      if (!dev) continue;
      const Utility u = (*dev)[owner];
      if (!follow || u > *follow) {
        report.violations.push_back({node.name, node.owner, node.edges[chosen].label,
                                     node.edges[e].label, follow, u, std::nullopt});
      }
    }
  }
  report.ok = report.divergent_from.empty() && report.violations.empty();
  return report;
}

std::vector<PositionalProfile> enumerate_positional_spe(const CyclicGame& game,
                                                        std::uint64_t bound) {
  std::uint64_t total = 1;
  for (const auto& n : game.nodes()) {
    if (total > bound / n.edges.size()) {
      throw SearchSpaceTooLarge("more than " + std::to_string(bound) + " positional profiles");
    }
    total *= n.edges.size();
  }
  if (total > bound) {
    throw SearchSpaceTooLarge(std::to_string(total) + " positional profiles exceed bound " +
                              std::to_string(bound));
  }

  std::vector<PositionalProfile> accepted;
  PositionalProfile p{std::vector<std::size_t>(game.size(), 0)};
  while (true) {
    if (check_spe_cyclic(game, p).ok) accepted.push_back(p);
    std::size_t pos = game.size();
    while (pos > 0) {
      --pos;
      if (++p.choice[pos] < game.node(pos).edges.size()) break;
      p.choice[pos] = 0;
      if (pos == 0) return accepted;
    }
  }
}

FiniteGame unfold(const CyclicGame& game, std::size_t depth, const OutcomeVector& terminal) {
  // Subtrees depend only on (node, remaining layers); share them.
  std::map<std::pair<std::size_t, std::size_t>, FiniteGame> memo;
  auto build = [&](auto&& self, std::size_t node, std::size_t layers) -> FiniteGame {
    if (layers == 0) return FiniteGame::leaf(terminal);
    auto key = std::make_pair(node, layers);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const CyclicNode& n = game.node(node);
    std::vector<Branch> branches;
    for (std::size_t e = 0; e < n.edges.size(); ++e) {
      if (auto next = game.successor(node, e)) {
        branches.push_back({n.edges[e].label, self(self, *next, layers - 1)});
      } else {
        branches.push_back(
            {n.edges[e].label, FiniteGame::leaf(std::get<OutcomeVector>(n.edges[e].target))});
      }
    }
    FiniteGame g = FiniteGame::node(n.owner, std::move(branches));
    memo.emplace(key, g);
    return g;
  };
  return build(build, game.start(), depth);
}

TreeProfile truncate_profile(const CyclicGame& game, const PositionalProfile& profile,
                             std::size_t depth) {
  require_shape(game, profile);
  TreeProfile tree;
  auto walk = [&](auto&& self, std::size_t node, std::size_t layers) -> void {
    if (layers == 0) return;
    tree.choices.push_back(profile.choice[node]);
    for (std::size_t e = 0; e < game.node(node).edges.size(); ++e) {
      if (auto next = game.successor(node, e)) self(self, *next, layers - 1);
    }
  };
  walk(walk, game.start(), depth);
  return tree;
}

}  // namespace escalade
