#include "escalade/finite_solver.hpp"

#include <algorithm>

#include "escalade/error.hpp"

namespace escalade {
namespace {

struct Solved {
  std::vector<std::size_t> choices;  // preorder, this subtree only
  OutcomeVector value;
};

Solved solve_node(const FiniteGame& g, TiePolicy ties) {
  if (g.is_leaf()) return {{}, g.outcome()};
  const int owner = g.owner().index;
  std::vector<Solved> children;
  children.reserve(g.branches().size());
  for (const auto& b : g.branches()) children.push_back(solve_node(b.game, ties));

  std::size_t best = 0;
  for (std::size_t i = 1; i < children.size(); ++i) {
    Utility u = children[i].value[owner];
    Utility best_u = children[best].value[owner];
    if (u > best_u || (u == best_u && ties == TiePolicy::kLastBranch)) best = i;
  }
  Solved out;
  out.choices.reserve(g.decision_count());
  out.choices.push_back(best);
  for (auto& c : children) {
    out.choices.insert(out.choices.end(), c.choices.begin(), c.choices.end());
  }
  out.value = children[best].value;
  return out;
}

// Mixed-radix increment, last position least significant. Returns false on
// wrap-around.
bool next_digit(std::vector<std::size_t>& digit,
                const std::vector<std::vector<Solved>>& sets) {
  for (std::size_t pos = digit.size(); pos-- > 0;) {
    if (++digit[pos] < sets[pos].size()) return true;
    digit[pos] = 0;
  }
  return false;
}

struct EnumState {
  std::size_t cap;
  bool truncated = false;
};

// All backward-induction subprofiles of `g` with their values, in
// lexicographic order of the choice vector.
std::vector<Solved> enumerate_node(const FiniteGame& g, EnumState& st) {
  if (g.is_leaf()) return {Solved{{}, g.outcome()}};
  const int owner = g.owner().index;
  const std::size_t k = g.branches().size();
  std::vector<std::vector<Solved>> child_sets;
  child_sets.reserve(k);
  for (const auto& b : g.branches()) {
    child_sets.push_back(enumerate_node(b.game, st));
  }

  std::vector<Solved> out;
  // Root choice is the most significant digit, then the children's
  // subprofiles with the first child most significant.
  for (std::size_t choice = 0; choice < k; ++choice) {
    std::vector<std::size_t> digit(k, 0);
    while (true) {
      Utility chosen = child_sets[choice][digit[choice]].value[owner];
      bool maximal = true;
      for (std::size_t i = 0; i < k && maximal; ++i) {
        if (child_sets[i][digit[i]].value[owner] > chosen) maximal = false;
      }
      if (maximal) {
        if (out.size() == st.cap) {
          st.truncated = true;
          return out;
        }
        Solved s;
        s.choices.reserve(g.decision_count());
        s.choices.push_back(choice);
        for (std::size_t i = 0; i < k; ++i) {
          const auto& c = child_sets[i][digit[i]].choices;
          s.choices.insert(s.choices.end(), c.begin(), c.end());
        }
        s.value = child_sets[choice][digit[choice]].value;
        out.push_back(std::move(s));
      }
      if (!next_digit(digit, child_sets)) break;
    }
  }
  return out;
}

}  // namespace

TreeProfile solve(const FiniteGame& game, TiePolicy ties) {
  require_solvable(game);
  return TreeProfile{solve_node(game, ties).choices};
}

Enumeration enumerate_equilibria(const FiniteGame& game, std::size_t cap) {
  require_solvable(game);
  if (cap == 0) throw InvalidValue("cap must be positive");
  EnumState st{cap};
  Enumeration result;
  for (auto& s : enumerate_node(game, st)) result.profiles.push_back({std::move(s.choices)});
  result.truncated = st.truncated;
  return result;
}

SpeReport check_spe(const FiniteGame& game, const TreeProfile& profile) {
  require_solvable(game);
  require_shape(game, profile);
  std::vector<std::pair<std::size_t, Deviation<Utility>>> found;
  std::size_t index = 0;
  PlayLine path;
  auto value = [&](auto&& self, const FiniteGame& g) -> OutcomeVector {
    if (g.is_leaf()) return g.outcome();
    const std::size_t here = index++;
    std::vector<OutcomeVector> child_values;
    for (const auto& b : g.branches()) {
      path.push_back(b.label);
      child_values.push_back(self(self, b.game));
      path.pop_back();
    }
    const std::size_t chosen = profile.choices[here];
    const int owner = g.owner().index;
    const Utility follow = child_values[chosen][owner];
    for (std::size_t b = 0; b < child_values.size(); ++b) {
      if (b == chosen || child_values[b][owner] <= follow) continue;
      found.push_back({here,
                       Deviation<Utility>{path_string(path), g.owner(),
                                          g.branches()[chosen].label, g.branches()[b].label,
                                          follow, child_values[b][owner], std::nullopt}});
    }
    return child_values[chosen];
  };
  value(value, game);

  std::stable_sort(found.begin(), found.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  SpeReport report;
  for (auto& f : found) report.violations.push_back(std::move(f.second));
  report.ok = report.violations.empty();
  return report;
}

std::vector<PlayLine> distinct_play_lines(const FiniteGame& game,
                                          const std::vector<TreeProfile>& profiles) {
  std::vector<PlayLine> lines;
  for (const auto& p : profiles) {
    PlayLine line = induced_play(game, p).play;
    if (std::find(lines.begin(), lines.end(), line) == lines.end()) lines.push_back(line);
  }
  return lines;
}

}  // namespace escalade
