#include "escalade/parametric.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_map>

#include "escalade/error.hpp"

namespace escalade {
namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw InvalidValue("affine arithmetic overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw InvalidValue("affine arithmetic overflow");
  return r;
}

AffinePayoff shifted(const AffinePayoff& payoff, std::int64_t k) {
  AffinePayoff out;
  for (const auto& v : payoff) out.push_back(v.shifted(k));
  return out;
}

}  // namespace

std::int64_t AffineValue::at(std::int64_t n) const {
  return checked_add(constant, checked_mul(slope, n));
}

AffineValue AffineValue::shifted(std::int64_t k) const { return {at(k), slope}; }

std::string AffineValue::to_string() const {
  if (slope == 0) return std::to_string(constant);
  std::string s = std::to_string(constant);
  s += slope < 0 ? "-" : "+";
  // |slope| without overflowing on INT64_MIN
  s += slope < 0 ? std::to_string(-(slope + 1) + std::uint64_t{1}) : std::to_string(slope);
  return s + "*n";
}

std::optional<std::int64_t> first_exceeding_stage(const AffineValue& f, const AffineValue& g,
                                                  std::int64_t from) {
  // d(n) = g(n) - f(n); look for the first n >= from with d(n) < 0.
  const __int128 da = static_cast<__int128>(g.constant) - f.constant;
  const __int128 db = static_cast<__int128>(g.slope) - f.slope;
  if (da + db * from < 0) return from;
  if (db >= 0) return std::nullopt;
  // d is decreasing and d(from) >= 0, so da >= 0 here.
  __int128 n = da / -db + 1;
  if (n < from) n = from;
  if (n > INT64_MAX) throw InvalidValue("witness stage out of range");
  return static_cast<std::int64_t>(n);
}

bool affine_leq(const AffineValue& f, const AffineValue& g, std::int64_t from) {
  return !first_exceeding_stage(f, g, from).has_value();
}

ParametricGame::ParametricGame(std::vector<Shape> shapes, std::string start)
    : shapes_(std::move(shapes)) {
  if (shapes_.empty()) throw ValidationError("parametric game has no shapes");
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < shapes_.size(); ++i) {
    if (!index.emplace(shapes_[i].name, i).second) {
      throw ValidationError("duplicate shape '" + shapes_[i].name + "'");
    }
  }
  auto it = index.find(start);
  if (it == index.end()) throw ValidationError("start shape '" + start + "' does not exist");
  start_ = it->second;

  successors_.resize(shapes_.size());
  for (std::size_t i = 0; i < shapes_.size(); ++i) {
    const Shape& s = shapes_[i];
    if (s.owner.index < 0 || s.owner.index >= kNumPlayers) {
      throw ValidationError("shape '" + s.name + "' has an owner other than the two players");
    }
    if (s.moves.empty()) throw ValidationError("shape '" + s.name + "' has no moves");
    std::set<ActionLabel> labels;
    for (const auto& m : s.moves) {
      if (!labels.insert(m.label).second) {
        throw ValidationError("shape '" + s.name + "' has duplicate label '" + m.label + "'");
      }
      if (const auto* adv = std::get_if<Advance>(&m.target)) {
        auto t = index.find(adv->shape);
        if (t == index.end()) {
          throw ValidationError("shape '" + s.name + "' advances to unknown shape '" +
                                adv->shape + "'");
        }
        successors_[i].push_back(t->second);
      } else {
        if (std::get<AffinePayoff>(m.target).size() != kNumPlayers) {
          throw ValidationError("leaf under shape '" + s.name + "' needs two payoffs");
        }
        successors_[i].push_back(std::nullopt);
      }
    }
  }

  min_stage_.assign(shapes_.size(), -1);
  std::deque<std::size_t> queue{start_};
  min_stage_[start_] = 0;
  while (!queue.empty()) {
    std::size_t s = queue.front();
    queue.pop_front();
    for (const auto& next : successors_[s]) {
      if (next && min_stage_[*next] < 0) {
        min_stage_[*next] = min_stage_[s] + 1;
        queue.push_back(*next);
      }
    }
  }
  for (auto& m : min_stage_) {
    if (m < 0) m = 0;
  }

  std::map<std::vector<bool>, std::size_t> first_seen;
  std::vector<bool> cur(shapes_.size(), false);
  cur[start_] = true;
  while (true) {
    auto [it, fresh] = first_seen.emplace(cur, entered_.size());
    if (!fresh) {
      period_start_ = it->second;
      period_len_ = entered_.size() - it->second;
      break;
    }
    entered_.push_back(cur);
    std::vector<bool> next(shapes_.size(), false);
    for (std::size_t s = 0; s < shapes_.size(); ++s) {
      if (!cur[s]) continue;
      for (const auto& succ : successors_[s]) {
        if (succ) next[*succ] = true;
      }
    }
    cur = std::move(next);
  }
}

std::optional<std::int64_t> ParametricGame::next_entry_stage(std::size_t shape,
                                                             std::int64_t from) const {
  from = std::max<std::int64_t>(from, 0);
  const auto pre = static_cast<std::int64_t>(period_start_);
  const auto len = static_cast<std::int64_t>(period_len_);
  for (std::int64_t t = from; t < pre; ++t) {
    if (entered_[t][shape]) return t;
  }
  const std::int64_t base = std::max(from, pre);
  for (std::int64_t k = 0; k < len; ++k) {
    if (base > INT64_MAX - k) return std::nullopt;
    const std::int64_t t = base + k;
    if (entered_[pre + (t - pre) % len][shape]) return t;
  }
  return std::nullopt;
}

std::size_t ParametricGame::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < shapes_.size(); ++i) {
    if (shapes_[i].name == name) return i;
  }
  throw UnknownNode(std::string(name));
}

StationaryProfile stationary_profile(const ParametricGame& game,
                                     const std::map<std::string, ActionLabel>& labels) {
  for (const auto& [name, label] : labels) game.index_of(name);
  StationaryProfile p;
  for (const auto& shape : game.shapes()) {
    auto it = labels.find(shape.name);
    if (it == labels.end()) throw ShapeMismatch("no choice for shape '" + shape.name + "'");
    std::size_t m = 0;
    while (m < shape.moves.size() && shape.moves[m].label != it->second) ++m;
    if (m == shape.moves.size()) {
      throw ShapeMismatch("shape '" + shape.name + "' has no move '" + it->second + "'");
    }
    p.choice.push_back(m);
  }
  return p;
}

void require_shape(const ParametricGame& game, const StationaryProfile& profile) {
  if (profile.choice.size() != game.size()) {
    throw ShapeMismatch("profile covers " + std::to_string(profile.choice.size()) +
                        " shapes, game has " + std::to_string(game.size()));
  }
  for (std::size_t i = 0; i < game.size(); ++i) {
    if (profile.choice[i] >= game.shape(i).moves.size()) {
      throw ShapeMismatch("choice out of range at shape '" + game.shape(i).name + "'");
    }
  }
}

std::string describe(const ParametricGame& game, const StationaryProfile& profile) {
  std::string s = "{";
  for (std::size_t i = 0; i < game.size(); ++i) {
    if (i) s += ',';
    s += game.shape(i).name + ":" + game.shape(i).moves[profile.choice[i]].label;
  }
  return s + "}";
}

ParamResult induced_outcome_param(const ParametricGame& game, const StationaryProfile& profile,
                                  std::size_t from) {
  require_shape(game, profile);
  std::vector<std::size_t> path;
  std::vector<int> seen_at(game.size(), -1);
  std::size_t cur = from;
  while (true) {
    if (seen_at[cur] >= 0) {
      auto split = path.begin() + seen_at[cur];
      return Divergent{{path.begin(), split}, {split, path.end()}};
    }
    seen_at[cur] = static_cast<int>(path.size());
    path.push_back(cur);
    const std::size_t move = profile.choice[cur];
    auto next = game.successor(cur, move);
    if (!next) {
      const auto steps = static_cast<std::int64_t>(path.size() - 1);
      const auto& leaf = std::get<AffinePayoff>(game.shape(cur).moves[move].target);
      return ConvergesAffine{steps, std::move(path), shifted(leaf, steps)};
    }
    cur = *next;
  }
}

ParamResult induced_outcome_param(const ParametricGame& game, const StationaryProfile& profile,
                                  std::string_view from) {
  return induced_outcome_param(game, profile, game.index_of(from));
}

AffineSpeReport check_spe_param(const ParametricGame& game, const StationaryProfile& profile) {
  require_shape(game, profile);
  std::vector<std::optional<AffinePayoff>> value(game.size());
  for (std::size_t i = 0; i < game.size(); ++i) {
    ParamResult r = induced_outcome_param(game, profile, i);
    if (auto* c = std::get_if<ConvergesAffine>(&r)) value[i] = c->outcome;
  }

  AffineSpeReport report;
  for (std::size_t i = 0; i < game.size(); ++i) {
    if (!value[i]) report.divergent_from.push_back(game.shape(i).name);
  }
  for (std::size_t i = 0; i < game.size(); ++i) {
    const Shape& shape = game.shape(i);
    const int owner = shape.owner.index;
    const std::optional<std::int64_t> first_entry = game.next_entry_stage(i, 0);
    const bool reachable = first_entry.has_value();
    const std::int64_t from = first_entry.value_or(0);
    const std::size_t chosen = profile.choice[i];
    std::optional<AffineValue> follow;
    if (value[i]) follow = (*value[i])[owner];
    for (std::size_t m = 0; m < shape.moves.size(); ++m) {
      if (m == chosen) continue;
      std::optional<AffineValue> dev;
      if (auto next = game.successor(i, m)) {
        if (value[*next]) dev = (*value[*next])[owner].shifted(1);
      } else {
        dev = std::get<AffinePayoff>(shape.moves[m].target)[owner];
      }
      if (!dev) continue;
      std::optional<std::int64_t> stage =
          follow ? first_exceeding_stage(*dev, *follow, from) : std::optional(from);
      if (stage && reachable) stage = game.next_entry_stage(i, *stage);
      if (stage) {
        report.violations.push_back({shape.name, shape.owner, shape.moves[chosen].label,
                                     shape.moves[m].label, follow, *dev, stage});
      }
    }
  }
  report.ok = report.divergent_from.empty() && report.violations.empty();
  return report;
}

std::vector<StationaryProfile> enumerate_stationary_spe(const ParametricGame& game,
                                                        std::uint64_t bound) {
  std::uint64_t total = 1;
  for (const auto& s : game.shapes()) {
    if (total > bound / s.moves.size()) {
      throw SearchSpaceTooLarge("more than " + std::to_string(bound) + " stationary profiles");
    }
    total *= s.moves.size();
  }

  std::vector<StationaryProfile> accepted;
  StationaryProfile p{std::vector<std::size_t>(game.size(), 0)};
  while (true) {
    if (check_spe_param(game, p).ok) accepted.push_back(p);
    std::size_t pos = game.size();
    while (pos > 0) {
      --pos;
      if (++p.choice[pos] < game.shape(pos).moves.size()) break;
      p.choice[pos] = 0;
      if (pos == 0) return accepted;
    }
  }
}

ParametricGame dollar_auction(std::int64_t value) {
  if (value < 1) throw InvalidValue("auctioned value must be at least 1");
  // At stage n >= 1 the mover's standing bid is n-1 and the opponent's is n.
  const AffineValue sunk{1, -1};        // -(n - 1)
  const AffineValue wins{value, -1};    // value - n
  std::vector<Shape> shapes;
  shapes.push_back({"open", kAlice,
                    {{"a", AffinePayoff{{0, 0}, {0, 0}}}, {"c", Advance{"bertrand"}}}});
  shapes.push_back({"bertrand", kBertrand,
                    {{"a", AffinePayoff{wins, sunk}}, {"c", Advance{"alice"}}}});
  shapes.push_back({"alice", kAlice,
                    {{"a", AffinePayoff{sunk, wins}}, {"c", Advance{"bertrand"}}}});
  return ParametricGame(std::move(shapes), "open");
}

FiniteGame instantiate(const ParametricGame& game, std::int64_t max_stage,
                       const OutcomeVector& terminal) {
  if (max_stage < 0) throw InvalidValue("max_stage must be nonnegative");
  std::map<std::pair<std::size_t, std::int64_t>, FiniteGame> memo;
  auto build = [&](auto&& self, std::size_t shape, std::int64_t stage) -> FiniteGame {
    if (stage > max_stage) return FiniteGame::leaf(terminal);
    auto key = std::make_pair(shape, stage);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const Shape& s = game.shape(shape);
    std::vector<Branch> branches;
    for (std::size_t m = 0; m < s.moves.size(); ++m) {
      if (auto next = game.successor(shape, m)) {
        branches.push_back({s.moves[m].label, self(self, *next, stage + 1)});
      } else {
        OutcomeVector leaf;
        for (const auto& v : std::get<AffinePayoff>(s.moves[m].target)) leaf.push_back(v.at(stage));
        branches.push_back({s.moves[m].label, FiniteGame::leaf(std::move(leaf))});
      }
    }
    FiniteGame g = FiniteGame::node(s.owner, std::move(branches));
    memo.emplace(key, g);
    return g;
  };
  return build(build, game.start(), 0);
}

TreeProfile truncate_profile(const ParametricGame& game, const StationaryProfile& profile,
                             std::int64_t max_stage) {
  require_shape(game, profile);
  TreeProfile tree;
  auto walk = [&](auto&& self, std::size_t shape, std::int64_t stage) -> void {
    if (stage > max_stage) return;
    tree.choices.push_back(profile.choice[shape]);
    for (std::size_t m = 0; m < game.shape(shape).moves.size(); ++m) {
      if (auto next = game.successor(shape, m)) self(self, *next, stage + 1);
    }
  };
  walk(walk, game.start(), 0);
  return tree;
}

std::optional<OutcomeVector> value_at_cut(const ParametricGame& game,
                                          const StationaryProfile& profile,
                                          std::int64_t max_stage) {
  require_shape(game, profile);
  std::set<std::size_t> cut;
  std::set<std::pair<std::size_t, std::int64_t>> seen;
  auto walk = [&](auto&& self, std::size_t shape, std::int64_t stage) -> void {
    if (stage > max_stage) {
      cut.insert(shape);
      return;
    }
    if (!seen.emplace(shape, stage).second) return;
    for (std::size_t m = 0; m < game.shape(shape).moves.size(); ++m) {
      if (auto next = game.successor(shape, m)) self(self, *next, stage + 1);
    }
  };
  walk(walk, game.start(), 0);
  std::optional<OutcomeVector> value;
  for (std::size_t shape : cut) {
    const ParamResult r = induced_outcome_param(game, profile, shape);
    const auto* c = std::get_if<ConvergesAffine>(&r);
    if (!c) return std::nullopt;
    OutcomeVector v;
    for (const auto& a : c->outcome) v.push_back(a.at(max_stage + 1));
    if (value && *value != v) return std::nullopt;
    value = std::move(v);
  }
  return value;
}

ParametricGame as_parametric(const CyclicGame& game) {
  std::vector<Shape> shapes;
  for (const auto& node : game.nodes()) {
    Shape s{node.name, node.owner, {}};
    for (const auto& e : node.edges) {
      if (const auto* target = std::get_if<std::string>(&e.target)) {
        s.moves.push_back({e.label, Advance{*target}});
      } else {
        AffinePayoff payoff;
        for (Utility u : std::get<OutcomeVector>(e.target)) payoff.push_back({u, 0});
        s.moves.push_back({e.label, std::move(payoff)});
      }
    }
    shapes.push_back(std::move(s));
  }
  return ParametricGame(std::move(shapes), game.node(game.start()).name);
}

PositionalProfile as_positional(const StationaryProfile& profile) { return {profile.choice}; }
StationaryProfile as_stationary(const PositionalProfile& profile) { return {profile.choice}; }

}  // namespace escalade
