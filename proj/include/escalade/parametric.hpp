#pragma once

// Stage-indexed infinite games. Each shape is a decision point that recurs at
// many stages; leaf payoffs are affine in the stage n and every advance moves
// to stage n+1. Equilibrium conditions are decided for all stages at once by
// comparing affine coefficients.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "escalade/cyclic.hpp"
#include "escalade/finite_solver.hpp"
#include "escalade/game.hpp"

namespace escalade {

// constant + slope * n over integer stages n >= 0.
struct AffineValue {
  std::int64_t constant = 0;
  std::int64_t slope = 0;

  // Throws InvalidValue on overflow.
  std::int64_t at(std::int64_t n) const;
  // The same payoff seen from k stages earlier: n -> this(n + k).
  AffineValue shifted(std::int64_t k) const;
  std::string to_string() const;

  friend bool operator==(const AffineValue&, const AffineValue&) = default;
};

// f(n) <= g(n) for every integer n >= from.
bool affine_leq(const AffineValue& f, const AffineValue& g, std::int64_t from);
// Smallest n >= from with f(n) > g(n), if any.
std::optional<std::int64_t> first_exceeding_stage(const AffineValue& f, const AffineValue& g,
                                                  std::int64_t from);

using AffinePayoff = std::vector<AffineValue>;

struct Advance {
  std::string shape;
  friend bool operator==(const Advance&, const Advance&) = default;
};

using ParamTarget = std::variant<Advance, AffinePayoff>;

struct ParamMove {
  ActionLabel label;
  ParamTarget target;
  friend bool operator==(const ParamMove&, const ParamMove&) = default;
};

struct Shape {
  std::string name;
  PlayerId owner;
  std::vector<ParamMove> moves;
  friend bool operator==(const Shape&, const Shape&) = default;
};

class ParametricGame {
 public:
  // Throws ValidationError (same rules as CyclicGame).
  ParametricGame(std::vector<Shape> shapes, std::string start);

  const std::vector<Shape>& shapes() const { return shapes_; }
  std::size_t size() const { return shapes_.size(); }
  std::size_t start() const { return start_; }
  const Shape& shape(std::size_t i) const { return shapes_[i]; }

  // Throws UnknownNode.
  std::size_t index_of(std::string_view name) const;
  std::optional<std::size_t> successor(std::size_t shape, std::size_t move) const {
    return successors_[shape][move];
  }
  // Least stage at which a shape is entered when play starts at stage 0 in
  // the start shape; 0 for shapes unreachable from the start.
  std::int64_t min_entry_stage(std::size_t shape) const { return min_stage_[shape]; }
  // Smallest stage n >= from at which play from the start can enter the
  // shape, or nullopt when there is none.
  std::optional<std::int64_t> next_entry_stage(std::size_t shape, std::int64_t from) const;

  friend bool operator==(const ParametricGame& a, const ParametricGame& b) {
    return a.shapes_ == b.shapes_ && a.start_ == b.start_;
  }

 private:
  std::vector<Shape> shapes_;
  std::size_t start_ = 0;
  std::vector<std::vector<std::optional<std::size_t>>> successors_;
  std::vector<std::int64_t> min_stage_;
  // Shapes enterable at stage t; eventually periodic, stored up to the end of
  // the first period.
  std::vector<std::vector<bool>> entered_;
  std::size_t period_start_ = 0;
  std::size_t period_len_ = 1;
};

struct StationaryProfile {
  std::vector<std::size_t> choice;
  friend bool operator==(const StationaryProfile&, const StationaryProfile&) = default;
  friend auto operator<=>(const StationaryProfile&, const StationaryProfile&) = default;
};

StationaryProfile stationary_profile(const ParametricGame& game,
                                     const std::map<std::string, ActionLabel>& labels);
void require_shape(const ParametricGame& game, const StationaryProfile& profile);
std::string describe(const ParametricGame& game, const StationaryProfile& profile);

// Play reaches a leaf after `steps` advances. `outcome` is a function of the
// stage n at which `path.front()` is entered.
struct ConvergesAffine {
  std::int64_t steps = 0;
  std::vector<std::size_t> path;
  AffinePayoff outcome;
};

struct Divergent {
  std::vector<std::size_t> stem;
  std::vector<std::size_t> cycle;
};

using ParamResult = std::variant<ConvergesAffine, Divergent>;

ParamResult induced_outcome_param(const ParametricGame& game, const StationaryProfile& profile,
                                  std::size_t from);
// Throws UnknownNode for an unknown shape name.
ParamResult induced_outcome_param(const ParametricGame& game, const StationaryProfile& profile,
                                  std::string_view from);

using AffineSpeReport = BasicSpeReport<AffineValue>;

// Convergence from every shape plus the one-shot deviation test, where each
// inequality must hold at every stage at which the shape can be entered
// (every n >= 0 for shapes the start never reaches).
AffineSpeReport check_spe_param(const ParametricGame& game, const StationaryProfile& profile);

std::vector<StationaryProfile> enumerate_stationary_spe(
    const ParametricGame& game, std::uint64_t bound = kDefaultSearchBound);

// Two-bidder all-pay ascending auction with unit increments for an object
// worth `value`. Shapes: "open" (Alice, stage 0), "bertrand" (odd stages),
// "alice" (even stages >= 2); moves "a" (abandon) and "c" (bid one more).
// Abandoning at stage n >= 1 leaves the mover -(n-1) and the opponent
// value - n; abandoning at stage 0 gives (0,0). Throws InvalidValue if
// value < 1.
ParametricGame dollar_auction(std::int64_t value);

// Concrete tree for stages 0..max_stage; an advance out of max_stage becomes
// Leaf(terminal).
FiniteGame instantiate(const ParametricGame& game, std::int64_t max_stage,
                       const OutcomeVector& terminal);

TreeProfile truncate_profile(const ParametricGame& game, const StationaryProfile& profile,
                             std::int64_t max_stage);

// Outcome the profile induces from the stage max_stage+1 decision points that
// instantiate() cuts off, evaluated at that stage. Empty when play from a cut
// point diverges, when cut points disagree, or when nothing is cut.
std::optional<OutcomeVector> value_at_cut(const ParametricGame& game,
                                          const StationaryProfile& profile,
                                          std::int64_t max_stage);

// The same graph with constant payoffs.
ParametricGame as_parametric(const CyclicGame& game);
PositionalProfile as_positional(const StationaryProfile& profile);
StationaryProfile as_stationary(const PositionalProfile& profile);

}  // namespace escalade
