#pragma once

// Players who each hold a (possibly different) equilibrium as their belief
// about the whole game, and act on their own part of it. Two individually
// rational beliefs can compose into play that never ends.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "escalade/cyclic.hpp"
#include "escalade/game.hpp"
#include "escalade/parametric.hpp"

namespace escalade {

template <class Profile>
struct BeliefPair {
  Profile of_alice;
  Profile of_bertrand;
};

// Each decision point takes its owner's action from the owner's own belief.
// Throws ShapeMismatch.
PositionalProfile compose_beliefs(const CyclicGame& game,
                                  const BeliefPair<PositionalProfile>& beliefs);
StationaryProfile compose_beliefs(const ParametricGame& game,
                                  const BeliefPair<StationaryProfile>& beliefs);

// The composed play never reaches a payoff. For parametric games the lasso
// over shapes witnesses unboundedly many stages.
struct Escalates {
  std::vector<std::string> stem;
  std::vector<std::string> cycle;
};

// First abandon happens at `stage` (number of moves made before it).
struct Terminates {
  std::int64_t stage = 0;
  OutcomeVector outcome;
};

using EscalationVerdict = std::variant<Escalates, Terminates>;

// Plays the composed profile from the start. With `require_equilibria`, each
// belief must pass its subgame-perfection check or BeliefNotEquilibrium is
// thrown.
EscalationVerdict detect_escalation(const CyclicGame& game,
                                    const BeliefPair<PositionalProfile>& beliefs,
                                    bool require_equilibria);
EscalationVerdict detect_escalation(const ParametricGame& game,
                                    const BeliefPair<StationaryProfile>& beliefs,
                                    bool require_equilibria);

struct UniformSelection {};
// Alice always picks equilibrium index[0], Bertrand index[1].
struct FixedIndex {
  std::array<std::size_t, kNumPlayers> index{};
};
using SelectionPolicy = std::variant<UniformSelection, FixedIndex>;

// Seeded belief sampler. The generator is std::mt19937_64 seeded with the
// 64-bit seed; an index below n is drawn by rejecting raw outputs at or above
// the largest multiple of n and reducing the rest modulo n. Both steps are
// fully specified, so traces are reproducible everywhere.
class BeliefSampler {
 public:
  explicit BeliefSampler(std::uint64_t seed) : engine_(seed) {}
  std::size_t pick(std::size_t n);

 private:
  std::mt19937_64 engine_;
};

struct SimStep {
  std::int64_t stage = 0;
  PlayerId mover;
  std::size_t belief_index = 0;
  ActionLabel action;
};

struct SimTrace {
  std::uint64_t seed = 0;
  std::vector<SimStep> steps;
  std::optional<OutcomeVector> outcome;  // set when a leaf was reached
  bool horizon_hit = false;
};

// Memoryless agents: at every decision point the mover draws one of
// `equilibria` per `policy`, plays their own action in it, and forgets.
// Stops at the first leaf or after `horizon` moves. Throws NoEquilibria when
// `equilibria` is empty, InvalidValue for an out-of-range FixedIndex.
SimTrace simulate(const CyclicGame& game, std::span<const PositionalProfile> equilibria,
                  std::size_t horizon, std::uint64_t seed, const SelectionPolicy& policy);
SimTrace simulate(const ParametricGame& game, std::span<const StationaryProfile> equilibria,
                  std::size_t horizon, std::uint64_t seed, const SelectionPolicy& policy);

// Same, with the equilibria enumerated from the game.
SimTrace simulate(const CyclicGame& game, std::size_t horizon, std::uint64_t seed,
                  const SelectionPolicy& policy);
SimTrace simulate(const ParametricGame& game, std::size_t horizon, std::uint64_t seed,
                  const SelectionPolicy& policy);

// One `stage,mover,belief_index,action` line per step, then either
// `terminal,converged,<u0>,<u1>` or `terminal,horizon`.
std::string trace_records(const SimTrace& trace);

}  // namespace escalade
