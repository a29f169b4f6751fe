#include "escalade/escalation.hpp"

#include <limits>

#include "escalade/error.hpp"

namespace escalade {
namespace {

// Uniform view of the two graph representations for the shared loops below.
struct CyclicView {
  const CyclicGame& g;
  std::size_t size() const { return g.size(); }
  PlayerId owner(std::size_t i) const { return g.node(i).owner; }
  const std::string& name(std::size_t i) const { return g.node(i).name; }
  const ActionLabel& label(std::size_t i, std::size_t e) const { return g.node(i).edges[e].label; }
  std::optional<std::size_t> next(std::size_t i, std::size_t e) const { return g.successor(i, e); }
  OutcomeVector leaf(std::size_t i, std::size_t e, std::int64_t) const {
    return std::get<OutcomeVector>(g.node(i).edges[e].target);
  }
};

struct ParamView {
  const ParametricGame& g;
  std::size_t size() const { return g.size(); }
  PlayerId owner(std::size_t i) const { return g.shape(i).owner; }
  const std::string& name(std::size_t i) const { return g.shape(i).name; }
  const ActionLabel& label(std::size_t i, std::size_t m) const { return g.shape(i).moves[m].label; }
  std::optional<std::size_t> next(std::size_t i, std::size_t m) const { return g.successor(i, m); }
  OutcomeVector leaf(std::size_t i, std::size_t m, std::int64_t stage) const {
    OutcomeVector out;
    for (const auto& v : std::get<AffinePayoff>(g.shape(i).moves[m].target)) {
      out.push_back(v.at(stage));
    }
    return out;
  }
};

template <class View, class Profile>
Profile compose_view(const View& view, const BeliefPair<Profile>& beliefs) {
  Profile out;
  for (std::size_t i = 0; i < view.size(); ++i) {
    const Profile& own = view.owner(i) == kAlice ? beliefs.of_alice : beliefs.of_bertrand;
    out.choice.push_back(own.choice[i]);
  }
  return out;
}

std::vector<std::string> names(const auto& view, const std::vector<std::size_t>& idx) {
  std::vector<std::string> out;
  for (std::size_t i : idx) out.push_back(view.name(i));
  return out;
}

template <class View, class Profile>
SimTrace simulate_view(const View& view, std::size_t start, std::span<const Profile> equilibria,
                       std::size_t horizon, std::uint64_t seed, const SelectionPolicy& policy) {
  if (equilibria.empty()) throw NoEquilibria();
  if (const auto* fixed = std::get_if<FixedIndex>(&policy)) {
    for (std::size_t idx : fixed->index) {
      if (idx >= equilibria.size()) {
        throw InvalidValue("fixed belief index " + std::to_string(idx) + " out of range");
      }
    }
  }
  BeliefSampler sampler(seed);
  SimTrace trace;
  trace.seed = seed;
  std::size_t node = start;
  std::int64_t stage = 0;
  while (true) {
    if (trace.steps.size() == horizon) {
      trace.horizon_hit = true;
      return trace;
    }
    const PlayerId mover = view.owner(node);
    std::size_t belief = 0;
    if (const auto* fixed = std::get_if<FixedIndex>(&policy)) {
      belief = fixed->index[mover.index];
    } else {
      belief = sampler.pick(equilibria.size());
    }
    const std::size_t action = equilibria[belief].choice[node];
    trace.steps.push_back({stage, mover, belief, view.label(node, action)});
    auto next = view.next(node, action);
    if (!next) {
      trace.outcome = view.leaf(node, action, stage);
      return trace;
    }
    node = *next;
    ++stage;
  }
}

}  // namespace

PositionalProfile compose_beliefs(const CyclicGame& game,
                                  const BeliefPair<PositionalProfile>& beliefs) {
  require_shape(game, beliefs.of_alice);
  require_shape(game, beliefs.of_bertrand);
  return compose_view(CyclicView{game}, beliefs);
}

StationaryProfile compose_beliefs(const ParametricGame& game,
                                  const BeliefPair<StationaryProfile>& beliefs) {
  require_shape(game, beliefs.of_alice);
  require_shape(game, beliefs.of_bertrand);
  return compose_view(ParamView{game}, beliefs);
}

EscalationVerdict detect_escalation(const CyclicGame& game,
                                    const BeliefPair<PositionalProfile>& beliefs,
                                    bool require_equilibria) {
  if (require_equilibria) {
    if (!check_spe_cyclic(game, beliefs.of_alice).ok) throw BeliefNotEquilibrium(kAlice.index);
    if (!check_spe_cyclic(game, beliefs.of_bertrand).ok) {
      throw BeliefNotEquilibrium(kBertrand.index);
    }
  }
  const PositionalProfile effective = compose_beliefs(game, beliefs);
  InducedResult r = induced_outcome(game, effective, game.start());
  CyclicView view{game};
  if (auto* d = std::get_if<Diverges>(&r)) {
    return Escalates{names(view, d->stem), names(view, d->cycle)};
  }
  auto& c = std::get<Converges>(r);
  return Terminates{static_cast<std::int64_t>(c.path.size()) - 1, c.outcome};
}

EscalationVerdict detect_escalation(const ParametricGame& game,
                                    const BeliefPair<StationaryProfile>& beliefs,
                                    bool require_equilibria) {
  if (require_equilibria) {
    if (!check_spe_param(game, beliefs.of_alice).ok) throw BeliefNotEquilibrium(kAlice.index);
    if (!check_spe_param(game, beliefs.of_bertrand).ok) {
      throw BeliefNotEquilibrium(kBertrand.index);
    }
  }
  const StationaryProfile effective = compose_beliefs(game, beliefs);
  // Decided on the shape graph: a repeated shape with no leaf chosen means
  // every stage is reached.
  ParamResult r = induced_outcome_param(game, effective, game.start());
  ParamView view{game};
  if (auto* d = std::get_if<Divergent>(&r)) {
    return Escalates{names(view, d->stem), names(view, d->cycle)};
  }
  auto& c = std::get<ConvergesAffine>(r);
  OutcomeVector outcome;
  for (const auto& v : c.outcome) outcome.push_back(v.at(0));
  return Terminates{c.steps, std::move(outcome)};
}

std::size_t BeliefSampler::pick(std::size_t n) {
  const std::uint64_t range = n;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return static_cast<std::size_t>(x % range);
}

SimTrace simulate(const CyclicGame& game, std::span<const PositionalProfile> equilibria,
                  std::size_t horizon, std::uint64_t seed, const SelectionPolicy& policy) {
  for (const auto& p : equilibria) require_shape(game, p);
  return simulate_view(CyclicView{game}, game.start(), equilibria, horizon, seed, policy);
}

SimTrace simulate(const ParametricGame& game, std::span<const StationaryProfile> equilibria,
                  std::size_t horizon, std::uint64_t seed, const SelectionPolicy& policy) {
  for (const auto& p : equilibria) require_shape(game, p);
  return simulate_view(ParamView{game}, game.start(), equilibria, horizon, seed, policy);
}

SimTrace simulate(const CyclicGame& game, std::size_t horizon, std::uint64_t seed,
                  const SelectionPolicy& policy) {
  const auto eq = enumerate_positional_spe(game);
  return simulate(game, std::span<const PositionalProfile>(eq), horizon, seed, policy);
}

SimTrace simulate(const ParametricGame& game, std::size_t horizon, std::uint64_t seed,
                  const SelectionPolicy& policy) {
  const auto eq = enumerate_stationary_spe(game);
  return simulate(game, std::span<const StationaryProfile>(eq), horizon, seed, policy);
}

std::string trace_records(const SimTrace& trace) {
  std::string out;
  for (const auto& s : trace.steps) {
    out += std::to_string(s.stage) + "," + std::to_string(s.mover.index) + "," +
           std::to_string(s.belief_index) + "," + s.action + "\n";
  }
  if (trace.outcome) {
    out += "terminal,converged";
    for (Utility u : *trace.outcome) out += "," + std::to_string(u);
    out += "\n";
  } else {
    out += "terminal,horizon\n";
  }
  return out;
}

}  // namespace escalade
