#include "escalade/catalog.hpp"

namespace escalade::catalog {
namespace {

FiniteGame leaf(Utility a, Utility b) { return FiniteGame::leaf({a, b}); }

OutcomeVector abandon_payoff(PlayerId mover) {
  return mover == kAlice ? OutcomeVector{0, 1} : OutcomeVector{1, 0};
}

PlayerId other(PlayerId p) { return p == kAlice ? kBertrand : kAlice; }

}  // namespace

FiniteGame sequential_matching_pennies() {
  auto last = [](const char* prev, Utility match_a, Utility match_b, Utility miss_a,
                 Utility miss_b) {
    // Alice's final move scores against Bertrand's move `prev`.
    const bool p = prev[0] == 'p';
    return FiniteGame::node(kAlice, {{"p", p ? leaf(match_a, match_b) : leaf(miss_a, miss_b)},
                                     {"f", p ? leaf(miss_a, miss_b) : leaf(match_a, match_b)}});
  };
  // After a match in the first two moves Alice already has one point.
  FiniteGame after_match_p = last("p", 2, 0, 1, 1);
  FiniteGame after_miss_f = last("f", 1, 1, 0, 2);
  FiniteGame after_miss_p = last("p", 1, 1, 0, 2);
  FiniteGame after_match_f = last("f", 2, 0, 1, 1);
  return FiniteGame::node(
      kAlice,
      {{"p", FiniteGame::node(kBertrand, {{"p", after_match_p}, {"f", after_miss_f}})},
       {"f", FiniteGame::node(kBertrand, {{"p", after_miss_p}, {"f", after_match_f}})}});
}

FiniteGame zero_one(std::size_t rounds) {
  // Mover of round k (0-based) is Alice for even k.
  PlayerId after_last = rounds % 2 == 0 ? kAlice : kBertrand;
  FiniteGame g = FiniteGame::leaf(abandon_payoff(after_last));
  PlayerId mover = other(after_last);
  for (std::size_t k = 0; k < rounds; ++k) {
    g = FiniteGame::node(mover, {{"a", FiniteGame::leaf(abandon_payoff(mover))}, {"c", g}});
    mover = other(mover);
  }
  return g;
}

CyclicGame zero_one_cyclic() {
  return CyclicGame({{"A", kAlice, {{"a", OutcomeVector{0, 1}}, {"c", std::string("B")}}},
                     {"B", kBertrand, {{"a", OutcomeVector{1, 0}}, {"c", std::string("A")}}}},
                    "A");
}

MatrixGame rock_paper_scissors() {
  const Rational h(1, 2);
  return {{{h, 0, 1}, {1, h, 0}, {0, 1, h}}, 1};
}

MatrixGame rock_paper_scissors_zero_sum() {
  return {{{0, -1, 1}, {1, 0, -1}, {-1, 1, 0}}, 0};
}

MatrixGame matching_pennies() { return {{{1, 0}, {0, 1}}, 1}; }

}  // namespace escalade::catalog
