#pragma once

// Reference games used across the test suite and the CLI.

#include <cstddef>

#include "escalade/cyclic.hpp"
#include "escalade/game.hpp"
#include "escalade/matrix.hpp"
#include "escalade/parametric.hpp"

namespace escalade::catalog {

// Alice, Bertrand, Alice each play p or f; Alice scores a point for every
// consecutive match, Bertrand for every mismatch.
FiniteGame sequential_matching_pennies();

// Alternating abandon (a) / continue (c) line of `rounds` decisions, Alice
// first. Abandoning pays (0,1) when Alice stops and (1,0) when Bertrand
// stops. Continuing past the last round pays what the next mover's abandon
// would have paid.
FiniteGame zero_one(std::size_t rounds);

// The same game without end, as a two-node graph: A (Alice) and B
// (Bertrand), each with a -> leaf and c -> the other node.
CyclicGame zero_one_cyclic();

// Win 1, lose 0, tie 1/2; constant sum 1. Strategies: rock, paper, scissors.
MatrixGame rock_paper_scissors();
// Win 1, lose -1, tie 0; zero-sum.
MatrixGame rock_paper_scissors_zero_sum();
// Row player wins on a match; constant sum 1.
MatrixGame matching_pennies();

}  // namespace escalade::catalog
