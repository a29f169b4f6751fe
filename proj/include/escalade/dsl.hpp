#pragma once

// Text format for the four game representations.
//
//   doc    := header? (finite | cyclic | param | matrix)
//   header := "players" NAME NAME
//   finite := "finite" "{" tree "}"
//   tree   := "leaf" "(" INT "," INT ")" | NAME "{" (LABEL "->" tree)+ "}"
//   cyclic := "cyclic" "start" "=" ID "{" (ID ":" NAME "{" (LABEL "->" (ID | leaf))+ "}")+ "}"
//   param  := "param" "start" "=" ID "{"
//               (ID ":" NAME "{" (LABEL "->" ("advance" ID | "leaf" "(" AFFINE "," AFFINE ")"))+ "}")+
//             "}"
//   AFFINE := INT (("+" | "-") INT "*" "n")?
//   matrix := "matrix" "sum" "=" RAT "{" RAT+ (";" RAT+)* "}"
//
// NAME is one of the two player names (default "Alice" and "Bertrand"). A
// ';' may follow any branch or edge. '#' starts a comment running to the end
// of the line.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "escalade/cyclic.hpp"
#include "escalade/game.hpp"
#include "escalade/matrix.hpp"
#include "escalade/parametric.hpp"

namespace escalade {

using AnyGame = std::variant<FiniteGame, CyclicGame, ParametricGame, MatrixGame>;

struct GameDoc {
  std::array<std::string, kNumPlayers> players{"Alice", "Bertrand"};
  AnyGame game;
  friend bool operator==(const GameDoc&, const GameDoc&) = default;
};

using AnyProfile = std::variant<TreeProfile, PositionalProfile, StationaryProfile>;

// Throws ParseError; structural problems (duplicate labels, dangling node
// references, ragged matrices) are reported as ParseError at the offending
// token.
GameDoc parse(std::string_view text);

// Canonical text: two-space indentation, one branch per line, LF endings, no
// trailing whitespace, always with a players header.
std::string serialize(const GameDoc& doc);

// Profile files hold one `key = action` line per decision point. Keys are
// tree paths ("/" for the root, "/p/f" below it) for finite games and
// node or shape names otherwise. Throws ParseError or ShapeMismatch.
AnyProfile parse_profile(std::string_view text, const GameDoc& doc);
std::string serialize_profile(const GameDoc& doc, const AnyProfile& profile);

// Graphviz digraph. Nodes are named n0, n1, ... in preorder from the start;
// chosen edges of `highlight` carry penwidth=2,style=bold. Throws
// ShapeMismatch when the profile does not fit the game.
std::string to_dot(const GameDoc& doc, const std::optional<AnyProfile>& highlight = std::nullopt);

}  // namespace escalade
