#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace escalade {

// Base for every error raised by the library. Solvers never return partial
// results on error.
class GameError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A play line (or prefix) does not follow the branches of the game.
class InvalidPlay : public GameError {
 public:
  InvalidPlay(std::size_t position, std::string label)
      : GameError(label.empty()
                      ? "play ends before a leaf at position " +
                            std::to_string(position)
                      : "no branch labelled '" + label + "' at position " +
                            std::to_string(position)),
        position_(position),
        label_(std::move(label)) {}

  std::size_t position() const { return position_; }
  const std::string& label() const { return label_; }

 private:
  std::size_t position_;
  std::string label_;
};

class ShapeMismatch : public GameError {
 public:
  using GameError::GameError;
};

class NotTwoPlayer : public GameError {
 public:
  NotTwoPlayer() : GameError("solvers require exactly two players") {}
};

class UnknownNode : public GameError {
 public:
  explicit UnknownNode(const std::string& name)
      : GameError("unknown node '" + name + "'") {}
};

class SearchSpaceTooLarge : public GameError {
 public:
  using GameError::GameError;
};

class InvalidValue : public GameError {
 public:
  using GameError::GameError;
};

class NoEquilibria : public GameError {
 public:
  NoEquilibria() : GameError("the game has no equilibrium to select from") {}
};

class BeliefNotEquilibrium : public GameError {
 public:
  explicit BeliefNotEquilibrium(int player)
      : GameError("belief of player " + std::to_string(player) +
                  " is not a subgame-perfect equilibrium"),
        player_(player) {}
  int player() const { return player_; }

 private:
  int player_;
};

// Matrix games beyond the support-enumeration bound.
class TooLarge : public GameError {
 public:
  using GameError::GameError;
};

class DimensionMismatch : public GameError {
 public:
  using GameError::GameError;
};

// Structural problems found while building a game (dangling references,
// duplicate labels, bad arity). Carries the rendered findings.
class ValidationError : public GameError {
 public:
  using GameError::GameError;
};

// Positions are 1-based.
class ParseError : public GameError {
 public:
  ParseError(int line, int column, std::string expected, std::string found)
      : GameError(std::to_string(line) + ":" + std::to_string(column) +
                  ": expected " + expected + ", found '" + found + "'"),
        line_(line),
        column_(column),
        expected_(std::move(expected)),
        found_(std::move(found)) {}

  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  int line_;
  int column_;
  std::string expected_;
  std::string found_;
};

}  // namespace escalade
