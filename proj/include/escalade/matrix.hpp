#pragma once

// Two-player constant-sum normal-form games solved exactly.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace escalade {

// Exact rational in canonical form: positive denominator, reduced.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : v_(value) {}  // NOLINT(google-explicit-constructor)
  // Throws InvalidValue for a zero denominator.
  Rational(std::int64_t num, std::int64_t den);

  // "p" or "p/q" with an optional leading '-'. Throws InvalidValue.
  static Rational parse(std::string_view text);
  std::string to_string() const;

  std::string numerator() const;
  std::string denominator() const;
  bool is_integer() const;

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(-a.v_); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

 private:
  using Rep = boost::multiprecision::cpp_rational;
  explicit Rational(Rep v) : v_(std::move(v)) {}
  Rep v_;
};

using Distribution = std::vector<Rational>;

// Row player receives payoffs[r][c]; the column player receives sum - that.
struct MatrixGame {
  std::vector<std::vector<Rational>> payoffs;
  Rational sum;

  std::size_t rows() const { return payoffs.size(); }
  std::size_t cols() const { return payoffs.empty() ? 0 : payoffs.front().size(); }
  friend bool operator==(const MatrixGame&, const MatrixGame&) = default;
};

struct MixedProfile {
  Distribution row;
  Distribution col;
  Rational value;  // row player's guaranteed payoff
};

inline constexpr std::size_t kMaxMatrixDim = 9;

enum class Side { kRow, kColumn };

// Exact minimax pair by support enumeration over square supports. Among all
// extreme optimal strategies of each player, the one with the
// lexicographically smallest support, then smallest distribution, is returned.
// Throws TooLarge beyond 9x9, InvalidValue for an empty or ragged matrix.
MixedProfile solve_constant_sum(const MatrixGame& game);

// Best payoff `side` can obtain with a pure strategy against the opponent's
// mix. Throws DimensionMismatch.
Rational best_response_value(const MatrixGame& game, const Distribution& opponent_mix,
                             Side side);

}  // namespace escalade
