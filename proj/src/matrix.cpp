#include "escalade/matrix.hpp"

#include <algorithm>
#include <charconv>
#include <optional>

#include "escalade/error.hpp"

namespace escalade {

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InvalidValue("zero denominator");
  v_ = den < 0 ? -Rep(num, -den) : Rep(num, den);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.v_ == 0) throw InvalidValue("division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    std::int64_t out = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
      throw InvalidValue("not a rational: '" + std::string(text) + "'");
    }
    return out;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  std::int64_t den = parse_int(text.substr(slash + 1));
  if (den <= 0) throw InvalidValue("denominator must be positive: '" + std::string(text) + "'");
  return Rational(parse_int(text.substr(0, slash)), den);
}

std::string Rational::to_string() const {
  if (is_integer()) return numerator();
  return numerator() + "/" + denominator();
}

std::string Rational::numerator() const {
  return boost::multiprecision::numerator(v_).str();
}

std::string Rational::denominator() const {
  return boost::multiprecision::denominator(v_).str();
}

bool Rational::is_integer() const { return boost::multiprecision::denominator(v_) == 1; }

namespace {

using Matrix = std::vector<std::vector<Rational>>;

// Unique solution of a square system by Gauss-Jordan elimination, or nullopt
// when the system is singular.
std::optional<std::vector<Rational>> solve_linear(Matrix a, std::vector<Rational> b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    const Rational inv = Rational(1) / a[col][col];
    for (std::size_t j = col; j < n; ++j) a[col][j] *= inv;
    b[col] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t j = col; j < n; ++j) a[r][j] -= f * a[col][j];
      b[r] -= f * b[col];
    }
  }
  return b;
}

// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) return out;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
}

struct Candidate {
  std::vector<std::size_t> support;
  Distribution dist;
};

bool candidate_less(const Candidate& a, const Candidate& b) {
  if (a.support != b.support) return a.support < b.support;
  return std::lexicographical_compare(a.dist.begin(), a.dist.end(), b.dist.begin(),
                                      b.dist.end());
}

Candidate make_candidate(std::size_t size, const std::vector<std::size_t>& idx,
                         const std::vector<Rational>& weights) {
  Candidate c{{}, Distribution(size, Rational(0))};
  for (std::size_t i = 0; i < idx.size(); ++i) c.dist[idx[i]] = weights[i];
  for (std::size_t i = 0; i < size; ++i) {
    if (c.dist[i] != 0) c.support.push_back(i);
  }
  return c;
}

void require_well_formed(const MatrixGame& game) {
  if (game.rows() == 0 || game.cols() == 0) throw InvalidValue("matrix game is empty");
  for (const auto& row : game.payoffs) {
    if (row.size() != game.cols()) throw InvalidValue("matrix rows differ in length");
  }
}

}  // namespace

MixedProfile solve_constant_sum(const MatrixGame& game) {
  require_well_formed(game);
  const std::size_t rows = game.rows();
  const std::size_t cols = game.cols();
  if (rows > kMaxMatrixDim || cols > kMaxMatrixDim) {
    throw TooLarge("support enumeration is limited to " + std::to_string(kMaxMatrixDim) + "x" +
                   std::to_string(kMaxMatrixDim));
  }
  const Matrix& a = game.payoffs;

  std::optional<Candidate> best_row;
  std::optional<Candidate> best_col;
  std::optional<Rational> value;

  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    const auto row_sets = subsets(rows, k);
    const auto col_sets = subsets(cols, k);
    for (const auto& rs : row_sets) {
      for (const auto& cs : col_sets) {
        // Column mix y on cs with the rows in rs indifferent at value v.
        Matrix m(k + 1, std::vector<Rational>(k + 1, Rational(0)));
        std::vector<Rational> rhs(k + 1, Rational(0));
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = 0; j < k; ++j) m[i][j] = a[rs[i]][cs[j]];
          m[i][k] = Rational(-1);
        }
        for (std::size_t j = 0; j < k; ++j) m[k][j] = Rational(1);
        rhs[k] = Rational(1);
        auto ysol = solve_linear(m, rhs);
        if (!ysol) continue;
        if (std::any_of(ysol->begin(), ysol->begin() + k, [](const Rational& r) { return r < 0; })) {
          continue;
        }
        // Row mix x on rs with the columns in cs indifferent at value w.
        for (std::size_t j = 0; j < k; ++j) {
          for (std::size_t i = 0; i < k; ++i) m[j][i] = a[rs[i]][cs[j]];
          m[j][k] = Rational(-1);
        }
        auto xsol = solve_linear(m, rhs);
        if (!xsol) continue;
        if (std::any_of(xsol->begin(), xsol->begin() + k, [](const Rational& r) { return r < 0; })) {
          continue;
        }
        const Rational v = (*ysol)[k];
        if ((*xsol)[k] != v) continue;

        Candidate y = make_candidate(cols, cs, *ysol);
        Candidate x = make_candidate(rows, rs, *xsol);
        // Neither player may gain with any pure strategy outside the support.
        if (best_response_value(game, y.dist, Side::kRow) != v) continue;
        if (best_response_value(game, x.dist, Side::kColumn) != game.sum - v) continue;

        value = v;
        if (!best_row || candidate_less(x, *best_row)) best_row = std::move(x);
        if (!best_col || candidate_less(y, *best_col)) best_col = std::move(y);
      }
    }
  }
  // Every finite matrix game has an extreme optimal pair on a square
  // nonsingular kernel, so the search cannot come back empty.
  if (!value) throw GameError("support enumeration found no equilibrium");
  return MixedProfile{best_row->dist, best_col->dist, *value};
}

Rational best_response_value(const MatrixGame& game, const Distribution& opponent_mix,
                             Side side) {
  require_well_formed(game);
  const std::size_t rows = game.rows();
  const std::size_t cols = game.cols();
  std::optional<Rational> best;
  if (side == Side::kRow) {
    if (opponent_mix.size() != cols) {
      throw DimensionMismatch("column mix has " + std::to_string(opponent_mix.size()) +
                              " entries for " + std::to_string(cols) + " columns");
    }
    for (std::size_t r = 0; r < rows; ++r) {
      Rational e(0);
      for (std::size_t c = 0; c < cols; ++c) e += game.payoffs[r][c] * opponent_mix[c];
      if (!best || e > *best) best = e;
    }
  } else {
    if (opponent_mix.size() != rows) {
      throw DimensionMismatch("row mix has " + std::to_string(opponent_mix.size()) +
                              " entries for " + std::to_string(rows) + " rows");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      Rational e(0);
      for (std::size_t r = 0; r < rows; ++r) {
        e += (game.sum - game.payoffs[r][c]) * opponent_mix[r];
      }
      if (!best || e > *best) best = e;
    }
  }
  return *best;
}

}  // namespace escalade
