#include <cctype>
#include <charconv>
#include <set>
#include <cstdint>

#include "escalade/dsl.hpp"
#include "escalade/error.hpp"

namespace escalade {
namespace {

enum class Tok { kIdent, kInt, kSymbol, kEnd };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const int tl = line;
    const int tc = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) {
        ++j;
      }
      out.push_back({Tok::kIdent, std::string(src.substr(i, j - i)), tl, tc});
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Tok::kInt, std::string(src.substr(i, j - i)), tl, tc});
      advance(j - i);
    } else if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') {
      out.push_back({Tok::kSymbol, "->", tl, tc});
      advance(2);
    } else if (std::string_view("{}(),;:=+-*/").find(c) != std::string_view::npos) {
      out.push_back({Tok::kSymbol, std::string(1, c), tl, tc});
      advance(1);
    } else {
      throw ParseError(tl, tc, "a token", std::string(1, c));
    }
  }
  out.push_back({Tok::kEnd, "", line, col});
  return out;
}

const std::set<std::string, std::less<>> kKeywords = {
    "players", "finite", "cyclic", "param", "matrix", "leaf", "advance", "start", "sum"};

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  GameDoc document() {
    if (peek_is("players")) {
      next();
      players_[0] = name("player name").text;
      const Token& second = name("player name");
      if (second.text == players_[0]) fail(second, "a second, distinct player name");
      players_[1] = second.text;
    }
    GameDoc doc{players_, game()};
    if (peek().kind != Tok::kEnd) fail(peek(), "end of input");
    return doc;
  }

 private:
  [[noreturn]] static void fail(const Token& t, const std::string& expected) {
    throw ParseError(t.line, t.column, expected, t.kind == Tok::kEnd ? "end of input" : t.text);
  }

  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  bool peek_is(std::string_view text, std::size_t ahead = 0) const {
    const Token& t = peek(ahead);
    return t.kind != Tok::kEnd && t.text == text;
  }
  const Token& next() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }

  const Token& expect(std::string_view symbol) {
    if (!peek_is(symbol) || peek().kind == Tok::kInt) fail(peek(), "'" + std::string(symbol) + "'");
    return next();
  }

  const Token& name(const std::string& what) {
    const Token& t = peek();
    if (t.kind != Tok::kIdent || kKeywords.count(t.text)) fail(t, what);
    return next();
  }

  PlayerId owner() {
    const Token& t = peek();
    if (t.kind == Tok::kIdent) {
      for (int p = 0; p < kNumPlayers; ++p) {
        if (t.text == players_[p]) {
          next();
          return PlayerId{p};
        }
      }
    }
    fail(t, "player name ('" + players_[0] + "' or '" + players_[1] + "')");
  }

  void optional_separator() {
    if (peek_is(";")) next();
  }

  std::int64_t integer() {
    const bool negative = peek_is("-");
    if (negative) next();
    const Token& t = peek();
    if (t.kind != Tok::kInt) fail(t, "integer");
    std::int64_t value = 0;
    // Parse with the sign so that INT64_MIN round-trips.
    std::string digits = negative ? "-" + t.text : t.text;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) fail(t, "64-bit integer");
    next();
    return value;
  }

  Rational rational() {
    std::int64_t num = integer();
    if (!peek_is("/")) return Rational(num);
    next();
    const Token& d = peek();
    std::int64_t den = integer();
    if (den <= 0) fail(d, "positive denominator");
    return Rational(num, den);
  }

  template <class Fn>
  auto leaf_pair(Fn element) {
    expect("leaf");
    expect("(");
    auto a = element();
    expect(",");
    auto b = element();
    expect(")");
    return std::vector<decltype(a)>{std::move(a), std::move(b)};
  }

  AffineValue affine() {
    AffineValue v;
    v.constant = integer();
    if (peek_is("+") || peek_is("-")) {
      const bool minus = next().text == "-";
      const Token& t = peek();
      if (t.kind != Tok::kInt) fail(t, "integer");
      std::uint64_t magnitude = 0;
      auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), magnitude);
      const std::uint64_t limit = std::uint64_t{INT64_MAX} + (minus ? 1 : 0);
      if (ec != std::errc() || ptr != t.text.data() + t.text.size() || magnitude > limit) {
        fail(t, "64-bit integer");
      }
      next();
      expect("*");
      if (!peek_is("n") || peek().kind != Tok::kIdent) fail(peek(), "'n'");
      next();
      v.slope = minus ? static_cast<std::int64_t>(0 - magnitude) : static_cast<std::int64_t>(magnitude);
    }
    return v;
  }

  // Reads branch labels until '}' and checks them pairwise distinct.
  template <class Fn>
  void branches(Fn body) {
    std::set<std::string> seen;
    do {
      const Token& label = name("action label");
      if (!seen.insert(label.text).second) fail(label, "a label distinct from its siblings");
      expect("->");
      body(label.text);
      optional_separator();
    } while (!peek_is("}"));
    expect("}");
  }

  FiniteGame tree() {
    if (peek_is("leaf")) {
      return FiniteGame::leaf(leaf_pair([&] { return integer(); }));
    }
    PlayerId who = owner();
    expect("{");
    std::vector<Branch> bs;
    branches([&](const std::string& label) { bs.push_back({label, tree()}); });
    return FiniteGame::node(who, std::move(bs));
  }

  FiniteGame finite() {
    next();
    expect("{");
    FiniteGame g = tree();
    expect("}");
    return g;
  }

  // Shared header of cyclic and param: `start = ID {` and the node list.
  template <class NodeFn>
  const Token& graph(NodeFn node) {
    next();
    expect("start");
    expect("=");
    const Token& start = name("start node name");
    expect("{");
    std::set<std::string> declared;
    do {
      const Token& id = name("node name");
      if (!declared.insert(id.text).second) fail(id, "a node name not declared before");
      expect(":");
      PlayerId who = owner();
      expect("{");
      node(id.text, who);
    } while (!peek_is("}"));
    expect("}");
    return start;
  }

  void check_refs(const Token& start, const std::vector<Token>& refs,
                  const std::set<std::string>& declared) {
    if (!declared.count(start.text)) fail(start, "a declared start node");
    for (const auto& r : refs) {
      if (!declared.count(r.text)) fail(r, "a declared node");
    }
  }

  CyclicGame cyclic() {
    std::vector<CyclicNode> nodes;
    std::vector<Token> refs;
    std::set<std::string> declared;
    const Token& start = graph([&](const std::string& id, PlayerId who) {
      declared.insert(id);
      CyclicNode n{id, who, {}};
      branches([&](const std::string& label) {
        if (peek_is("leaf") && peek_is("(", 1)) {
          n.edges.push_back({label, leaf_pair([&] { return integer(); })});
        } else {
          const Token& ref = name("node name or leaf");
          refs.push_back(ref);
          n.edges.push_back({label, ref.text});
        }
      });
      nodes.push_back(std::move(n));
    });
    check_refs(start, refs, declared);
    return CyclicGame(std::move(nodes), start.text);
  }

  ParametricGame param() {
    std::vector<Shape> shapes;
    std::vector<Token> refs;
    std::set<std::string> declared;
    const Token& start = graph([&](const std::string& id, PlayerId who) {
      declared.insert(id);
      Shape s{id, who, {}};
      branches([&](const std::string& label) {
        if (peek_is("advance")) {
          next();
          const Token& ref = name("shape name");
          refs.push_back(ref);
          s.moves.push_back({label, Advance{ref.text}});
        } else if (peek_is("leaf")) {
          s.moves.push_back({label, leaf_pair([&] { return affine(); })});
        } else {
          fail(peek(), "'advance' or 'leaf'");
        }
      });
      shapes.push_back(std::move(s));
    });
    check_refs(start, refs, declared);
    return ParametricGame(std::move(shapes), start.text);
  }

  AnyGame game() {
    if (peek_is("finite")) return finite();
    if (peek_is("cyclic")) return cyclic();
    if (peek_is("param")) return param();
    if (peek_is("matrix")) return matrix();
    fail(peek(), "'finite', 'cyclic', 'param' or 'matrix'");
  }

  MatrixGame matrix() {
    next();
    expect("sum");
    expect("=");
    MatrixGame m;
    m.sum = rational();
    expect("{");
    while (true) {
      std::vector<Rational> row;
      do {
        row.push_back(rational());
      } while (!peek_is(";") && !peek_is("}"));
      if (!m.payoffs.empty() && row.size() != m.payoffs.front().size()) {
        fail(peek(), "a row of " + std::to_string(m.payoffs.front().size()) + " entries");
      }
      if (m.payoffs.size() == kMaxMatrixDim || row.size() > kMaxMatrixDim) {
        fail(peek(), "at most " + std::to_string(kMaxMatrixDim) + " rows and columns");
      }
      m.payoffs.push_back(std::move(row));
      if (next().text == "}") break;
    }
    return m;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::array<std::string, kNumPlayers> players_{"Alice", "Bertrand"};
};

}  // namespace

GameDoc parse(std::string_view text) { return Parser(text).document(); }

}  // namespace escalade
