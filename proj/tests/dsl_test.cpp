#include <gtest/gtest.h>

#include <cctype>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "escalade/catalog.hpp"
#include "escalade/dsl.hpp"
#include "escalade/error.hpp"
#include "support/generators.hpp"

using namespace escalade;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<fs::path> corpus_files() {
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(CORPUS_DIR)) {
    if (e.path().extension() == ".game") out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t count(const std::string& text, const std::regex& re) {
  return static_cast<std::size_t>(
      std::distance(std::sregex_iterator(text.begin(), text.end(), re), std::sregex_iterator()));
}

const std::regex kNodeLine(R"(^  n\d+ \[label=)", std::regex::multiline);
const std::regex kEdgeLine(R"(^  n\d+ -> n\d+ )", std::regex::multiline);
const std::regex kBold("penwidth=2,style=bold");

struct Tok {
  std::size_t offset;
  std::size_t length;
  int line;
  int column;
};

// Token spans under the format's lexical rules.
std::vector<Tok> tokens(const std::string& s) {
  std::vector<Tok> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    std::size_t len = 1;
    if (c == '#') {
      while (i < s.size() && s[i] != '\n') ++i, ++col;
      continue;
    }
    if (c == '\n') {
      ++i;
      ++line;
      col = 1;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      ++col;
      continue;
    }
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
      const bool digits = std::isdigit(static_cast<unsigned char>(c));
      while (i + len < s.size() &&
             (digits ? std::isdigit(static_cast<unsigned char>(s[i + len]))
                     : std::isalnum(static_cast<unsigned char>(s[i + len])) || s[i + len] == '_')) {
        ++len;
      }
    } else if (c == '-' && i + 1 < s.size() && s[i + 1] == '>') {
      len = 2;
    }
    out.push_back({i, len, line, col});
    i += len;
    col += static_cast<int>(len);
  }
  return out;
}

GameDoc random_doc(gen::Rng& rng) {
  GameDoc doc{{"Alice", "Bertrand"}, FiniteGame::leaf({0, 0})};
  if (gen::uniform(rng, 0, 4) == 0) doc.players = {"Left", "right_2"};
  switch (gen::uniform(rng, 0, 3)) {
    case 0:
      doc.game = gen::tree_with_depth(rng, 5);
      break;
    case 1:
      doc.game = gen::cyclic(rng, 5, -20, 20);
      break;
    case 2:
      doc.game = gen::parametric(rng, 5);
      break;
    default:
      doc.game = gen::matrix(rng, 4);
  }
  return doc;
}

}  // namespace

TEST(Parse, MatchingPenniesHasEightLeaves) {
  GameDoc doc = parse(slurp(fs::path(CORPUS_DIR) / "matching_pennies_seq.game"));
  const auto& g = std::get<FiniteGame>(doc.game);
  EXPECT_EQ(g.node_count() - g.decision_count(), 8u);
  EXPECT_EQ(g, catalog::sequential_matching_pennies());
}

TEST(Parse, CompactCyclicGame) {
  GameDoc doc = parse(
      "cyclic start=A { A: Alice { a -> leaf(0,1); c -> B } B: Bertrand { a -> leaf(1,0); c -> A } }");
  EXPECT_EQ(std::get<CyclicGame>(doc.game), catalog::zero_one_cyclic());
}

TEST(Parse, SingleLeaf) {
  GameDoc doc = parse("finite { leaf(0,1) }");
  EXPECT_EQ(std::get<FiniteGame>(doc.game), FiniteGame::leaf({0, 1}));
  EXPECT_EQ(serialize(doc), "players Alice Bertrand\nfinite {\n  leaf(0,1)\n}\n");
}

TEST(Parse, MatrixRoundTrip) {
  GameDoc doc = parse("matrix sum=1 { 1 0 ; 0 1 }");
  EXPECT_EQ(std::get<MatrixGame>(doc.game), catalog::matching_pennies());
  EXPECT_EQ(parse(serialize(doc)), doc);
  EXPECT_EQ(serialize(doc), "players Alice Bertrand\nmatrix sum=1 {\n  1 0 ;\n  0 1\n}\n");
}

TEST(Parse, CustomPlayersAndComments) {
  GameDoc doc = parse("# header\nplayers Ann Bob  # names\nfinite { Bob { x -> leaf(1,2) } }");
  EXPECT_EQ(doc.players[1], "Bob");
  EXPECT_EQ(std::get<FiniteGame>(doc.game).owner(), kBertrand);
}

TEST(Parse, AffineExtremes) {
  const std::string text =
      "players Alice Bertrand\nparam start=s {\n  s: Alice {\n"
      "    a -> leaf(-9223372036854775808-9223372036854775808*n,9223372036854775807+9223372036854775807*n)\n"
      "  }\n}\n";
  GameDoc doc = parse(text);
  const auto& leaf = std::get<AffinePayoff>(std::get<ParametricGame>(doc.game).shape(0).moves[0].target);
  EXPECT_EQ(leaf[0], (AffineValue{INT64_MIN, INT64_MIN}));
  EXPECT_EQ(leaf[1], (AffineValue{INT64_MAX, INT64_MAX}));
  EXPECT_EQ(serialize(doc), text);
}

TEST(ParseError, Positions) {
  auto where = [](const std::string& text) {
    try {
      parse(text);
    } catch (const ParseError& e) {
      return std::make_pair(e.line(), e.column());
    }
    return std::make_pair(0, 0);
  };
  EXPECT_EQ(where("finite {\n  leaf(0 1)\n}"), std::make_pair(2, 10));
  EXPECT_EQ(where("finite { Carol { a -> leaf(0,0) } }"), std::make_pair(1, 10));
  // duplicate label at its second occurrence
  EXPECT_EQ(where("finite { Alice { a -> leaf(0,0)\n a -> leaf(1,1) } }"), std::make_pair(2, 2));
  // dangling reference
  EXPECT_EQ(where("cyclic start=A { A: Alice { c -> Z } }"), std::make_pair(1, 34));
  EXPECT_EQ(where("cyclic start=Q { A: Alice { a -> leaf(0,0) } }"), std::make_pair(1, 14));
  // ragged matrix row, reported where the row ends
  EXPECT_EQ(where("matrix sum=0 { 1 2 ; 3 }"), std::make_pair(1, 24));
  EXPECT_EQ(where("finite { leaf(0,1) } extra"), std::make_pair(1, 22));
  EXPECT_EQ(where("finite { leaf(0,1)"), std::make_pair(1, 19));
  EXPECT_EQ(where("finite { leaf(0,1,2) }"), std::make_pair(1, 18));
  EXPECT_EQ(where("matrix sum=1/0 { 1 }"), std::make_pair(1, 14));
  EXPECT_EQ(where("finite { leaf(99999999999999999999,0) }"), std::make_pair(1, 15));
  EXPECT_EQ(where("finite { leaf(0,1) } @"), std::make_pair(1, 22));
}

TEST(RoundTrip, CorpusIsCanonical) {
  const auto files = corpus_files();
  ASSERT_GE(files.size(), 9u);
  for (const auto& f : files) {
    const std::string text = slurp(f);
    EXPECT_EQ(serialize(parse(text)), text) << f;
  }
}

TEST(RoundTrip, RandomDocuments) {
  gen::Rng rng(500);
  for (int i = 0; i < 500; ++i) {
    GameDoc doc = random_doc(rng);
    const std::string text = serialize(doc);
    ASSERT_EQ(parse(text), doc) << text;
    EXPECT_EQ(serialize(parse(text)), text);
  }
}

TEST(RoundTrip, CanonicalFormRules) {
  gen::Rng rng(17);
  for (int i = 0; i < 100; ++i) {
    const std::string text = serialize(random_doc(rng));
    EXPECT_EQ(text.find('\r'), std::string::npos);
    EXPECT_EQ(text.find('\t'), std::string::npos);
    EXPECT_EQ(text.back(), '\n');
    EXPECT_EQ(text.find(" \n"), std::string::npos);
  }
}

// Removing any one token either leaves a valid document or fails no earlier
// than the token before the removal, which the lexer may have merged with
// the token after it.
TEST(ParseError, TokenDeletion) {
  std::vector<std::string> texts;
  for (const auto& f : corpus_files()) texts.push_back(slurp(f));
  gen::Rng rng(9);
  for (int i = 0; i < 30; ++i) texts.push_back(serialize(random_doc(rng)));
  std::size_t failures = 0;
  std::size_t deletions = 0;
  for (const auto& text : texts) {
    const auto toks = tokens(text);
    for (std::size_t k = 0; k < toks.size(); ++k) {
      const auto& t = toks[k];
      const auto& bound = toks[k == 0 ? 0 : k - 1];
      std::string cut = text;
      cut.erase(t.offset, t.length);
      ++deletions;
      try {
        parse(cut);
      } catch (const ParseError& e) {
        ++failures;
        EXPECT_GE(std::make_pair(e.line(), e.column()), std::make_pair(bound.line, bound.column))
            << cut;
      }
    }
  }
  EXPECT_GT(failures * 10, deletions * 9);
}

TEST(Dot, MatchingPenniesCounts) {
  GameDoc doc{{"Alice", "Bertrand"}, catalog::sequential_matching_pennies()};
  const std::string dot = to_dot(doc);
  EXPECT_EQ(count(dot, kNodeLine), 15u);
  EXPECT_EQ(count(dot, kEdgeLine), 14u);
  EXPECT_EQ(count(dot, kBold), 0u);
  EXPECT_EQ(dot.rfind("digraph game {\n", 0), 0u);
  EXPECT_NE(dot.find("n0 [label=\"Alice\"];"), std::string::npos);
  EXPECT_NE(dot.find("[label=\"(2,0)\", shape=box]"), std::string::npos);
}

TEST(Dot, HighlightedCyclicProfile) {
  GameDoc doc{{"Alice", "Bertrand"}, catalog::zero_one_cyclic()};
  const auto& g = std::get<CyclicGame>(doc.game);
  const std::string dot = to_dot(doc, AnyProfile{positional_profile(g, {{"A", "a"}, {"B", "c"}})});
  EXPECT_EQ(count(dot, kEdgeLine), 4u);
  EXPECT_EQ(count(dot, kBold), 2u);
  EXPECT_NE(dot.find("n0 -> n1 [label=\"a\",penwidth=2,style=bold];"), std::string::npos);
  EXPECT_NE(dot.find("n0 -> n2 [label=\"c\"];"), std::string::npos);
  EXPECT_THROW(to_dot(doc, AnyProfile{TreeProfile{}}), ShapeMismatch);
  EXPECT_THROW(to_dot(doc, AnyProfile{PositionalProfile{{0}}}), ShapeMismatch);
}

TEST(Dot, FiniteHighlightFollowsProfile) {
  GameDoc doc{{"Alice", "Bertrand"}, catalog::sequential_matching_pennies()};
  const std::string dot = to_dot(doc, AnyProfile{TreeProfile{std::vector<std::size_t>(7, 0)}});
  EXPECT_EQ(count(dot, kBold), 7u);
}

TEST(Dot, LeafOnly) {
  const std::string dot = to_dot(parse("finite { leaf(0,1) }"));
  EXPECT_EQ(count(dot, kNodeLine), 1u);
  EXPECT_EQ(count(dot, kEdgeLine), 0u);
}

TEST(Dot, Stable) {
  for (const auto& f : corpus_files()) {
    GameDoc doc = parse(slurp(f));
    EXPECT_EQ(to_dot(doc), to_dot(parse(slurp(f))));
  }
}

TEST(Profiles, ParseEveryCorpusProfile) {
  const fs::path dir = fs::path(CORPUS_DIR) / "profiles";
  GameDoc auction = parse(slurp(fs::path(CORPUS_DIR) / "dollar_auction_v100.game"));
  GameDoc cyclic = parse(slurp(fs::path(CORPUS_DIR) / "zero_one_cyclic.game"));
  GameDoc pennies = parse(slurp(fs::path(CORPUS_DIR) / "matching_pennies_seq.game"));
  for (const auto& e : fs::directory_iterator(dir)) {
    const std::string name = e.path().stem().string();
    const GameDoc& doc = name.rfind("pennies", 0) == 0 ? pennies
                         : name.find("_b") == 2         ? cyclic
                                                        : auction;
    const std::string text = slurp(e.path());
    AnyProfile p = parse_profile(text, doc);
    EXPECT_EQ(parse_profile(serialize_profile(doc, p), doc), p) << name;
  }
}

TEST(Profiles, Errors) {
  GameDoc cyclic{{"Alice", "Bertrand"}, catalog::zero_one_cyclic()};
  EXPECT_THROW(parse_profile("A = a\n", cyclic), ShapeMismatch);
  EXPECT_THROW(parse_profile("A = a\nB = x\n", cyclic), ShapeMismatch);
  EXPECT_THROW(parse_profile("A = a\nB = c\nQ = a\n", cyclic), UnknownNode);
  try {
    parse_profile("A = a\nA = c\n", cyclic);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 1);
  }
  try {
    parse_profile("A a\n", cyclic);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column(), 3);
  }
  GameDoc pennies{{"Alice", "Bertrand"}, catalog::sequential_matching_pennies()};
  EXPECT_THROW(parse_profile("p = p\n", pennies), ParseError);
  EXPECT_THROW(parse_profile("/ = p\n", pennies), ShapeMismatch);
}
