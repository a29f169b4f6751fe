#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "escalade/dsl.hpp"
#include "escalade/error.hpp"

namespace escalade {
namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

std::string leaf_text(const OutcomeVector& o) {
  return "leaf(" + std::to_string(o[0]) + "," + std::to_string(o[1]) + ")";
}

std::string leaf_text(const AffinePayoff& o) {
  return "leaf(" + o[0].to_string() + "," + o[1].to_string() + ")";
}

class Writer {
 public:
  explicit Writer(const GameDoc& doc) : players_(doc.players) {}

  std::string run(const AnyGame& game) {
    out_ << "players " << players_[0] << ' ' << players_[1] << '\n';
    std::visit(*this, game);
    return out_.str();
  }

  void operator()(const FiniteGame& g) {
    out_ << "finite {\n";
    tree(g, 1, "");
    out_ << "}\n";
  }

  void operator()(const CyclicGame& g) {
    out_ << "cyclic start=" << g.node(g.start()).name << " {\n";
    for (const auto& n : g.nodes()) {
      line(1) << n.name << ": " << players_[n.owner.index] << " {\n";
      for (const auto& e : n.edges) {
        line(2) << e.label << " -> ";
        std::visit(Overloaded{[&](const std::string& ref) { out_ << ref; },
                              [&](const OutcomeVector& o) { out_ << leaf_text(o); }},
                   e.target);
        out_ << '\n';
      }
      line(1) << "}\n";
    }
    out_ << "}\n";
  }

  void operator()(const ParametricGame& g) {
    out_ << "param start=" << g.shape(g.start()).name << " {\n";
    for (const auto& s : g.shapes()) {
      line(1) << s.name << ": " << players_[s.owner.index] << " {\n";
      for (const auto& m : s.moves) {
        line(2) << m.label << " -> ";
        std::visit(Overloaded{[&](const Advance& a) { out_ << "advance " << a.shape; },
                              [&](const AffinePayoff& o) { out_ << leaf_text(o); }},
                   m.target);
        out_ << '\n';
      }
      line(1) << "}\n";
    }
    out_ << "}\n";
  }

  void operator()(const MatrixGame& g) {
    out_ << "matrix sum=" << g.sum.to_string() << " {\n";
    for (std::size_t r = 0; r < g.rows(); ++r) {
      line(1);
      for (std::size_t c = 0; c < g.cols(); ++c) {
        if (c) out_ << ' ';
        out_ << g.payoffs[r][c].to_string();
      }
      out_ << (r + 1 < g.rows() ? " ;\n" : "\n");
    }
    out_ << "}\n";
  }

 private:
  std::ostream& line(int depth) {
    for (int i = 0; i < depth; ++i) out_ << "  ";
    return out_;
  }

  // Writes the subtree; `prefix` is "label -> " for a branch target.
  void tree(const FiniteGame& g, int depth, const std::string& prefix) {
    line(depth) << prefix;
    if (g.is_leaf()) {
      out_ << leaf_text(g.outcome()) << '\n';
      return;
    }
    out_ << players_[g.owner().index] << " {\n";
    for (const auto& b : g.branches()) tree(b.game, depth + 1, b.label + " -> ");
    line(depth) << "}\n";
  }

  std::array<std::string, kNumPlayers> players_;
  std::ostringstream out_;
};

bool is_label_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

struct ProfileLine {
  std::string key;
  std::string action;
  int line;
  int key_column;
  int action_column;
};

// Splits `key = action` lines, skipping blanks and '#' comments.
std::vector<ProfileLine> profile_lines(std::string_view text) {
  std::vector<ProfileLine> out;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    ++line_no;
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view ln = text.substr(pos, end - pos);
    if (auto hash = ln.find('#'); hash != std::string_view::npos) ln = ln.substr(0, hash);
    pos = end + 1;

    std::size_t i = 0;
    auto skip_space = [&] {
      while (i < ln.size() && std::isspace(static_cast<unsigned char>(ln[i]))) ++i;
    };
    auto col = [&] { return static_cast<int>(i) + 1; };
    skip_space();
    if (i == ln.size()) continue;
    ProfileLine pl{{}, {}, line_no, col(), 0};
    while (i < ln.size() && ln[i] != '=' && !std::isspace(static_cast<unsigned char>(ln[i]))) {
      pl.key += ln[i++];
    }
    skip_space();
    if (i == ln.size() || ln[i] != '=') {
      throw ParseError(line_no, col(), "'='", i == ln.size() ? "end of line" : std::string(1, ln[i]));
    }
    if (pl.key.empty()) throw ParseError(line_no, col(), "key", "'='");
    ++i;
    skip_space();
    pl.action_column = col();
    while (i < ln.size() && is_label_char(ln[i])) pl.action += ln[i++];
    if (pl.action.empty()) {
      throw ParseError(line_no, col(), "action label",
                       i == ln.size() ? "end of line" : std::string(1, ln[i]));
    }
    skip_space();
    if (i != ln.size()) throw ParseError(line_no, col(), "end of line", std::string(1, ln[i]));
    out.push_back(std::move(pl));
  }
  return out;
}

PlayLine parse_path(const ProfileLine& pl) {
  const std::string& k = pl.key;
  if (k.empty() || k[0] != '/') throw ParseError(pl.line, pl.key_column, "path starting with '/'", k);
  PlayLine path;
  if (k == "/") return path;
  std::size_t start = 1;
  while (true) {
    std::size_t slash = k.find('/', start);
    std::string part = k.substr(start, slash == std::string::npos ? std::string::npos : slash - start);
    if (part.empty() || !std::all_of(part.begin(), part.end(), is_label_char)) {
      throw ParseError(pl.line, pl.key_column + static_cast<int>(start), "action label",
                       part.empty() ? "'/'" : part);
    }
    path.push_back(std::move(part));
    if (slash == std::string::npos) return path;
    start = slash + 1;
  }
}

std::map<std::string, ActionLabel> as_map(const std::vector<ProfileLine>& lines) {
  std::map<std::string, ActionLabel> m;
  for (const auto& pl : lines) {
    if (!m.emplace(pl.key, pl.action).second) {
      throw ParseError(pl.line, pl.key_column, "a key not given before", pl.key);
    }
  }
  return m;
}

class DotWriter {
 public:
  explicit DotWriter(const GameDoc& doc) : players_(doc.players) {}

  std::string finite(const FiniteGame& g, const TreeProfile* profile) {
    std::size_t decision = 0;
    tree(g, profile, decision);
    return finish();
  }

  template <class Game, class Profile>
  std::string graph(const Game& g, const Profile* profile) {
    std::vector<std::optional<std::size_t>> ids(g.size());
    visit(g, profile, g.start(), ids);
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (!ids[i]) visit(g, profile, i, ids);
    }
    return finish();
  }

  std::string matrix(const MatrixGame& g) {
    std::string label = "sum=" + g.sum.to_string();
    for (const auto& row : g.payoffs) {
      label += "\\n";
      for (std::size_t c = 0; c < row.size(); ++c) label += (c ? " " : "") + row[c].to_string();
    }
    node_lines_ << "  n0 [label=\"" << label << "\", shape=box];\n";
    return finish();
  }

 private:
  std::size_t new_node(const std::string& label, bool leaf) {
    const std::size_t id = next_id_++;
    node_lines_ << "  n" << id << " [label=\"" << label << '"' << (leaf ? ", shape=box" : "")
                << "];\n";
    return id;
  }

  void edge(std::size_t from, std::size_t to, const std::string& label, bool chosen) {
    edge_lines_ << "  n" << from << " -> n" << to << " [label=\"" << label << '"'
                << (chosen ? ",penwidth=2,style=bold" : "") << "];\n";
  }

  std::size_t tree(const FiniteGame& g, const TreeProfile* profile, std::size_t& decision) {
    if (g.is_leaf()) return new_node(outcome_string(g.outcome()), true);
    const std::size_t id = new_node(players_[g.owner().index], false);
    const std::size_t my_decision = decision++;
    const auto bs = g.branches();
    for (std::size_t i = 0; i < bs.size(); ++i) {
      const std::size_t child = tree(bs[i].game, profile, decision);
      edge(id, child, bs[i].label, profile && profile->choices[my_decision] == i);
    }
    return id;
  }

  template <class Game, class Profile>
  std::size_t visit(const Game& g, const Profile* profile, std::size_t n,
                    std::vector<std::optional<std::size_t>>& ids) {
    const auto& node = node_of(g, n);
    const std::size_t id = new_node(node.name + ": " + players_[node.owner.index], false);
    ids[n] = id;
    const auto& edges = edges_of(node);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      std::size_t to;
      if (auto succ = g.successor(n, i)) {
        to = ids[*succ] ? *ids[*succ] : visit(g, profile, *succ, ids);
      } else {
        to = new_node(leaf_label(edges[i].target), true);
      }
      edge(id, to, edges[i].label, profile && profile->choice[n] == i);
    }
    return id;
  }

  static const CyclicNode& node_of(const CyclicGame& g, std::size_t n) { return g.node(n); }
  static const Shape& node_of(const ParametricGame& g, std::size_t n) { return g.shape(n); }
  static const std::vector<CyclicEdge>& edges_of(const CyclicNode& n) { return n.edges; }
  static const std::vector<ParamMove>& edges_of(const Shape& s) { return s.moves; }

  static std::string leaf_label(const CyclicTarget& t) {
    return outcome_string(std::get<OutcomeVector>(t));
  }
  static std::string leaf_label(const ParamTarget& t) {
    const auto& o = std::get<AffinePayoff>(t);
    return "(" + o[0].to_string() + "," + o[1].to_string() + ")";
  }

  std::string finish() {
    return "digraph game {\n" + node_lines_.str() + edge_lines_.str() + "}\n";
  }

  std::array<std::string, kNumPlayers> players_;
  std::ostringstream node_lines_;
  std::ostringstream edge_lines_;
  std::size_t next_id_ = 0;
};

}  // namespace

std::string serialize(const GameDoc& doc) { return Writer(doc).run(doc.game); }

AnyProfile parse_profile(std::string_view text, const GameDoc& doc) {
  const auto lines = profile_lines(text);
  return std::visit(
      Overloaded{
          [&](const FiniteGame& g) -> AnyProfile {
            std::vector<ProfileEntry> entries;
            std::set<PlayLine> seen;
            for (const auto& pl : lines) {
              PlayLine path = parse_path(pl);
              if (!seen.insert(path).second) {
                throw ParseError(pl.line, pl.key_column, "a key not given before", pl.key);
              }
              entries.push_back({std::move(path), pl.action});
            }
            return profile_from_entries(g, entries);
          },
          [&](const CyclicGame& g) -> AnyProfile { return positional_profile(g, as_map(lines)); },
          [&](const ParametricGame& g) -> AnyProfile {
            return stationary_profile(g, as_map(lines));
          },
          [&](const MatrixGame&) -> AnyProfile {
            throw ShapeMismatch("matrix games take no profile file");
          }},
      doc.game);
}

std::string serialize_profile(const GameDoc& doc, const AnyProfile& profile) {
  std::string out;
  if (const auto* g = std::get_if<FiniteGame>(&doc.game)) {
    const auto* p = std::get_if<TreeProfile>(&profile);
    if (!p) throw ShapeMismatch("finite game needs a tree profile");
    for (const auto& e : profile_entries(*g, *p)) {
      out += path_string(e.path) + " = " + e.choice + "\n";
    }
  } else if (const auto* c = std::get_if<CyclicGame>(&doc.game)) {
    const auto* p = std::get_if<PositionalProfile>(&profile);
    if (!p) throw ShapeMismatch("cyclic game needs a positional profile");
    require_shape(*c, *p);
    for (std::size_t i = 0; i < c->size(); ++i) {
      out += c->node(i).name + " = " + c->node(i).edges[p->choice[i]].label + "\n";
    }
  } else if (const auto* s = std::get_if<ParametricGame>(&doc.game)) {
    const auto* p = std::get_if<StationaryProfile>(&profile);
    if (!p) throw ShapeMismatch("parametric game needs a stationary profile");
    require_shape(*s, *p);
    for (std::size_t i = 0; i < s->size(); ++i) {
      out += s->shape(i).name + " = " + s->shape(i).moves[p->choice[i]].label + "\n";
    }
  } else {
    throw ShapeMismatch("matrix games take no profile file");
  }
  return out;
}

std::string to_dot(const GameDoc& doc, const std::optional<AnyProfile>& highlight) {
  DotWriter w(doc);
  if (const auto* g = std::get_if<FiniteGame>(&doc.game)) {
    const TreeProfile* p = nullptr;
    if (highlight) {
      p = std::get_if<TreeProfile>(&*highlight);
      if (!p) throw ShapeMismatch("finite game needs a tree profile");
      require_shape(*g, *p);
    }
    return w.finite(*g, p);
  }
  if (const auto* c = std::get_if<CyclicGame>(&doc.game)) {
    const PositionalProfile* p = nullptr;
    if (highlight) {
      p = std::get_if<PositionalProfile>(&*highlight);
      if (!p) throw ShapeMismatch("cyclic game needs a positional profile");
      require_shape(*c, *p);
    }
    return w.graph(*c, p);
  }
  if (const auto* s = std::get_if<ParametricGame>(&doc.game)) {
    const StationaryProfile* p = nullptr;
    if (highlight) {
      p = std::get_if<StationaryProfile>(&*highlight);
      if (!p) throw ShapeMismatch("parametric game needs a stationary profile");
      require_shape(*s, *p);
    }
    return w.graph(*s, p);
  }
  if (highlight) throw ShapeMismatch("matrix games take no profile");
  return w.matrix(std::get<MatrixGame>(doc.game));
}

}  // namespace escalade
