#include "escalade/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <set>
#include <sstream>

#include "escalade/dsl.hpp"
#include "escalade/error.hpp"
#include "escalade/escalation.hpp"
#include "escalade/finite_solver.hpp"

namespace escalade::cli {
namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr const char* kFooter = R"(Profile files hold one `key = action` line per decision point; `#` starts
a comment. Keys are tree paths for finite games ("/" for the root, "/p/f"
for the node reached by p then f) and node or shape names for cyclic and
param games.

Exit status: 0 success, 1 negative answer (not an equilibrium, none found,
truncation disagreement), 2 usage or input error, 3 cap or search bound hit.)";

struct Options {
  std::string format = "text";
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::size_t cap = kDefaultCap;
  bool cap_given = false;
  std::string out_path;
  std::string file;
  std::string ties = "first";
  std::string profile_path;
  std::size_t depth = 0;
  std::string terminal;
  std::int64_t value = 0;
  std::int64_t max_stage = -1;
  std::size_t horizon = 0;
  std::string policy = "uniform";
  bool dot = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

GameDoc load(const std::string& path) {
  try {
    return parse(read_file(path));
  } catch (const ParseError& e) {
    throw UsageError(path + ":" + e.what());
  }
}

OutcomeVector parse_pair(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("expected \"x,y\", got '" + text + "'");
  try {
    std::size_t used = 0;
    const std::string a = text.substr(0, comma);
    const std::string b = text.substr(comma + 1);
    Utility x = std::stoll(a, &used);
    if (used != a.size()) throw std::invalid_argument(a);
    Utility y = std::stoll(b, &used);
    if (used != b.size()) throw std::invalid_argument(b);
    return {x, y};
  } catch (const std::logic_error&) {
    throw UsageError("expected \"x,y\" with integers, got '" + text + "'");
  }
}

Json outcome_json(const OutcomeVector& o) { return Json(o); }

Json affine_json(const AffinePayoff& o) {
  Json j = Json::array();
  for (const auto& v : o) j.push_back(v.to_string());
  return j;
}

std::string affine_string(const AffinePayoff& o) {
  return "(" + o[0].to_string() + "," + o[1].to_string() + ")";
}

Json play_json(const PlayLine& play) { return Json(play); }

// --- per-kind views of a profile ------------------------------------------

Json tree_profile_json(const FiniteGame& g, const TreeProfile& p) {
  Json j = Json::array();
  for (const auto& e : profile_entries(g, p)) {
    j.push_back({{"path", path_string(e.path)}, {"action", e.choice}});
  }
  return j;
}

template <class Game, class Profile>
Json graph_profile_json(const Game& g, const Profile& p) {
  Json j = Json::object();
  for (std::size_t i = 0; i < g.size(); ++i) {
    if constexpr (std::is_same_v<Game, CyclicGame>) {
      j[g.node(i).name] = g.node(i).edges[p.choice[i]].label;
    } else {
      j[g.shape(i).name] = g.shape(i).moves[p.choice[i]].label;
    }
  }
  return j;
}

PlayLine labels_along(const CyclicGame& g, const PositionalProfile& p,
                      const std::vector<std::size_t>& path) {
  PlayLine out;
  for (std::size_t n : path) out.push_back(g.node(n).edges[p.choice[n]].label);
  return out;
}

PlayLine labels_along(const ParametricGame& g, const StationaryProfile& p,
                      const std::vector<std::size_t>& path) {
  PlayLine out;
  for (std::size_t n : path) out.push_back(g.shape(n).moves[p.choice[n]].label);
  return out;
}

// Play and outcome from the start node, as JSON fields and a text line.
struct PlayReport {
  Json json;
  std::string text;
  PlayLine play;
  bool converges = true;
};

PlayReport play_report(const FiniteGame& g, const TreeProfile& p) {
  InducedPlay ip = induced_play(g, p);
  return {{{"play", play_json(ip.play)}, {"outcome", outcome_json(ip.outcome)}},
          "play " + play_string(ip.play) + " -> " + outcome_string(ip.outcome),
          ip.play};
}

PlayReport play_report(const CyclicGame& g, const PositionalProfile& p) {
  InducedResult r = induced_outcome(g, p, g.start());
  if (const auto* c = std::get_if<Converges>(&r)) {
    PlayLine play = labels_along(g, p, c->path);
    return {{{"play", play_json(play)}, {"outcome", outcome_json(c->outcome)}},
            "play " + play_string(play) + " -> " + outcome_string(c->outcome), play};
  }
  return {{{"play", nullptr}, {"outcome", nullptr}}, "play diverges", {}, false};
}

PlayReport play_report(const ParametricGame& g, const StationaryProfile& p) {
  ParamResult r = induced_outcome_param(g, p, g.start());
  if (const auto* c = std::get_if<ConvergesAffine>(&r)) {
    PlayLine play = labels_along(g, p, c->path);
    OutcomeVector at0;
    for (const auto& v : c->outcome) at0.push_back(v.at(0));
    return {{{"play", play_json(play)},
             {"outcome", affine_json(c->outcome)},
             {"outcome_at_start", outcome_json(at0)}},
            "play " + play_string(play) + " -> " + affine_string(c->outcome) + " = " +
                outcome_string(at0) + " at stage 0",
            play};
  }
  return {{{"play", nullptr}, {"outcome", nullptr}, {"outcome_at_start", nullptr}},
          "play diverges", {}, false};
}

std::string value_text(Utility v) { return std::to_string(v); }
std::string value_text(const AffineValue& v) { return v.to_string(); }
Json value_json(Utility v) { return v; }
Json value_json(const AffineValue& v) { return v.to_string(); }

template <class Value>
Json report_json(const BasicSpeReport<Value>& r) {
  Json j;
  j["equilibrium"] = r.ok;
  j["divergent_from"] = r.divergent_from;
  j["violations"] = Json::array();
  for (const auto& d : r.violations) {
    j["violations"].push_back({
        {"location", d.location},
        {"owner", d.owner.index},
        {"chosen", d.chosen},
        {"deviation", d.deviation},
        {"profile_value", d.profile_value ? value_json(*d.profile_value) : Json(nullptr)},
        {"deviation_value", value_json(d.deviation_value)},
        {"stage", d.stage ? Json(*d.stage) : Json(nullptr)},
    });
  }
  return j;
}

template <class Value>
std::string report_text(const BasicSpeReport<Value>& r,
                        const std::array<std::string, kNumPlayers>& players) {
  std::string s = std::string("equilibrium: ") + (r.ok ? "yes" : "no") + "\n";
  for (const auto& n : r.divergent_from) s += "diverges from " + n + "\n";
  for (const auto& d : r.violations) {
    s += "violation at " + d.location + " (" + players[d.owner.index] + "): " + d.chosen +
         " gives " + (d.profile_value ? value_text(*d.profile_value) : "divergence") + ", " +
         d.deviation + " gives " + value_text(d.deviation_value);
    if (d.stage) s += " from stage " + std::to_string(*d.stage);
    s += "\n";
  }
  return s;
}

SpeReport check_any(const FiniteGame& g, const TreeProfile& p) { return check_spe(g, p); }
SpeReport check_any(const CyclicGame& g, const PositionalProfile& p) {
  return check_spe_cyclic(g, p);
}
AffineSpeReport check_any(const ParametricGame& g, const StationaryProfile& p) {
  return check_spe_param(g, p);
}

Json profile_json(const FiniteGame& g, const TreeProfile& p) { return tree_profile_json(g, p); }
Json profile_json(const CyclicGame& g, const PositionalProfile& p) {
  return graph_profile_json(g, p);
}
Json profile_json(const ParametricGame& g, const StationaryProfile& p) {
  return graph_profile_json(g, p);
}

std::string profile_text(const FiniteGame& g, const TreeProfile& p) {
  std::string s = "{";
  bool first = true;
  for (const auto& e : profile_entries(g, p)) {
    if (!first) s += ',';
    first = false;
    s += path_string(e.path) + ":" + e.choice;
  }
  return s + "}";
}
std::string profile_text(const CyclicGame& g, const PositionalProfile& p) { return describe(g, p); }
std::string profile_text(const ParametricGame& g, const StationaryProfile& p) {
  return describe(g, p);
}

const char* kind_name(const AnyGame& g) {
  static constexpr const char* kNames[] = {"finite", "cyclic", "param", "matrix"};
  return kNames[g.index()];
}

// --- commands ------------------------------------------------------------

class Runner {
 public:
  Runner(const Options& o, std::ostream& out) : o_(o), out_(out) {}

  bool json() const { return o_.format == "json"; }

  // Writes the main result to --out when given, otherwise to stdout.
  void emit(const std::string& text) {
    if (o_.out_path.empty()) {
      out_ << text;
      return;
    }
    std::ofstream f(o_.out_path, std::ios::binary);
    if (!f) throw UsageError("cannot write '" + o_.out_path + "'");
    f << text;
  }

  void emit_json(const Json& j) { emit(j.dump(2) + "\n"); }

  int solve() {
    GameDoc doc = load(o_.file);
    if (o_.ties != "first" && o_.ties != "last") throw UsageError("--ties must be first or last");
    if (const auto* m = std::get_if<MatrixGame>(&doc.game)) return matrix(*m);
    if (const auto* g = std::get_if<FiniteGame>(&doc.game)) {
      TreeProfile p = escalade::solve(*g, o_.ties == "first" ? TiePolicy::kFirstBranch
                                                            : TiePolicy::kLastBranch);
      return solved(doc, *g, p);
    }
    if (const auto* g = std::get_if<CyclicGame>(&doc.game)) {
      return solve_graph(doc, *g, enumerate_positional_spe(*g));
    }
    const auto& g = std::get<ParametricGame>(doc.game);
    return solve_graph(doc, g, enumerate_stationary_spe(g));
  }

  int enumerate() {
    GameDoc doc = load(o_.file);
    if (const auto* g = std::get_if<FiniteGame>(&doc.game)) {
      Enumeration e = enumerate_equilibria(*g, o_.cap);
      return listed(doc, *g, e.profiles, e.truncated);
    }
    const std::uint64_t bound = o_.cap_given ? o_.cap : kDefaultSearchBound;
    if (const auto* g = std::get_if<CyclicGame>(&doc.game)) {
      return listed(doc, *g, enumerate_positional_spe(*g, bound), false);
    }
    if (const auto* g = std::get_if<ParametricGame>(&doc.game)) {
      return listed(doc, *g, enumerate_stationary_spe(*g, bound), false);
    }
    throw UsageError("enumerate needs a finite, cyclic or param game; use `matrix`");
  }

  int check() {
    GameDoc doc = load(o_.file);
    if (o_.profile_path.empty()) throw UsageError("check needs --profile");
    AnyProfile profile = load_profile(doc);
    return std::visit(
        [&](const auto& g) -> int {
          using G = std::decay_t<decltype(g)>;
          if constexpr (std::is_same_v<G, MatrixGame>) {
            throw UsageError("matrix games take no profile");
          } else {
            const auto& p = std::get<ProfileFor<G>>(profile);
            auto report = check_any(g, p);
            if (json()) {
              Json j{{"command", "check"}, {"kind", kind_name(doc.game)}};
              j["profile"] = profile_json(g, p);
              j.update(report_json(report));
              emit_json(j);
            } else {
              emit("profile " + profile_text(g, p) + "\n" + report_text(report, doc.players));
            }
            return report.ok ? kOk : kNegative;
          }
        },
        doc.game);
  }

  int unfold() {
    GameDoc doc = load(o_.file);
    if (o_.terminal.empty()) throw UsageError("unfold needs --terminal \"x,y\"");
    const OutcomeVector terminal = parse_pair(o_.terminal);
    FiniteGame tree = FiniteGame::leaf({0, 0});
    if (const auto* g = std::get_if<CyclicGame>(&doc.game)) {
      tree = escalade::unfold(*g, o_.depth, terminal);
    } else if (const auto* g = std::get_if<ParametricGame>(&doc.game)) {
      if (o_.depth == 0) throw UsageError("unfold of a param game needs --depth >= 1");
      tree = instantiate(*g, static_cast<std::int64_t>(o_.depth) - 1, terminal);
    } else {
      throw UsageError("unfold needs a cyclic or param game");
    }
    const std::string text = serialize(GameDoc{doc.players, tree});
    if (json()) {
      emit_json(Json{{"command", "unfold"}, {"kind", "finite"}, {"depth", o_.depth}, {"game", text}});
    } else {
      emit(text);
    }
    return kOk;
  }

  int auction() {
    if (o_.value < 1) throw UsageError("auction needs --value >= 1");
    const ParametricGame g = dollar_auction(o_.value);
    const GameDoc doc{{"Alice", "Bertrand"}, g};
    const auto equilibria = enumerate_stationary_spe(g);

    StationaryProfile never_bid{std::vector<std::size_t>(g.size())};
    for (std::size_t i = 0; i < g.size(); ++i) {
      never_bid.choice[i] = g.shape(i).moves.size();
      for (std::size_t m = 0; m < g.shape(i).moves.size(); ++m) {
        if (!g.successor(i, m)) never_bid.choice[i] = m;
      }
    }
    const AffineSpeReport never = check_spe_param(g, never_bid);

    Json j{{"command", "auction"}, {"value", o_.value}, {"game", serialize(doc)}};
    std::string text = serialize(doc);
    j["equilibria"] = Json::array();
    text += "stationary equilibria: " + std::to_string(equilibria.size()) + "\n";
    for (const auto& p : equilibria) {
      PlayReport pr = play_report(g, p);
      Json e{{"profile", profile_json(g, p)}};
      e.update(pr.json);
      j["equilibria"].push_back(e);
      text += "  " + describe(g, p) + " " + pr.text + "\n";
    }
    j["never_bid"] = {{"profile", profile_json(g, never_bid)}};
    j["never_bid"].update(report_json(never));
    text += "never bid " + describe(g, never_bid) + "\n" + report_text(never, doc.players);

    int status = kOk;
    if (o_.max_stage >= 0) {
      const auto [agree, tj, tt] = truncation(g);
      j["truncation"] = tj;
      text += tt;
      if (!agree) status = kNegative;
    }
    emit(json() ? j.dump(2) + "\n" : text);
    return status;
  }

  int simulate() {
    GameDoc doc = load(o_.file);
    if (json() && !o_.seed_given) throw UsageError("simulate --format json needs --seed");
    if (o_.horizon == 0) throw UsageError("simulate needs --horizon >= 1");
    SelectionPolicy policy = parse_policy();
    SimTrace trace;
    if (const auto* g = std::get_if<CyclicGame>(&doc.game)) {
      trace = escalade::simulate(*g, o_.horizon, o_.seed, policy);
    } else if (const auto* g = std::get_if<ParametricGame>(&doc.game)) {
      trace = escalade::simulate(*g, o_.horizon, o_.seed, policy);
    } else {
      throw UsageError("simulate needs a cyclic or param game");
    }
    const std::string records = trace_records(trace);
    if (!o_.out_path.empty()) {
      std::ofstream f(o_.out_path, std::ios::binary);
      if (!f) throw UsageError("cannot write '" + o_.out_path + "'");
      f << records;
    }
    const std::string verdict =
        trace.outcome ? "converged " + outcome_string(*trace.outcome) + " after " +
                            std::to_string(trace.steps.size()) + " moves"
                      : "no payoff within " + std::to_string(o_.horizon) + " moves";
    if (json()) {
      Json j{{"command", "simulate"}, {"seed", trace.seed}, {"horizon", o_.horizon}};
      j["steps"] = Json::array();
      for (const auto& s : trace.steps) {
        j["steps"].push_back({{"stage", s.stage},
                              {"mover", s.mover.index},
                              {"belief_index", s.belief_index},
                              {"action", s.action}});
      }
      j["outcome"] = trace.outcome ? outcome_json(*trace.outcome) : Json(nullptr);
      j["horizon_hit"] = trace.horizon_hit;
      out_ << j.dump(2) << "\n";
    } else {
      if (o_.out_path.empty()) out_ << records;
      out_ << "verdict: " << verdict << "\n";
    }
    return kOk;
  }

  int matrix_file() {
    GameDoc doc = load(o_.file);
    const auto* m = std::get_if<MatrixGame>(&doc.game);
    if (!m) throw UsageError("matrix needs a matrix game");
    return matrix(*m);
  }

  int export_file() {
    GameDoc doc = load(o_.file);
    std::optional<AnyProfile> highlight;
    if (!o_.profile_path.empty()) highlight = load_profile(doc);
    if (o_.dot) {
      emit(to_dot(doc, highlight));
    } else {
      if (highlight) throw UsageError("--profile needs --dot");
      emit(serialize(doc));
    }
    return kOk;
  }

 private:
  template <class G>
  using ProfileFor = std::conditional_t<
      std::is_same_v<G, FiniteGame>, TreeProfile,
      std::conditional_t<std::is_same_v<G, CyclicGame>, PositionalProfile, StationaryProfile>>;

  AnyProfile load_profile(const GameDoc& doc) {
    try {
      return parse_profile(read_file(o_.profile_path), doc);
    } catch (const ParseError& e) {
      throw UsageError(o_.profile_path + ":" + e.what());
    }
  }

  SelectionPolicy parse_policy() {
    if (o_.policy == "uniform") return UniformSelection{};
    if (o_.policy.rfind("fixed:", 0) == 0) {
      const OutcomeVector pair = parse_pair(o_.policy.substr(6));
      if (pair[0] < 0 || pair[1] < 0) throw UsageError("fixed indices must be nonnegative");
      return FixedIndex{{static_cast<std::size_t>(pair[0]), static_cast<std::size_t>(pair[1])}};
    }
    throw UsageError("--policy must be uniform or fixed:i,j");
  }

  template <class Game, class Profile>
  int solved(const GameDoc& doc, const Game& g, const Profile& p) {
    PlayReport pr = play_report(g, p);
    if (json()) {
      Json j{{"command", "solve"}, {"kind", kind_name(doc.game)}};
      j["profile"] = profile_json(g, p);
      j.update(pr.json);
      emit_json(j);
    } else {
      emit("profile " + profile_text(g, p) + "\n" + pr.text + "\n");
    }
    return kOk;
  }

  template <class Game, class Profile>
  int solve_graph(const GameDoc& doc, const Game& g, const std::vector<Profile>& all) {
    if (all.empty()) {
      if (json()) {
        emit_json(Json{{"command", "solve"}, {"kind", kind_name(doc.game)}, {"profile", nullptr}});
      } else {
        emit("no equilibrium\n");
      }
      return kNegative;
    }
    return solved(doc, g, o_.ties == "first" ? all.front() : all.back());
  }

  template <class Game, class Profile>
  int listed(const GameDoc& doc, const Game& g, const std::vector<Profile>& profiles,
             bool truncated) {
    std::vector<PlayLine> lines;
    std::set<PlayLine> seen;
    Json list = Json::array();
    std::string text;
    for (const auto& p : profiles) {
      PlayReport pr = play_report(g, p);
      if (pr.converges && seen.insert(pr.play).second) lines.push_back(pr.play);
      Json e{{"profile", profile_json(g, p)}};
      e.update(pr.json);
      list.push_back(e);
      text += "  " + profile_text(g, p) + " " + pr.text + "\n";
    }
    if (json()) {
      Json j{{"command", "enumerate"},
             {"kind", kind_name(doc.game)},
             {"count", profiles.size()},
             {"truncated", truncated},
             {"distinct_play_lines", lines.size()},
             {"play_lines", lines},
             {"equilibria", list}};
      emit_json(j);
    } else {
      std::string head = "equilibria: " + std::to_string(profiles.size()) +
                         (truncated ? " (truncated at cap " + std::to_string(o_.cap) + ")" : "") +
                         "\ndistinct play lines: " + std::to_string(lines.size()) + "\n";
      for (const auto& l : lines) head += "  " + play_string(l) + "\n";
      emit(head + "profiles:\n" + text);
    }
    if (truncated) return kLimit;
    return profiles.empty() ? kNegative : kOk;
  }

  // Compares the symbolic verdict of every stationary profile with finite
  // check_spe on the instantiated tree, cut at --max-stage with the value the
  // profile itself induces there.
  std::tuple<bool, Json, std::string> truncation(const ParametricGame& g) {
    std::uint64_t total = 1;
    for (const auto& s : g.shapes()) total *= s.moves.size();
    Json rows = Json::array();
    std::string text = "truncation at stage " + std::to_string(o_.max_stage) + ":\n";
    bool agree = true;
    StationaryProfile p{std::vector<std::size_t>(g.size(), 0)};
    for (std::uint64_t k = 0; k < total; ++k) {
      std::uint64_t rest = k;
      for (std::size_t i = g.size(); i-- > 0;) {
        p.choice[i] = rest % g.shape(i).moves.size();
        rest /= g.shape(i).moves.size();
      }
      const bool symbolic = check_spe_param(g, p).ok;
      Json row{{"profile", profile_json(g, p)}, {"symbolic", symbolic}};
      std::string line = "  " + describe(g, p) + " symbolic " + (symbolic ? "yes" : "no");
      if (auto cut = value_at_cut(g, p, o_.max_stage)) {
        const FiniteGame tree = instantiate(g, o_.max_stage, *cut);
        const bool finite = check_spe(tree, truncate_profile(g, p, o_.max_stage)).ok;
        row["truncated"] = finite;
        line += std::string(", truncated ") + (finite ? "yes" : "no");
        if (finite != symbolic) agree = false;
      } else {
        row["truncated"] = nullptr;
        line += ", truncated n/a (diverges)";
      }
      rows.push_back(row);
      text += line + "\n";
    }
    text += std::string("agree: ") + (agree ? "yes" : "no") + "\n";
    return {agree, Json{{"max_stage", o_.max_stage}, {"agree", agree}, {"profiles", rows}}, text};
  }

  int matrix(const MatrixGame& m) {
    MixedProfile mp = solve_constant_sum(m);
    const Rational row_guarantee = best_response_value(m, mp.col, Side::kRow);
    const Rational col_guarantee = best_response_value(m, mp.row, Side::kColumn);
    const bool holds = row_guarantee == mp.value && col_guarantee == m.sum - mp.value;
    auto strings = [](const Distribution& d) {
      std::vector<std::string> s;
      for (const auto& r : d) s.push_back(r.to_string());
      return s;
    };
    auto joined = [&](const Distribution& d) {
      std::string s;
      for (const auto& r : strings(d)) s += (s.empty() ? "" : " ") + r;
      return s;
    };
    if (json()) {
      emit_json(Json{{"command", "matrix"},
                {"row", strings(mp.row)},
                {"col", strings(mp.col)},
                {"value", mp.value.to_string()},
                {"certificate",
                 {{"row_best_response", row_guarantee.to_string()},
                  {"col_best_response", col_guarantee.to_string()},
                  {"holds", holds}}}});
    } else {
      emit("row: " + joined(mp.row) + "\ncol: " + joined(mp.col) + "\nvalue: " +
           mp.value.to_string() + "\ncertificate: " + (holds ? "holds" : "fails") + "\n");
    }
    return holds ? kOk : kNegative;
  }

  const Options& o_;
  std::ostream& out_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Equilibria of finite, cyclic and stage-indexed two-player games", "escalade"};
  app.footer(kFooter);
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", o.seed, "Seed for simulate");
  app.add_option("--cap", o.cap, "Profile cap for enumerate");
  app.add_option("--out", o.out_path, "Write the main output to PATH");

  auto* solve = app.add_subcommand("solve", "One equilibrium with its play and outcome");
  solve->add_option("file", o.file)->required();
  solve->add_option("--ties", o.ties, "Tie policy: first or last");

  auto* enumerate = app.add_subcommand("enumerate", "Every equilibrium and distinct play line");
  enumerate->add_option("file", o.file)->required();

  auto* check = app.add_subcommand("check", "Subgame-perfection report for a profile");
  check->add_option("file", o.file)->required();
  check->add_option("--profile", o.profile_path)->required();

  auto* unfold = app.add_subcommand("unfold", "Finite tree of the first D decision layers");
  unfold->add_option("file", o.file)->required();
  unfold->add_option("--depth", o.depth)->required();
  unfold->add_option("--terminal", o.terminal, "Payoff \"x,y\" at the cut")->required();

  auto* auction = app.add_subcommand("auction", "Dollar auction analysis");
  auction->add_option("--value", o.value, "Object value")->required();
  auction->add_option("--max-stage", o.max_stage, "Compare with the tree cut after stage N");

  auto* simulate = app.add_subcommand("simulate", "Memoryless agents sampling equilibria");
  simulate->add_option("file", o.file)->required();
  simulate->add_option("--horizon", o.horizon)->required();
  simulate->add_option("--policy", o.policy, "uniform or fixed:i,j");

  auto* matrix = app.add_subcommand("matrix", "Exact minimax of a constant-sum matrix game");
  matrix->add_option("file", o.file)->required();

  auto* exp = app.add_subcommand("export", "Canonical text, or DOT with --dot");
  exp->add_option("file", o.file)->required();
  exp->add_option("--profile", o.profile_path);
  exp->add_flag("--dot", o.dot);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  o.seed_given = app.count("--seed") > 0;
  o.cap_given = app.count("--cap") > 0;

  Runner r(o, out);
  try {
    if (*solve) return r.solve();
    if (*enumerate) return r.enumerate();
    if (*check) return r.check();
    if (*unfold) return r.unfold();
    if (*auction) return r.auction();
    if (*simulate) return r.simulate();
    if (*matrix) return r.matrix_file();
    return r.export_file();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const SearchSpaceTooLarge& e) {
    err << "error: " << e.what() << "\n";
    return kLimit;
  } catch (const TooLarge& e) {
    err << "error: " << e.what() << "\n";
    return kLimit;
  } catch (const NoEquilibria& e) {
    err << "error: " << e.what() << "\n";
    return kNegative;
  } catch (const GameError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace escalade::cli
