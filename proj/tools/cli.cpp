#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>

#include "flipper/generators.hpp"
#include "flipper/io.hpp"
#include "flipper/predictor.hpp"
#include "flipper/strategies.hpp"
#include "verify/suites.hpp"

namespace flipper::cli {

namespace {

using Clock = std::chrono::steady_clock;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string canonical_connector(const std::string& name) {
  if (name == "greedy") return "greedy_survivor";
  if (name == "farthest") return "farthest_from_played";
  return name;
}

// "0;2,5;" gives three picks: {0}, {2,5} and {}.
std::vector<VertexSet> parse_picks(const std::string& text, std::size_t universe) {
  std::vector<VertexSet> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    std::size_t end = text.find(';', start);
    std::string piece = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
    out.push_back(parse_vertex_list(piece, universe));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return out;
}

int exit_code(const Outcome& o) {
  switch (o.kind) {
    case OutcomeKind::flipper_wins:
    case OutcomeKind::connector_forfeit: return 0;
    case OutcomeKind::round_limit: return 2;
    case OutcomeKind::flipper_forfeit: return 1;
  }
  return 1;
}

std::string summary(const Transcript& t) {
  std::string s = std::string(outcome_name(t.outcome.kind)) + " in round " + std::to_string(t.outcome.round);
  if (!t.outcome.reason.empty()) s += " (" + t.outcome.reason + ")";
  return s;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text << '\n';
    return;
  }
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write '" + path + "'");
  f << text << '\n';
}

struct PlayOptions {
  std::string graph;
  std::size_t radius = 1;
  std::string variant = "flipper";
  std::string flipper = "flip_star";
  std::string connector = "random";
  std::string script;
  std::size_t max_rounds = 1000;
  std::uint64_t seed = 1;
  std::string out;
  std::string order;
  std::string picks;
  std::string schedule;
  std::size_t max_flips = 256;
};

PredictConfig star_config(std::size_t game_radius, const VertexOrder& order, std::size_t max_flips) {
  PredictConfig pc;
  pc.radius = 2 * game_radius;
  pc.order = order;
  pc.step_budget_factor = step_budget_factor_from_env();
  pc.max_flips = max_flips;
  return pc;
}

int cmd_play(const PlayOptions& o, std::ostream& out, std::ostream& err) {
  Graph g = read_graph_file(o.graph);
  VertexOrder order = o.order.empty() ? VertexOrder() : read_order_file(o.order, g.universe());
  auto variant = parse_variant(o.variant);
  if (!variant) throw UsageError("unknown variant '" + o.variant + "'");

  std::optional<Transcript> script;
  if (!o.script.empty()) script = transcript_from_json(read_file(o.script), g.universe());
  auto need_script = [&](const char* who) {
    if (!script) throw UsageError(std::string("--script is required for a scripted ") + who);
  };

  GameConfig cfg;
  cfg.variant = *variant;
  cfg.radius = o.radius;
  cfg.max_rounds = o.max_rounds;

  std::unique_ptr<ConnectorStrategy> connector;
  std::string cname = canonical_connector(o.connector);
  if (cname == "scripted") {
    need_script("connector");
    std::vector<ConnectorMove> moves;
    for (const RoundRecord& r : script->rounds) moves.push_back(r.connector);
    connector = std::make_unique<ScriptedConnector>(std::move(moves));
  } else {
    connector = make_connector(cname, o.seed);
  }
  std::vector<VertexSet> picks = parse_picks(o.picks, g.universe());

  Transcript t;
  if (is_flipper_like(cfg.variant)) {
    std::unique_ptr<FlipperStrategy> flipper;
    MoveSchedule schedule = MoveSchedule::growing(o.max_flips);
    if (o.flipper == "flip_star") {
      flipper = std::make_unique<FlipStar>(star_config(o.radius, order, o.max_flips));
    } else if (o.flipper == "flip_star_single") {
      flipper = std::make_unique<SingleFlipAdapter>(std::make_unique<FlipStar>(star_config(o.radius, order, o.max_flips)),
                                                    o.max_flips);
      schedule = MoveSchedule::constant(1);
    } else if (o.flipper == "pseudo_translation") {
      flipper = std::make_unique<PseudoFlipperAsFlipper>(
          std::make_unique<SeparatorAsPseudoFlipper>(std::make_unique<ScriptedSeparator>(picks)), o.radius,
          cfg.partition_cap);
      schedule = MoveSchedule::unbounded();
    } else if (o.flipper == "scripted") {
      need_script("flipper");
      std::vector<FlipSet> moves;
      std::vector<std::size_t> steps;
      for (const RoundRecord& r : script->rounds) {
        const FlipSet* f = std::get_if<FlipSet>(&r.flipper);
        if (!f) throw UsageError("script does not hold flip sets");
        moves.push_back(*f);
        steps.push_back(r.steps);
      }
      flipper = std::make_unique<ScriptedFlipper>(std::move(moves), std::move(steps));
      schedule = MoveSchedule::unbounded();
    } else {
      throw UsageError("unknown flipper strategy '" + o.flipper + "' for the " + o.variant + " variant");
    }
    cfg.schedule = schedule;
    if (!o.schedule.empty()) {
      auto s = MoveSchedule::parse(o.schedule);
      if (!s) throw UsageError("bad schedule '" + o.schedule + "'");
      cfg.schedule = *s;
    }
    t = run_game(Game(g, cfg), *flipper, *connector);
  } else {
    cfg.schedule = MoveSchedule::unbounded();
    if (!o.schedule.empty()) {
      auto s = MoveSchedule::parse(o.schedule);
      if (!s) throw UsageError("bad schedule '" + o.schedule + "'");
      cfg.schedule = *s;
    }
    if (o.flipper != "scripted" && o.flipper != "separator_classes") {
      throw UsageError("unknown flipper strategy '" + o.flipper + "' for the " + o.variant + " variant");
    }
    if (cfg.variant == Variant::separation) {
      ScriptedSeparator sep(picks);
      t = run_game(Game(g, cfg), sep, *connector);
    } else {
      SeparatorAsPseudoFlipper pf(std::make_unique<ScriptedSeparator>(picks));
      t = run_game(Game(g, cfg), pf, *connector);
    }
  }
  emit(transcript_to_json(t), o.out, out);
  if (!o.out.empty()) out << summary(t) << '\n';
  if (t.outcome.kind == OutcomeKind::flipper_forfeit) err << "flipper forfeits: " << t.outcome.reason << '\n';
  return exit_code(t.outcome);
}

int cmd_predict(const std::string& graph, std::size_t radius, const std::string& z, const std::string& order_file,
                std::ostream& out, std::ostream& err) {
  Graph g = read_graph_file(graph);
  PredictConfig cfg;
  cfg.radius = radius;
  cfg.step_budget_factor = step_budget_factor_from_env();
  if (!order_file.empty()) cfg.order = read_order_file(order_file, g.universe());
  VertexSet zset = parse_vertex_list(z, g.universe());
  if (!zset.is_subset_of(g.vertices())) throw UsageError("--z names vertices outside the graph: " + to_string(zset - g.vertices()));
  PredictTrace t = predict_traced(g, cfg, zset);
  out << flips_to_json(t.flips) << '\n';
  err << "steps: " << t.steps << '\n';
  if (t.guard_tripped) err << "guard tripped\n";
  return 0;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, std::size_t budget, std::ostream& out) {
  const auto& names = verify::suite_names();
  if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end()) {
    throw UsageError("unknown suite '" + suite + "'");
  }
  verify::SuiteOptions opt;
  opt.seed = seed;
  opt.count = budget;
  bool ok = true;
  for (const verify::SuiteReport& r : verify::run_suite(suite, opt)) {
    nlohmann::json j;
    j["suite"] = r.name;
    j["ok"] = r.ok();
    j["cases"] = r.cases;
    j["failures"] = r.failures;
    j["seconds"] = std::round(r.seconds * 1000) / 1000;
    j["metrics"] = r.metrics;
    j["messages"] = r.messages;
    out << j.dump() << '\n';
    ok = ok && r.ok();
  }
  return ok ? 0 : 1;
}

// The five vertices nearest to a vertex of largest degree, ties by id.
VertexSet bench_targets(const Graph& g) {
  Vertex hub = *g.vertices().first();
  for (Vertex v : g.vertices())
    if (g.degree(v) > g.degree(hub)) hub = v;
  auto d = bfs_distances(g, hub);
  std::vector<Vertex> near;
  for (Vertex v : g.vertices())
    if (v != hub) near.push_back(v);
  std::stable_sort(near.begin(), near.end(), [&](Vertex a, Vertex b) { return d[a] < d[b]; });
  near.resize(std::min<std::size_t>(5, near.size()));
  return VertexSet(g.universe(), near);
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchOptions& opt) {
  std::vector<BenchRow> rows;
  for (const std::string& family : opt.families) {
    for (std::size_t n : opt.sizes) {
      auto start = Clock::now();
      Graph g = generate_family(family, n, opt.seed);
      BenchRow row{family, n, opt.radius};
      PredictConfig pc;
      pc.radius = opt.radius;
      pc.step_budget_factor = step_budget_factor_from_env();
      VertexSet z = bench_targets(g);
      std::vector<std::uint64_t> times;
      for (std::size_t i = 0; i < std::max<std::size_t>(opt.repeats, 1); ++i) {
        auto t0 = Clock::now();
        FlipSet f = predict(g, pc, z);
        auto t1 = Clock::now();
        times.push_back(std::uint64_t(std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count()));
      }
      std::sort(times.begin(), times.end());
      row.predict_time_ns = times[times.size() / 2];
      if (opt.play) {
        GameConfig gc;
        gc.radius = opt.radius;
        gc.max_rounds = opt.max_rounds;
        gc.schedule = MoveSchedule::growing(256);
        FlipStar star(star_config(opt.radius, VertexOrder(), 256));
        RandomConnector con(opt.seed);
        Transcript t = run_game(Game(g, gc), star, con);
        if (t.outcome.kind == OutcomeKind::flipper_wins) row.rounds_to_win = t.outcome.round;
      }
      row.total_time_ns =
          std::uint64_t(std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start).count());
      rows.push_back(row);
    }
  }
  return rows;
}

double loglog_slope(const std::vector<BenchRow>& rows) {
  if (rows.size() < 2) return 0;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const BenchRow& r : rows) {
    double x = std::log(double(r.n));
    double y = std::log(double(std::max<std::uint64_t>(r.predict_time_ns, 1)));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double k = double(rows.size());
  double denom = k * sxx - sx * sx;
  return denom == 0 ? 0 : (k * sxy - sx * sy) / denom;
}

namespace {

int cmd_bench(const BenchOptions& opt, const std::string& path, std::ostream& out, std::ostream& err) {
  std::vector<BenchRow> rows = run_bench(opt);
  std::ostringstream csv;
  csv << "family,n,r,rounds_to_win,predict_time_ns,total_time_ns\n";
  for (const BenchRow& r : rows) {
    csv << r.family << ',' << r.n << ',' << r.radius << ',' << r.rounds_to_win << ',' << r.predict_time_ns << ','
        << r.total_time_ns << '\n';
  }
  if (path.empty()) {
    out << csv.str();
  } else {
    std::ofstream f(path);
    if (!f) throw UsageError("cannot write '" + path + "'");
    f << csv.str();
  }
  for (const std::string& family : opt.families) {
    std::vector<BenchRow> mine;
    for (const BenchRow& r : rows)
      if (r.family == family) mine.push_back(r);
    bool constant = std::all_of(mine.begin(), mine.end(), [&](const BenchRow& r) { return r.rounds_to_win == mine.front().rounds_to_win; });
    err << family << " r=" << opt.radius << ": predict slope " << loglog_slope(mine) << ", rounds constant "
        << (constant ? "true" : "false") << '\n';
  }
  return 0;
}

// Reads centres from the terminal. "q" or end of input stops the game.
class TerminalConnector : public ConnectorStrategy {
 public:
  TerminalConnector(std::istream& in, std::ostream& out) : in_(in), out_(out) {}

  ConnectorMove next(const Game& game, const Position& pos) override {
    const VertexSet& live = pos.arena.vertices();
    out_ << "round " << pos.round + 1 << ": " << live.count() << " vertices";
    if (live.count() <= 40) out_ << ' ' << to_string(live);
    out_ << '\n';
    while (true) {
      out_ << "centre (or 'b v' to preview a ball, 'q' to quit)> " << std::flush;
      std::string line;
      if (!std::getline(in_, line)) throw std::runtime_error("input closed");
      std::istringstream words(line);
      std::string first;
      if (!(words >> first)) continue;
      if (first == "q") throw std::runtime_error("quit");
      bool preview = first == "b";
      if (preview && !(words >> first)) {
        out_ << "usage: b <vertex>\n";
        continue;
      }
      Vertex v = 0;
      try {
        std::size_t used = 0;
        unsigned long parsed = std::stoul(first, &used);
        if (used != first.size()) throw std::invalid_argument(first);
        v = Vertex(parsed);
      } catch (const std::exception&) {
        out_ << "'" << first << "' is not a vertex id\n";
        continue;
      }
      if (!pos.arena.is_live(v)) {
        out_ << "vertex " << v << " is not in the arena\n";
        continue;
      }
      ConnectorMove move = ball_move(game, pos, v);
      if (preview) {
        out_ << "ball around " << v << ": " << to_string(ball(pos.arena, v, game.config().radius)) << '\n';
        continue;
      }
      try {
        game.check_connector_move(pos, move);
      } catch (const GameError& e) {
        out_ << e.what() << '\n';
        continue;
      }
      return move;
    }
  }

 private:
  std::istream& in_;
  std::ostream& out_;
};

int cmd_interactive(const std::string& graph, std::size_t radius, std::size_t max_rounds, const std::string& path,
                    std::istream& in, std::ostream& out) {
  Graph g = read_graph_file(graph);
  GameConfig cfg;
  cfg.radius = radius;
  cfg.max_rounds = max_rounds;
  cfg.schedule = MoveSchedule::growing(256);
  Game game(g, cfg);
  FlipStar star(star_config(radius, VertexOrder(), 256));
  TerminalConnector con(in, out);
  Transcript t = run_game(game, star, con, [&](const RoundRecord& rec, const Position&) {
    const FlipSet& f = std::get<FlipSet>(rec.flipper);
    out << "flipper plays " << f.size() << " flip(s)";
    if (!f.empty() && f.size() <= 8) out << ' ' << flips_to_json(f);
    out << "; arena now has " << rec.arena_size << " vertices\n";
  });
  out << "*** " << summary(t) << " ***\n";
  if (!path.empty()) emit(transcript_to_json(t), path, out);
  return exit_code(t.outcome);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  CLI::App app{"Flipper game toolkit", "flipper"};
  app.require_subcommand(1);

  PlayOptions play;
  auto* p = app.add_subcommand("play", "Run one game and write its transcript");
  p->add_option("graph", play.graph, "Graph file")->required();
  p->add_option("--radius,-r", play.radius, "Game radius")->check(CLI::PositiveNumber);
  p->add_option("--variant", play.variant, "flipper, induced_subgraph, pseudo_flipper or separation");
  p->add_option("--flipper", play.flipper,
                "flip_star, flip_star_single, pseudo_translation, scripted or separator_classes");
  p->add_option("--connector", play.connector, "random, greedy_survivor, farthest_from_played or scripted");
  p->add_option("--script", play.script, "Transcript to replay for scripted players");
  p->add_option("--max-rounds", play.max_rounds, "Round limit");
  p->add_option("--seed", play.seed, "Seed for the random connector");
  p->add_option("--out", play.out, "Transcript path (default stdout)");
  p->add_option("--order", play.order, "Vertex order file");
  p->add_option("--picks", play.picks, "Separator picks per round, e.g. \"0;2,5\"");
  p->add_option("--schedule", play.schedule, "Moves per round: k, max(i,k) or unbounded");
  p->add_option("--max-flips", play.max_flips, "Largest prediction flip set accepted");

  std::string pgraph, pz, porder;
  std::size_t pradius = 1;
  auto* pr = app.add_subcommand("predict", "Print the predicted flip set for five vertices");
  pr->add_option("graph", pgraph, "Graph file")->required();
  pr->add_option("--radius,-r", pradius, "Radius");
  pr->add_option("--z", pz, "Vertices, comma separated")->required();
  pr->add_option("--order", porder, "Vertex order file");

  std::string suite = "all";
  std::uint64_t vseed = 1;
  std::size_t vbudget = 0;
  auto* v = app.add_subcommand("verify", "Run property suites");
  v->add_option("--suite", suite, "flips, s_classes, metric, classifier, predict, strategy, wrapper, translations or all");
  v->add_option("--seed", vseed, "Seed");
  v->add_option("--budget", vbudget, "Instance count (0 uses each suite's default)");

  BenchOptions bench;
  std::string bench_out;
  auto* b = app.add_subcommand("bench", "Time predict and count rounds to win");
  b->add_option("--families", bench.families, "Comma separated families")->delimiter(',');
  b->add_option("--sizes", bench.sizes, "Comma separated sizes")->delimiter(',');
  b->add_option("--radius,-r", bench.radius, "Radius");
  b->add_option("--repeats", bench.repeats, "Predict repeats per size");
  b->add_option("--seed", bench.seed, "Seed");
  b->add_option("--max-rounds", bench.max_rounds, "Round limit per game");
  b->add_option("--out", bench_out, "CSV path (default stdout)");

  std::string igraph, iout;
  std::size_t iradius = 1, irounds = 1000;
  auto* it = app.add_subcommand("interactive", "Play Connector against flip star");
  it->add_option("graph", igraph, "Graph file")->required();
  it->add_option("--radius,-r", iradius, "Game radius")->check(CLI::PositiveNumber);
  it->add_option("--max-rounds", irounds, "Round limit");
  it->add_option("--out", iout, "Transcript path");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    if (*p) return cmd_play(play, out, err);
    if (*pr) return cmd_predict(pgraph, pradius, pz, porder, out, err);
    if (*v) return cmd_verify(suite, vseed, vbudget, out);
    if (*b) {
      std::erase(bench.families, std::string());
      for (const std::string& f : bench.families) {
        const auto& known = sized_families();
        if (std::find(known.begin(), known.end(), f) == known.end()) throw UsageError("unknown family '" + f + "'");
      }
      return cmd_bench(bench, bench_out, out, err);
    }
    if (*it) return cmd_interactive(igraph, iradius, irounds, iout, in, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace flipper::cli
