#include <doctest.h>

#include <sstream>

#include "flipper/generators.hpp"
#include "flipper/io.hpp"
#include "flipper/strategies.hpp"

using namespace flipper;

namespace {

std::string error_of(const std::string& text) {
  std::istringstream in(text);
  try {
    read_graph(in);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("graph files round-trip") {
  Graph g = random_graph(15, 30, 3);
  std::ostringstream out;
  write_graph(out, g);
  std::istringstream in(out.str());
  CHECK(read_graph(in) == g);
}

TEST_CASE("comments and blank lines are skipped") {
  std::istringstream in("# a triangle\n3 3\n\n0 1\n1 2 # last two\n0 2\n");
  Graph g = read_graph(in);
  CHECK(g.edge_count() == 3);
}

TEST_CASE("graph parse errors name the line") {
  CHECK(error_of("") == "missing header line 'n m'");
  CHECK(error_of("3 1\n0 x\n") == "line 2: 'x' is not an integer");
  CHECK(error_of("3 1\n0 1 2\n") == "line 2: expected two integers");
  CHECK(error_of("3 1\n0 3\n") == "line 2: vertex id out of range [0, 3)");
  CHECK(error_of("3 1\n1 1\n") == "line 2: self-loop");
  CHECK(error_of("3 2\n0 1\n1 0\n") == "line 3: duplicate edge");
  CHECK(error_of("3 1\n0 1\n1 2\n") == "line 3: more edges than the header announces");
  CHECK(error_of("3 2\n0 1\n") == "header announces 2 edges, found 1");
  CHECK(error_of("-1 0\n") == "line 1: negative count");
  CHECK_THROWS_AS(read_graph_file("/nonexistent/graph.g"), ParseError);
}

TEST_CASE("order files") {
  std::istringstream ok("2\n0\n1\n");
  VertexOrder o = read_order(ok, 3);
  CHECK(o.sequence() == std::vector<Vertex>{2, 0, 1});
  std::istringstream short_list("0\n1\n");
  CHECK_THROWS_AS(read_order(short_list, 3), ParseError);
  std::istringstream repeat("0\n0\n1\n");
  CHECK_THROWS_AS(read_order(repeat, 3), ParseError);
}

TEST_CASE("vertex lists") {
  CHECK(parse_vertex_list("1,3, 4", 5) == VertexSet(5, {1, 3, 4}));
  CHECK(parse_vertex_list("0 2", 5) == VertexSet(5, {0, 2}));
  CHECK(parse_vertex_list("", 5).empty());
  CHECK_THROWS_AS(parse_vertex_list("7", 5), ParseError);
  CHECK_THROWS_AS(parse_vertex_list("a", 5), ParseError);
}

TEST_CASE("flip sets round-trip through JSON") {
  FlipSet f{AtomicFlip(VertexSet(5, {0, 1}), VertexSet(5, {3})), AtomicFlip(VertexSet(5, {2}), VertexSet(5, {2}))};
  CHECK(flips_from_json(flips_to_json(f)) == f);
  CHECK(flips_to_json(FlipSet{}) == "[]");
  CHECK_THROWS_AS(flips_from_json("{"), ParseError);
  CHECK_THROWS_AS(flips_from_json("[{\"A\":[1]}]"), ParseError);
}

TEST_CASE("transcripts round-trip through JSON") {
  Graph g = random_tree(40, 6);
  GameConfig cfg;
  cfg.radius = 1;
  cfg.schedule = MoveSchedule::growing(256);
  PredictConfig pc;
  pc.radius = 2;
  FlipStar star(pc);
  RandomConnector con(3);
  Transcript t = run_game(Game(g, cfg), star, con);
  std::string text = transcript_to_json(t);
  Transcript back = transcript_from_json(text, g.universe());
  CHECK(transcript_to_json(back) == text);
  CHECK(back.rounds.size() == t.rounds.size());
  CHECK(back.outcome.kind == t.outcome.kind);
  CHECK_THROWS_AS(transcript_from_json("{\"variant\":\"chess\"}", 5), ParseError);
}

TEST_CASE("induced-subgraph transcripts keep the chosen set") {
  Graph g = path_graph(12);
  GameConfig cfg;
  cfg.variant = Variant::induced_subgraph;
  cfg.radius = 2;
  cfg.schedule = MoveSchedule::growing(256);
  PredictConfig pc;
  pc.radius = 4;
  FlipStar star(pc);
  GreedySurvivorConnector con;
  Transcript t = run_game(Game(g, cfg), star, con);
  REQUIRE_FALSE(t.rounds.empty());
  Transcript back = transcript_from_json(transcript_to_json(t), g.universe());
  REQUIRE(back.rounds[0].connector.subset.has_value());
  CHECK(*back.rounds[0].connector.subset == *t.rounds[0].connector.subset);
}

TEST_CASE("pseudo and separation transcripts serialize") {
  Graph g = random_graph(8, 40, 2);
  GameConfig cfg;
  cfg.variant = Variant::separation;
  cfg.schedule = MoveSchedule::unbounded();
  ScriptedSeparator sep({VertexSet(8, {1})});
  RandomConnector con(1);
  Transcript t = run_game(Game(g, cfg), sep, con);
  std::string text = transcript_to_json(t);
  CHECK(text.find("\"separator\"") != std::string::npos);
  CHECK(transcript_to_json(transcript_from_json(text, 8)) == text);

  cfg.variant = Variant::pseudo_flipper;
  SeparatorAsPseudoFlipper pf(std::make_unique<ScriptedSeparator>(std::vector<VertexSet>{VertexSet(8, {1})}));
  Transcript tp = run_game(Game(g, cfg), pf, con);
  std::string ptext = transcript_to_json(tp);
  CHECK(ptext.find("\"partition\"") != std::string::npos);
  CHECK(transcript_to_json(transcript_from_json(ptext, 8)) == ptext);
}
