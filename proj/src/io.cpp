#include "flipper/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace flipper {

using nlohmann::json;

namespace {

std::string strip_comment(const std::string& line) {
  auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

bool blank(const std::string& s) { return s.find_first_not_of(" \t\r") == std::string::npos; }

std::vector<long long> numbers_on(const std::string& s, std::size_t lineno) {
  std::istringstream in(s);
  std::vector<long long> out;
  std::string tok;
  while (in >> tok) {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw ParseError("line " + std::to_string(lineno) + ": '" + tok + "' is not an integer");
    }
    out.push_back(v);
  }
  return out;
}

json set_json(const VertexSet& s) { return json(s.to_vector()); }

VertexSet set_from(const json& j, std::size_t universe = 0) {
  if (!j.is_array()) throw ParseError("expected an array of vertex ids");
  VertexSet s(universe);
  for (const json& v : j) {
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
      throw ParseError("vertex ids must be non-negative integers");
    }
    s.insert(v.get<Vertex>());
  }
  return s;
}

json flips_json(const FlipSet& f) {
  json arr = json::array();
  for (const AtomicFlip& a : f) arr.push_back({{"A", set_json(a.first())}, {"B", set_json(a.second())}});
  return arr;
}

FlipSet flips_from(const json& j) {
  if (!j.is_array()) throw ParseError("flip set must be an array");
  FlipSet out;
  for (const json& item : j) {
    if (!item.is_object() || !item.contains("A") || !item.contains("B")) throw ParseError("flip needs fields A and B");
    out.toggle(AtomicFlip(set_from(item["A"]), set_from(item["B"])));
  }
  return out;
}

json partition_json(const Partition& p) {
  json arr = json::array();
  for (const VertexSet& part : p.parts()) arr.push_back(set_json(part));
  return arr;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

Graph read_graph(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::optional<std::pair<long long, long long>> header;
  std::vector<Edge> edges;
  std::set<std::pair<Vertex, Vertex>> seen;
  while (std::getline(in, line)) {
    ++lineno;
    std::string body = strip_comment(line);
    if (blank(body)) continue;
    std::vector<long long> nums = numbers_on(body, lineno);
    if (nums.size() != 2) throw ParseError("line " + std::to_string(lineno) + ": expected two integers");
    if (!header) {
      if (nums[0] < 0 || nums[1] < 0) throw ParseError("line " + std::to_string(lineno) + ": negative count");
      header = {nums[0], nums[1]};
      continue;
    }
    long long n = header->first;
    if (static_cast<long long>(edges.size()) >= header->second) {
      throw ParseError("line " + std::to_string(lineno) + ": more edges than the header announces");
    }
    if (nums[0] < 0 || nums[1] < 0 || nums[0] >= n || nums[1] >= n) {
      throw ParseError("line " + std::to_string(lineno) + ": vertex id out of range [0, " + std::to_string(n) + ")");
    }
    if (nums[0] == nums[1]) throw ParseError("line " + std::to_string(lineno) + ": self-loop");
    Vertex u = Vertex(nums[0]);
    Vertex v = Vertex(nums[1]);
    if (!seen.insert(std::minmax(u, v)).second) throw ParseError("line " + std::to_string(lineno) + ": duplicate edge");
    edges.push_back({u, v});
  }
  if (!header) throw ParseError("missing header line 'n m'");
  if (static_cast<long long>(edges.size()) != header->second) {
    throw ParseError("header announces " + std::to_string(header->second) + " edges, found " + std::to_string(edges.size()));
  }
  return Graph::build(static_cast<std::size_t>(header->first), edges);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph file '" + path + "'");
  return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  std::vector<Edge> edges = g.edges();
  out << g.universe() << ' ' << edges.size() << '\n';
  for (const Edge& e : edges) out << e.u << ' ' << e.v << '\n';
}

VertexOrder read_order(std::istream& in, std::size_t universe) {
  std::string line;
  std::size_t lineno = 0;
  std::vector<Vertex> seq;
  while (std::getline(in, line)) {
    ++lineno;
    std::string body = strip_comment(line);
    if (blank(body)) continue;
    std::vector<long long> nums = numbers_on(body, lineno);
    if (nums.size() != 1 || nums[0] < 0) throw ParseError("line " + std::to_string(lineno) + ": expected one vertex id");
    seq.push_back(Vertex(nums[0]));
  }
  if (seq.size() != universe) {
    throw ParseError("order lists " + std::to_string(seq.size()) + " ids, graph has " + std::to_string(universe));
  }
  try {
    return VertexOrder::from_sequence(std::move(seq));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

VertexOrder read_order_file(const std::string& path, std::size_t universe) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open order file '" + path + "'");
  return read_order(in, universe);
}

VertexSet parse_vertex_list(std::string_view text, std::size_t universe) {
  std::string s(text);
  for (char& c : s)
    if (c == ',') c = ' ';
  VertexSet out(universe);
  for (long long v : numbers_on(s, 1)) {
    if (v < 0 || static_cast<std::size_t>(v) >= universe) throw ParseError("vertex id " + std::to_string(v) + " out of range");
    out.insert(Vertex(v));
  }
  return out;
}

std::string flips_to_json(const FlipSet& f) { return flips_json(f).dump(); }

FlipSet flips_from_json(std::string_view text) { return flips_from(parse_json(text)); }

std::string partition_to_json(const Partition& p) { return partition_json(p).dump(); }

std::string classifier_to_json(const Graph& g, const Classifier& c) {
  json blobs = json::array();
  for (const VertexSet& b : c.blobs) blobs.push_back(set_json(b));
  json exc = json::object();
  json rep = json::object();
  for (Vertex v : g.vertices()) {
    exc[std::to_string(v)] = c.exc[v] ? json(*c.exc[v]) : json(nullptr);
    rep[std::to_string(v)] = c.rep[v];
  }
  return json{{"blobs", blobs}, {"S", set_json(c.reps)}, {"exc", exc}, {"rep", rep}}.dump();
}

Classifier classifier_from_json(std::string_view text, std::size_t universe) {
  json j = parse_json(text);
  for (const char* key : {"blobs", "S", "exc", "rep"}) {
    if (!j.contains(key)) throw ParseError(std::string("classifier needs field ") + key);
  }
  Classifier c;
  for (const json& b : j["blobs"]) c.blobs.push_back(set_from(b, universe));
  c.reps = set_from(j["S"], universe);
  c.exc.assign(universe, std::nullopt);
  c.rep.assign(universe, 0);
  auto index = [&](const std::string& key) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), v);
    if (ec != std::errc() || ptr != key.data() + key.size() || v >= universe) throw ParseError("bad vertex key '" + key + "'");
    return v;
  };
  for (auto& [key, value] : j["exc"].items()) {
    if (!value.is_null()) c.exc[index(key)] = value.get<std::size_t>();
  }
  for (auto& [key, value] : j["rep"].items()) c.rep[index(key)] = value.get<Vertex>();
  return c;
}

std::string transcript_to_json(const Transcript& t) {
  json rounds = json::array();
  for (const RoundRecord& r : t.rounds) {
    json rec{{"round", r.round}, {"arena_size", r.arena_size}, {"steps", r.steps}};
    if (r.connector.subset) {
      rec["connector"] = set_json(*r.connector.subset);
      rec["center"] = r.connector.center;
    } else {
      rec["connector"] = r.connector.center;
    }
    if (auto f = std::get_if<FlipSet>(&r.flipper)) rec["flips"] = flips_json(*f);
    if (auto p = std::get_if<Partition>(&r.flipper)) rec["partition"] = partition_json(*p);
    if (auto s = std::get_if<VertexSet>(&r.flipper)) rec["separator"] = set_json(*s);
    rounds.push_back(std::move(rec));
  }
  const char* winner = "none";
  switch (t.outcome.kind) {
    case OutcomeKind::flipper_wins:
    case OutcomeKind::connector_forfeit: winner = "flipper"; break;
    case OutcomeKind::flipper_forfeit: winner = "connector"; break;
    case OutcomeKind::round_limit: break;
  }
  json outcome{{"kind", std::string(outcome_name(t.outcome.kind))}, {"winner", winner}, {"round", t.outcome.round}};
  if (!t.outcome.reason.empty()) outcome["reason"] = t.outcome.reason;
  json j{{"variant", std::string(variant_name(t.variant))},
         {"r", t.radius},
         {"n", t.n},
         {"max_rounds", t.max_rounds},
         {"rounds", rounds},
         {"outcome", outcome}};
  return j.dump(1);
}

Transcript transcript_from_json(std::string_view text, std::size_t universe) {
  json j = parse_json(text);
  Transcript t;
  try {
    auto variant = parse_variant(j.at("variant").get<std::string>());
    if (!variant) throw ParseError("unknown variant");
    t.variant = *variant;
    t.radius = j.at("r").get<std::size_t>();
    t.n = j.value("n", std::size_t{0});
    t.max_rounds = j.value("max_rounds", std::size_t{0});
    for (const json& r : j.at("rounds")) {
      RoundRecord rec;
      rec.round = r.at("round").get<std::size_t>();
      rec.arena_size = r.value("arena_size", std::size_t{0});
      rec.steps = r.value("steps", std::size_t{0});
      const json& c = r.at("connector");
      if (c.is_array()) {
        rec.connector.subset = set_from(c, universe);
        rec.connector.center = r.value("center", rec.connector.subset->first().value_or(0));
      } else {
        rec.connector.center = c.get<Vertex>();
      }
      if (r.contains("flips")) {
        rec.flipper = flips_from(r["flips"]);
      } else if (r.contains("partition")) {
        std::vector<VertexSet> parts;
        for (const json& p : r["partition"]) parts.push_back(set_from(p, universe));
        rec.flipper = Partition(std::move(parts));
      } else if (r.contains("separator")) {
        rec.flipper = set_from(r["separator"], universe);
      }
      t.rounds.push_back(std::move(rec));
    }
    const json& o = j.at("outcome");
    std::string kind = o.at("kind").get<std::string>();
    bool known = false;
    for (OutcomeKind k : {OutcomeKind::flipper_wins, OutcomeKind::round_limit, OutcomeKind::connector_forfeit,
                          OutcomeKind::flipper_forfeit}) {
      if (outcome_name(k) == kind) {
        t.outcome.kind = k;
        known = true;
      }
    }
    if (!known) throw ParseError("unknown outcome kind '" + kind + "'");
    t.outcome.round = o.at("round").get<std::size_t>();
    t.outcome.reason = o.value("reason", std::string());
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed transcript: ") + e.what());
  }
  return t;
}

}  // namespace flipper
