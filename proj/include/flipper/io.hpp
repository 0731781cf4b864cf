#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "flipper/classifier.hpp"
#include "flipper/game.hpp"

namespace flipper {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Text format: first line "n m", then m lines "u v". '#' starts a comment.
// Errors name the offending line.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);

// One id per line, smallest first.
VertexOrder read_order(std::istream& in, std::size_t universe);
VertexOrder read_order_file(const std::string& path, std::size_t universe);

// Comma or space separated ids.
VertexSet parse_vertex_list(std::string_view text, std::size_t universe);

std::string flips_to_json(const FlipSet& f);
FlipSet flips_from_json(std::string_view text);

std::string classifier_to_json(const Graph& g, const Classifier& c);
Classifier classifier_from_json(std::string_view text, std::size_t universe);

std::string partition_to_json(const Partition& p);

// Deterministic: equal transcripts give equal bytes.
std::string transcript_to_json(const Transcript& t);
Transcript transcript_from_json(std::string_view text, std::size_t universe);

}  // namespace flipper
