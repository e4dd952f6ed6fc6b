#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "dnlap/graph.hpp"

namespace dnlap {

/// Malformed graph file: bad JSON, unknown keys, missing fields, bad ids.
class GraphFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses the graph file format:
///   {"vertices": [{"id": int, "measure": number}, ...],
///    "edges":    [{"u": int, "v": int, "weight": number}, ...],
///    "boundary": [int, ...]}
/// Structural axioms are not checked here; call validate() on the result.
Graph parse_graph(std::string_view text);
Graph load_graph(const std::filesystem::path& path);

/// Vertices ascending by id, edges ascending by (min, max) endpoint.
std::string serialize_graph(const Graph& g);
void save_graph(const Graph& g, const std::filesystem::path& path);

}  // namespace dnlap
