#include "dnlap/graph_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace dnlap {
namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, std::initializer_list<std::string_view> allowed,
                         std::string_view where) {
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (auto a : allowed) known = known || key == a;
    if (!known) throw GraphFormatError("unknown key '" + key + "' in " + std::string(where));
  }
}

const json& field(const json& obj, const char* key, std::string_view where) {
  auto it = obj.find(key);
  if (it == obj.end())
    throw GraphFormatError("missing key '" + std::string(key) + "' in " + std::string(where));
  return *it;
}

std::int64_t as_index(const json& v, std::string_view what) {
  if (!v.is_number_integer()) throw GraphFormatError(std::string(what) + " must be an integer");
  return v.get<std::int64_t>();
}

double as_number(const json& v, std::string_view what) {
  if (!v.is_number()) throw GraphFormatError(std::string(what) + " must be a number");
  return v.get<double>();
}

}  // namespace

Graph parse_graph(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw GraphFormatError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw GraphFormatError("graph file must be a JSON object");
  reject_unknown_keys(doc, {"vertices", "edges", "boundary"}, "graph");

  const json& vertices = field(doc, "vertices", "graph");
  const json& edges = field(doc, "edges", "graph");
  const json& boundary = field(doc, "boundary", "graph");
  if (!vertices.is_array() || !edges.is_array() || !boundary.is_array())
    throw GraphFormatError("vertices, edges and boundary must be arrays");
  if (vertices.empty()) throw GraphFormatError("graph has no vertices");

  const auto n = static_cast<std::int64_t>(vertices.size());
  std::vector<double> measure(vertices.size(), 0.0);
  std::vector<bool> seen(vertices.size(), false);
  for (const json& v : vertices) {
    if (!v.is_object()) throw GraphFormatError("vertex entries must be objects");
    reject_unknown_keys(v, {"id", "measure"}, "vertex");
    const auto id = as_index(field(v, "id", "vertex"), "vertex id");
    if (id < 0 || id >= n) throw GraphFormatError("vertex ids must be 0..|V|-1");
    if (seen[id]) throw GraphFormatError("duplicate vertex id " + std::to_string(id));
    seen[id] = true;
    measure[id] = as_number(field(v, "measure", "vertex"), "vertex measure");
  }

  Matrix w(vertices.size(), vertices.size());
  std::set<std::pair<std::int64_t, std::int64_t>> listed;
  for (const json& e : edges) {
    if (!e.is_object()) throw GraphFormatError("edge entries must be objects");
    reject_unknown_keys(e, {"u", "v", "weight"}, "edge");
    auto u = as_index(field(e, "u", "edge"), "edge endpoint");
    auto v = as_index(field(e, "v", "edge"), "edge endpoint");
    if (u < 0 || u >= n || v < 0 || v >= n) throw GraphFormatError("edge endpoint out of range");
    if (!listed.insert({std::min(u, v), std::max(u, v)}).second)
      throw GraphFormatError("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    const double weight = as_number(field(e, "weight", "edge"), "edge weight");
    w(u, v) = weight;
    w(v, u) = weight;
  }

  std::vector<VertexId> b;
  for (const json& x : boundary) {
    auto id = as_index(x, "boundary vertex");
    if (id < 0 || id >= n) throw GraphFormatError("boundary vertex out of range");
    b.push_back(static_cast<VertexId>(id));
  }
  try {
    return Graph(std::move(measure), std::move(w), std::move(b));
  } catch (const std::invalid_argument& e) {
    throw GraphFormatError(e.what());
  }
}

Graph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GraphFormatError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::string serialize_graph(const Graph& g) {
  json doc = json::object();
  json vertices = json::array();
  for (VertexId x = 0; x < g.size(); ++x)
    vertices.push_back(json{{"id", x}, {"measure", g.measure(x)}});
  json edges = json::array();
  for (VertexId x = 0; x < g.size(); ++x)
    for (VertexId y = x + 1; y < g.size(); ++y)
      if (g.weight(x, y) != 0.0) edges.push_back(json{{"u", x}, {"v", y}, {"weight", g.weight(x, y)}});
  doc["vertices"] = std::move(vertices);
  doc["edges"] = std::move(edges);
  doc["boundary"] = g.boundary();
  return doc.dump(2) + "\n";
}

void save_graph(const Graph& g, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << serialize_graph(g);
}

}  // namespace dnlap
