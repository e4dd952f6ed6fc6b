#include "dnlap/graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>

namespace dnlap {

Graph::Graph(std::vector<double> measure, Matrix weights, std::vector<VertexId> boundary)
    : measure_(std::move(measure)), weights_(std::move(weights)), boundary_(std::move(boundary)) {
  const std::size_t n = measure_.size();
  if (weights_.rows() != n || weights_.cols() != n)
    throw std::invalid_argument("weight matrix must be |V| x |V|");
  std::sort(boundary_.begin(), boundary_.end());
  if (std::adjacent_find(boundary_.begin(), boundary_.end()) != boundary_.end())
    throw std::invalid_argument("boundary lists a vertex twice");
  if (!boundary_.empty() && boundary_.back() >= n)
    throw std::invalid_argument("boundary vertex out of range");

  position_.assign(n, {false, 0});
  for (std::size_t k = 0; k < boundary_.size(); ++k) position_[boundary_[k]] = {true, k};
  for (VertexId x = 0; x < n; ++x) {
    if (position_[x].first) continue;
    position_[x].second = interior_.size();
    interior_.push_back(x);
  }
}

std::vector<double> Graph::interior_measures() const {
  std::vector<double> m;
  m.reserve(interior_.size());
  for (VertexId y : interior_) m.push_back(measure_[y]);
  return m;
}

std::vector<double> Graph::boundary_measures() const {
  std::vector<double> m;
  m.reserve(boundary_.size());
  for (VertexId x : boundary_) m.push_back(measure_[x]);
  return m;
}

std::vector<VertexId> Graph::neighbors(VertexId x) const {
  std::vector<VertexId> out;
  for (VertexId y = 0; y < size(); ++y)
    if (y != x && weights_(x, y) != 0.0) out.push_back(y);
  return out;
}

std::size_t Graph::edge_count() const {
  std::size_t count = 0;
  for (VertexId x = 0; x < size(); ++x)
    for (VertexId y = x + 1; y < size(); ++y)
      if (weights_(x, y) != 0.0) ++count;
  return count;
}

bool Graph::operator==(const Graph& other) const {
  return measure_ == other.measure_ && weights_ == other.weights_ && boundary_ == other.boundary_;
}

const char* to_string(ValidationErrorKind kind) {
  switch (kind) {
    case ValidationErrorKind::SelfLoop: return "SelfLoop";
    case ValidationErrorKind::AsymmetricWeight: return "AsymmetricWeight";
    case ValidationErrorKind::NegativeWeight: return "NegativeWeight";
    case ValidationErrorKind::NonpositiveMeasure: return "NonpositiveMeasure";
    case ValidationErrorKind::EmptyBoundary: return "EmptyBoundary";
    case ValidationErrorKind::BoundaryEdge: return "BoundaryEdge";
    case ValidationErrorKind::IsolatedBoundaryVertex: return "IsolatedBoundaryVertex";
    case ValidationErrorKind::Disconnected: return "Disconnected";
  }
  return "Unknown";
}

std::string GraphValidationError::message() const {
  std::ostringstream os;
  os << to_string(kind);
  if (!vertices.empty()) {
    os << " at";
    for (VertexId v : vertices) os << ' ' << v;
  }
  return os.str();
}

std::optional<GraphValidationError> validate(const Graph& g, bool require_boundary) {
  using K = ValidationErrorKind;
  const std::size_t n = g.size();
  const Matrix& w = g.weights();

  for (VertexId x = 0; x < n; ++x)
    if (w(x, x) != 0.0) return GraphValidationError{K::SelfLoop, {x}};
  for (VertexId x = 0; x < n; ++x)
    for (VertexId y = x + 1; y < n; ++y)
      if (w(x, y) != w(y, x)) return GraphValidationError{K::AsymmetricWeight, {x, y}};
  for (VertexId x = 0; x < n; ++x)
    for (VertexId y = x + 1; y < n; ++y)
      if (!(w(x, y) >= 0.0)) return GraphValidationError{K::NegativeWeight, {x, y}};
  for (VertexId x = 0; x < n; ++x)
    if (!(g.measure(x) > 0.0) || !std::isfinite(g.measure(x)))
      return GraphValidationError{K::NonpositiveMeasure, {x}};

  if (require_boundary) {
    if (g.boundary().empty()) return GraphValidationError{K::EmptyBoundary, {}};
    const auto& b = g.boundary();
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = i + 1; j < b.size(); ++j)
        if (w(b[i], b[j]) > 0.0) return GraphValidationError{K::BoundaryEdge, {b[i], b[j]}};
    for (VertexId x : b) {
      bool attached = false;
      for (VertexId y : g.interior()) attached = attached || w(x, y) > 0.0;
      if (!attached) return GraphValidationError{K::IsolatedBoundaryVertex, {x}};
    }
  }

  if (n == 0 || component_count(g) != 1) {
    auto labels = component_labels(g);
    for (VertexId x = 0; x < n; ++x)
      if (labels[x] != 0) return GraphValidationError{K::Disconnected, {0, x}};
    return GraphValidationError{K::Disconnected, {}};
  }
  return std::nullopt;
}

void require_boundary(const Graph& g) {
  if (!g.has_boundary()) throw PreconditionError("operation requires a nonempty boundary");
}

double weighted_degree(const Graph& g, VertexId x) {
  double s = 0.0;
  for (VertexId y = 0; y < g.size(); ++y) s += g.weight(x, y);
  return s / g.measure(x);
}

double boundary_degree(const Graph& g, VertexId y) {
  if (g.is_boundary(y)) throw PreconditionError("boundary_degree requires an interior vertex");
  double s = 0.0;
  for (VertexId x : g.boundary()) s += g.weight(x, y);
  return s / g.measure(y);
}

double interior_degree(const Graph& g, VertexId y) {
  if (g.is_boundary(y)) throw PreconditionError("interior_degree requires an interior vertex");
  double s = 0.0;
  for (VertexId z : g.interior()) s += g.weight(y, z);
  return s / g.measure(y);
}

std::vector<double> boundary_degrees(const Graph& g) {
  std::vector<double> d;
  d.reserve(g.interior().size());
  for (VertexId y : g.interior()) d.push_back(boundary_degree(g, y));
  return d;
}

Volumes volumes(const Graph& g) {
  Volumes v;
  for (VertexId y : g.interior()) v.interior += g.measure(y);
  for (VertexId x : g.boundary()) v.boundary += g.measure(x);
  v.total = v.interior + v.boundary;
  return v;
}

Graph interior_subgraph(const Graph& g) {
  const auto& omega = g.interior();
  Matrix w(omega.size(), omega.size());
  for (std::size_t i = 0; i < omega.size(); ++i)
    for (std::size_t j = 0; j < omega.size(); ++j) w(i, j) = g.weight(omega[i], omega[j]);
  return Graph(g.interior_measures(), std::move(w));
}

std::vector<std::size_t> component_labels(const Graph& g) {
  const std::size_t n = g.size();
  constexpr auto unset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> label(n, unset);
  std::size_t next = 0;
  for (VertexId s = 0; s < n; ++s) {
    if (label[s] != unset) continue;
    std::queue<VertexId> q;
    q.push(s);
    label[s] = next;
    while (!q.empty()) {
      VertexId x = q.front();
      q.pop();
      for (VertexId y = 0; y < n; ++y)
        if (label[y] == unset && g.weight(x, y) > 0.0) {
          label[y] = next;
          q.push(y);
        }
    }
    ++next;
  }
  return label;
}

std::size_t component_count(const Graph& g) {
  auto labels = component_labels(g);
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

std::vector<std::vector<std::size_t>> hop_distances(const Graph& g) {
  const std::size_t n = g.size();
  constexpr auto inf = std::numeric_limits<std::size_t>::max();
  std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, inf));
  for (VertexId s = 0; s < n; ++s) {
    std::queue<VertexId> q;
    d[s][s] = 0;
    q.push(s);
    while (!q.empty()) {
      VertexId x = q.front();
      q.pop();
      for (VertexId y = 0; y < n; ++y)
        if (d[s][y] == inf && g.weight(x, y) > 0.0) {
          d[s][y] = d[s][x] + 1;
          q.push(y);
        }
    }
  }
  return d;
}

bool has_unit_weight(const Graph& g) {
  for (VertexId x = 0; x < g.size(); ++x) {
    if (g.measure(x) != 1.0) return false;
    for (VertexId y = 0; y < g.size(); ++y)
      if (g.weight(x, y) != 0.0 && g.weight(x, y) != 1.0) return false;
  }
  return true;
}

bool has_normalized_weight(const Graph& g, double tol) {
  for (VertexId x = 0; x < g.size(); ++x)
    if (std::abs(weighted_degree(g, x) - 1.0) > tol) return false;
  return true;
}

}  // namespace dnlap
