#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dnlap/matrix.hpp"

namespace dnlap {

using VertexId = std::size_t;

/// A finite weighted graph (G, m, w) together with a vertex boundary B.
///
/// Weights are a dense symmetric matrix with zero diagonal; w(x, y) > 0 means
/// {x, y} is an edge. The boundary is kept sorted; the interior is the sorted
/// complement. Functions on the boundary or the interior are plain vectors
/// indexed by position in boundary() or interior(), respectively.
///
/// Construction only checks shapes and index ranges. The structural axioms
/// are checked by validate().
class Graph {
 public:
  Graph() = default;
  Graph(std::vector<double> measure, Matrix weights, std::vector<VertexId> boundary = {});

  std::size_t size() const { return measure_.size(); }
  double measure(VertexId x) const { return measure_[x]; }
  const std::vector<double>& measures() const { return measure_; }
  double weight(VertexId x, VertexId y) const { return weights_(x, y); }
  const Matrix& weights() const { return weights_; }

  const std::vector<VertexId>& boundary() const { return boundary_; }
  const std::vector<VertexId>& interior() const { return interior_; }
  bool has_boundary() const { return !boundary_.empty(); }
  bool is_boundary(VertexId x) const { return position_[x].first; }
  /// Position of x inside boundary() or interior(), whichever holds it.
  std::size_t local_index(VertexId x) const { return position_[x].second; }

  std::vector<double> interior_measures() const;
  std::vector<double> boundary_measures() const;
  std::vector<VertexId> neighbors(VertexId x) const;
  std::size_t edge_count() const;

  bool operator==(const Graph& other) const;

 private:
  std::vector<double> measure_;
  Matrix weights_;
  std::vector<VertexId> boundary_;
  std::vector<VertexId> interior_;
  std::vector<std::pair<bool, std::size_t>> position_;
};

enum class ValidationErrorKind {
  SelfLoop,
  AsymmetricWeight,
  NegativeWeight,
  NonpositiveMeasure,
  EmptyBoundary,
  BoundaryEdge,
  IsolatedBoundaryVertex,
  Disconnected,
};

struct GraphValidationError {
  ValidationErrorKind kind;
  std::vector<VertexId> vertices;  // offending vertex or edge endpoints
  std::string message() const;
};

const char* to_string(ValidationErrorKind kind);

/// Checks every structural axiom and returns the first violation in the fixed
/// order of ValidationErrorKind. With require_boundary = false the graph is
/// treated as a plain weighted graph: the boundary checks are skipped.
std::optional<GraphValidationError> validate(const Graph& g, bool require_boundary = true);

/// Raised by operations whose preconditions on the graph do not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotUnitWeight : public PreconditionError {
 public:
  NotUnitWeight() : PreconditionError("graph does not carry the unit weight") {}
};

class NotNormalized : public PreconditionError {
 public:
  NotNormalized() : PreconditionError("graph does not carry a normalized weight") {}
};

void require_boundary(const Graph& g);

double weighted_degree(const Graph& g, VertexId x);
/// Deg_b(y) = (1/m_y) sum over x in B of w_xy; y must be interior.
double boundary_degree(const Graph& g, VertexId y);
/// Deg_Omega(y) = (1/m_y) sum over z in Omega of w_yz; y must be interior.
double interior_degree(const Graph& g, VertexId y);

/// Deg_b as a function on the interior (indexed like interior()).
std::vector<double> boundary_degrees(const Graph& g);

struct Volumes {
  double interior = 0.0;
  double boundary = 0.0;
  double total = 0.0;
};
Volumes volumes(const Graph& g);

/// The induced plain weighted graph on the interior. Vertex k of the result is
/// interior()[k] of the input. It may be disconnected.
Graph interior_subgraph(const Graph& g);

/// Number of connected components of the support of w.
std::size_t component_count(const Graph& g);
/// Component label per vertex, labels 0..count-1 in order of first vertex.
std::vector<std::size_t> component_labels(const Graph& g);

/// Combinatorial (hop) distances; unreachable pairs get SIZE_MAX.
std::vector<std::vector<std::size_t>> hop_distances(const Graph& g);

bool has_unit_weight(const Graph& g);
bool has_normalized_weight(const Graph& g, double tol = 1e-12);

}  // namespace dnlap
