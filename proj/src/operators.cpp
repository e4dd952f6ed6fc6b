#include "dnlap/operators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace dnlap {
namespace {

constexpr double kAssemblyTolerance = 1e-12;

void check_routes(const Matrix& a, const Matrix& b, const char* what) {
  const double scale = std::max({1.0, max_abs(a), max_abs(b)});
  if (max_abs_difference(a, b) > kAssemblyTolerance * scale)
    throw std::logic_error(std::string(what) + ": assembly routes disagree");
}

Vector unit_vector(std::size_t n, std::size_t k) {
  Vector e(n, 0.0);
  e[k] = 1.0;
  return e;
}

// Restricts a function on V to the interior.
Vector restrict_to_interior(const Graph& g, const Vector& f) {
  Vector out;
  out.reserve(g.interior().size());
  for (VertexId y : g.interior()) out.push_back(f[y]);
  return out;
}

Matrix assemble_from_extension(const Graph& g, Vector (*extend)(const Graph&, std::span<const double>)) {
  const std::size_t k = g.interior().size();
  Matrix m(k, k);
  for (std::size_t j = 0; j < k; ++j) {
    Vector col = restrict_to_interior(g, apply_negative_laplacian(g, extend(g, unit_vector(k, j))));
    for (std::size_t i = 0; i < k; ++i) m(i, j) = col[i];
  }
  return m;
}

}  // namespace

const char* to_string(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::FullLaplacian: return "FullLaplacian";
    case OperatorKind::DirichletLaplacian: return "DirichletLaplacian";
    case OperatorKind::NeumannLaplacian: return "NeumannLaplacian";
    case OperatorKind::InteriorLaplacian: return "InteriorLaplacian";
  }
  return "Unknown";
}

double self_adjoint_defect(const Matrix& matrix, std::span<const double> measure) {
  double worst = 0.0;
  double scale = 1.0;
  for (std::size_t i = 0; i < matrix.rows(); ++i)
    for (std::size_t j = 0; j < matrix.cols(); ++j) {
      scale = std::max(scale, std::abs(measure[i] * matrix(i, j)));
      worst = std::max(worst, std::abs(measure[i] * matrix(i, j) - measure[j] * matrix(j, i)));
    }
  return worst / scale;
}

Vector apply_negative_laplacian(const Graph& g, std::span<const double> u) {
  Vector out(g.size(), 0.0);
  for (VertexId x = 0; x < g.size(); ++x) {
    double s = 0.0;
    for (VertexId y = 0; y < g.size(); ++y) s += (u[x] - u[y]) * g.weight(x, y);
    out[x] = s / g.measure(x);
  }
  return out;
}

double dirichlet_form(const Graph& g, std::span<const double> u, std::span<const double> v) {
  double s = 0.0;
  for (VertexId x = 0; x < g.size(); ++x)
    for (VertexId y = x + 1; y < g.size(); ++y)
      s += (u[y] - u[x]) * (v[y] - v[x]) * g.weight(x, y);
  return s;
}

SelfAdjointOperator full_laplacian(const Graph& g) {
  const std::size_t n = g.size();
  Matrix m(n, n);
  for (VertexId x = 0; x < n; ++x) {
    double row = 0.0;
    for (VertexId y = 0; y < n; ++y) {
      if (y == x) continue;
      m(x, y) = -g.weight(x, y) / g.measure(x);
      row += g.weight(x, y);
    }
    m(x, x) = row / g.measure(x);
  }
  return {std::move(m), g.measures(), OperatorKind::FullLaplacian};
}

SelfAdjointOperator interior_laplacian(const Graph& g) {
  auto op = full_laplacian(interior_subgraph(g));
  op.kind = OperatorKind::InteriorLaplacian;
  return op;
}

Vector zero_extension(const Graph& g, std::span<const double> u) {
  if (u.size() != g.interior().size()) throw std::invalid_argument("zero_extension: size mismatch");
  Vector out(g.size(), 0.0);
  for (std::size_t k = 0; k < u.size(); ++k) out[g.interior()[k]] = u[k];
  return out;
}

Vector normal_extension(const Graph& g, std::span<const double> u) {
  require_boundary(g);
  Vector out = zero_extension(g, u);
  for (VertexId x : g.boundary()) {
    double num = 0.0;
    double den = 0.0;
    for (std::size_t k = 0; k < u.size(); ++k) {
      const double w = g.weight(x, g.interior()[k]);
      num += u[k] * w;
      den += w;
    }
    if (!(den > 0.0)) throw PreconditionError("boundary vertex without interior neighbour");
    out[x] = num / den;
  }
  return out;
}

Vector normal_derivative(const Graph& g, std::span<const double> u) {
  require_boundary(g);
  if (u.size() != g.size()) throw std::invalid_argument("normal_derivative: size mismatch");
  Vector out;
  out.reserve(g.boundary().size());
  for (VertexId x : g.boundary()) {
    double s = 0.0;
    for (VertexId y = 0; y < g.size(); ++y) s += (u[x] - u[y]) * g.weight(x, y);
    out.push_back(s / g.measure(x));
  }
  return out;
}

Matrix dirichlet_from_extension(const Graph& g) {
  require_boundary(g);
  return assemble_from_extension(g, &zero_extension);
}

Matrix dirichlet_from_identity(const Graph& g) {
  require_boundary(g);
  Matrix m = interior_laplacian(g).matrix;
  auto degb = boundary_degrees(g);
  for (std::size_t i = 0; i < degb.size(); ++i) m(i, i) += degb[i];
  return m;
}

Matrix neumann_from_extension(const Graph& g) {
  require_boundary(g);
  return assemble_from_extension(g, &normal_extension);
}

BoundaryMaps boundary_maps(const Graph& g) {
  require_boundary(g);
  const auto& b = g.boundary();
  const auto& omega = g.interior();
  BoundaryMaps maps{Matrix(b.size(), omega.size()), Matrix(omega.size(), b.size()),
                    g.boundary_measures(), g.interior_measures()};
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < omega.size(); ++j) {
      const double w = g.weight(b[i], omega[j]);
      maps.to_boundary(i, j) = w / g.measure(b[i]);
      maps.to_interior(j, i) = w / g.measure(omega[j]);
    }
  return maps;
}

Matrix boundary_coupling(const Graph& g) {
  auto maps = boundary_maps(g);
  Matrix scaled = maps.to_boundary;
  for (std::size_t i = 0; i < g.boundary().size(); ++i) {
    const double deg = weighted_degree(g, g.boundary()[i]);
    if (!(deg > 0.0)) throw std::logic_error("boundary vertex with zero degree");
    for (double& v : scaled.row(i)) v /= deg;
  }
  return maps.to_interior * scaled;
}

Matrix neumann_from_identity(const Graph& g) {
  return dirichlet_from_identity(g) - boundary_coupling(g);
}

SelfAdjointOperator dirichlet_laplacian(const Graph& g) {
  Matrix m = dirichlet_from_extension(g);
  check_routes(m, dirichlet_from_identity(g), "dirichlet_laplacian");
  return {std::move(m), g.interior_measures(), OperatorKind::DirichletLaplacian};
}

SelfAdjointOperator neumann_laplacian(const Graph& g) {
  Matrix m = neumann_from_extension(g);
  check_routes(m, neumann_from_identity(g), "neumann_laplacian");
  return {std::move(m), g.interior_measures(), OperatorKind::NeumannLaplacian};
}

}  // namespace dnlap
