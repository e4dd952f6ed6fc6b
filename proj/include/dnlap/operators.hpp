#pragma once

#include <span>
#include <vector>

#include "dnlap/graph.hpp"
#include "dnlap/matrix.hpp"

namespace dnlap {

enum class OperatorKind { FullLaplacian, DirichletLaplacian, NeumannLaplacian, InteriorLaplacian };

const char* to_string(OperatorKind kind);

/// A matrix acting on functions on a vertex set S, self-adjoint for the
/// inner product <u, v> = sum u(x) v(x) m_x. Every stored operator is the
/// nonnegative one (-Delta, -Delta^D, ...), so the eigenvalues are plain
/// eigenvalues of the matrix.
struct SelfAdjointOperator {
  Matrix matrix;
  std::vector<double> measure;
  OperatorKind kind;
};

/// max over i, j of |m_i M_ij - m_j M_ji|, relative to max(1, max |m_i M_ij|).
double self_adjoint_defect(const Matrix& matrix, std::span<const double> measure);

/// The averaging map A_Omega (interior -> boundary) and its adjoint A_B.
struct BoundaryMaps {
  Matrix to_boundary;  // |B| x |Omega|: (A_Omega u)(x) = (1/m_x) sum_y u(y) w_xy
  Matrix to_interior;  // |Omega| x |B|: (A_B f)(y) = (1/m_y) sum_x f(x) w_xy
  std::vector<double> boundary_measure;
  std::vector<double> interior_measure;
};

SelfAdjointOperator full_laplacian(const Graph& g);
SelfAdjointOperator interior_laplacian(const Graph& g);

/// -Delta^D assembled from the zero extension, cross-checked against
/// -Delta_Omega + diag(Deg_b). Throws std::logic_error if the two disagree.
SelfAdjointOperator dirichlet_laplacian(const Graph& g);
/// -Delta^N assembled from the normal extension, cross-checked against
/// -Delta_Omega + diag(Deg_b) - A_B Deg^{-1} A_Omega.
SelfAdjointOperator neumann_laplacian(const Graph& g);

Matrix dirichlet_from_extension(const Graph& g);
Matrix dirichlet_from_identity(const Graph& g);
Matrix neumann_from_extension(const Graph& g);
Matrix neumann_from_identity(const Graph& g);

BoundaryMaps boundary_maps(const Graph& g);
/// A_B Deg^{-1} A_Omega on functions on the interior.
Matrix boundary_coupling(const Graph& g);

/// u on the interior -> E_0(u) on V (zero on B).
Vector zero_extension(const Graph& g, std::span<const double> u);
/// u on the interior -> N_0(u) on V; on B the Deg-normalised average of the
/// interior neighbours, so that the normal derivative vanishes.
Vector normal_extension(const Graph& g, std::span<const double> u);
/// u on V -> du/dn on B, which equals (-Delta u) restricted to B.
Vector normal_derivative(const Graph& g, std::span<const double> u);

/// -Delta applied to a function on V.
Vector apply_negative_laplacian(const Graph& g, std::span<const double> u);
/// <du, dv> = sum over edges of (u(y) - u(x))(v(y) - v(x)) w_xy.
double dirichlet_form(const Graph& g, std::span<const double> u, std::span<const double> v);

}  // namespace dnlap
