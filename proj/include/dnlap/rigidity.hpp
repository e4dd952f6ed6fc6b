#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dnlap/certificate.hpp"
#include "dnlap/graph.hpp"
#include "dnlap/spectra.hpp"

namespace dnlap {

/// Cross-check tolerance for equality patterns and structural conditions.
inline constexpr double kRigidityTolerance = 1e-7;

/// Fit of w_xy = rho_x m_x m_y on B x Omega.
struct RhoFactorization {
  /// First (x, y) in B x Omega with w_xy = 0, if any. rho is empty then.
  std::optional<std::pair<VertexId, VertexId>> missing_edge;
  std::vector<double> rho;  // indexed like g.boundary()
  double residual = 0.0;    // max |w_xy - rho_x m_x m_y|
  bool holds = false;       // residual <= tol * max weight
  bool constant = false;    // relative spread of rho <= tol
};

RhoFactorization detect_rho_factorization(const Graph& g, double tol = kRigidityTolerance);

enum class RigidityId {
  NeuVsLap,
  DiriVsInterior,
  NeuVsInterior,
  DiriVsNeu,
  LapVsDiri,
  UnitWeightCorollary,
  NormalizedCorollary,
};

const char* to_string(RigidityId id);
std::optional<RigidityId> rigidity_from_string(const std::string& name);

enum class RigidityStatus { Evaluated, UnsupportedPattern, NotApplicable };
const char* to_string(RigidityStatus s);

struct RigidityCondition {
  std::string name;
  bool holds = false;
  std::string witness;
};

/// A function on V vanishing on B with vanishing normal derivative that is
/// an eigenfunction of both -Delta and -Delta^N.
struct SharedEigenfunction {
  std::size_t index = 0;
  double eigenvalue = 0.0;
  Vector u;
  double residual = 0.0;  // ||A_Omega v|| / ||v|| for the interior part v
  bool found = false;
};

/// Equality pattern of mu_{i+|B|} >= lambda_i.
struct LapDiriPattern {
  std::vector<std::size_t> strict;  // 1-based indices with strict inequality
  bool all_equal() const { return strict.empty(); }
  bool except_one() const { return strict.size() == 1; }
};

struct RigidityReport {
  RigidityId id = RigidityId::NeuVsLap;
  RigidityStatus status = RigidityStatus::Evaluated;
  std::vector<RigidityCondition> conditions;
  /// The structural side of the characterization.
  bool conclusion = false;
  /// The spectral side, read off the comparison certificate.
  bool observed = false;
  /// conclusion == observed for biconditionals; observed implies conclusion
  /// for one-directional statements.
  bool consistent = false;
  std::optional<std::size_t> exceptional_index;
  std::vector<SharedEigenfunction> witnesses;
  std::string note;
};

LapDiriPattern laplacian_dirichlet_pattern(const GraphSpectra& s, double tol = kRigidityTolerance);

/// Searches the nu_i-eigenspace for v with A_Omega v = 0; its zero extension
/// is then a Laplacian eigenfunction too.
SharedEigenfunction shared_eigenfunction(const Graph& g, const GraphSpectra& s, std::size_t index,
                                         double tol = kRigidityTolerance);

RigidityReport check_neumann_laplacian_rigidity(const Graph& g, double tol = kRigidityTolerance);
RigidityReport check_dirichlet_interior_rigidity(const Graph& g, double tol = kRigidityTolerance);
RigidityReport check_neumann_interior_rigidity(const Graph& g, double tol = kRigidityTolerance);
RigidityReport check_dirichlet_neumann_rigidity(const Graph& g, double tol = kRigidityTolerance);
RigidityReport check_laplacian_dirichlet_rigidity(const Graph& g, double tol = kRigidityTolerance);
/// Throws NotUnitWeight.
RigidityReport check_corollary_unit_weight(const Graph& g, double tol = kRigidityTolerance);
/// Throws NotNormalized.
RigidityReport check_corollary_normalized(const Graph& g, double tol = kRigidityTolerance);

RigidityReport check_rigidity(const Graph& g, RigidityId id, double tol = kRigidityTolerance);

/// Parameters of the two explicit equality constructions. The interior is a
/// disjoint union of `components` cliques over `interior` vertices, every
/// boundary vertex is joined to every interior vertex with w = rho m_x m_y.
struct RecipeParams {
  std::size_t components = 1;
  std::size_t boundary = 2;
  std::size_t interior = 3;
  double rho = 1.0;
  /// Neumann recipe: mu_max(Omega) = scale * admissible bound, scale in (0, 1].
  /// Dirichlet recipe: mu_{j+1}(Omega) = scale * rho V_Omega, scale >= 1.
  double scale = 0.5;
};

/// V_Omega = 2 V_B, interior weights shrunk so nu_i = mu_i for every i.
Graph neumann_equality_recipe(const RecipeParams& p);
/// V_Omega = V_B / 2, interior weights grown so equality holds except at j.
Graph laplacian_dirichlet_recipe(const RecipeParams& p);

}  // namespace dnlap
