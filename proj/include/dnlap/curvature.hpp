#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "dnlap/certificate.hpp"
#include "dnlap/graph.hpp"
#include "dnlap/simplex.hpp"
#include "dnlap/spectra.hpp"

namespace dnlap {

/// Gamma(f)(x) vanishes identically on the 2-ball (x has no neighbours).
class DegenerateGamma : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class CurvatureKind { BakryEmery, Ollivier };

struct EdgeCurvature {
  VertexId u = 0;
  VertexId v = 0;
  double value = 0.0;
};

struct CurvatureResult {
  CurvatureKind kind = CurvatureKind::BakryEmery;
  double dimension = INFINITY;  // Bakry-Emery only
  std::vector<double> per_vertex;          // Bakry-Emery
  std::vector<EdgeCurvature> per_edge;     // Ollivier
  double global_min = INFINITY;
};

/// Largest K with Gamma_2(f)(x) >= (1/n) (Delta f(x))^2 + K Gamma(f)(x) for all
/// f, where Gamma(f, g) = (Delta(fg) - f Delta g - g Delta f) / 2 and
/// Gamma_2(f) = Delta Gamma(f, f) / 2 - Gamma(f, Delta f). Boundary is ignored.
/// Pass n = INFINITY to drop the dimension term. Requires n > 1.
double bakry_emery_at(const Graph& g, VertexId x, double n);
CurvatureResult bakry_emery_curvature(const Graph& g, double n);

/// The Ollivier curvature LP for edge {x, y}: variables are f on
/// B_1(x) u B_1(y) minus {x, y}, shifted by d(., y) to be nonnegative, with
/// f(x) = 1, f(y) = 0 and |f(a) - f(b)| <= d(a, b) for every pair.
/// curvature = optimum of `lp` + offset.
struct OllivierProgram {
  LinearProgram lp;
  double offset = 0.0;
  std::vector<VertexId> variables;
};

OllivierProgram ollivier_program(const Graph& g, VertexId x, VertexId y,
                                 const std::vector<std::vector<std::size_t>>& distances);

/// kappa(x, y) = inf { Delta f(y) - Delta f(x) : f 1-Lipschitz, f(x) - f(y) = 1 }.
double ollivier_curvature(const Graph& g, VertexId x, VertexId y);
CurvatureResult ollivier_curvature(const Graph& g);

enum class LichnerowiczVariant {
  BakryEmeryOnGraph,           // nu_2 >= nK/(n-1)
  OllivierOnGraph,             // nu_2 >= kappa
  BakryEmeryOnInterior,        // nu_2, lambda_2 via curvature of G|_Omega
  OllivierOnInterior,
  BakryEmeryOnGraphDirichlet,  // lambda_2 >= nK/(n-1) + s_1^2
  OllivierOnGraphDirichlet,    // lambda_2 >= kappa + s_1^2
};

inline constexpr std::array kAllLichnerowiczVariants{
    LichnerowiczVariant::BakryEmeryOnGraph,          LichnerowiczVariant::OllivierOnGraph,
    LichnerowiczVariant::BakryEmeryOnInterior,       LichnerowiczVariant::OllivierOnInterior,
    LichnerowiczVariant::BakryEmeryOnGraphDirichlet, LichnerowiczVariant::OllivierOnGraphDirichlet,
};

const char* to_string(LichnerowiczVariant v);

/// Certifies one Lichnerowicz-type estimate. Returns a NotApplicable
/// certificate when |Omega| < 2, when an interior variant meets a disconnected
/// G|_Omega, or when the curvature bound is not positive.
ComparisonCertificate certify_lichnerowicz(const Graph& g, const GraphSpectra& s,
                                           LichnerowiczVariant variant, double n = INFINITY,
                                           double tol = 1e-9);
ComparisonCertificate certify_lichnerowicz(const Graph& g, LichnerowiczVariant variant,
                                           double n = INFINITY, double tol = 1e-9);

}  // namespace dnlap
