#pragma once

#include <cmath>
#include <vector>

#include "dnlap/certificate.hpp"
#include "dnlap/graph.hpp"
#include "dnlap/spectra.hpp"

namespace dnlap {

inline constexpr double kDefaultTolerance = 1e-9;
/// Looser tolerance used when an equality pattern feeds a rigidity check.
inline constexpr double kEqualityTolerance = 1e-7;

// Each comparison takes precomputed spectra; the Graph overloads compute them.
// Tolerances are relative to max(1, largest quantity in the certificate).

ComparisonCertificate compare_neumann_laplacian(const GraphSpectra& s, double tol = kDefaultTolerance);
ComparisonCertificate compare_dirichlet_interior(const GraphSpectra& s, double tol = kDefaultTolerance);
ComparisonCertificate compare_neumann_interior(const GraphSpectra& s, double tol = kDefaultTolerance);
ComparisonCertificate compare_dirichlet_neumann(const GraphSpectra& s, double tol = kDefaultTolerance);
/// Also fails when every index is an equality, which cannot happen.
ComparisonCertificate compare_laplacian_dirichlet(const GraphSpectra& s, double tol = kDefaultTolerance);

ComparisonCertificate compare_neumann_laplacian(const Graph& g, double tol = kDefaultTolerance);
ComparisonCertificate compare_dirichlet_interior(const Graph& g, double tol = kDefaultTolerance);
ComparisonCertificate compare_neumann_interior(const Graph& g, double tol = kDefaultTolerance);
ComparisonCertificate compare_dirichlet_neumann(const Graph& g, double tol = kDefaultTolerance);
ComparisonCertificate compare_laplacian_dirichlet(const Graph& g, double tol = kDefaultTolerance);

struct RunOptions {
  bool curvature = false;  // the six Lichnerowicz-type certificates
  bool bounds = false;     // Fiedler- and Friedman-type certificates (unit weight only)
  double dimension = INFINITY;  // n for the Bakry-Emery certificates
};

/// The five comparison certificates, followed by the optional families.
std::vector<ComparisonCertificate> run_all(const Graph& g, double tol = kDefaultTolerance,
                                           const RunOptions& options = {});

}  // namespace dnlap
