#pragma once

#include <cstddef>

#include "dnlap/certificate.hpp"
#include "dnlap/graph.hpp"
#include "dnlap/matrix.hpp"
#include "dnlap/spectra.hpp"

namespace dnlap {

/// Weight of a global minimum cut of a symmetric nonnegative weight matrix.
/// Zero for fewer than two vertices or a disconnected matrix.
double stoer_wagner_min_cut(const Matrix& weights);

enum class ConnectivityTarget { Graph, Interior };

/// Minimum number of edges whose removal disconnects G (or G|_Omega).
/// Throws NotUnitWeight unless m = 1 and w takes values in {0, 1}.
std::size_t edge_connectivity(const Graph& g, ConnectivityTarget which = ConnectivityTarget::Graph);

/// Largest eigenvalue of the unit-weight path on i vertices, 2(1 + cos(pi/i)).
double path_largest_eigenvalue(std::size_t i);

/// First Dirichlet eigenvalue of the path 0 - 1 - ... - k, B = {0}, unit
/// measures and interior weights, w_01 = lam.
double path_dirichlet_value(std::size_t k, double lam);

/// Friedman-type lower bound for index i on a graph with `order` vertices.
double friedman_value(std::size_t i, std::size_t order);

ComparisonCertificate fiedler_bounds(const Graph& g, const GraphSpectra& s, double tol = 1e-9);
ComparisonCertificate fiedler_bounds(const Graph& g, double tol = 1e-9);
ComparisonCertificate friedman_bounds(const Graph& g, const GraphSpectra& s, double tol = 1e-9);
ComparisonCertificate friedman_bounds(const Graph& g, double tol = 1e-9);

}  // namespace dnlap
