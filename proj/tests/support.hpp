#pragma once
// Fixture builders shared by the unit tests and the acceptance runner.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "dnlap/generators.hpp"
#include "dnlap/graph.hpp"
#include "dnlap/matrix.hpp"
#include "dnlap/rigidity.hpp"

namespace fixtures {

using dnlap::Graph;
using dnlap::Matrix;
using dnlap::VertexId;

inline Graph p3_two_ends() { return dnlap::path_graph(3, {0, 2}); }
inline Graph p3_one_end() { return dnlap::path_graph(3, {2}); }
inline Graph k22() { return dnlap::complete_bipartite_graph(2, 2, {0, 1}); }

inline Graph with_weight(const Graph& g, VertexId x, VertexId y, double w) {
  Matrix m = g.weights();
  m(x, y) = m(y, x) = w;
  return Graph(g.measures(), m, g.boundary());
}

inline Graph with_measure(const Graph& g, std::vector<double> measure) {
  return Graph(std::move(measure), g.weights(), g.boundary());
}

/// Random M-self-adjoint matrix: M^{-1} S with S symmetric.
inline Matrix random_self_adjoint(std::mt19937_64& rng, std::size_t n, std::vector<double>& measure) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::uniform_real_distribution<double> pos(0.3, 3.0);
  measure.resize(n);
  for (double& m : measure) m = pos(rng);
  Matrix s(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) s(i, j) = s(j, i) = u(rng);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s(i, j) /= measure[i];
  return s;
}

/// Connected random weighted graph on k vertices as a weight matrix block:
/// a random spanning tree plus extra edges.
inline void random_connected_block(std::mt19937_64& rng, Matrix& w, const std::vector<VertexId>& vs, double p) {
  std::uniform_real_distribution<double> weight(0.5, 2.0);
  std::bernoulli_distribution coin(p);
  for (std::size_t k = 1; k < vs.size(); ++k) {
    const VertexId parent = vs[std::uniform_int_distribution<std::size_t>(0, k - 1)(rng)];
    w(vs[k], parent) = w(parent, vs[k]) = weight(rng);
  }
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b)
      if (w(vs[a], vs[b]) == 0.0 && coin(rng)) w(vs[a], vs[b]) = w(vs[b], vs[a]) = weight(rng);
}

inline std::vector<double> random_measures(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> pos(0.5, 2.0);
  std::vector<double> m(n);
  for (double& x : m) x = pos(rng);
  return m;
}

/// Interior 0..k-1 connected, boundary k..k+b-1; each interior vertex y gets
/// boundary weight c * m_y split over a random nonempty set of boundary
/// vertices, so Deg_b is constant.
inline Graph constant_boundary_degree(std::mt19937_64& rng) {
  const std::size_t k = std::uniform_int_distribution<std::size_t>(2, 5)(rng);
  const std::size_t b = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
  const double c = std::uniform_real_distribution<double>(0.5, 3.0)(rng);
  const std::size_t n = k + b;
  auto m = random_measures(rng, n);
  Matrix w(n, n);
  std::vector<VertexId> inner(k);
  std::iota(inner.begin(), inner.end(), 0);
  random_connected_block(rng, w, inner, 0.4);
  std::uniform_real_distribution<double> share(0.2, 1.0);
  for (VertexId y = 0; y < k; ++y) {
    std::vector<VertexId> targets;
    for (std::size_t x = 0; x < b; ++x)
      if (x % k == y || std::bernoulli_distribution(0.4)(rng)) targets.push_back(k + x);
    if (targets.empty()) targets.push_back(k + std::uniform_int_distribution<std::size_t>(0, b - 1)(rng));
    std::vector<double> parts;
    for (std::size_t t = 0; t < targets.size(); ++t) parts.push_back(share(rng));
    const double total = std::accumulate(parts.begin(), parts.end(), 0.0);
    for (std::size_t t = 0; t < targets.size(); ++t)
      w(y, targets[t]) = w(targets[t], y) = c * m[y] * parts[t] / total;
  }
  std::vector<VertexId> boundary;
  for (std::size_t x = 0; x < b; ++x) boundary.push_back(k + x);
  return Graph(m, w, boundary);
}

/// Connected interior 0..k-1 with pendant boundary vertices, each joined to
/// exactly one interior vertex. With `balanced`, the pendant weights at z sum
/// to c * m_z, so Deg_b is constant as well.
inline Graph pendant_boundary(std::mt19937_64& rng, bool balanced) {
  const std::size_t k = std::uniform_int_distribution<std::size_t>(2, 5)(rng);
  std::vector<std::size_t> pendants(k);
  std::size_t b = 0;
  for (auto& p : pendants) {
    p = std::uniform_int_distribution<std::size_t>(balanced ? 1 : 0, 2)(rng);
    b += p;
  }
  if (b == 0) {
    pendants[0] = 1;
    b = 1;
  }
  const std::size_t n = k + b;
  auto m = random_measures(rng, n);
  Matrix w(n, n);
  std::vector<VertexId> inner(k);
  std::iota(inner.begin(), inner.end(), 0);
  random_connected_block(rng, w, inner, 0.4);
  const double c = std::uniform_real_distribution<double>(0.5, 3.0)(rng);
  std::uniform_real_distribution<double> weight(0.5, 2.0);
  std::vector<VertexId> boundary;
  VertexId next = k;
  for (VertexId y = 0; y < k; ++y) {
    std::vector<double> parts;
    for (std::size_t t = 0; t < pendants[y]; ++t) parts.push_back(weight(rng));
    const double total = std::accumulate(parts.begin(), parts.end(), 0.0);
    for (std::size_t t = 0; t < pendants[y]; ++t) {
      const double v = balanced ? c * m[y] * parts[t] / total : parts[t];
      w(y, next) = w(next, y) = v;
      boundary.push_back(next++);
    }
  }
  return Graph(m, w, boundary);
}

/// First boundary edge (x, y) of g, x in B.
inline std::pair<VertexId, VertexId> first_boundary_edge(const Graph& g) {
  for (VertexId x : g.boundary())
    for (VertexId y : g.interior())
      if (g.weight(x, y) > 0.0) return {x, y};
  return {0, 0};
}

inline Graph scale_edge(const Graph& g, VertexId x, VertexId y, double factor) {
  return with_weight(g, x, y, g.weight(x, y) * factor);
}

/// A random vertex relabelling of g.
inline Graph shuffled(std::mt19937_64& rng, const Graph& g) {
  std::vector<VertexId> perm(g.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return dnlap::relabel(g, perm);
}

}  // namespace fixtures
