#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "dnlap/graph.hpp"

namespace dnlap {

// Unit-weight standard graphs on vertices 0..n-1.
Graph path_graph(std::size_t n, std::vector<VertexId> boundary = {});
Graph cycle_graph(std::size_t n, std::vector<VertexId> boundary = {});
Graph complete_graph(std::size_t n, std::vector<VertexId> boundary = {});
/// Sides 0..a-1 and a..a+b-1.
Graph complete_bipartite_graph(std::size_t a, std::size_t b, std::vector<VertexId> boundary = {});
/// Centre 0, leaves 1..leaves.
Graph star_graph(std::size_t leaves, std::vector<VertexId> boundary = {});

/// Relabels vertex x as perm[x].
Graph relabel(const Graph& g, const std::vector<VertexId>& perm);

enum class WeightModel { Unit, Normalized, LogNormal };
enum class Attachment { Random, Full, SingleNeighbor };

const char* to_string(WeightModel m);
const char* to_string(Attachment a);

struct RandomGraphOptions {
  std::size_t min_vertices = 3;
  std::size_t max_vertices = 12;
  double interior_edge_probability = 0.5;
  double attachment_probability = 0.5;  // Attachment::Random only
  WeightModel model = WeightModel::LogNormal;
  Attachment attachment = Attachment::Random;
  double log_sigma = 0.5;
  bool shuffle = true;
};

/// Erdos-Renyi interior, random independent boundary attached to it, redrawn
/// until the result is a valid connected graph with boundary.
Graph random_boundary_graph(std::mt19937_64& rng, const RandomGraphOptions& options);

/// Symmetric scaling w_xy <- d_x w_xy d_y with sum_y w_xy = m_x for every x.
/// Returns false if it does not reach 1e-10 within the iteration budget.
bool fit_normalized_weights(Matrix& w, const std::vector<double>& measure, std::size_t max_iterations = 20000);

/// The audit mix: instance k of a seeded stream cycles through the weight
/// models and attachment modes.
Graph audit_instance(std::uint64_t seed, std::size_t k, std::size_t max_vertices);

}  // namespace dnlap
