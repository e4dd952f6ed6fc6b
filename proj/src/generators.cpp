#include "dnlap/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace dnlap {
namespace {

Graph unit_graph(std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& edges,
                 std::vector<VertexId> boundary) {
  Matrix w(n, n);
  for (auto [x, y] : edges) w(x, y) = w(y, x) = 1.0;
  return Graph(std::vector<double>(n, 1.0), std::move(w), std::move(boundary));
}

}  // namespace

Graph path_graph(std::size_t n, std::vector<VertexId> boundary) {
  std::vector<std::pair<VertexId, VertexId>> e;
  for (VertexId x = 0; x + 1 < n; ++x) e.emplace_back(x, x + 1);
  return unit_graph(n, e, std::move(boundary));
}

Graph cycle_graph(std::size_t n, std::vector<VertexId> boundary) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<std::pair<VertexId, VertexId>> e;
  for (VertexId x = 0; x < n; ++x) e.emplace_back(x, (x + 1) % n);
  return unit_graph(n, e, std::move(boundary));
}

Graph complete_graph(std::size_t n, std::vector<VertexId> boundary) {
  std::vector<std::pair<VertexId, VertexId>> e;
  for (VertexId x = 0; x < n; ++x)
    for (VertexId y = x + 1; y < n; ++y) e.emplace_back(x, y);
  return unit_graph(n, e, std::move(boundary));
}

Graph complete_bipartite_graph(std::size_t a, std::size_t b, std::vector<VertexId> boundary) {
  std::vector<std::pair<VertexId, VertexId>> e;
  for (VertexId x = 0; x < a; ++x)
    for (VertexId y = a; y < a + b; ++y) e.emplace_back(x, y);
  return unit_graph(a + b, e, std::move(boundary));
}

Graph star_graph(std::size_t leaves, std::vector<VertexId> boundary) {
  std::vector<std::pair<VertexId, VertexId>> e;
  for (VertexId x = 1; x <= leaves; ++x) e.emplace_back(0, x);
  return unit_graph(leaves + 1, e, std::move(boundary));
}

Graph relabel(const Graph& g, const std::vector<VertexId>& perm) {
  const std::size_t n = g.size();
  if (perm.size() != n) throw std::invalid_argument("relabel: permutation size mismatch");
  std::vector<double> m(n);
  Matrix w(n, n);
  for (VertexId x = 0; x < n; ++x) {
    m[perm[x]] = g.measure(x);
    for (VertexId y = 0; y < n; ++y) w(perm[x], perm[y]) = g.weight(x, y);
  }
  std::vector<VertexId> b;
  for (VertexId x : g.boundary()) b.push_back(perm[x]);
  return Graph(std::move(m), std::move(w), std::move(b));
}

const char* to_string(WeightModel m) {
  switch (m) {
    case WeightModel::Unit: return "unit";
    case WeightModel::Normalized: return "normalized";
    case WeightModel::LogNormal: return "lognormal";
  }
  return "unknown";
}

const char* to_string(Attachment a) {
  switch (a) {
    case Attachment::Random: return "random";
    case Attachment::Full: return "full";
    case Attachment::SingleNeighbor: return "single";
  }
  return "unknown";
}

bool fit_normalized_weights(Matrix& w, const std::vector<double>& measure, std::size_t max_iterations) {
  const std::size_t n = measure.size();
  std::vector<double> d(n, 1.0);
  auto row = [&](std::size_t x) {
    double s = 0.0;
    for (std::size_t y = 0; y < n; ++y) s += w(x, y) * d[y];
    return s;
  };
  for (std::size_t it = 0; it < max_iterations; ++it) {
    double worst = 0.0;
    for (std::size_t x = 0; x < n; ++x) worst = std::max(worst, std::abs(d[x] * row(x) / measure[x] - 1.0));
    if (worst <= 1e-10) {
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) w(x, y) *= d[x] * d[y];
      // Exact symmetry after scaling.
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y) w(y, x) = w(x, y);
      return true;
    }
    // Damped symmetric update; the geometric mean avoids the bipartite 2-cycle.
    for (std::size_t x = 0; x < n; ++x) d[x] = std::sqrt(d[x] * measure[x] / row(x));
  }
  return false;
}

Graph random_boundary_graph(std::mt19937_64& rng, const RandomGraphOptions& o) {
  if (o.min_vertices < 2 || o.max_vertices < o.min_vertices)
    throw std::invalid_argument("random graph needs 2 <= min_vertices <= max_vertices");
  std::uniform_int_distribution<std::size_t> size_dist(o.min_vertices, o.max_vertices);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::lognormal_distribution<double> lognormal(0.0, o.log_sigma);

  for (;;) {
    const std::size_t n = size_dist(rng);
    std::uniform_int_distribution<std::size_t> nb_dist(1, std::max<std::size_t>(1, n / 2));
    const std::size_t nb = nb_dist(rng);
    const std::size_t no = n - nb;
    // Boundary first, interior after; shuffled at the end.
    Matrix w(n, n);
    for (std::size_t a = nb; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (unit(rng) < o.interior_edge_probability) w(a, b) = w(b, a) = 1.0;
    std::uniform_int_distribution<std::size_t> pick(nb, n - 1);
    for (std::size_t x = 0; x < nb; ++x) {
      switch (o.attachment) {
        case Attachment::Full:
          for (std::size_t y = nb; y < n; ++y) w(x, y) = w(y, x) = 1.0;
          break;
        case Attachment::SingleNeighbor: {
          const std::size_t y = pick(rng);
          w(x, y) = w(y, x) = 1.0;
          break;
        }
        case Attachment::Random: {
          bool any = false;
          for (std::size_t y = nb; y < n; ++y)
            if (unit(rng) < o.attachment_probability) {
              w(x, y) = w(y, x) = 1.0;
              any = true;
            }
          if (!any) {
            const std::size_t y = pick(rng);
            w(x, y) = w(y, x) = 1.0;
          }
          break;
        }
      }
    }
    std::vector<VertexId> boundary(nb);
    std::iota(boundary.begin(), boundary.end(), 0);
    if (component_count(Graph(std::vector<double>(n, 1.0), w)) != 1) continue;
    (void)no;

    std::vector<double> m(n, 1.0);
    if (o.model != WeightModel::Unit) {
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y)
          if (w(x, y) > 0.0) w(x, y) = w(y, x) = lognormal(rng);
      for (double& mx : m) mx = lognormal(rng);
      if (o.model == WeightModel::Normalized && !fit_normalized_weights(w, m)) continue;
    }

    Graph g(std::move(m), std::move(w), std::move(boundary));
    if (validate(g)) continue;
    if (!o.shuffle) return g;
    std::vector<VertexId> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return relabel(g, perm);
  }
}

Graph audit_instance(std::uint64_t seed, std::size_t k, std::size_t max_vertices) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(k >> 32)};
  std::mt19937_64 rng(seq);
  RandomGraphOptions o;
  o.max_vertices = std::max<std::size_t>(max_vertices, o.min_vertices);
  constexpr WeightModel models[] = {WeightModel::Unit, WeightModel::Normalized, WeightModel::LogNormal};
  constexpr Attachment modes[] = {Attachment::Random, Attachment::Random, Attachment::Full,
                                  Attachment::SingleNeighbor};
  o.model = models[k % 3];
  o.attachment = modes[(k / 3) % 4];
  std::uniform_real_distribution<double> p(0.2, 0.9);
  o.interior_edge_probability = p(rng);
  return random_boundary_graph(rng, o);
}

}  // namespace dnlap
