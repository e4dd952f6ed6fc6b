#include "dnlap/combinatorial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "dnlap/operators.hpp"

namespace dnlap {

double stoer_wagner_min_cut(const Matrix& weights) {
  const std::size_t n = weights.rows();
  if (n < 2) return 0.0;
  Matrix w = weights;
  std::vector<std::size_t> alive(n);
  for (std::size_t i = 0; i < n; ++i) alive[i] = i;
  double best = std::numeric_limits<double>::infinity();

  while (alive.size() > 1) {
    std::vector<double> key(n, 0.0);
    std::vector<bool> added(n, false);
    std::size_t prev = alive.front();
    std::size_t last = alive.front();
    for (std::size_t step = 0; step < alive.size(); ++step) {
      std::size_t pick = n;
      for (std::size_t v : alive)
        if (!added[v] && (pick == n || key[v] > key[pick])) pick = v;
      added[pick] = true;
      prev = last;
      last = pick;
      for (std::size_t v : alive)
        if (!added[v]) key[v] += w(pick, v);
    }
    best = std::min(best, key[last]);
    // Merge last into prev.
    for (std::size_t v : alive) {
      if (v == prev || v == last) continue;
      w(prev, v) += w(last, v);
      w(v, prev) = w(prev, v);
    }
    alive.erase(std::find(alive.begin(), alive.end(), last));
  }
  return best;
}

std::size_t edge_connectivity(const Graph& g, ConnectivityTarget which) {
  if (!has_unit_weight(g)) throw NotUnitWeight();
  const Graph target = which == ConnectivityTarget::Interior ? interior_subgraph(g) : g;
  if (target.size() < 2) return 0;
  return static_cast<std::size_t>(std::llround(stoer_wagner_min_cut(target.weights())));
}

double path_largest_eigenvalue(std::size_t i) {
  if (i < 1) throw std::invalid_argument("path needs at least one vertex");
  if (i == 1) return 0.0;
  return 2.0 * (1.0 + std::cos(std::numbers::pi / static_cast<double>(i)));
}

double path_dirichlet_value(std::size_t k, double lam) {
  if (k < 1 || !(lam > 0.0)) throw std::invalid_argument("path_dirichlet_value needs k >= 1, lam > 0");
  Matrix w(k + 1, k + 1);
  w(0, 1) = w(1, 0) = lam;
  for (std::size_t j = 1; j < k; ++j) w(j, j + 1) = w(j + 1, j) = 1.0;
  const Graph path(std::vector<double>(k + 1, 1.0), std::move(w), {0});
  const SelfAdjointOperator op = dirichlet_laplacian(path);
  return eigensolve(op).values.front();
}

double friedman_value(std::size_t i, std::size_t order) {
  if (i < 2 || order < i) throw std::invalid_argument("friedman_value needs 2 <= i <= order");
  const std::size_t k = order / i;
  if (order % i != 0)
    return 2.0 * (1.0 - std::cos(std::numbers::pi / static_cast<double>(2 * k + 1)));
  return path_dirichlet_value(k, path_largest_eigenvalue(i));
}

namespace {

void require_unit(const Graph& g) {
  if (!has_unit_weight(g)) throw NotUnitWeight();
}

double fiedler_term(std::size_t e, std::size_t order) {
  return 2.0 * static_cast<double>(e) * (1.0 - std::cos(std::numbers::pi / static_cast<double>(order)));
}

}  // namespace

ComparisonCertificate fiedler_bounds(const Graph& g, const GraphSpectra& s, double tol) {
  require_unit(g);
  if (s.interior_size < 2) return not_applicable(TheoremId::FiedlerType, "|Omega| < 2, no second eigenvalue");
  const double nu2 = s.neumann.values[1];
  const double lambda2 = s.dirichlet.values[1];
  const double s1sq = s.singular.smallest() * s.singular.smallest();
  const double min_degb = *std::min_element(s.boundary_degree.begin(), s.boundary_degree.end());
  const double whole = fiedler_term(edge_connectivity(g), s.vertex_count);
  const double inner = fiedler_term(edge_connectivity(g, ConnectivityTarget::Interior), s.interior_size);

  ComparisonCertificate c;
  c.theorem = TheoremId::FiedlerType;
  add_lower_bound(c, 2, "(1) nu_2>=2e(G)(1-cos(pi/|V|))", nu2, whole);
  add_lower_bound(c, 2, "(2) lambda_2>=2e(G)(1-cos(pi/|V|))+s_1^2", lambda2, whole + s1sq);
  add_lower_bound(c, 2, "(3) nu_2>=2e(Omega)(1-cos(pi/|Omega|))", nu2, inner);
  add_lower_bound(c, 2, "(4) lambda_2>=2e(Omega)(1-cos(pi/|Omega|))+s_1^2", lambda2, inner + s1sq);
  add_lower_bound(c, 2, "(5) lambda_2>=2e(Omega)(1-cos(pi/|Omega|))+min Deg_b", lambda2, inner + min_degb);
  finalize(c, tol);
  return c;
}

ComparisonCertificate fiedler_bounds(const Graph& g, double tol) {
  require_unit(g);
  return fiedler_bounds(g, compute_spectra(g), tol);
}

ComparisonCertificate friedman_bounds(const Graph& g, const GraphSpectra& s, double tol) {
  require_unit(g);
  if (s.interior_size < 2) return not_applicable(TheoremId::FriedmanType, "|Omega| < 2, no second eigenvalue");
  const double s1sq = s.singular.smallest() * s.singular.smallest();
  const double min_degb = *std::min_element(s.boundary_degree.begin(), s.boundary_degree.end());
  const bool interior_connected = component_count(interior_subgraph(g)) == 1;

  ComparisonCertificate c;
  c.theorem = TheoremId::FriedmanType;
  for (std::size_t i = 2; i <= s.interior_size; ++i) {
    const double nu = s.neumann.values[i - 1];
    const double lambda = s.dirichlet.values[i - 1];
    const double whole = friedman_value(i, s.vertex_count);
    add_lower_bound(c, i, "(1) nu_i>=F(|V|)", nu, whole);
    add_lower_bound(c, i, "(2) lambda_i>=F(|V|)+s_1^2", lambda, whole + s1sq);
    if (!interior_connected) continue;
    const double inner = friedman_value(i, s.interior_size);
    add_lower_bound(c, i, "(3) nu_i>=F(|Omega|)", nu, inner);
    add_lower_bound(c, i, "(4) lambda_i>=F(|Omega|)+s_1^2", lambda, inner + s1sq);
    add_lower_bound(c, i, "(5) lambda_i>=F(|Omega|)+min Deg_b", lambda, inner + min_degb);
  }
  if (!interior_connected) c.note = "interior subgraph disconnected: items (3)-(5) not applicable";
  finalize(c, tol);
  return c;
}

ComparisonCertificate friedman_bounds(const Graph& g, double tol) {
  require_unit(g);
  return friedman_bounds(g, compute_spectra(g), tol);
}

}  // namespace dnlap
