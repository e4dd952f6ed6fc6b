#include "dnlap/comparisons.hpp"

#include <algorithm>
#include <cmath>

#include "dnlap/combinatorial.hpp"
#include "dnlap/curvature.hpp"

namespace dnlap {

ComparisonCertificate compare_neumann_laplacian(const GraphSpectra& s, double tol) {
  ComparisonCertificate c;
  c.theorem = TheoremId::NeuVsLap;
  for (std::size_t i = 0; i < s.interior_size; ++i)
    add_lower_bound(c, i + 1, "nu_i>=mu_i", s.neumann.values[i], s.laplacian.values[i]);
  finalize(c, tol);
  return c;
}

ComparisonCertificate compare_dirichlet_interior(const GraphSpectra& s, double tol) {
  ComparisonCertificate c;
  c.theorem = TheoremId::DiriVsInteriorTwoSided;
  const auto [lo, hi] = std::minmax_element(s.boundary_degree.begin(), s.boundary_degree.end());
  for (std::size_t i = 0; i < s.interior_size; ++i)
    add_two_sided(c, i + 1, "mu_i(Omega)+min Deg_b<=lambda_i<=mu_i(Omega)+max Deg_b",
                  s.dirichlet.values[i], s.interior.values[i] + *lo, s.interior.values[i] + *hi);
  finalize(c, tol);
  return c;
}

ComparisonCertificate compare_neumann_interior(const GraphSpectra& s, double tol) {
  ComparisonCertificate c;
  c.theorem = TheoremId::NeuVsInterior;
  for (std::size_t i = 0; i < s.interior_size; ++i)
    add_lower_bound(c, i + 1, "nu_i>=mu_i(Omega)", s.neumann.values[i], s.interior.values[i]);
  finalize(c, tol);
  return c;
}

ComparisonCertificate compare_dirichlet_neumann(const GraphSpectra& s, double tol) {
  ComparisonCertificate c;
  c.theorem = TheoremId::DiriVsNeuTwoSided;
  const double lo = s.singular.smallest() * s.singular.smallest();
  const double hi = s.singular.largest() * s.singular.largest();
  for (std::size_t i = 0; i < s.interior_size; ++i)
    add_two_sided(c, i + 1, "nu_i+s_1^2<=lambda_i<=nu_i+s_max^2", s.dirichlet.values[i],
                  s.neumann.values[i] + lo, s.neumann.values[i] + hi);
  finalize(c, tol);
  return c;
}

ComparisonCertificate compare_laplacian_dirichlet(const GraphSpectra& s, double tol) {
  ComparisonCertificate c;
  c.theorem = TheoremId::LapVsDiri;
  for (std::size_t i = 0; i < s.interior_size; ++i)
    add_lower_bound(c, i + 1, "mu_{i+|B|}>=lambda_i", s.laplacian.values[i + s.boundary_size],
                    s.dirichlet.values[i]);
  finalize(c, tol);
  if (c.all_equal()) {
    c.verdict = Verdict::FailsAt;
    for (std::size_t k = 0; k < c.records.size(); ++k) c.failing.push_back(k);
    c.note = "equality at every index";
  }
  return c;
}

ComparisonCertificate compare_neumann_laplacian(const Graph& g, double tol) {
  return compare_neumann_laplacian(compute_spectra(g), tol);
}
ComparisonCertificate compare_dirichlet_interior(const Graph& g, double tol) {
  return compare_dirichlet_interior(compute_spectra(g), tol);
}
ComparisonCertificate compare_neumann_interior(const Graph& g, double tol) {
  return compare_neumann_interior(compute_spectra(g), tol);
}
ComparisonCertificate compare_dirichlet_neumann(const Graph& g, double tol) {
  return compare_dirichlet_neumann(compute_spectra(g), tol);
}
ComparisonCertificate compare_laplacian_dirichlet(const Graph& g, double tol) {
  return compare_laplacian_dirichlet(compute_spectra(g), tol);
}

std::vector<ComparisonCertificate> run_all(const Graph& g, double tol, const RunOptions& options) {
  const GraphSpectra s = compute_spectra(g);
  std::vector<ComparisonCertificate> out{
      compare_neumann_laplacian(s, tol), compare_dirichlet_interior(s, tol),
      compare_neumann_interior(s, tol), compare_dirichlet_neumann(s, tol),
      compare_laplacian_dirichlet(s, tol)};
  if (options.curvature) {
    for (auto variant : kAllLichnerowiczVariants)
      out.push_back(certify_lichnerowicz(g, s, variant, options.dimension, tol));
  }
  if (options.bounds) {
    if (has_unit_weight(g)) {
      out.push_back(fiedler_bounds(g, s, tol));
      out.push_back(friedman_bounds(g, s, tol));
    } else {
      out.push_back(not_applicable(TheoremId::FiedlerType, "graph does not carry the unit weight"));
      out.push_back(not_applicable(TheoremId::FriedmanType, "graph does not carry the unit weight"));
    }
  }
  return out;
}

}  // namespace dnlap
