#include <doctest.h>

#include <cmath>
#include <random>

#include "dnlap/comparisons.hpp"
#include "dnlap/generators.hpp"
#include "dnlap/operators.hpp"
#include "dnlap/spectra.hpp"
#include "oracle/oracle.hpp"
#include "support.hpp"

using namespace dnlap;

TEST_CASE("path and complete bipartite spectra") {
  const auto p = eigensolve(full_laplacian(path_graph(3)));
  for (std::size_t k = 0; k < 3; ++k)
    CHECK(p.values[k] == doctest::Approx(2 * (1 - std::cos(k * M_PI / 3))).epsilon(1e-12));
  const auto k = eigensolve(full_laplacian(complete_bipartite_graph(2, 2)));
  const double want[] = {0, 2, 2, 4};
  for (std::size_t i = 0; i < 4; ++i) CHECK(k.values[i] == doctest::Approx(want[i]).epsilon(1e-12));
  const auto o = oracle::eigen_bruteforce(full_laplacian(complete_bipartite_graph(2, 2)).matrix, {1, 1, 1, 1});
  for (std::size_t i = 0; i < 4; ++i) CHECK(o[i] == doctest::Approx(want[i]).epsilon(1e-9));
}

TEST_CASE("zero operator") {
  const auto s = eigensolve(Matrix(5, 5), std::vector<double>(5, 2.0));
  for (double v : s.values) CHECK(v == 0.0);
}

TEST_CASE("spectrum invariants on random operators") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 1 + t % 9;
    std::vector<double> m;
    const Matrix a = fixtures::random_self_adjoint(rng, n, m);
    const Spectrum s = eigensolve(a, m);
    const SpectrumDefects d = spectrum_defects(a, s);
    CHECK(d.ascending);
    CHECK(d.orthonormality <= 1e-10);
    CHECK(d.residual <= 1e-9);
    double sum = 0.0;
    for (double v : s.values) sum += v;
    CHECK(std::abs(sum - trace(a)) <= 1e-9 * std::max(1.0, std::abs(trace(a))));
  }
}

TEST_CASE("Jacobi convergence is checked") {
  Matrix bad(2, 2);
  bad(0, 0) = NAN;
  CHECK_THROWS_AS(jacobi_eigen(bad), ConvergenceError);
}

TEST_CASE("weighted singular values") {
  const auto a = weighted_singular_values(fixtures::p3_two_ends());
  REQUIRE(a.values.size() == 1);
  CHECK(a.values[0] == doctest::Approx(std::sqrt(2.0)));

  const auto b = weighted_singular_values(fixtures::p3_one_end());
  CHECK(b.values[0] == doctest::Approx(0.0).epsilon(1e-7));
  CHECK(b.values[1] == doctest::Approx(1.0));

  // v3 of P5 sees no boundary vertex.
  CHECK(weighted_singular_values(path_graph(5, {0, 4})).smallest() < 1e-7);

  for (std::size_t k = 0; k < 30; ++k) {
    const Graph g = audit_instance(21, k, 12);
    const auto sv = weighted_singular_values(g);
    const auto coupling = eigensolve(boundary_coupling(g), g.interior_measures());
    REQUIRE(sv.values.size() == g.interior().size());
    for (std::size_t i = 0; i < sv.values.size(); ++i)
      CHECK(std::abs(sv.values[i] * sv.values[i] - coupling.values[i]) <= 1e-9 * std::max(1.0, coupling.values.back()));
  }
}

TEST_CASE("Dirichlet, Neumann and singular values are consistent") {
  for (std::size_t k = 0; k < 40; ++k) {
    const GraphSpectra s = compute_spectra(audit_instance(22, k, 12));
    const double tol = 1e-9 * std::max(1.0, s.spectral_radius());
    for (std::size_t i = 0; i < s.interior_size; ++i) {
      CHECK(s.dirichlet.values[i] >= s.neumann.values[i] + s.singular.smallest() * s.singular.smallest() - tol);
      CHECK(s.dirichlet.values[i] <= s.neumann.values[i] + s.singular.largest() * s.singular.largest() + tol);
    }
    CHECK(std::abs(s.laplacian.values[0]) <= tol);
    CHECK(std::abs(s.neumann.values[0]) <= tol);
    CHECK(s.dirichlet.values[0] > tol);
  }
}

TEST_CASE("eigensolver matches the oracle on tiny operators") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + t % 6;
    std::vector<double> m;
    const Matrix a = fixtures::random_self_adjoint(rng, n, m);
    const auto want = oracle::eigen_bruteforce(a, m);
    const auto got = eigensolve(a, m).values;
    for (std::size_t i = 0; i < n; ++i) CHECK(got[i] == doctest::Approx(want[i]).epsilon(1e-7));
  }
}
