// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dnlap/combinatorial.hpp"
#include "dnlap/comparisons.hpp"
#include "dnlap/curvature.hpp"
#include "dnlap/generators.hpp"
#include "dnlap/operators.hpp"
#include "dnlap/rigidity.hpp"
#include "dnlap/spectra.hpp"
#include "oracle/oracle.hpp"
#include "support.hpp"

using namespace dnlap;

namespace {

constexpr std::uint64_t kSeed = 42;
constexpr std::size_t kCorpus = 200;
constexpr std::size_t kMaxVertices = 12;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << what;
    pass = pass && ok;
  }
};

const std::vector<Graph>& corpus() {
  static const std::vector<Graph> graphs = [] {
    std::vector<Graph> out;
    for (std::size_t k = 0; k < kCorpus; ++k) out.push_back(audit_instance(kSeed, k, kMaxVertices));
    return out;
  }();
  return graphs;
}

std::vector<ComparisonCertificate> five(const GraphSpectra& s, double tol) {
  return {compare_neumann_laplacian(s, tol), compare_dirichlet_interior(s, tol), compare_neumann_interior(s, tol),
          compare_dirichlet_neumann(s, tol), compare_laplacian_dirichlet(s, tol)};
}

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

void criterion1(Outcome& o) {
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (std::size_t k = 0; k < corpus().size(); ++k) {
    const GraphSpectra s = compute_spectra(corpus()[k]);
    const double scale = std::max(1.0, s.spectral_radius());
    for (const auto& c : five(s, 0.0)) {
      // LapVsDiri is forced to fail only when every index is equal; that is criterion 4.
      for (const auto& r : c.records) {
        worst = std::min(worst, r.margin / scale);
        o.require(r.margin >= -1e-9 * scale, "instance " + std::to_string(k) + " " + to_string(c.theorem));
      }
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(secs < 30.0, "runtime above 30 s");
  o.detail << kCorpus << " graphs, worst relative margin " << worst << ", " << secs << " s";
}

void criterion2(Outcome& o) {
  const GraphSpectra s = compute_spectra(fixtures::p3_two_ends());
  const double e = 1e-12;
  o.require(close(s.laplacian.values[0], 0, e) && close(s.laplacian.values[1], 1, e) && close(s.laplacian.values[2], 3, e),
            "mu != {0,1,3}");
  o.require(close(s.dirichlet.values[0], 2, e), "lambda_1 != 2");
  o.require(close(s.neumann.values[0], 0, e), "nu_1 != 0");
  const double s1 = s.singular.smallest() * s.singular.smallest();
  o.require(close(s1, 2, e), "s_1^2 != 2");
  o.require(close(s.dirichlet.values[0], s.neumann.values[0] + s1, e), "lambda_1 != nu_1 + s_1^2");
  o.detail << "mu={0,1,3}, lambda_1=2, nu_1=0, s_1^2=2 to 1e-12";
}

void criterion3(Outcome& o) {
  const Graph g = fixtures::k22();
  const GraphSpectra s = compute_spectra(g);
  const double want_mu[] = {0, 2, 2, 4};
  for (std::size_t i = 0; i < 4; ++i) o.require(close(s.laplacian.values[i], want_mu[i], 1e-12), "mu");
  o.require(close(s.dirichlet.values[0], 2, 1e-12) && close(s.dirichlet.values[1], 2, 1e-12), "lambda");
  const auto pattern = laplacian_dirichlet_pattern(s);
  o.require(pattern.strict == std::vector<std::size_t>{2}, "LapVsDiri pattern is not equal-except-2");
  const auto cert = compare_laplacian_dirichlet(s, 1e-12);
  o.require(cert.records[0].equality && !cert.records[1].equality, "equality flags");
  const auto unit = check_corollary_unit_weight(g);
  o.require(unit.conclusion && unit.observed && unit.consistent, "unit-weight corollary");
  const auto neu = check_neumann_laplacian_rigidity(g);
  o.require(neu.conclusion && neu.observed, "Neumann vs Laplacian rigidity");
  for (std::size_t i = 0; i < 2; ++i) o.require(close(s.neumann.values[i], s.laplacian.values[i], 1e-10), "nu_i != mu_i");
  o.detail << "mu={0,2,2,4}, lambda={2,2}, equality except j=2, corollary and rigidity confirmed";
}

void criterion4(Outcome& o) {
  std::size_t checked = 0;
  auto check = [&](const Graph& g, const std::string& name) {
    const auto c = compare_laplacian_dirichlet(compute_spectra(g), kEqualityTolerance);
    bool all = true;
    for (const auto& r : c.records) all = all && std::abs(r.margin) <= c.tolerance;
    o.require(!all, name + " has full equality");
    ++checked;
  };
  for (std::size_t k = 0; k < corpus().size(); ++k) check(corpus()[k], "instance " + std::to_string(k));
  for (std::size_t j = 1; j <= 3; ++j)
    for (std::size_t b = 1; b <= 3; ++b)
      for (std::size_t n = j; n <= 4; ++n) {
        check(laplacian_dirichlet_recipe({j, b, n, 1.0, 1.0}), "dirichlet recipe");
        check(neumann_equality_recipe({j, b, n, 1.0, 1.0}), "neumann recipe");
      }
  check(fixtures::k22(), "K22");
  check(fixtures::p3_two_ends(), "P3");
  o.detail << checked << " graphs, none equal at every index";
}

struct Biconditional {
  std::string name;
  std::function<RigidityReport(const Graph&)> check;
  std::function<Graph(std::mt19937_64&)> positive;
  std::function<Graph(std::mt19937_64&, const Graph&)> negative;
};

Graph perturb_boundary_edge(std::mt19937_64&, const Graph& g) {
  const auto [x, y] = fixtures::first_boundary_edge(g);
  return fixtures::scale_edge(g, x, y, 1.1);
}

void criterion5(Outcome& o) {
  const std::vector<Biconditional> theorems = {
      {"DiriVsInterior", [](const Graph& g) { return check_dirichlet_interior_rigidity(g); },
       [](std::mt19937_64& r) { return fixtures::constant_boundary_degree(r); }, perturb_boundary_edge},
      {"NeuVsInterior", [](const Graph& g) { return check_neumann_interior_rigidity(g); },
       [](std::mt19937_64& r) { return fixtures::pendant_boundary(r, false); },
       [](std::mt19937_64& r, const Graph& g) {
         // Give the first boundary vertex a second interior neighbour.
         const auto [x, y] = fixtures::first_boundary_edge(g);
         VertexId z = y;
         while (z == y) z = g.interior()[std::uniform_int_distribution<std::size_t>(0, g.interior().size() - 1)(r)];
         return fixtures::with_weight(g, x, z, std::uniform_real_distribution<double>(0.5, 2.0)(r));
       }},
      {"DiriVsNeu", [](const Graph& g) { return check_dirichlet_neumann_rigidity(g); },
       [](std::mt19937_64& r) { return fixtures::pendant_boundary(r, true); }, perturb_boundary_edge},
      {"NeuVsLap", [](const Graph& g) { return check_neumann_laplacian_rigidity(g); },
       [](std::mt19937_64& r) {
         RecipeParams p;
         p.interior = std::uniform_int_distribution<std::size_t>(2, 5)(r);
         p.components = std::uniform_int_distribution<std::size_t>(1, p.interior)(r);
         p.boundary = std::uniform_int_distribution<std::size_t>(1, 4)(r);
         p.rho = std::uniform_real_distribution<double>(0.3, 3.0)(r);
         p.scale = std::uniform_real_distribution<double>(0.1, 1.0)(r);
         return fixtures::shuffled(r, neumann_equality_recipe(p));
       },
       [](std::mt19937_64& r, const Graph& g) {
         if (std::bernoulli_distribution(0.5)(r)) return perturb_boundary_edge(r, g);
         // Same boundary structure, interior weights pushed 50% past the admissible bound.
         const double mu_max = eigensolve(interior_laplacian(g)).values.back();
         if (mu_max <= 0.0) return perturb_boundary_edge(r, g);
         const double rho = detect_rho_factorization(g).rho.front();
         const Volumes v = volumes(g);
         const double bound = g.boundary().size() == 1 ? rho * v.interior : rho * (v.interior - v.boundary);
         Matrix w = g.weights();
         for (VertexId a : g.interior())
           for (VertexId b : g.interior()) w(a, b) *= 1.5 * bound / mu_max;
         return Graph(g.measures(), w, g.boundary());
       }},
  };
  std::mt19937_64 rng(kSeed);
  for (const auto& t : theorems) {
    std::size_t correct = 0;
    for (int k = 0; k < 20; ++k) {
      const Graph pos = t.positive(rng);
      const RigidityReport rp = t.check(pos);
      if (rp.conclusion && rp.observed && rp.consistent) ++correct;
      const Graph neg = t.negative(rng, pos);
      const RigidityReport rn = t.check(neg);
      if (!rn.conclusion && !rn.observed && rn.consistent) ++correct;
    }
    o.require(correct == 40, t.name + " " + std::to_string(correct) + "/40; ");
    o.detail << t.name << " " << correct << "/40  ";
  }
}

void criterion6(Outcome& o) {
  const std::size_t params[3][3] = {{1, 2, 3}, {2, 3, 2}, {3, 3, 3}};
  for (const auto& p : params) {
    const RecipeParams rp{p[0], p[1], p[2], 1.25, 0.5};
    const auto neu = compare_neumann_laplacian(compute_spectra(neumann_equality_recipe(rp)), 1e-9);
    o.require(neu.all_equal(), "neumann recipe not all-equal");
    RecipeParams dp = rp;
    dp.scale = 1.5;
    const GraphSpectra ds = compute_spectra(laplacian_dirichlet_recipe(dp));
    const auto lap = compare_laplacian_dirichlet(ds, 1e-9);
    for (const auto& r : lap.records)
      o.require(r.equality == (r.index != p[0]), "dirichlet recipe pattern at i=" + std::to_string(r.index));
    const auto pattern = laplacian_dirichlet_pattern(ds, 1e-9);
    o.require(pattern.strict == std::vector<std::size_t>{p[0]}, "dirichlet recipe strict set");
  }
  o.detail << "(j,|B|,|Omega|) in {(1,2,3),(2,3,2),(3,3,3)}: all-equal and equal-except-j";
}

void criterion7(Outcome& o) {
  std::size_t applicable = 0;
  for (std::size_t k = 0; k < corpus().size(); ++k) {
    const Graph& g = corpus()[k];
    const GraphSpectra s = compute_spectra(g);
    for (auto v : kAllLichnerowiczVariants)
      for (double n : {2.0, double(INFINITY)}) {
        const auto c = certify_lichnerowicz(g, s, v, n, 1e-9);
        if (c.verdict == Verdict::NotApplicable) continue;
        ++applicable;
        for (const auto& r : c.records)
          o.require(r.margin >= -1e-9 * std::max(1.0, s.spectral_radius()),
                    "instance " + std::to_string(k) + " " + to_string(v));
      }
  }
  const double edge = ollivier_curvature(path_graph(2), 0, 1);
  const double p3 = ollivier_curvature(path_graph(3), 0, 1);
  o.require(close(edge, 2.0, 1e-9) && close(edge, oracle::ollivier_bruteforce(path_graph(2), 0, 1), 1e-9), "edge kappa");
  o.require(close(p3, 1.0, 1e-9) && close(p3, oracle::ollivier_bruteforce(path_graph(3), 0, 1), 1e-9), "P3 kappa");
  // K(x, n) is nondecreasing in n (CD(K, n) implies CD(K, n') for n' > n).
  // The nonincreasing direction cannot hold: count the vertices refuting it.
  const double grid[] = {2, 3, 5, 10, 1e6, INFINITY};
  std::size_t vertices = 0;
  std::size_t refuting = 0;
  for (std::size_t k = 0; k < 20; ++k) {
    const Graph& g = corpus()[k];
    for (VertexId x = 0; x < g.size(); ++x) {
      double prev = -INFINITY;
      bool strict_rise = false;
      for (double n : grid) {
        const double v = bakry_emery_at(g, x, n);
        o.require(v >= prev - 1e-9 * std::max(1.0, std::abs(v)), "BE decreases in n");
        strict_rise = strict_rise || v > prev + 1e-9 * std::max(1.0, std::abs(v));
        prev = v;
      }
      ++vertices;
      refuting += strict_rise && std::isfinite(prev);
    }
  }
  const double e2 = bakry_emery_at(path_graph(2), 0, 2.0);
  o.require(close(e2, 1.0, 1e-9) && close(bakry_emery_at(path_graph(2), 0, INFINITY), 2.0, 1e-9), "edge BE values");
  o.detail << applicable << " applicable certificates hold; kappa(edge)=2, kappa(P3)=1 match the LP oracle; "
           << "BE nondecreasing in n at " << vertices << " vertices of 20 graphs (nonincreasing as literally stated "
           << "is refuted at " << refuting << " of them, e.g. single edge K(x,2)=1 < K(x,inf)=2)";
}

void criterion8(Outcome& o) {
  for (std::size_t n = 3; n <= 8; ++n) {
    const Graph p = path_graph(n, {0});
    for (const auto& c : {fiedler_bounds(p), friedman_bounds(p)}) {
      o.require(c.verdict != Verdict::FailsAt, "P" + std::to_string(n) + " " + to_string(c.theorem));
      for (const auto& r : c.records) o.require(r.margin >= -1e-12, "negative margin");
    }
    const double mu2 = eigensolve(full_laplacian(path_graph(n))).values[1];
    o.require(close(mu2, 2 * (1 - std::cos(M_PI / static_cast<double>(n))), 1e-10), "Fiedler bound not tight");
  }
  std::size_t compared = 0;
  for (const Graph& g : corpus()) {
    if (g.size() > 8 || !has_unit_weight(g)) continue;
    o.require(edge_connectivity(g) == oracle::cut_bruteforce(g), "edge connectivity");
    ++compared;
  }
  o.require(compared > 0, "no small unit-weight graphs in the corpus");
  o.detail << "P3..P8 bounds hold, Fiedler bound tight on paths, " << compared << " connectivity checks";
}

void criterion9(Outcome& o) {
  std::mt19937_64 rng(kSeed);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + t % 6;
    std::vector<double> m;
    const Matrix a = fixtures::random_self_adjoint(rng, n, m);
    const auto want = oracle::eigen_bruteforce(a, m);
    const auto got = eigensolve(a, m).values;
    for (std::size_t i = 0; i < n; ++i)
      o.require(std::abs(got[i] - want[i]) <= 1e-7 * std::max(1.0, std::abs(want[i])), "eigensolver vs oracle");
  }
  std::normal_distribution<double> normal;
  auto random_vector = [&](std::size_t n) {
    Vector v(n);
    for (double& x : v) x = normal(rng);
    return v;
  };
  for (const Graph& g : corpus()) {
    const auto dir = dirichlet_laplacian(g);
    const auto neu = neumann_laplacian(g);
    const double scale = std::max(1.0, max_abs(dir.matrix));
    Matrix interior_plus = interior_laplacian(g).matrix;
    const auto degb = boundary_degrees(g);
    for (std::size_t i = 0; i < degb.size(); ++i) interior_plus(i, i) += degb[i];
    o.require(max_abs_difference(dir.matrix, interior_plus) <= 1e-10 * scale, "Dirichlet identity");
    o.require(max_abs_difference(dir.matrix - neu.matrix, boundary_coupling(g)) <= 1e-10 * scale, "coupling identity");
    for (int t = 0; t < 100; ++t) {
      const Vector u = random_vector(g.size());
      const Vector v = random_vector(g.size());
      const Vector lap = apply_negative_laplacian(g, u);
      double lhs = 0.0;
      for (VertexId y : g.interior()) lhs -= lap[y] * v[y] * g.measure(y);
      const Vector dn = normal_derivative(g, u);
      double rhs = -dirichlet_form(g, u, v);
      for (std::size_t i = 0; i < g.boundary().size(); ++i)
        rhs += dn[i] * v[g.boundary()[i]] * g.measure(g.boundary()[i]);
      o.require(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(dirichlet_form(g, u, v))), "Green's formula");
    }
  }
  o.detail << "100 oracle matrices, identities and Green's formula on " << corpus().size() << " graphs";
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, void (*)(Outcome&)>> criteria = {
      {"comparison audit", criterion1},        {"P3 exact fixture", criterion2},
      {"K22 exact fixture", criterion3},       {"no full equality", criterion4},
      {"rigidity biconditionals", criterion5}, {"recipe fixtures", criterion6},
      {"curvature corollaries", criterion7},   {"combinatorial bounds", criterion8},
      {"solver hygiene", criterion9},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " exception: " << e.what();
    }
    std::printf("[%s] criterion %zu (%s): %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.str().c_str());
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
