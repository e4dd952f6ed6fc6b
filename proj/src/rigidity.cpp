#include "dnlap/rigidity.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "dnlap/comparisons.hpp"
#include "dnlap/operators.hpp"

namespace dnlap {
namespace {

double relative_spread(const std::vector<double>& v) {
  if (v.empty()) return 0.0;
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  return (*hi - *lo) / std::max(1.0, std::abs(*hi));
}

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)}); }

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(10);
  os << x;
  return os.str();
}

std::size_t interior_neighbor_count(const Graph& g, VertexId x) {
  std::size_t count = 0;
  for (VertexId y : g.interior())
    if (g.weight(x, y) > 0.0) ++count;
  return count;
}

RigidityCondition one_interior_neighbor(const Graph& g) {
  RigidityCondition c{"every boundary vertex has exactly one interior neighbour", true, ""};
  for (VertexId x : g.boundary()) {
    const std::size_t k = interior_neighbor_count(g, x);
    if (k != 1) {
      c.holds = false;
      c.witness = "vertex " + std::to_string(x) + " has " + std::to_string(k) + " interior neighbours";
      break;
    }
  }
  return c;
}

RigidityCondition factorization_condition(const RhoFactorization& f) {
  RigidityCondition c{"w_xy = rho_x m_x m_y on B x Omega", f.holds, ""};
  if (f.missing_edge)
    c.witness = "no edge between " + std::to_string(f.missing_edge->first) + " and " +
                std::to_string(f.missing_edge->second);
  else
    c.witness = "residual " + fmt(f.residual);
  return c;
}

bool bipartite_attachment(const Graph& g) {
  for (VertexId x : g.boundary())
    for (VertexId y : g.interior())
      if (g.weight(x, y) <= 0.0) return false;
  return true;
}

bool interior_edgeless(const Graph& g) {
  for (VertexId y : g.interior())
    for (VertexId z : g.interior())
      if (g.weight(y, z) > 0.0) return false;
  return true;
}

bool interior_complete(const Graph& g) {
  for (VertexId y : g.interior())
    for (VertexId z : g.interior())
      if (y != z && g.weight(y, z) <= 0.0) return false;
  return true;
}

double boundary_rho_sum(const Graph& g, const RhoFactorization& f) {
  double d = 0.0;
  for (std::size_t k = 0; k < g.boundary().size(); ++k) d += f.rho[k] * g.measure(g.boundary()[k]);
  return d;
}

// min over f with <f, 1>_B = 0 of the quadratic form
// <rho f, f>_B - t/V_Omega <f, f>_B - c <rho, f>_B^2, in sqrt(m) coordinates.
double constrained_min_eigenvalue(const Graph& g, const RhoFactorization& f, double t, double v_omega,
                                  double c) {
  const auto& b = g.boundary();
  const std::size_t k = b.size();
  Vector root(k);
  Vector r(k);
  double norm = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    root[i] = std::sqrt(g.measure(b[i]));
    r[i] = f.rho[i] * root[i];
    norm += g.measure(b[i]);
  }
  Matrix q(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    q(i, i) = f.rho[i] - t / v_omega;
    for (std::size_t j = 0; j < k; ++j) q(i, j) -= c * r[i] * r[j];
  }
  Matrix p = Matrix::identity(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) p(i, j) -= root[i] * root[j] / norm;
  return jacobi_eigen(p * q * p).values.front() / std::max(1.0, max_abs(q));
}

RigidityReport evaluated(RigidityId id) {
  RigidityReport r;
  r.id = id;
  r.status = RigidityStatus::Evaluated;
  return r;
}

bool all_hold(const std::vector<RigidityCondition>& cs) {
  return std::all_of(cs.begin(), cs.end(), [](const RigidityCondition& c) { return c.holds; });
}

}  // namespace

const char* to_string(RigidityId id) {
  switch (id) {
    case RigidityId::NeuVsLap: return "NeuVsLap";
    case RigidityId::DiriVsInterior: return "DiriVsInterior";
    case RigidityId::NeuVsInterior: return "NeuVsInterior";
    case RigidityId::DiriVsNeu: return "DiriVsNeu";
    case RigidityId::LapVsDiri: return "LapVsDiri";
    case RigidityId::UnitWeightCorollary: return "UnitWeightCorollary";
    case RigidityId::NormalizedCorollary: return "NormalizedCorollary";
  }
  return "Unknown";
}

std::optional<RigidityId> rigidity_from_string(const std::string& name) {
  for (RigidityId id : {RigidityId::NeuVsLap, RigidityId::DiriVsInterior, RigidityId::NeuVsInterior,
                        RigidityId::DiriVsNeu, RigidityId::LapVsDiri, RigidityId::UnitWeightCorollary,
                        RigidityId::NormalizedCorollary})
    if (name == to_string(id)) return id;
  // Accept the certificate names for the two-sided theorems as well.
  if (name == "DiriVsInteriorTwoSided") return RigidityId::DiriVsInterior;
  if (name == "DiriVsNeuTwoSided") return RigidityId::DiriVsNeu;
  return std::nullopt;
}

const char* to_string(RigidityStatus s) {
  switch (s) {
    case RigidityStatus::Evaluated: return "Evaluated";
    case RigidityStatus::UnsupportedPattern: return "UnsupportedPattern";
    case RigidityStatus::NotApplicable: return "NotApplicable";
  }
  return "Unknown";
}

RhoFactorization detect_rho_factorization(const Graph& g, double tol) {
  RhoFactorization f;
  const auto& b = g.boundary();
  const auto& omega = g.interior();
  for (VertexId x : b)
    for (VertexId y : omega)
      if (g.weight(x, y) <= 0.0) {
        f.missing_edge = std::make_pair(x, y);
        return f;
      }
  double max_weight = 0.0;
  for (VertexId x : b) {
    double sum = 0.0;
    for (VertexId y : omega) {
      sum += g.weight(x, y) / (g.measure(x) * g.measure(y));
      max_weight = std::max(max_weight, g.weight(x, y));
    }
    f.rho.push_back(sum / static_cast<double>(omega.size()));
  }
  for (std::size_t k = 0; k < b.size(); ++k)
    for (VertexId y : omega)
      f.residual = std::max(f.residual,
                            std::abs(g.weight(b[k], y) - f.rho[k] * g.measure(b[k]) * g.measure(y)));
  f.holds = f.residual <= tol * max_weight;
  f.constant = f.holds && relative_spread(f.rho) <= tol;
  return f;
}

LapDiriPattern laplacian_dirichlet_pattern(const GraphSpectra& s, double tol) {
  const ComparisonCertificate c = compare_laplacian_dirichlet(s, tol);
  LapDiriPattern p;
  for (const IndexRecord& r : c.records)
    if (!r.equality) p.strict.push_back(r.index);
  return p;
}

SharedEigenfunction shared_eigenfunction(const Graph& g, const GraphSpectra& s, std::size_t index,
                                         double tol) {
  SharedEigenfunction w;
  w.index = index;
  const double target = s.neumann.values.at(index - 1);
  w.eigenvalue = target;
  const double scale = std::max(1.0, s.spectral_radius());
  std::vector<std::size_t> space;
  for (std::size_t k = 0; k < s.neumann.size(); ++k)
    if (std::abs(s.neumann.values[k] - target) <= tol * scale) space.push_back(k);

  const BoundaryMaps maps = boundary_maps(g);
  const std::size_t n_omega = s.interior_size;
  // Columns of A_Omega E, with E the eigenspace basis.
  Matrix image(maps.to_boundary.rows(), space.size());
  for (std::size_t c = 0; c < space.size(); ++c) {
    const Vector col = maps.to_boundary * std::span<const double>(s.neumann.vectors[space[c]]);
    for (std::size_t r = 0; r < col.size(); ++r) image(r, c) = col[r];
  }
  const SymmetricEigen gram = jacobi_eigen(image.transposed() * image);
  Vector v(n_omega, 0.0);
  for (std::size_t c = 0; c < space.size(); ++c)
    for (std::size_t y = 0; y < n_omega; ++y) v[y] += gram.vectors(c, 0) * s.neumann.vectors[space[c]][y];
  const double vnorm = std::sqrt(dot(v, v));
  const Vector av = maps.to_boundary * std::span<const double>(v);
  w.residual = vnorm > 0.0 ? std::sqrt(dot(av, av)) / vnorm : INFINITY;
  w.u = zero_extension(g, v);
  // Confirm it is a Laplacian eigenfunction as well.
  const Vector lu = apply_negative_laplacian(g, w.u);
  double defect = 0.0;
  for (std::size_t x = 0; x < lu.size(); ++x) defect = std::max(defect, std::abs(lu[x] - target * w.u[x]));
  // An equality met only to within tol leaves residuals of order sqrt(tol).
  const double allowed = std::sqrt(10.0 * tol * scale);
  w.found = w.residual <= allowed && defect <= allowed * std::max(1.0, vnorm);
  return w;
}

RigidityReport check_neumann_laplacian_rigidity(const Graph& g, double tol) {
  RigidityReport r = evaluated(RigidityId::NeuVsLap);
  const GraphSpectra s = compute_spectra(g);
  const ComparisonCertificate cert = compare_neumann_laplacian(s, tol);
  r.observed = cert.all_equal();
  const RhoFactorization f = detect_rho_factorization(g, tol);
  r.conditions.push_back(factorization_condition(f));

  RigidityCondition second{"interior spectral bound", false, ""};
  if (s.interior_size == 1) {
    second.holds = true;
    second.witness = "vacuous: |Omega| = 1";
  } else if (!f.holds) {
    second.witness = "needs the factorization";
  } else {
    const Volumes v = volumes(g);
    const double mu_max = s.interior.values.back();
    if (f.constant) {
      const double rho = std::accumulate(f.rho.begin(), f.rho.end(), 0.0) / static_cast<double>(f.rho.size());
      // With a single boundary vertex the bound is rho V_Omega.
      const double bound = s.boundary_size == 1 ? rho * v.interior : rho * (v.interior - v.boundary);
      second.name = s.boundary_size == 1 ? "mu_max(Omega) <= rho V_Omega" : "mu_max(Omega) <= rho (V_Omega - V_B)";
      second.holds = mu_max <= bound + tol * std::max(1.0, std::abs(bound));
      second.witness = "mu_max(Omega) = " + fmt(mu_max) + ", bound = " + fmt(bound);
    } else {
      const double d = boundary_rho_sum(g, f);
      const double gap = v.interior * d - v.boundary * mu_max;
      const double scale = std::max({1.0, v.interior * d, v.boundary * mu_max});
      RigidityCondition strict{"mu_max(Omega) < (V_Omega / V_B) Deg_b", gap > tol * scale,
                               "V_Omega Deg_b - V_B mu_max = " + fmt(gap)};
      r.conditions.push_back(strict);
      second.name = "quadratic form on mean-zero boundary functions is nonnegative";
      if (strict.holds) {
        const double min_eig = constrained_min_eigenvalue(g, f, mu_max + d, v.interior, v.total / gap);
        second.holds = min_eig >= -tol;
        second.witness = "relative minimum eigenvalue " + fmt(min_eig);
      } else {
        second.witness = "needs the strict bound";
      }
    }
  }
  r.conditions.push_back(second);
  r.conclusion = all_hold(r.conditions);
  r.consistent = r.conclusion == r.observed;

  for (const IndexRecord& rec : cert.records)
    if (rec.index >= 2 && rec.equality) r.witnesses.push_back(shared_eigenfunction(g, s, rec.index, tol));
  return r;
}

RigidityReport check_dirichlet_interior_rigidity(const Graph& g, double tol) {
  RigidityReport r = evaluated(RigidityId::DiriVsInterior);
  const GraphSpectra s = compute_spectra(g);
  r.observed = compare_dirichlet_interior(s, tol).all_equal();
  const double spread = relative_spread(s.boundary_degree);
  r.conditions.push_back({"Deg_b is constant on Omega", spread <= tol, "relative spread " + fmt(spread)});
  r.conclusion = all_hold(r.conditions);
  r.consistent = r.conclusion == r.observed;
  return r;
}

RigidityReport check_neumann_interior_rigidity(const Graph& g, double tol) {
  RigidityReport r = evaluated(RigidityId::NeuVsInterior);
  const GraphSpectra s = compute_spectra(g);
  r.observed = compare_neumann_interior(s, tol).all_equal();
  r.conditions.push_back(one_interior_neighbor(g));
  r.conclusion = all_hold(r.conditions);
  r.consistent = r.conclusion == r.observed;
  return r;
}

RigidityReport check_dirichlet_neumann_rigidity(const Graph& g, double tol) {
  RigidityReport r = evaluated(RigidityId::DiriVsNeu);
  const GraphSpectra s = compute_spectra(g);
  r.observed = compare_dirichlet_neumann(s, tol).all_equal();
  r.conditions.push_back(one_interior_neighbor(g));
  std::vector<double> q;
  for (VertexId z : g.interior()) {
    double total = 0.0;
    for (VertexId x : g.boundary()) {
      if (g.weight(x, z) <= 0.0) continue;
      double row = 0.0;
      for (VertexId y : g.interior()) row += g.weight(x, y);
      total += g.weight(x, z) * g.weight(x, z) / (g.measure(z) * row);
    }
    q.push_back(total);
  }
  const double spread = relative_spread(q);
  r.conditions.push_back({"sum_x w_xz^2 / (m_z sum_y w_xy) is constant on Omega", spread <= tol,
                          "relative spread " + fmt(spread)});
  r.conclusion = all_hold(r.conditions);
  r.consistent = r.conclusion == r.observed;
  return r;
}

RigidityReport check_laplacian_dirichlet_rigidity(const Graph& g, double tol) {
  RigidityReport r = evaluated(RigidityId::LapVsDiri);
  const GraphSpectra s = compute_spectra(g);
  const LapDiriPattern pattern = laplacian_dirichlet_pattern(s, tol);
  const RhoFactorization f = detect_rho_factorization(g, tol);
  const std::size_t components = component_count(interior_subgraph(g));
  const Volumes v = volumes(g);
  r.observed = pattern.except_one();

  if (f.constant) {
    const std::size_t j = pattern.except_one() ? pattern.strict.front() : components;
    r.exceptional_index = j;
    const double rho = std::accumulate(f.rho.begin(), f.rho.end(), 0.0) / static_cast<double>(f.rho.size());
    r.conditions.push_back(factorization_condition(f));
    r.conditions.push_back({"interior has j components", components == j,
                            std::to_string(components) + " components, j = " + std::to_string(j)});
    RigidityCondition gap{"mu_{j+1}(Omega) >= rho V_Omega", true, "vacuous: j = |Omega|"};
    if (j < s.interior_size) {
      const double mu = s.interior.values[j];
      const double bound = rho * v.interior;
      gap.holds = mu >= bound - tol * std::max(1.0, bound);
      gap.witness = "mu_{j+1}(Omega) = " + fmt(mu) + ", rho V_Omega = " + fmt(bound);
    }
    r.conditions.push_back(gap);
    // With a single boundary vertex no eigenvalue rho V_Omega sits below the
    // repeated rho V_B, so the volume condition is not needed.
    RigidityCondition vol{"V_Omega <= V_B when j > 1 and |B| > 1", true, "vacuous: j = 1"};
    if (j > 1 && s.boundary_size == 1) vol.witness = "vacuous: |B| = 1";
    if (j > 1 && s.boundary_size > 1) {
      vol.holds = v.interior <= v.boundary + tol * std::max(1.0, v.boundary);
      vol.witness = "V_Omega = " + fmt(v.interior) + ", V_B = " + fmt(v.boundary);
    }
    r.conditions.push_back(vol);
    r.conclusion = all_hold(r.conditions);
    r.consistent = r.conclusion == r.observed;
    return r;
  }

  if (pattern.all_equal()) {
    r.note = "equality at every index, which the comparison rules out";
    r.consistent = false;
    return r;
  }
  if (!pattern.except_one()) {
    r.status = RigidityStatus::UnsupportedPattern;
    r.note = "strict at " + std::to_string(pattern.strict.size()) +
             " indices; no characterization without a constant rho";
    r.consistent = true;
    return r;
  }

  // Necessary conditions only.
  const std::size_t j = pattern.strict.front();
  r.exceptional_index = j;
  r.conditions.push_back({"interior has j components", components == j,
                          std::to_string(components) + " components, j = " + std::to_string(j)});
  r.conditions.push_back(factorization_condition(f));
  RigidityCondition level{"lambda_1 = ... = lambda_j = <rho, 1>_B", false, "needs the factorization"};
  if (f.holds) {
    const double d = boundary_rho_sum(g, f);
    level.holds = true;
    for (std::size_t i = 0; i < j && i < s.interior_size; ++i)
      if (!close(s.dirichlet.values[i], d, tol)) level.holds = false;
    level.witness = "<rho, 1>_B = " + fmt(d) + ", lambda_1 = " + fmt(s.dirichlet.values.front());
  }
  r.conditions.push_back(level);
  r.conclusion = all_hold(r.conditions);
  r.consistent = r.conclusion;
  r.note = "rho is not constant: the conditions are necessary only";
  return r;
}

RigidityReport check_corollary_unit_weight(const Graph& g, double tol) {
  if (!has_unit_weight(g)) throw NotUnitWeight();
  RigidityReport r = evaluated(RigidityId::UnitWeightCorollary);
  const GraphSpectra s = compute_spectra(g);
  const LapDiriPattern pattern = laplacian_dirichlet_pattern(s, tol);
  const bool attached = bipartite_attachment(g);
  const bool bipartite = attached && interior_edgeless(g);
  const bool split = attached && interior_complete(g);
  const std::size_t nb = s.boundary_size;
  const std::size_t no = s.interior_size;

  r.conditions.push_back({"G is K_{B,Omega}", bipartite, ""});
  r.conditions.push_back({"|Omega| <= |B| or |B| = 1", no <= nb || nb == 1,
                          std::to_string(no) + " vs " + std::to_string(nb)});
  r.conditions.push_back({"Omega is a clique joined to every boundary vertex", split, ""});
  const bool case_bipartite = bipartite && (no <= nb || nb == 1);
  r.conclusion = case_bipartite || split;
  r.observed = pattern.except_one();
  if (r.observed) r.exceptional_index = pattern.strict.front();
  bool j_matches = true;
  if (r.observed && r.conclusion) {
    const std::size_t j = pattern.strict.front();
    j_matches = (case_bipartite && j == no) || (split && j == 1);
  }
  r.consistent = r.conclusion == r.observed && j_matches;
  r.note = "also admits a clique interior fully joined to B (j = 1) and the star with |B| = 1";
  return r;
}

RigidityReport check_corollary_normalized(const Graph& g, double tol) {
  if (!has_normalized_weight(g)) throw NotNormalized();
  RigidityReport r = evaluated(RigidityId::NormalizedCorollary);
  const GraphSpectra s = compute_spectra(g);
  const LapDiriPattern pattern = laplacian_dirichlet_pattern(s, tol);
  const Volumes v = volumes(g);

  const bool attached = bipartite_attachment(g);
  bool product = attached;
  if (attached)
    for (VertexId x : g.boundary())
      for (VertexId y : g.interior())
        if (!close(g.weight(x, y), g.measure(x) * g.measure(y) / v.interior, tol)) product = false;

  // Case j = |Omega|.
  const bool bipartite = attached && interior_edgeless(g);
  const bool equal_volumes = close(v.interior, v.boundary, tol);
  r.conditions.push_back({"case 1: G is K_{B,Omega}", bipartite, ""});
  r.conditions.push_back({"case 1: V_Omega = V_B", equal_volumes,
                          "V_Omega = " + fmt(v.interior) + ", V_B = " + fmt(v.boundary)});
  r.conditions.push_back({"w_xy = m_x m_y / V_Omega on B x Omega", product, ""});
  const bool case1 = bipartite && equal_volumes && product;

  // Case j = 1.
  const bool larger = v.interior >= v.boundary - tol * std::max(1.0, v.boundary);
  const bool complete = interior_complete(g);
  bool gap = true;
  std::string gap_witness = "vacuous: |Omega| = 1";
  if (s.interior_size > 1) {
    gap = s.interior.values[1] >= 1.0 - tol;
    gap_witness = "mu_2(Omega) = " + fmt(s.interior.values[1]);
  }
  bool degree = true;
  const double target = 1.0 - v.boundary / v.interior;
  for (VertexId y : g.interior())
    if (!close(interior_degree(g, y), target, tol)) degree = false;
  r.conditions.push_back({"case 2: V_Omega >= V_B", larger, ""});
  r.conditions.push_back({"case 2: interior is complete", complete, ""});
  r.conditions.push_back({"case 2: mu_2(Omega) >= 1", gap, gap_witness});
  r.conditions.push_back({"case 2: Deg_Omega = 1 - V_B / V_Omega", degree, "target " + fmt(target)});
  const bool case2 = larger && product && complete && gap && degree;

  // A single boundary vertex also allows j > 1 components, each with
  // mu_{j+1}(Omega) >= 1.
  const std::size_t components = component_count(interior_subgraph(g));
  bool case3 = false;
  if (s.boundary_size == 1) {
    bool spectral = true;
    std::string witness = "vacuous: j = |Omega|";
    if (components < s.interior_size) {
      spectral = s.interior.values[components] >= 1.0 - tol;
      witness = "mu_{j+1}(Omega) = " + fmt(s.interior.values[components]);
    }
    r.conditions.push_back({"case 3 (|B| = 1): mu_{j+1}(Omega) >= 1 with j components", spectral, witness});
    case3 = product && degree && spectral;
  }

  r.conclusion = case1 || case2 || case3;
  r.observed = pattern.except_one();
  if (r.observed) r.exceptional_index = pattern.strict.front();
  bool j_matches = true;
  if (r.observed && r.conclusion) {
    const std::size_t j = pattern.strict.front();
    j_matches = (case1 && j == s.interior_size) || (case2 && j == 1) || (case3 && j == components);
  }
  r.consistent = r.conclusion == r.observed && j_matches;
  return r;
}

RigidityReport check_rigidity(const Graph& g, RigidityId id, double tol) {
  switch (id) {
    case RigidityId::NeuVsLap: return check_neumann_laplacian_rigidity(g, tol);
    case RigidityId::DiriVsInterior: return check_dirichlet_interior_rigidity(g, tol);
    case RigidityId::NeuVsInterior: return check_neumann_interior_rigidity(g, tol);
    case RigidityId::DiriVsNeu: return check_dirichlet_neumann_rigidity(g, tol);
    case RigidityId::LapVsDiri: return check_laplacian_dirichlet_rigidity(g, tol);
    case RigidityId::UnitWeightCorollary: return check_corollary_unit_weight(g, tol);
    case RigidityId::NormalizedCorollary: return check_corollary_normalized(g, tol);
  }
  throw std::invalid_argument("unknown rigidity id");
}

namespace {

// Boundary vertices 0..|B|-1, interior |B|..; interior split into cliques.
Graph recipe_graph(const RecipeParams& p, double boundary_mass, double interior_mass, double interior_weight) {
  if (p.components < 1 || p.components > p.interior || p.boundary < 1 || !(p.rho > 0.0))
    throw std::invalid_argument("recipe needs 1 <= j <= |Omega|, |B| >= 1, rho > 0");
  const std::size_t n = p.boundary + p.interior;
  std::vector<double> m(n, boundary_mass);
  for (std::size_t k = p.boundary; k < n; ++k) m[k] = interior_mass;
  Matrix w(n, n);
  for (std::size_t x = 0; x < p.boundary; ++x)
    for (std::size_t y = p.boundary; y < n; ++y) w(x, y) = w(y, x) = p.rho * m[x] * m[y];
  std::vector<std::size_t> group(p.interior);
  for (std::size_t k = 0; k < p.interior; ++k) group[k] = k * p.components / p.interior;
  for (std::size_t a = 0; a < p.interior; ++a)
    for (std::size_t b = a + 1; b < p.interior; ++b)
      if (group[a] == group[b]) w(p.boundary + a, p.boundary + b) = w(p.boundary + b, p.boundary + a) = interior_weight;
  std::vector<VertexId> boundary(p.boundary);
  std::iota(boundary.begin(), boundary.end(), 0);
  return Graph(std::move(m), std::move(w), std::move(boundary));
}

}  // namespace

Graph neumann_equality_recipe(const RecipeParams& p) {
  if (!(p.scale > 0.0 && p.scale <= 1.0)) throw std::invalid_argument("neumann recipe needs scale in (0, 1]");
  const double mb = 1.0;
  const double mo = 2.0 * static_cast<double>(p.boundary) / static_cast<double>(p.interior);
  const Graph unit = recipe_graph(p, mb, mo, 1.0);
  if (p.components == p.interior) return unit;
  const double mu_max = eigensolve(interior_laplacian(unit)).values.back();
  const double vo = mo * static_cast<double>(p.interior);
  const double vb = mb * static_cast<double>(p.boundary);
  const double bound = p.boundary == 1 ? p.rho * vo : p.rho * (vo - vb);
  return recipe_graph(p, mb, mo, p.scale * bound / mu_max);
}

Graph laplacian_dirichlet_recipe(const RecipeParams& p) {
  if (!(p.scale >= 1.0)) throw std::invalid_argument("dirichlet recipe needs scale >= 1");
  const double mb = 1.0;
  const double mo = 0.5 * static_cast<double>(p.boundary) / static_cast<double>(p.interior);
  const Graph unit = recipe_graph(p, mb, mo, 1.0);
  if (p.components == p.interior) return unit;
  const double mu = eigensolve(interior_laplacian(unit)).values[p.components];
  const double vo = mo * static_cast<double>(p.interior);
  return recipe_graph(p, mb, mo, p.scale * p.rho * vo / mu);
}

}  // namespace dnlap
