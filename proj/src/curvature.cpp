#include "dnlap/curvature.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace dnlap {
namespace {

constexpr double kNullThreshold = 1e-12;

// Delta (not -Delta) as a matrix: (Delta f)(z) = sum_y p_zy (f(y) - f(z)).
Matrix laplacian_matrix(const Graph& g) {
  const std::size_t n = g.size();
  Matrix l(n, n);
  for (VertexId z = 0; z < n; ++z) {
    double total = 0.0;
    for (VertexId y = 0; y < n; ++y) {
      if (y == z) continue;
      l(z, y) = g.weight(z, y) / g.measure(z);
      total += l(z, y);
    }
    l(z, z) = -total;
  }
  return l;
}

// Quadratic form of Gamma(f)(z): 1/2 sum_y p_zy (f(y) - f(z))^2.
Matrix gamma_form(const Matrix& lap, VertexId z) {
  const std::size_t n = lap.rows();
  Matrix gz(n, n);
  for (VertexId y = 0; y < n; ++y) {
    if (y == z) continue;
    const double h = 0.5 * lap(z, y);
    if (h == 0.0) continue;
    gz(y, y) += h;
    gz(z, z) += h;
    gz(y, z) -= h;
    gz(z, y) -= h;
  }
  return gz;
}

Matrix restrict(const Matrix& a, const std::vector<std::size_t>& idx) {
  Matrix r(idx.size(), idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) r(i, j) = a(idx[i], idx[j]);
  return r;
}

// Q^T A Q for the columns `cols` of q.
Matrix project(const Matrix& a, const Matrix& q, const std::vector<std::size_t>& cols) {
  Matrix qc(q.rows(), cols.size());
  for (std::size_t i = 0; i < q.rows(); ++i)
    for (std::size_t k = 0; k < cols.size(); ++k) qc(i, k) = q(i, cols[k]);
  return qc.transposed() * a * qc;
}

Matrix cross(const Matrix& a, const Matrix& q, const std::vector<std::size_t>& left,
             const std::vector<std::size_t>& right) {
  Matrix ql(q.rows(), left.size());
  Matrix qr(q.rows(), right.size());
  for (std::size_t i = 0; i < q.rows(); ++i) {
    for (std::size_t k = 0; k < left.size(); ++k) ql(i, k) = q(i, left[k]);
    for (std::size_t k = 0; k < right.size(); ++k) qr(i, k) = q(i, right[k]);
  }
  return ql.transposed() * a * qr;
}

}  // namespace

double bakry_emery_at(const Graph& g, VertexId x, double n) {
  if (!(n > 1.0)) throw std::invalid_argument("Bakry-Emery dimension must exceed 1");
  const std::size_t size = g.size();
  const Matrix lap = laplacian_matrix(g);
  const Matrix gx = gamma_form(lap, x);

  // Gamma_2 form: (1/2) sum_z Delta(x, z) Gamma_z  -  sym(Gamma_x Delta).
  Matrix form(size, size);
  for (VertexId z = 0; z < size; ++z)
    if (lap(x, z) != 0.0) form += (0.5 * lap(x, z)) * gamma_form(lap, z);
  Matrix gl = gx * lap;
  form -= 0.5 * (gl + gl.transposed());
  if (std::isfinite(n)) {
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = 0; j < size; ++j) form(i, j) -= lap(x, i) * lap(x, j) / n;
  }

  // Gauge f(x) = 0 and keep the 2-ball.
  const auto dist = hop_distances(g);
  std::vector<std::size_t> ball;
  for (VertexId z = 0; z < size; ++z)
    if (z != x && dist[x][z] <= 2) ball.push_back(z);
  if (ball.empty()) throw DegenerateGamma("vertex has an empty 2-ball");

  const Matrix a = restrict(form, ball);
  const SymmetricEigen gamma = jacobi_eigen(restrict(gx, ball));
  const double top = std::max(gamma.values.back(), 0.0);
  std::vector<std::size_t> range;
  std::vector<std::size_t> null;
  for (std::size_t k = 0; k < gamma.values.size(); ++k)
    (gamma.values[k] > kNullThreshold * std::max(1.0, top) ? range : null).push_back(k);
  if (range.empty()) throw DegenerateGamma("Gamma vanishes on the 2-ball");

  // Minimise over the Gamma-null directions: Schur complement onto the range.
  Matrix reduced = project(a, gamma.vectors, range);
  if (!null.empty()) {
    const Matrix ann = project(a, gamma.vectors, null);
    const Matrix arn = cross(a, gamma.vectors, range, null);
    const SymmetricEigen inner = jacobi_eigen(ann);
    if (inner.values.front() <= kNullThreshold * std::max(1.0, max_abs(ann)))
      return -std::numeric_limits<double>::infinity();
    Matrix inverse(null.size(), null.size());
    for (std::size_t i = 0; i < null.size(); ++i)
      for (std::size_t j = 0; j < null.size(); ++j)
        for (std::size_t k = 0; k < null.size(); ++k)
          inverse(i, j) += inner.vectors(i, k) * inner.vectors(j, k) / inner.values[k];
    reduced -= arn * inverse * arn.transposed();
  }
  for (std::size_t i = 0; i < range.size(); ++i)
    for (std::size_t j = 0; j < range.size(); ++j)
      reduced(i, j) /= std::sqrt(gamma.values[range[i]] * gamma.values[range[j]]);
  return jacobi_eigen(reduced).values.front();
}

CurvatureResult bakry_emery_curvature(const Graph& g, double n) {
  CurvatureResult r;
  r.kind = CurvatureKind::BakryEmery;
  r.dimension = n;
  for (VertexId x = 0; x < g.size(); ++x) {
    r.per_vertex.push_back(bakry_emery_at(g, x, n));
    r.global_min = std::min(r.global_min, r.per_vertex.back());
  }
  return r;
}

OllivierProgram ollivier_program(const Graph& g, VertexId x, VertexId y,
                                 const std::vector<std::vector<std::size_t>>& d) {
  if (x == y || g.weight(x, y) <= 0.0) throw std::invalid_argument("ollivier: {x, y} is not an edge");
  const std::size_t n = g.size();

  std::vector<VertexId> region;
  for (VertexId z = 0; z < n; ++z)
    if (d[x][z] <= 1 || d[y][z] <= 1) region.push_back(z);

  // Objective Delta f(y) - Delta f(x) as coefficients on f.
  std::vector<double> coef(n, 0.0);
  for (VertexId z = 0; z < n; ++z) {
    if (z == y || g.weight(y, z) == 0.0) continue;
    const double p = g.weight(y, z) / g.measure(y);
    coef[z] += p;
    coef[y] -= p;
  }
  for (VertexId z = 0; z < n; ++z) {
    if (z == x || g.weight(x, z) == 0.0) continue;
    const double p = g.weight(x, z) / g.measure(x);
    coef[z] -= p;
    coef[x] += p;
  }

  OllivierProgram prog;
  std::vector<std::ptrdiff_t> slot(n, -1);
  for (VertexId z : region)
    if (z != x && z != y) {
      slot[z] = static_cast<std::ptrdiff_t>(prog.variables.size());
      prog.variables.push_back(z);
    }
  const std::size_t k = prog.variables.size();

  // f(a) = g_a - d(a, y) for free a; fixed values otherwise.
  auto fixed_value = [&](VertexId a) { return a == x ? 1.0 : 0.0; };
  prog.lp.objective.assign(k, 0.0);
  prog.offset = coef[x] * fixed_value(x);
  for (std::size_t i = 0; i < k; ++i) {
    const VertexId a = prog.variables[i];
    prog.lp.objective[i] = coef[a];
    prog.offset -= coef[a] * static_cast<double>(d[a][y]);
  }

  // f(a) - f(b) <= d(a, b) in both orientations.
  auto add = [&](VertexId a, VertexId b) {
    LinearConstraint c;
    c.coefficients.assign(k, 0.0);
    c.relation = Relation::LessEqual;
    c.rhs = static_cast<double>(d[a][b]);
    if (slot[a] >= 0) {
      c.coefficients[slot[a]] += 1.0;
      c.rhs += static_cast<double>(d[a][y]);
    } else {
      c.rhs -= fixed_value(a);
    }
    if (slot[b] >= 0) {
      c.coefficients[slot[b]] -= 1.0;
      c.rhs -= static_cast<double>(d[b][y]);
    } else {
      c.rhs += fixed_value(b);
    }
    if (slot[a] < 0 && slot[b] < 0) return;
    prog.lp.constraints.push_back(std::move(c));
  };
  for (std::size_t i = 0; i < region.size(); ++i)
    for (std::size_t j = i + 1; j < region.size(); ++j) {
      add(region[i], region[j]);
      add(region[j], region[i]);
    }
  return prog;
}

double ollivier_curvature(const Graph& g, VertexId x, VertexId y) {
  const auto d = hop_distances(g);
  const OllivierProgram prog = ollivier_program(g, x, y, d);
  if (prog.variables.empty()) return prog.offset;
  const LpSolution sol = solve_simplex(prog.lp);
  if (sol.status != LpStatus::Optimal) throw std::logic_error("Ollivier LP is not solvable");
  return sol.value + prog.offset;
}

CurvatureResult ollivier_curvature(const Graph& g) {
  CurvatureResult r;
  r.kind = CurvatureKind::Ollivier;
  const auto d = hop_distances(g);
  for (VertexId x = 0; x < g.size(); ++x)
    for (VertexId y = x + 1; y < g.size(); ++y) {
      if (g.weight(x, y) <= 0.0) continue;
      const OllivierProgram prog = ollivier_program(g, x, y, d);
      double value = prog.offset;
      if (!prog.variables.empty()) {
        const LpSolution sol = solve_simplex(prog.lp);
        if (sol.status != LpStatus::Optimal) throw std::logic_error("Ollivier LP is not solvable");
        value += sol.value;
      }
      r.per_edge.push_back({x, y, value});
      r.global_min = std::min(r.global_min, value);
    }
  return r;
}

const char* to_string(LichnerowiczVariant v) {
  switch (v) {
    case LichnerowiczVariant::BakryEmeryOnGraph: return "BakryEmeryOnGraph";
    case LichnerowiczVariant::OllivierOnGraph: return "OllivierOnGraph";
    case LichnerowiczVariant::BakryEmeryOnInterior: return "BakryEmeryOnInterior";
    case LichnerowiczVariant::OllivierOnInterior: return "OllivierOnInterior";
    case LichnerowiczVariant::BakryEmeryOnGraphDirichlet: return "BakryEmeryOnGraphDirichlet";
    case LichnerowiczVariant::OllivierOnGraphDirichlet: return "OllivierOnGraphDirichlet";
  }
  return "Unknown";
}

ComparisonCertificate certify_lichnerowicz(const Graph& g, const GraphSpectra& s,
                                           LichnerowiczVariant variant, double n, double tol) {
  using V = LichnerowiczVariant;
  const bool bakry_emery = variant == V::BakryEmeryOnGraph || variant == V::BakryEmeryOnInterior ||
                           variant == V::BakryEmeryOnGraphDirichlet;
  const bool on_interior = variant == V::BakryEmeryOnInterior || variant == V::OllivierOnInterior;
  const TheoremId id = bakry_emery ? TheoremId::LichnerowiczBE : TheoremId::LichnerowiczOllivier;
  const std::string name = to_string(variant);

  if (s.interior_size < 2) return not_applicable(id, name + ": |Omega| < 2, no second eigenvalue");

  Graph target = on_interior ? interior_subgraph(g) : g;
  if (on_interior && component_count(target) != 1)
    return not_applicable(id, name + ": interior subgraph is disconnected");

  double bound = 0.0;
  std::ostringstream label;
  if (bakry_emery) {
    const double k = bakry_emery_curvature(target, n).global_min;
    if (!(k > 0.0)) return not_applicable(id, name + ": Bakry-Emery curvature bound is not positive");
    bound = std::isfinite(n) ? n * k / (n - 1.0) : k;
    label << "nK/(n-1)";
  } else {
    const double kappa = ollivier_curvature(target).global_min;
    if (!(kappa > 0.0)) return not_applicable(id, name + ": Ollivier curvature bound is not positive");
    bound = kappa;
    label << "kappa";
  }

  const double nu2 = s.neumann.values[1];
  const double lambda2 = s.dirichlet.values[1];
  const double s1sq = s.singular.smallest() * s.singular.smallest();
  const double min_degb = *std::min_element(s.boundary_degree.begin(), s.boundary_degree.end());
  const std::string b = label.str();

  ComparisonCertificate c;
  c.theorem = id;
  c.note = name;
  switch (variant) {
    case V::BakryEmeryOnGraph:
    case V::OllivierOnGraph:
      add_lower_bound(c, 2, "nu_2>=" + b, nu2, bound);
      break;
    case V::BakryEmeryOnInterior:
    case V::OllivierOnInterior:
      add_lower_bound(c, 2, "nu_2>=" + b, nu2, bound);
      add_lower_bound(c, 2, "lambda_2>=" + b + "+min Deg_b", lambda2, bound + min_degb);
      add_lower_bound(c, 2, "lambda_2>=" + b + "+s_1^2", lambda2, bound + s1sq);
      break;
    case V::BakryEmeryOnGraphDirichlet:
    case V::OllivierOnGraphDirichlet:
      add_lower_bound(c, 2, "lambda_2>=" + b + "+s_1^2", lambda2, bound + s1sq);
      break;
  }
  finalize(c, tol);
  return c;
}

ComparisonCertificate certify_lichnerowicz(const Graph& g, LichnerowiczVariant variant, double n,
                                           double tol) {
  return certify_lichnerowicz(g, compute_spectra(g), variant, n, tol);
}

}  // namespace dnlap
