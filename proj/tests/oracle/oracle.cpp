#include "oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace oracle {

using dnlap::Graph;
using dnlap::Matrix;
using dnlap::Vector;
using dnlap::VertexId;

namespace {

double determinant(std::vector<std::vector<double>> a) {
  const std::size_t n = a.size();
  double det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(a[i][k]) > std::abs(a[p][k])) p = i;
    if (a[p][k] == 0.0) return 0.0;
    if (p != k) {
      std::swap(a[p], a[k]);
      det = -det;
    }
    det *= a[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return det;
}

// Number of eigenvalues of s below t: sign changes in 1, D_1(t), ..., D_n(t),
// D_k the leading principal minors of s - tI.
std::size_t count_below(const std::vector<std::vector<double>>& s, double t) {
  const std::size_t n = s.size();
  std::size_t changes = 0;
  double prev = 1.0;
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::vector<double>> sub(k, std::vector<double>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sub[i][j] = s[i][j] - (i == j ? t : 0.0);
    double d = determinant(sub);
    if (d == 0.0) d = 1e-300;  // t is a root; nudging keeps the count of the limit from above
    if ((d < 0) != (prev < 0)) ++changes;
    prev = d;
  }
  return changes;
}

// Solves a x = b by Gaussian elimination; false if singular.
bool solve(std::vector<std::vector<double>> a, std::vector<double> b, std::vector<double>& x) {
  const std::size_t n = a.size();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(a[i][k]) > std::abs(a[p][k])) p = i;
    if (std::abs(a[p][k]) < 1e-12) return false;
    std::swap(a[p], a[k]);
    std::swap(b[p], b[k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
      b[i] -= f * b[k];
    }
  }
  x.assign(n, 0.0);
  for (std::size_t k = n; k-- > 0;) {
    double s = b[k];
    for (std::size_t j = k + 1; j < n; ++j) s -= a[k][j] * x[j];
    x[k] = s / a[k][k];
  }
  return true;
}

double laplacian_at(const Graph& g, const Vector& f, VertexId x) {
  double s = 0.0;
  for (VertexId y = 0; y < g.size(); ++y) s += (f[y] - f[x]) * g.weight(x, y);
  return s / g.measure(x);
}

Vector laplacian(const Graph& g, const Vector& f) {
  Vector out(g.size());
  for (VertexId x = 0; x < g.size(); ++x) out[x] = laplacian_at(g, f, x);
  return out;
}

double gamma_pair_at(const Graph& g, const Vector& f, const Vector& h, VertexId x) {
  Vector fh(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) fh[i] = f[i] * h[i];
  return 0.5 * (laplacian_at(g, fh, x) - f[x] * laplacian_at(g, h, x) - h[x] * laplacian_at(g, f, x));
}

}  // namespace

std::vector<double> eigen_bruteforce(const Matrix& a, const std::vector<double>& measure) {
  const std::size_t n = a.rows();
  if (n > 6) throw DimensionTooLarge("eigen_bruteforce: dimension above 6");
  std::vector<std::vector<double>> s(n, std::vector<double>(n));
  double radius = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      // M^{1/2} A M^{-1/2}, then averaged with its transpose.
      const double v = std::sqrt(measure[i]) * a(i, j) / std::sqrt(measure[j]);
      const double w = std::sqrt(measure[j]) * a(j, i) / std::sqrt(measure[i]);
      s[i][j] = 0.5 * (v + w);
      row += std::abs(s[i][j]);
    }
    radius = std::max(radius, row);
  }
  std::vector<double> out;
  for (std::size_t k = 0; k < n; ++k) {
    // Smallest t with count_below(t) > k, bisected on [-R-1, R+1].
    double lo = -radius - 1.0;
    double hi = radius + 1.0;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (count_below(s, mid) > k)
        hi = mid;
      else
        lo = mid;
    }
    out.push_back(0.5 * (lo + hi));
  }
  return out;
}

double lp_bruteforce(const std::vector<Row>& rows_in, const std::vector<double>& c) {
  const std::size_t n = c.size();
  if (n > 12 || rows_in.size() > 40) throw DimensionTooLarge("lp_bruteforce: problem too large");
  constexpr double kBox = 1e6;
  std::vector<Row> rows = rows_in;
  const std::size_t boxed_from = rows.size();
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> e(n, 0.0);
    e[i] = 1.0;
    rows.push_back({e, Rel::Le, kBox});
    rows.push_back({e, Rel::Ge, -kBox});
  }
  std::vector<std::size_t> eq;
  std::vector<std::size_t> ineq;
  for (std::size_t r = 0; r < rows.size(); ++r) (rows[r].rel == Rel::Eq ? eq : ineq).push_back(r);

  auto feasible = [&](const std::vector<double>& x) {
    for (const Row& r : rows) {
      double s = 0.0;
      for (std::size_t i = 0; i < n; ++i) s += r.a[i] * x[i];
      const double tol = 1e-9 * std::max(1.0, std::abs(r.b));
      if (r.rel == Rel::Le && s > r.b + tol) return false;
      if (r.rel == Rel::Ge && s < r.b - tol) return false;
      if (r.rel == Rel::Eq && std::abs(s - r.b) > tol) return false;
    }
    return true;
  };

  double best = std::numeric_limits<double>::infinity();
  bool on_box = false;
  if (n == 0) {
    if (!feasible({})) throw Infeasible("lp_bruteforce: infeasible");
    return 0.0;
  }
  const std::size_t need = n > eq.size() ? n - eq.size() : 0;
  std::vector<std::size_t> pick(need);
  // Enumerate subsets of `need` inequality rows (lexicographic combinations).
  std::vector<bool> mask(ineq.size(), false);
  std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(std::min(need, ineq.size())), true);
  if (need > ineq.size()) throw Infeasible("lp_bruteforce: too few constraints");
  do {
    std::vector<std::vector<double>> a;
    std::vector<double> b;
    bool touches_box = false;
    for (std::size_t r : eq) {
      if (a.size() == n) break;
      a.push_back(rows[r].a);
      b.push_back(rows[r].b);
    }
    for (std::size_t k = 0; k < ineq.size() && a.size() < n; ++k)
      if (mask[k]) {
        a.push_back(rows[ineq[k]].a);
        b.push_back(rows[ineq[k]].b);
        if (ineq[k] >= boxed_from) touches_box = true;
      }
    if (a.size() != n) continue;
    std::vector<double> x;
    if (!solve(a, b, x) || !feasible(x)) continue;
    double v = 0.0;
    for (std::size_t i = 0; i < n; ++i) v += c[i] * x[i];
    if (v < best - 1e-12) {
      best = v;
      on_box = touches_box;
    } else if (std::abs(v - best) <= 1e-12 && !touches_box) {
      on_box = false;
    }
  } while (std::prev_permutation(mask.begin(), mask.end()));
  if (!std::isfinite(best)) throw Infeasible("lp_bruteforce: no feasible basic point");
  if (on_box) throw Unbounded("lp_bruteforce: optimum on the artificial box");
  return best;
}

std::size_t cut_bruteforce(const Graph& g) {
  const std::size_t n = g.size();
  if (n > 8) throw DimensionTooLarge("cut_bruteforce: more than 8 vertices");
  if (n < 2) return 0;
  std::size_t best = std::numeric_limits<std::size_t>::max();
  // Vertex n-1 stays on side 0; every proper subset containing others.
  for (std::uint32_t s = 1; s < (1u << (n - 1)); ++s) {
    std::size_t cut = 0;
    for (VertexId x = 0; x < n; ++x)
      for (VertexId y = x + 1; y < n; ++y) {
        const bool sx = x < n - 1 && ((s >> x) & 1u);
        const bool sy = y < n - 1 && ((s >> y) & 1u);
        if (sx != sy && g.weight(x, y) > 0.0) ++cut;
      }
    best = std::min(best, cut);
  }
  return best;
}

double ollivier_bruteforce(const Graph& g, VertexId x, VertexId y) {
  const auto d = dnlap::hop_distances(g);
  std::vector<VertexId> region;
  for (VertexId z = 0; z < g.size(); ++z)
    if (d[x][z] <= 1 || d[y][z] <= 1) region.push_back(z);
  const std::size_t k = region.size();
  auto pos = [&](VertexId z) { return static_cast<std::size_t>(std::find(region.begin(), region.end(), z) - region.begin()); };

  // Objective Delta f(y) - Delta f(x) with f a function on the region.
  std::vector<double> c(k, 0.0);
  for (VertexId z : region) {
    c[pos(z)] += g.weight(y, z) / g.measure(y) - g.weight(x, z) / g.measure(x);
  }
  double py = 0.0, px = 0.0;
  for (VertexId z = 0; z < g.size(); ++z) {
    py += g.weight(y, z) / g.measure(y);
    px += g.weight(x, z) / g.measure(x);
  }
  c[pos(y)] -= py;
  c[pos(x)] += px;

  std::vector<Row> rows;
  std::vector<double> fx(k, 0.0), fy(k, 0.0);
  fx[pos(x)] = 1.0;
  fy[pos(y)] = 1.0;
  rows.push_back({fx, Rel::Eq, 1.0});
  rows.push_back({fy, Rel::Eq, 0.0});
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      std::vector<double> a(k, 0.0);
      a[i] = 1.0;
      a[j] = -1.0;
      const double dist = static_cast<double>(d[region[i]][region[j]]);
      rows.push_back({a, Rel::Le, dist});
      rows.push_back({a, Rel::Ge, -dist});
    }
  return lp_bruteforce(rows, c);
}

double gamma_at(const Graph& g, const Vector& f, VertexId x) { return gamma_pair_at(g, f, f, x); }

double gamma2_at(const Graph& g, const Vector& f, VertexId x) {
  Vector gf(g.size());
  for (VertexId z = 0; z < g.size(); ++z) gf[z] = gamma_pair_at(g, f, f, z);
  const Vector lf = laplacian(g, f);
  return 0.5 * laplacian_at(g, gf, x) - gamma_pair_at(g, f, lf, x);
}

double bakry_emery_sampled(const Graph& g, VertexId x, double n, std::uint64_t seed, std::size_t samples) {
  const std::size_t size = g.size();
  const auto d = dnlap::hop_distances(g);
  std::vector<VertexId> ball;
  for (VertexId z = 0; z < size; ++z)
    if (z != x && d[x][z] <= 2) ball.push_back(z);

  auto quotient = [&](const Vector& coords) {
    Vector f(size, 0.0);
    for (std::size_t k = 0; k < ball.size(); ++k) f[ball[k]] = coords[k];
    const double gam = gamma_at(g, f, x);
    if (gam < 1e-14) return std::numeric_limits<double>::infinity();
    const double lf = laplacian_at(g, f, x);
    const double extra = std::isinf(n) ? 0.0 : lf * lf / n;
    return (gamma2_at(g, f, x) - extra) / gam;
  };

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  double best = std::numeric_limits<double>::infinity();
  std::vector<Vector> starts;
  for (std::size_t s = 0; s < samples; ++s) {
    Vector v(ball.size());
    for (double& c : v) c = normal(rng);
    const double q = quotient(v);
    if (q < best) {
      best = q;
      starts.insert(starts.begin(), v);
      if (starts.size() > 5) starts.pop_back();
    }
  }
  // Local descent with a finite-difference gradient and backtracking.
  for (Vector v : starts) {
    double q = quotient(v);
    double step = 0.1;
    for (int it = 0; it < 3000 && step > 1e-14; ++it) {
      Vector grad(v.size());
      const double h = 1e-7;
      for (std::size_t k = 0; k < v.size(); ++k) {
        Vector a = v, b = v;
        a[k] += h;
        b[k] -= h;
        grad[k] = (quotient(a) - quotient(b)) / (2 * h);
      }
      Vector trial = v;
      for (std::size_t k = 0; k < v.size(); ++k) trial[k] -= step * grad[k];
      const double qt = quotient(trial);
      if (qt < q) {
        v = trial;
        q = qt;
        step *= 1.5;
      } else {
        step *= 0.5;
      }
    }
    best = std::min(best, q);
  }
  return best;
}

}  // namespace oracle
