#include "dnlap/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace dnlap {
namespace {

constexpr int kMaxSweeps = 100;
constexpr double kRelativeOffDiagonal = 1e-13;

double off_diagonal_norm(const Matrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

// One Jacobi rotation annihilating a(p, q); accumulates into v.
void rotate(Matrix& a, Matrix& v, std::size_t p, std::size_t q) {
  const double apq = a(p, q);
  if (apq == 0.0) return;
  const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
  const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const std::size_t n = a.rows();

  for (std::size_t k = 0; k < n; ++k) {
    const double akp = a(k, p);
    const double akq = a(k, q);
    a(k, p) = c * akp - s * akq;
    a(k, q) = s * akp + c * akq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const double apk = a(p, k);
    const double aqk = a(q, k);
    a(p, k) = c * apk - s * aqk;
    a(q, k) = s * apk + c * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double vkp = v(k, p);
    const double vkq = v(k, q);
    v(k, p) = c * vkp - s * vkq;
    v(k, q) = s * vkp + c * vkq;
  }
}

}  // namespace

SymmetricEigen jacobi_eigen(const Matrix& symmetric) {
  if (!symmetric.square()) throw std::invalid_argument("jacobi_eigen: matrix must be square");
  const std::size_t n = symmetric.rows();
  for (double x : symmetric.data())
    if (!std::isfinite(x)) throw ConvergenceError("jacobi_eigen: non-finite entry");
  Matrix a = symmetric;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double avg = 0.5 * (a(i, j) + a(j, i));
      a(i, j) = avg;
      a(j, i) = avg;
    }
  Matrix v = Matrix::identity(n);
  const double target = kRelativeOffDiagonal * frobenius_norm(a);

  int sweep = 0;
  while (off_diagonal_norm(a) > target) {
    if (++sweep > kMaxSweeps) throw ConvergenceError("Jacobi eigensolver did not converge");
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });
  SymmetricEigen out{std::vector<double>(n), Matrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]);
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

Spectrum eigensolve(const Matrix& matrix, const std::vector<double>& measure) {
  const std::size_t n = matrix.rows();
  if (!matrix.square() || measure.size() != n)
    throw std::invalid_argument("eigensolve: shape mismatch");
  std::vector<double> root(n);
  for (std::size_t i = 0; i < n; ++i) root[i] = std::sqrt(measure[i]);

  Matrix sym(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) sym(i, j) = root[i] * matrix(i, j) / root[j];

  SymmetricEigen eig = jacobi_eigen(sym);
  Spectrum s{eig.values, {}, measure};
  s.vectors.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    Vector vec(n);
    for (std::size_t i = 0; i < n; ++i) vec[i] = eig.vectors(i, k) / root[i];
    s.vectors.push_back(std::move(vec));
  }
  return s;
}

Spectrum eigensolve(const SelfAdjointOperator& op) { return eigensolve(op.matrix, op.measure); }

SingularSpectrum weighted_singular_values(const Graph& g) {
  Spectrum s = eigensolve(boundary_coupling(g), g.interior_measures());
  SingularSpectrum out;
  out.values.reserve(s.values.size());
  for (double v : s.values) out.values.push_back(std::sqrt(std::max(0.0, v)));
  return out;
}

double GraphSpectra::spectral_radius() const {
  double r = 0.0;
  for (const Spectrum* s : {&laplacian, &dirichlet, &neumann, &interior})
    for (double v : s->values) r = std::max(r, std::abs(v));
  return r;
}

GraphSpectra compute_spectra(const Graph& g) {
  require_boundary(g);
  GraphSpectra out;
  out.laplacian = eigensolve(full_laplacian(g));
  out.dirichlet = eigensolve(dirichlet_laplacian(g));
  out.neumann = eigensolve(neumann_laplacian(g));
  out.interior = eigensolve(interior_laplacian(g));
  out.singular = weighted_singular_values(g);
  out.boundary_degree = boundary_degrees(g);
  out.boundary_size = g.boundary().size();
  out.interior_size = g.interior().size();
  out.vertex_count = g.size();
  return out;
}

SpectrumDefects spectrum_defects(const Matrix& matrix, const Spectrum& spectrum) {
  SpectrumDefects d;
  const auto& m = spectrum.measure;
  for (std::size_t i = 0; i < spectrum.size(); ++i) {
    if (i > 0 && spectrum.values[i] < spectrum.values[i - 1]) d.ascending = false;
    for (std::size_t j = 0; j < spectrum.size(); ++j) {
      const double ip = weighted_dot(spectrum.vectors[i], spectrum.vectors[j], m);
      d.orthonormality = std::max(d.orthonormality, std::abs(ip - (i == j ? 1.0 : 0.0)));
    }
    Vector r = matrix * spectrum.vectors[i];
    for (std::size_t k = 0; k < r.size(); ++k) r[k] -= spectrum.values[i] * spectrum.vectors[i][k];
    const double norm = std::sqrt(weighted_dot(r, r, m));
    d.residual = std::max(d.residual, norm / std::max(1.0, std::abs(spectrum.values[i])));
  }
  return d;
}

}  // namespace dnlap
