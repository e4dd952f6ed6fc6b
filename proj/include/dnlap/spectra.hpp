#pragma once

#include <stdexcept>
#include <vector>

#include "dnlap/graph.hpp"
#include "dnlap/matrix.hpp"
#include "dnlap/operators.hpp"

namespace dnlap {

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Eigen-decomposition of a real symmetric matrix. vectors(:, k) belongs to
/// values[k]; values ascending.
struct SymmetricEigen {
  std::vector<double> values;
  Matrix vectors;
};

/// Cyclic Jacobi rotations. Stops once the off-diagonal Frobenius norm is
/// below 1e-13 times the Frobenius norm of the input; throws ConvergenceError
/// after 100 sweeps.
SymmetricEigen jacobi_eigen(const Matrix& symmetric);

/// Ascending eigenvalues and measure-orthonormal eigenvectors of an
/// M-self-adjoint operator.
struct Spectrum {
  std::vector<double> values;
  std::vector<Vector> vectors;
  std::vector<double> measure;

  std::size_t size() const { return values.size(); }
};

/// Solves through the symmetric similarity M^{1/2} A M^{-1/2} and maps the
/// eigenvectors back with M^{-1/2}.
Spectrum eigensolve(const Matrix& matrix, const std::vector<double>& measure);
Spectrum eigensolve(const SelfAdjointOperator& op);

/// Singular values s_1 <= ... <= s_|Omega| of Deg^{-1/2} A_Omega, as square
/// roots of the spectrum of A_B Deg^{-1} A_Omega on the interior.
struct SingularSpectrum {
  std::vector<double> values;
  double smallest() const { return values.front(); }
  double largest() const { return values.back(); }
};

SingularSpectrum weighted_singular_values(const Graph& g);

/// All spectra a graph with boundary carries, computed once.
struct GraphSpectra {
  Spectrum laplacian;   // mu_i of -Delta on V
  Spectrum dirichlet;   // lambda_i
  Spectrum neumann;     // nu_i
  Spectrum interior;    // mu_i(Omega)
  SingularSpectrum singular;
  std::vector<double> boundary_degree;  // Deg_b on the interior
  std::size_t boundary_size = 0;
  std::size_t interior_size = 0;
  std::size_t vertex_count = 0;
  double spectral_radius() const;
};

GraphSpectra compute_spectra(const Graph& g);

/// Quality numbers for a decomposition: worst measure-orthonormality defect
/// and worst residual ||A v - lambda v||_m / max(1, |lambda|).
struct SpectrumDefects {
  double orthonormality = 0.0;
  double residual = 0.0;
  bool ascending = true;
};
SpectrumDefects spectrum_defects(const Matrix& matrix, const Spectrum& spectrum);

}  // namespace dnlap
