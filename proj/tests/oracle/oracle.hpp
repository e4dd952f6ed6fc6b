#pragma once
// Brute-force references for the test suite. Deliberately naive and slow.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "dnlap/graph.hpp"
#include "dnlap/matrix.hpp"

namespace oracle {

class DimensionTooLarge : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class Infeasible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class Unbounded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Eigenvalues (ascending, with multiplicity) of an M-self-adjoint matrix of
/// dimension <= 6. Counts eigenvalues below t from the signs of the leading
/// principal minors of S - tI and bisects.
std::vector<double> eigen_bruteforce(const dnlap::Matrix& a, const std::vector<double>& measure);

enum class Rel { Le, Ge, Eq };
struct Row {
  std::vector<double> a;
  Rel rel;
  double b;
};

/// min c.x over {x : rows}, variables free unless rows bound them. Enumerates
/// every basic point; at most 12 variables and 40 rows.
double lp_bruteforce(const std::vector<Row>& rows, const std::vector<double>& c);

/// Minimum number of crossing edges over proper vertex bipartitions (unit weight, |V| <= 8).
std::size_t cut_bruteforce(const dnlap::Graph& g);

/// Ollivier curvature straight from the definition: variables f on
/// B_1(x) u B_1(y), f(x) - f(y) = 1, |f(a) - f(b)| <= d(a, b).
double ollivier_bruteforce(const dnlap::Graph& g, dnlap::VertexId x, dnlap::VertexId y);

/// Gamma and Gamma_2 at x evaluated from their definitions for a function f on V.
double gamma_at(const dnlap::Graph& g, const dnlap::Vector& f, dnlap::VertexId x);
double gamma2_at(const dnlap::Graph& g, const dnlap::Vector& f, dnlap::VertexId x);

/// Upper estimate of K(x, n) by random sampling and local descent of the
/// Rayleigh quotient (Gamma_2 - (Delta f)^2 / n) / Gamma.
double bakry_emery_sampled(const dnlap::Graph& g, dnlap::VertexId x, double n, std::uint64_t seed,
                           std::size_t samples = 400);

}  // namespace oracle
