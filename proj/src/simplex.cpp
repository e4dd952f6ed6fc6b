#include "dnlap/simplex.hpp"

#include <cmath>
#include <limits>

namespace dnlap {
namespace {

constexpr double kEps = 1e-10;
constexpr int kMaxIterations = 100000;

struct Tableau {
  std::vector<std::vector<double>> rows;  // last entry is the rhs
  std::vector<double> cost;               // reduced costs; last entry is -objective value
  std::vector<std::size_t> basis;
  std::size_t columns = 0;

  void pivot(std::size_t r, std::size_t e) {
    auto& pr = rows[r];
    const double p = pr[e];
    for (double& v : pr) v /= p;
    auto eliminate = [&](std::vector<double>& row) {
      const double f = row[e];
      if (f == 0.0) return;
      for (std::size_t j = 0; j <= columns; ++j) row[j] -= f * pr[j];
      row[e] = 0.0;
    };
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r) eliminate(rows[i]);
    eliminate(cost);
    basis[r] = e;
  }

  // Runs Bland's rule over columns [0, allowed). Returns false if unbounded.
  bool optimize(std::size_t allowed) {
    for (int it = 0; it < kMaxIterations; ++it) {
      std::size_t enter = allowed;
      for (std::size_t j = 0; j < allowed; ++j)
        if (cost[j] < -kEps) {
          enter = j;
          break;
        }
      if (enter == allowed) return true;

      std::size_t leave = rows.size();
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][enter] <= kEps) continue;
        const double ratio = rows[i][columns] / rows[i][enter];
        if (ratio < best - kEps ||
            (std::abs(ratio - best) <= kEps && leave < rows.size() && basis[i] < basis[leave])) {
          best = std::min(best, ratio);
          leave = i;
        }
      }
      if (leave == rows.size()) return false;
      pivot(leave, enter);
    }
    throw LpIterationLimit();
  }

  void set_cost(const std::vector<double>& c) {
    cost.assign(columns + 1, 0.0);
    for (std::size_t j = 0; j < c.size(); ++j) cost[j] = c[j];
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const double f = cost[basis[i]];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j <= columns; ++j) cost[j] -= f * rows[i][j];
    }
  }
};

}  // namespace

LpSolution solve_simplex(const LinearProgram& lp) {
  const std::size_t n = lp.variable_count();
  const std::size_t m = lp.constraints.size();

  // Normalise to nonnegative right-hand sides.
  std::vector<LinearConstraint> cons = lp.constraints;
  for (auto& c : cons) {
    if (c.coefficients.size() != n) throw std::invalid_argument("constraint width mismatch");
    if (c.rhs < 0.0) {
      for (double& a : c.coefficients) a = -a;
      c.rhs = -c.rhs;
      if (c.relation == Relation::LessEqual) c.relation = Relation::GreaterEqual;
      else if (c.relation == Relation::GreaterEqual) c.relation = Relation::LessEqual;
    }
  }

  std::size_t slack_count = 0;
  std::size_t artificial_count = 0;
  for (const auto& c : cons) {
    if (c.relation != Relation::Equal) ++slack_count;
    if (c.relation != Relation::LessEqual) ++artificial_count;
  }
  const std::size_t real_columns = n + slack_count;

  Tableau t;
  t.columns = real_columns + artificial_count;
  t.rows.assign(m, std::vector<double>(t.columns + 1, 0.0));
  t.basis.assign(m, 0);
  std::size_t slack = n;
  std::size_t artificial = real_columns;
  for (std::size_t i = 0; i < m; ++i) {
    auto& row = t.rows[i];
    for (std::size_t j = 0; j < n; ++j) row[j] = cons[i].coefficients[j];
    row[t.columns] = cons[i].rhs;
    switch (cons[i].relation) {
      case Relation::LessEqual:
        row[slack] = 1.0;
        t.basis[i] = slack++;
        break;
      case Relation::GreaterEqual:
        row[slack++] = -1.0;
        row[artificial] = 1.0;
        t.basis[i] = artificial++;
        break;
      case Relation::Equal:
        row[artificial] = 1.0;
        t.basis[i] = artificial++;
        break;
    }
  }

  LpSolution out;
  if (artificial_count > 0) {
    std::vector<double> phase1(t.columns, 0.0);
    for (std::size_t j = real_columns; j < t.columns; ++j) phase1[j] = 1.0;
    t.set_cost(phase1);
    t.optimize(t.columns);
    if (-t.cost[t.columns] > 1e-8) return out;  // infeasible

    // Drive remaining artificials out of the basis; drop redundant rows.
    for (std::size_t i = 0; i < t.rows.size();) {
      if (t.basis[i] < real_columns) {
        ++i;
        continue;
      }
      std::size_t e = real_columns;
      for (std::size_t j = 0; j < real_columns; ++j)
        if (std::abs(t.rows[i][j]) > kEps) {
          e = j;
          break;
        }
      if (e == real_columns) {
        t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
        t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
      } else {
        t.pivot(i, e);
        ++i;
      }
    }
  }

  t.set_cost(lp.objective);
  if (!t.optimize(real_columns)) {
    out.status = LpStatus::Unbounded;
    return out;
  }
  out.status = LpStatus::Optimal;
  out.x.assign(n, 0.0);
  for (std::size_t i = 0; i < t.rows.size(); ++i)
    if (t.basis[i] < n) out.x[t.basis[i]] = t.rows[i][t.columns];
  out.value = 0.0;
  for (std::size_t j = 0; j < n; ++j) out.value += lp.objective[j] * out.x[j];
  return out;
}

}  // namespace dnlap
