#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dnlap/graph.hpp"

namespace dnlap {

struct AuditConfig {
  std::size_t count = 200;
  std::size_t max_vertices = 12;
  std::uint64_t seed = 42;
  std::size_t threads = 1;
  bool curvature = false;  // Lichnerowicz-type certificates at n = infinity and n = 2
  bool bounds = false;     // Fiedler- and Friedman-type certificates on unit-weight instances
  double tol = 1e-9;
};

struct AuditFailure {
  std::size_t instance = 0;
  std::string check;
  std::string detail;
};

struct AuditReport {
  AuditConfig config;
  std::size_t instances = 0;
  std::map<std::string, std::size_t> checks;  // check name -> times evaluated
  std::vector<AuditFailure> failures;
  /// Smallest certificate margin over all comparison certificates, divided by
  /// max(1, spectral radius).
  double worst_relative_margin = 0.0;
  std::size_t full_equality_instances = 0;
  bool passed() const { return failures.empty(); }
};

/// Result of auditing one graph; `checks` counts evaluations per check name.
struct InstanceAudit {
  std::map<std::string, std::size_t> checks;
  std::vector<AuditFailure> failures;
  double worst_relative_margin = 0.0;
  bool full_equality = false;
};

InstanceAudit audit_graph(const Graph& g, std::size_t instance, const AuditConfig& config);

/// Audits config.count instances of audit_instance(config.seed, k, ...).
/// Instances are farmed out to config.threads workers; the report is
/// assembled in instance order, so it does not depend on the thread count.
AuditReport run_audit(const AuditConfig& config);

}  // namespace dnlap
