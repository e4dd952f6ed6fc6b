#include "dnlap/audit.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <sstream>
#include <thread>

#include "dnlap/combinatorial.hpp"
#include "dnlap/comparisons.hpp"
#include "dnlap/curvature.hpp"
#include "dnlap/generators.hpp"
#include "dnlap/operators.hpp"
#include "dnlap/rigidity.hpp"
#include "dnlap/spectra.hpp"

namespace dnlap {
namespace {

constexpr double kIdentityTolerance = 1e-10;

class Recorder {
 public:
  Recorder(InstanceAudit& out, std::size_t instance) : out_(out), instance_(instance) {}

  void check(const std::string& name, bool ok, const std::string& detail = {}) {
    ++out_.checks[name];
    if (!ok) out_.failures.push_back({instance_, name, detail});
  }

 private:
  InstanceAudit& out_;
  std::size_t instance_;
};

std::string describe(const ComparisonCertificate& c) {
  std::ostringstream os;
  os.precision(6);
  os << to_string(c.theorem) << " " << to_string(c.verdict);
  for (std::size_t k : c.failing) os << " [i=" << c.records[k].index << " margin " << c.records[k].margin << "]";
  if (!c.note.empty()) os << " (" << c.note << ")";
  return os.str();
}

Vector random_vector(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> d;
  Vector v(n);
  for (double& x : v) x = d(rng);
  return v;
}

void check_identities(const Graph& g, std::size_t instance, Recorder& rec) {
  const Matrix dext = dirichlet_from_extension(g);
  const Matrix did = dirichlet_from_identity(g);
  const Matrix next = neumann_from_extension(g);
  const double scale = std::max(1.0, max_abs(dext));
  rec.check("identity: -Delta^D = -Delta_Omega + diag(Deg_b)",
            max_abs_difference(dext, did) <= kIdentityTolerance * scale);
  rec.check("identity: -Delta^D + Delta^N = A_B Deg^-1 A_Omega",
            max_abs_difference(dext - next, boundary_coupling(g)) <= kIdentityTolerance * scale);

  std::mt19937_64 rng(0x5eedULL + instance);
  const std::size_t n = g.size();
  const auto& omega = g.interior();
  const auto& b = g.boundary();
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const Vector u = random_vector(rng, n);
    const Vector v = random_vector(rng, n);
    const Vector lu = apply_negative_laplacian(g, u);
    const Vector du = normal_derivative(g, u);
    double lhs = 0.0;
    double mag = 0.0;
    for (VertexId y : omega) {
      lhs -= lu[y] * v[y] * g.measure(y);
      mag += std::abs(lu[y] * v[y] * g.measure(y));
    }
    double rhs = -dirichlet_form(g, u, v);
    for (std::size_t k = 0; k < b.size(); ++k) rhs += du[k] * v[b[k]] * g.measure(b[k]);
    worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, mag));
  }
  rec.check("Green's formula", worst <= kIdentityTolerance);
}

}  // namespace

InstanceAudit audit_graph(const Graph& g, std::size_t instance, const AuditConfig& config) {
  InstanceAudit out;
  Recorder rec(out, instance);
  if (auto err = validate(g)) {
    rec.check("valid graph", false, err->message());
    return out;
  }
  const GraphSpectra s = compute_spectra(g);
  const double radius = std::max(1.0, s.spectral_radius());

  const ComparisonCertificate certs[] = {
      compare_neumann_laplacian(s, config.tol), compare_dirichlet_interior(s, config.tol),
      compare_neumann_interior(s, config.tol), compare_dirichlet_neumann(s, config.tol),
      compare_laplacian_dirichlet(s, config.tol)};
  for (const ComparisonCertificate& c : certs) {
    bool margins_ok = true;
    for (const IndexRecord& r : c.records) {
      out.worst_relative_margin = std::min(out.worst_relative_margin, r.margin / radius);
      if (r.margin < -config.tol * radius) margins_ok = false;
    }
    rec.check(std::string("certificate: ") + to_string(c.theorem), margins_ok, describe(c));
  }

  const LapDiriPattern pattern = laplacian_dirichlet_pattern(s, kRigidityTolerance);
  out.full_equality = pattern.all_equal();
  rec.check("LapVsDiri equality not at every index", !out.full_equality);

  for (RigidityId id : {RigidityId::NeuVsLap, RigidityId::DiriVsInterior, RigidityId::NeuVsInterior,
                        RigidityId::DiriVsNeu, RigidityId::LapVsDiri}) {
    const RigidityReport r = check_rigidity(g, id);
    std::ostringstream detail;
    detail << "conclusion " << r.conclusion << " observed " << r.observed;
    for (const RigidityCondition& c : r.conditions) detail << "; " << c.name << ": " << c.holds << " " << c.witness;
    rec.check(std::string("rigidity: ") + to_string(id), r.consistent, detail.str());
    for (const SharedEigenfunction& w : r.witnesses)
      rec.check("shared eigenfunction at single equality", w.found,
                "index " + std::to_string(w.index) + " residual " + std::to_string(w.residual));
  }
  if (has_unit_weight(g)) {
    const RigidityReport r = check_corollary_unit_weight(g);
    rec.check("rigidity: UnitWeightCorollary", r.consistent);
  }
  if (has_normalized_weight(g)) {
    const RigidityReport r = check_corollary_normalized(g);
    rec.check("rigidity: NormalizedCorollary", r.consistent);
  }

  check_identities(g, instance, rec);

  const SpectrumDefects d = spectrum_defects(full_laplacian(g).matrix, s.laplacian);
  rec.check("eigensolver residual", d.residual <= 1e-9 && d.orthonormality <= 1e-9 && d.ascending);

  if (config.curvature) {
    for (double n : {double(INFINITY), 2.0})
      for (LichnerowiczVariant v : kAllLichnerowiczVariants) {
        const ComparisonCertificate c = certify_lichnerowicz(g, s, v, n, config.tol);
        rec.check(std::string("lichnerowicz: ") + to_string(v), c.verdict != Verdict::FailsAt, describe(c));
      }
  }
  if (config.bounds && has_unit_weight(g)) {
    const ComparisonCertificate f = fiedler_bounds(g, s, config.tol);
    rec.check("bounds: FiedlerType", f.verdict != Verdict::FailsAt, describe(f));
    const ComparisonCertificate fr = friedman_bounds(g, s, config.tol);
    rec.check("bounds: FriedmanType", fr.verdict != Verdict::FailsAt, describe(fr));
  }
  return out;
}

AuditReport run_audit(const AuditConfig& config) {
  std::vector<InstanceAudit> results(config.count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < config.count; k = next++) {
      try {
        results[k] = audit_graph(audit_instance(config.seed, k, config.max_vertices), k, config);
      } catch (const std::exception& e) {
        results[k].failures.push_back({k, "exception", e.what()});
      }
    }
  };
  const std::size_t threads = std::clamp<std::size_t>(config.threads, 1, std::max<std::size_t>(1, config.count));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  AuditReport report;
  report.config = config;
  report.instances = config.count;
  for (const InstanceAudit& r : results) {
    for (const auto& [name, count] : r.checks) report.checks[name] += count;
    report.failures.insert(report.failures.end(), r.failures.begin(), r.failures.end());
    report.worst_relative_margin = std::min(report.worst_relative_margin, r.worst_relative_margin);
    if (r.full_equality) ++report.full_equality_instances;
  }
  return report;
}

}  // namespace dnlap
