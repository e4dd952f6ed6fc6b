#include "dnlap/report.hpp"

#include <cmath>
#include <cstdio>

#include <openssl/evp.h>

namespace dnlap {

Json number(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  return x == 0.0 ? 0.0 : x;  // no negative zero
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(number(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

Json values(const std::vector<double>& v) {
  Json a = Json::array();
  for (double x : v) a.push_back(number(x));
  return a;
}

}  // namespace

Json to_json(const GraphSpectra& s) {
  Json j;
  j["type"] = "spectrum";
  j["laplacian"] = values(s.laplacian.values);
  j["dirichlet"] = values(s.dirichlet.values);
  j["neumann"] = values(s.neumann.values);
  j["interior"] = values(s.interior.values);
  std::vector<double> sq;
  for (double v : s.singular.values) sq.push_back(v * v);
  j["singular_squared"] = values(sq);
  j["boundary_degree"] = values(s.boundary_degree);
  return j;
}

Json to_json(const ComparisonCertificate& c) {
  Json j;
  j["type"] = "certificate";
  j["theorem"] = to_string(c.theorem);
  j["verdict"] = to_string(c.verdict);
  j["tolerance"] = number(c.tolerance);
  Json failing = Json::array();
  for (std::size_t k : c.failing) failing.push_back(c.records[k].index);
  j["failing_indices"] = failing;
  if (!c.note.empty()) j["note"] = c.note;
  Json records = Json::array();
  for (const IndexRecord& r : c.records) {
    Json e;
    e["index"] = r.index;
    e["item"] = r.item;
    e["value"] = number(r.value);
    e["lower"] = r.lower ? number(*r.lower) : Json(nullptr);
    e["upper"] = r.upper ? number(*r.upper) : Json(nullptr);
    e["margin"] = number(r.margin);
    e["equality"] = r.equality;
    records.push_back(std::move(e));
  }
  j["records"] = records;
  return j;
}

Json to_json(const RigidityReport& r) {
  Json j;
  j["type"] = "rigidity";
  j["theorem"] = to_string(r.id);
  j["status"] = to_string(r.status);
  j["conclusion"] = r.conclusion;
  j["observed"] = r.observed;
  j["consistent"] = r.consistent;
  j["exceptional_index"] = r.exceptional_index ? Json(*r.exceptional_index) : Json(nullptr);
  Json conds = Json::array();
  for (const RigidityCondition& c : r.conditions) {
    Json e;
    e["name"] = c.name;
    e["holds"] = c.holds;
    e["witness"] = c.witness;
    conds.push_back(std::move(e));
  }
  j["conditions"] = conds;
  Json ws = Json::array();
  for (const SharedEigenfunction& w : r.witnesses) {
    Json e;
    e["index"] = w.index;
    e["eigenvalue"] = number(w.eigenvalue);
    e["found"] = w.found;
    e["residual"] = number(w.residual);
    e["function"] = values(w.u);
    ws.push_back(std::move(e));
  }
  j["shared_eigenfunctions"] = ws;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Json to_json(const CurvatureResult& r) {
  Json j;
  j["type"] = "curvature";
  if (r.kind == CurvatureKind::BakryEmery) {
    j["kind"] = "bakry-emery";
    j["dimension"] = number(r.dimension);
    j["per_vertex"] = values(r.per_vertex);
  } else {
    j["kind"] = "ollivier";
    Json edges = Json::array();
    for (const EdgeCurvature& e : r.per_edge) edges.push_back({{"u", e.u}, {"v", e.v}, {"value", number(e.value)}});
    j["per_edge"] = edges;
  }
  j["global_min"] = number(r.global_min);
  return j;
}

Json to_json(const AuditReport& r) {
  Json j;
  j["type"] = "audit";
  j["instances"] = r.instances;
  j["max_vertices"] = r.config.max_vertices;
  j["tolerance"] = number(r.config.tol);
  j["curvature"] = r.config.curvature;
  j["bounds"] = r.config.bounds;
  j["failure_count"] = r.failures.size();
  j["full_equality_instances"] = r.full_equality_instances;
  j["worst_relative_margin"] = number(r.worst_relative_margin);
  Json checks = Json::object();
  for (const auto& [name, count] : r.checks) checks[name] = count;
  j["checks"] = checks;
  Json fails = Json::array();
  for (const AuditFailure& f : r.failures)
    fails.push_back({{"instance", f.instance}, {"check", f.check}, {"detail", f.detail}});
  j["failures"] = fails;
  return j;
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr);
  std::string out;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    out += buf;
  }
  return out;
}

}  // namespace dnlap
