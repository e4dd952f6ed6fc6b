#include "dnlap/certificate.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <utility>

namespace dnlap {
namespace {

constexpr std::array<std::pair<TheoremId, const char*>, 9> kTheoremNames{{
    {TheoremId::NeuVsLap, "NeuVsLap"},
    {TheoremId::DiriVsInteriorTwoSided, "DiriVsInteriorTwoSided"},
    {TheoremId::NeuVsInterior, "NeuVsInterior"},
    {TheoremId::DiriVsNeuTwoSided, "DiriVsNeuTwoSided"},
    {TheoremId::LapVsDiri, "LapVsDiri"},
    {TheoremId::LichnerowiczBE, "LichnerowiczBE"},
    {TheoremId::LichnerowiczOllivier, "LichnerowiczOllivier"},
    {TheoremId::FiedlerType, "FiedlerType"},
    {TheoremId::FriedmanType, "FriedmanType"},
}};

}  // namespace

const char* to_string(TheoremId id) {
  for (const auto& [k, name] : kTheoremNames)
    if (k == id) return name;
  return "Unknown";
}

std::optional<TheoremId> theorem_from_string(const std::string& name) {
  for (const auto& [k, n] : kTheoremNames)
    if (name == n) return k;
  return std::nullopt;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "Holds";
    case Verdict::FailsAt: return "FailsAt";
    case Verdict::NotApplicable: return "NotApplicable";
  }
  return "Unknown";
}

bool ComparisonCertificate::all_equal() const {
  return !records.empty() &&
         std::all_of(records.begin(), records.end(), [](const IndexRecord& r) { return r.equality; });
}

std::size_t ComparisonCertificate::equality_count() const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [](const IndexRecord& r) { return r.equality; }));
}

void add_lower_bound(ComparisonCertificate& cert, std::size_t index, std::string item, double value,
                     double lower) {
  IndexRecord r;
  r.index = index;
  r.item = std::move(item);
  r.value = value;
  r.lower = lower;
  cert.records.push_back(std::move(r));
}

void add_two_sided(ComparisonCertificate& cert, std::size_t index, std::string item, double value,
                   double lower, double upper) {
  IndexRecord r;
  r.index = index;
  r.item = std::move(item);
  r.value = value;
  r.lower = lower;
  r.upper = upper;
  cert.records.push_back(std::move(r));
}

void finalize(ComparisonCertificate& cert, double relative_tol) {
  double scale = 1.0;
  for (const auto& r : cert.records) {
    scale = std::max(scale, std::abs(r.value));
    if (r.lower) scale = std::max(scale, std::abs(*r.lower));
    if (r.upper) scale = std::max(scale, std::abs(*r.upper));
  }
  cert.tolerance = relative_tol * scale;
  cert.failing.clear();
  for (std::size_t k = 0; k < cert.records.size(); ++k) {
    auto& r = cert.records[k];
    const double below = r.lower ? r.value - *r.lower : INFINITY;
    const double above = r.upper ? *r.upper - r.value : INFINITY;
    r.margin = std::min(below, above);
    r.lower_attained = r.lower && std::abs(below) <= cert.tolerance;
    r.upper_attained = r.upper && std::abs(above) <= cert.tolerance;
    r.equality = (!r.lower || r.lower_attained) && (!r.upper || r.upper_attained);
    if (r.margin < -cert.tolerance) cert.failing.push_back(k);
  }
  if (cert.verdict != Verdict::NotApplicable)
    cert.verdict = cert.failing.empty() ? Verdict::Holds : Verdict::FailsAt;
}

ComparisonCertificate not_applicable(TheoremId theorem, std::string reason) {
  ComparisonCertificate c;
  c.theorem = theorem;
  c.verdict = Verdict::NotApplicable;
  c.note = std::move(reason);
  return c;
}

}  // namespace dnlap
