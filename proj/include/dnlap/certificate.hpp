#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace dnlap {

enum class TheoremId {
  NeuVsLap,                // nu_i >= mu_i
  DiriVsInteriorTwoSided,  // mu_i(Omega) + min Deg_b <= lambda_i <= mu_i(Omega) + max Deg_b
  NeuVsInterior,           // nu_i >= mu_i(Omega)
  DiriVsNeuTwoSided,       // nu_i + s_1^2 <= lambda_i <= nu_i + s_|Omega|^2
  LapVsDiri,               // mu_{i+|B|} >= lambda_i
  LichnerowiczBE,
  LichnerowiczOllivier,
  FiedlerType,
  FriedmanType,
};

const char* to_string(TheoremId id);
std::optional<TheoremId> theorem_from_string(const std::string& name);

enum class Verdict { Holds, FailsAt, NotApplicable };
const char* to_string(Verdict v);

/// One certified inequality. One-sided records carry only `lower`
/// (value >= lower); two-sided records carry both bounds and their margin is
/// the smaller of the two gaps. For two-sided records `equality` means both
/// bounds are attained.
struct IndexRecord {
  std::size_t index = 0;  // 1-based, as eigenvalues are numbered
  std::string item;       // sub-statement label, e.g. "nu_2>=nK/(n-1)"
  double value = 0.0;
  std::optional<double> lower;
  std::optional<double> upper;
  double margin = 0.0;
  bool equality = false;
  bool lower_attained = false;
  bool upper_attained = false;
};

struct ComparisonCertificate {
  TheoremId theorem = TheoremId::NeuVsLap;
  std::vector<IndexRecord> records;
  double tolerance = 0.0;  // absolute: relative tolerance times max(1, scale)
  Verdict verdict = Verdict::Holds;
  std::vector<std::size_t> failing;  // positions in `records`
  std::string note;

  bool holds() const { return verdict == Verdict::Holds; }
  /// True iff every record is an equality.
  bool all_equal() const;
  std::size_t equality_count() const;
};

/// Appends a record value >= lower.
void add_lower_bound(ComparisonCertificate& cert, std::size_t index, std::string item, double value,
                     double lower);
/// Appends a record lower <= value <= upper.
void add_two_sided(ComparisonCertificate& cert, std::size_t index, std::string item, double value,
                   double lower, double upper);

/// Fixes the absolute tolerance as relative_tol * max(1, largest magnitude in
/// the records), then fills margins, equality flags, verdict and failing list.
void finalize(ComparisonCertificate& cert, double relative_tol);

ComparisonCertificate not_applicable(TheoremId theorem, std::string reason);

}  // namespace dnlap
