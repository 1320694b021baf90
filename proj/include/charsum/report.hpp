#pragma once

/**
 * @file report.hpp
 * @brief Verification records and their JSON / CSV / text renderings.
 *
 * Output is deterministic: field order is fixed and rerunning a command gives
 * byte-identical output except for wall_time_ms (JSON and pretty only).
 */

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "charsum/characters.hpp"
#include "charsum/fourier.hpp"
#include "charsum/gauss_sums.hpp"
#include "charsum/rational.hpp"
#include "charsum/worked_examples.hpp"

namespace charsum {

inline constexpr int kReportSchemaVersion = 1;

inline constexpr const char* kCsvHeader =
    "d,q,label,parity,check,lhs_re,lhs_im,rhs_re,rhs_im,abs_error,tol,terms,tail_bound,pass";

struct VerificationReport {
  std::int64_t modulus = 0;
  std::optional<std::int64_t> discriminant;
  std::string label;
  std::string parity;
  std::string check;  // "theorem:<f>", "lemma1", "lemma2", "example1".."example4"
  std::complex<double> lhs;
  std::complex<double> rhs;
  double abs_error = 0.0;
  double tolerance = 0.0;
  std::int64_t terms_used = 0;
  double tail_bound = 0.0;
  bool pass = false;
  double wall_time_ms = 0.0;
  std::optional<double> remainder_ratio;  // example2
  std::optional<double> decay_slope;      // example4
  std::string notes;
};

struct ReportDocument {
  std::string command;
  std::vector<VerificationReport> reports;
  std::vector<std::string> notices;

  bool all_pass() const;
};

// "%.17g"; non-finite values become "nan", "inf", "-inf".
std::string format_double(double x);

VerificationReport theorem_report(const DirichletCharacter& chi, const std::string& function_name,
                                  const TheoremVerification& v, double tol);
VerificationReport example_report(const examples::IdentityCheck& c);
VerificationReport lemma1_report(std::int64_t d, double tol = kGaussTolerance);
VerificationReport lemma2_report(std::int64_t d, double tol = kGaussTolerance);

std::string to_json(const ReportDocument& doc);
std::string to_csv(const ReportDocument& doc);  // header line plus one row per report
std::string to_pretty(const ReportDocument& doc);

// One line per character mod q: label, conductor, parity, real, primitive, order.
std::string characters_json(const CharacterGroup& group, const std::string& command);
std::string characters_csv(const CharacterGroup& group);
std::string characters_pretty(const CharacterGroup& group);

struct SweepOptions {
  double tol = 1e-8;                                  // examples 1-3
  double lemma_tol = kGaussTolerance;                 // lemma rows
  double polya_tol = examples::kPolyaTolerance;       // example 4
  std::vector<Rational> polya_points = {Rational(1, 2)};
  examples::ExampleOptions example;
};

// Lemma checks and every applicable example for each fundamental discriminant
// with lo <= |d| <= hi. Rows are ordered by (|d|, sign, check id).
std::vector<VerificationReport> sweep(std::int64_t lo, std::int64_t hi, const SweepOptions& options);
std::vector<VerificationReport> sweep(std::int64_t lo, std::int64_t hi);

// min / max of R(chi)/sqrt(q) over the rows that carry it.
struct RemainderSpread {
  double min = 0.0;
  double max = 0.0;
  std::int64_t count = 0;
};
std::optional<RemainderSpread> remainder_spread(const std::vector<VerificationReport>& reports);

}  // namespace charsum
