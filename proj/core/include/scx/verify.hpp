#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scx/check.hpp"
#include "scx/homology.hpp"

namespace scx {

struct ReportRecord {
  int trial = -1;  // -1 for named examples
  std::string check;
  std::string input;  // digest of the generated input, or the example name
  std::string detail;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  std::string exact_lhs;
  std::string exact_rhs;
  bool pass = true;
  bool vacuous = false;
  bool applicable = true;
  std::string note;

  bool operator==(const ReportRecord&) const = default;
};

struct VerificationReport {
  std::string suite;
  std::uint64_t seed = 0;
  int trials = 0;
  Tolerances tol;
  std::vector<ReportRecord> records;
  std::optional<double> wall_seconds;

  bool pass() const;
  std::size_t failures() const;
  void add(int trial, const std::string& input, const CheckResult& r);

  /// indent < 0 gives compact output. Non-finite numbers are written as
  /// the strings "inf", "-inf" and "nan".
  std::string to_json(int indent = -1) const;
  /// Throws ParseError.
  static VerificationReport from_json(std::string_view text);
  std::string to_table() const;
};

inline bool operator==(const Tolerances& a, const Tolerances& b) {
  return a.kernel == b.kernel && a.slack == b.slack;
}

inline bool operator==(const VerificationReport& a, const VerificationReport& b) {
  return a.suite == b.suite && a.seed == b.seed && a.trials == b.trials && a.tol == b.tol &&
         a.records == b.records && a.wall_seconds == b.wall_seconds;
}

struct CampaignOptions {
  std::uint64_t seed = 42;
  int trials = 100;
  int n_max = 7;
  int d_max = 3;
  Tolerances tol;
  bool stretch = false;
};

/// Names accepted by run_suite.
const std::vector<std::string>& suite_names();

/// Runs a randomized property campaign. Every input is rebuilt from
/// (seed, trial) alone. Throws InputError for an unknown suite.
VerificationReport run_suite(const std::string& name, const CampaignOptions& options);

/// Names accepted by reproduce.
const std::vector<std::string>& example_names();

/// Checks the named extremal examples. The pg33 homology check runs only
/// with options.stretch. Throws InputError for an unknown name.
VerificationReport reproduce(const std::string& name, const CampaignOptions& options);

/// 64-bit FNV-1a of a string, as 16 hex digits.
std::string digest(std::string_view text);

}  // namespace scx
