#pragma once

#include <string>

namespace scx {

/// Outcome of checking one inequality or identity on one input.
///
/// For "lhs >= rhs" claims margin = lhs - rhs. Exact (integer or rational)
/// checks also fill the exact_* strings. A vacuous result (an ∞ sentinel
/// on the bounded side) or an inapplicable conditional claim counts as a
/// pass.
struct CheckResult {
  std::string check;
  std::string detail;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  bool pass = true;
  bool vacuous = false;
  bool applicable = true;
  std::string exact_lhs;
  std::string exact_rhs;
  std::string note;
};

}  // namespace scx
