#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "rostkit/tables.hpp"

namespace rostkit {

enum class CheckStatus { Pass, Fail, Skipped, ExpectedMismatch };
std::string check_status_name(CheckStatus s);
CheckStatus parse_check_status(const std::string& s);

struct CheckResult {
  std::string id;
  /// Quoted statement the check reproduces.
  std::string anchor;
  CheckStatus status = CheckStatus::Pass;
  std::string details;
  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

enum class Scope { Quick, Full };

struct VerificationReport {
  std::string scope;
  std::vector<CheckResult> checks;

  int count(CheckStatus s) const;
  /// 0 iff no check failed.
  int exit_code() const { return count(CheckStatus::Fail) == 0 ? 0 : 1; }
  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Quick: every check with rank <= 4. Full: adds kernel recomputations for
/// ranks 5 and 6; E7 and E8 are reported skipped.
VerificationReport verify_all(Scope scope, const DataTables& tables = DataTables::embedded());

nlohmann::json to_json(const VerificationReport& r);
VerificationReport verification_from(const nlohmann::json& j);

}  // namespace rostkit
