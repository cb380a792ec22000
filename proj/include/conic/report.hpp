#pragma once
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace conic {

// One verified statement. `reference` names the mathematical result the
// check exercises; `asserted` distinguishes gating checks from informational
// observations (explorations outside any proven statement).
struct CheckResult {
  std::string name;
  std::string reference;
  std::string expected;
  std::string observed;
  bool pass = false;
  bool asserted = true;
  std::optional<nlohmann::json> parameters;
  std::optional<nlohmann::json> witness;

  nlohmann::json to_json() const;
};

// A certificate is the machine-readable outcome of a verification run. A
// failing certificate always carries a concrete witness in the failing check.
class Certificate {
 public:
  Certificate() = default;
  explicit Certificate(std::string subject) : subject_(std::move(subject)) {}

  void add(CheckResult r) { checks_.push_back(std::move(r)); }
  void add_pass(const std::string& name, const std::string& reference,
                const std::string& expected, const std::string& observed);
  void add_check(const std::string& name, const std::string& reference,
                 const std::string& expected, const std::string& observed, bool pass,
                 std::optional<nlohmann::json> witness = std::nullopt);

  const std::string& subject() const { return subject_; }
  const std::vector<CheckResult>& checks() const { return checks_; }
  std::vector<CheckResult>& checks() { return checks_; }

  bool pass() const;  // every asserted check passed
  const CheckResult* first_failure() const;

  nlohmann::json to_json() const;

 private:
  std::string subject_;
  std::vector<CheckResult> checks_;
};

// Deterministic decimal rendering for floating-point values in certificates
// (exact integers are emitted as JSON integers instead).
std::string decimal_string(double v);

// Aggregate bundle: {"tool_version", "config", "pass", "checks": [...]}.
nlohmann::json report_bundle(const nlohmann::json& config,
                             const std::vector<Certificate>& certificates);

}  // namespace conic
