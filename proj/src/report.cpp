#include "conic/report.hpp"

#include <cstdio>

#include "conic/version.hpp"

namespace conic {

nlohmann::json CheckResult::to_json() const {
  nlohmann::json j;
  j["name"] = name;
  j["theorem"] = reference;
  j["paper_ref"] = reference;
  j["expected"] = expected;
  j["observed"] = observed;
  j["pass"] = pass;
  if (!asserted) j["informational"] = true;
  if (parameters) j["parameters"] = *parameters;
  if (witness) j["witness"] = *witness;
  return j;
}

void Certificate::add_pass(const std::string& name, const std::string& reference,
                           const std::string& expected, const std::string& observed) {
  add_check(name, reference, expected, observed, true);
}

void Certificate::add_check(const std::string& name, const std::string& reference,
                            const std::string& expected, const std::string& observed,
                            bool pass, std::optional<nlohmann::json> witness) {
  CheckResult r;
  r.name = name;
  r.reference = reference;
  r.expected = expected;
  r.observed = observed;
  r.pass = pass;
  r.witness = std::move(witness);
  checks_.push_back(std::move(r));
}

bool Certificate::pass() const {
  for (const auto& c : checks_) {
    if (c.asserted && !c.pass) return false;
  }
  return true;
}

const CheckResult* Certificate::first_failure() const {
  for (const auto& c : checks_) {
    if (c.asserted && !c.pass) return &c;
  }
  return nullptr;
}

nlohmann::json Certificate::to_json() const {
  nlohmann::json j;
  j["subject"] = subject_;
  j["pass"] = pass();
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks_) j["checks"].push_back(c.to_json());
  return j;
}

std::string decimal_string(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

nlohmann::json report_bundle(const nlohmann::json& config,
                             const std::vector<Certificate>& certificates) {
  nlohmann::json j;
  j["tool_version"] = kToolVersion;
  j["config"] = config;
  bool all = true;
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& cert : certificates) {
    all = all && cert.pass();
    for (const auto& c : cert.checks()) {
      nlohmann::json cj = c.to_json();
      cj["subject"] = cert.subject();
      checks.push_back(std::move(cj));
    }
  }
  j["pass"] = all;
  j["checks"] = std::move(checks);
  return j;
}

}  // namespace conic
