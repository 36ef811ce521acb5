#include "qhopf/report.hpp"

#include <algorithm>
#include <cstdlib>

namespace qhopf {


json CheckResult::to_json() const {
  json j;
  j["axiom"] = name;
  j["status"] = pass ? "pass" : "fail";
  if (!witness.is_null()) j["witness"] = witness;
  if (!message.empty()) j["message"] = message;
  j["timing_ms"] = timing_ms;
  return j;
}

bool Report::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

const CheckResult* Report::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

json Report::to_json() const {
  json j;
  j["tool"] = "qhopf";
  j["version"] = kToolVersion;
  j["status"] = all_pass() ? "pass" : "fail";
  j["checks"] = json::array();
  for (const auto& c : checks) j["checks"].push_back(c.to_json());
  return j;
}

std::uint64_t size_limit(std::uint64_t default_limit) {
  if (const char* env = std::getenv("QHOPF_SIZE_LIMIT")) {
    char* end = nullptr;
    auto v = std::strtoull(env, &end, 10);
    if (end != env && v > 0) return v;
  }
  return default_limit;
}

}  // namespace qhopf
