#pragma once

#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace qhopf {

using json = nlohmann::ordered_json;

struct AlgebraError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when an exhaustive check would exceed the desk-scale guard.
struct SizeLimitError : AlgebraError {
  using AlgebraError::AlgebraError;
};

/// Bad user input (parameters, files); the CLI maps this to exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Outcome of one verification.
struct CheckResult {
  std::string name;
  bool pass = false;
  json witness;  // null when passing
  double timing_ms = 0;
  std::string message;

  json to_json() const;
};

struct Report {
  std::vector<CheckResult> checks;

  bool all_pass() const;
  const CheckResult* find(const std::string& name) const;
  json to_json() const;
};

/// Size guard for exhaustive loops; QHOPF_SIZE_LIMIT overrides the default.
std::uint64_t size_limit(std::uint64_t default_limit);

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

inline const char* kToolVersion = "0.1.0";

}  // namespace qhopf
