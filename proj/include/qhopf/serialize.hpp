#pragma once

// JSON files for algebras. Scalars are written as
//   {"order": N, "coeffs": [[num, den], ...]}
// with one canonical power-basis coefficient per k < phi(N); integers that do
// not fit in 64 bits are written as decimal strings.

#include <filesystem>

#include "qhopf/qhopf.hpp"

namespace qhopf {

inline constexpr int kFormatVersion = 1;

json cyclo_to_json(const CycloNum& c);
CycloNum cyclo_from_json(const json& j, int expected_order);

/// A quasi-Hopf algebra as stored on disk; degree is empty when the file has none.
struct AlgebraFile {
  QuasiHopf hopf;
  std::vector<int> degree;

  static AlgebraFile from(const GradedQuasiHopf& g) { return {g.base, g.degree}; }
  GradedQuasiHopf graded() const;

  json to_json() const;
  /// Throws InputError on malformed or inconsistent content.
  static AlgebraFile from_json(const json& j);

  static AlgebraFile read(const std::filesystem::path& path);
  void write(const std::filesystem::path& path) const;
};

/// Reads a JSON file, mapping I/O and syntax errors to InputError.
json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const json& j);

}  // namespace qhopf
