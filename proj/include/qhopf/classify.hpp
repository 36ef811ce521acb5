#pragma once

// Integer arithmetic behind the rank bound: the eigenspace split of H[1],
// the braiding-to-Cartan computation and the p = 3 contradiction.

#include <map>

#include "qhopf/qhopf.hpp"

namespace qhopf {

/// r -> dim H_r[1], where H_r[1] = {x : a x a^-1 = Q^r x} for the generator a
/// of a cyclic degree-0 part with 1_i a = Q^i 1_i. Zero-dimensional pieces are omitted.
std::map<int, Index> eigenspace_decomposition(const GradedQuasiHopf& g);

struct BraidingData {
  int p = 3;
  std::int64_t b = 1;
  std::int64_t d = 1;
  bool congruent = true;  // b = d mod p is required

  void validate() const;
};

struct CartanPair {
  std::int64_t a12 = 0;
  std::int64_t a21 = 0;
};

/// a12 = b + d, a21 = (b + d) / (b d) in Z_{p^2}.
CartanPair cartan_from_braiding(const BraidingData& data);
/// a12 a21 = 4 mod p for every pair of units b = d mod p in Z_{p^2}.
CheckResult check_product_is_4(int p);
/// No b = 1 mod 3 in Z_9 solves b^2 + b + 1 = 0.
CheckResult check_p3_contradiction();

enum class FiniteType { A1xA1, A2, B2, G2, NotFiniteType };
const char* to_string(FiniteType t);
FiniteType finite_type_filter(std::int64_t a12, std::int64_t a21);

/// For a graded algebra over C[Z_p] with non-trivial associator: rank H[1] <= 1
/// and dim in {p, p^3}. Algebras outside that scope pass with status "skipped".
CheckResult check_census_entry(const GradedQuasiHopf& g);

}  // namespace qhopf
