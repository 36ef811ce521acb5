#pragma once

// 3-cocycles on finite abelian groups with values in mu_L, stored as
// exponents of zeta_L. Written additively, the cocycle identity reads
//   w(h,k,l) + w(g,h+k,l) + w(g,h,k) = w(g+h,k,l) + w(g,h,k+l)  (mod L),
// which is the pentagon for a diagonal associator sum w(b,c,d) 1_b x 1_c x 1_d.

#include "qhopf/qhopf.hpp"

namespace qhopf {

struct SkewPrimitiveDatum;

struct AbelianGroup {
  std::vector<int> orders;  // Z_{d_1} x ... x Z_{d_k}, first component most significant

  Index size() const;
  std::vector<int> decode(Index u) const;
  Index encode(const std::vector<int>& u) const;
  Index add(Index u, Index v) const;
  Index scale(Index u, std::int64_t k) const;
  int order_of(Index u) const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

struct Cocycle3 {
  AbelianGroup group;
  std::int64_t value_order = 1;       // L
  std::vector<std::int64_t> table;    // dense, index (g * |G| + h) * |G| + k, values in [0, L)

  static Cocycle3 constant(const AbelianGroup& g);
  std::int64_t at(Index g, Index h, Index k) const;
  /// Same class data over the multiple value order L * factor.
  Cocycle3 lifted(std::int64_t order) const;

  json to_json() const;
  static Cocycle3 from_json(const json& j);

  friend bool operator==(const Cocycle3&, const Cocycle3&) = default;
};

/// 2-cochain mu: G^2 -> Z_L and its coboundary
///   (d mu)(g,h,k) = mu(h,k) - mu(g+h,k) + mu(g,h+k) - mu(g,h).
struct Cochain2 {
  AbelianGroup group;
  std::int64_t value_order = 1;
  std::vector<std::int64_t> table;  // index g * |G| + h

  json to_json() const;
};
Cocycle3 coboundary(const Cochain2& mu);

/// Reads Phi = sum w(b,c,d) 1_b x 1_c x 1_d off a diagonal associator.
/// Throws AlgebraError for non-diagonal Phi or values that are not roots of unity.
Cocycle3 cocycle_from_phi(const QuasiHopf& h);
CheckResult check_cocycle(const Cocycle3& w);

struct CoboundaryResult {
  bool trivial = false;
  std::optional<Cochain2> witness;  // values in Z_{|G| L}
  /// When non-trivial: the prime power over which the system is inconsistent.
  json obstruction;
};

/// Decides w = d mu over Z_{L'}, L' = |G| L, by elimination over each prime
/// power dividing L'. Witnesses are checked before being returned.
CoboundaryResult is_coboundary(const Cocycle3& w);

/// w1 - w2 over the lcm of their value orders.
Cocycle3 difference(const Cocycle3& a, const Cocycle3& b);
/// Pullback along Z_d -> G, k -> k * generator.
Cocycle3 restrict_to_cyclic(const Cocycle3& w, Index generator);
/// Pullback along x -> m x on a cyclic group.
Cocycle3 automorphism_pullback(const Cocycle3& w, std::int64_t m);

/// Classes of {H(p, s) : 1 <= s < p} up to the pullbacks along a -> a^m.
std::vector<std::vector<int>> hps_automorphism_orbits(int p);

/// For every i with a_ii != 0 mod n, restricts the cocycle of A to the i-th
/// axis Z_n and records the axes where it is non-trivial.
json not_twist_equivalent_certificate(const GradedQuasiHopf& a, const SkewPrimitiveDatum& d);

}  // namespace qhopf
