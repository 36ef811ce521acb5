#pragma once

#include "qhopf/qhopf.hpp"

namespace qhopf {

bool is_prime(int n);
/// (j + k - (j + k)') / n for representatives j, k in [0, n).
int carry(std::int64_t j, std::int64_t k, int n);

/// The trivial nil algebra: C with one basis element.
AlgebraPtr ground_algebra(int order);
/// Counit of a crossed algebra: eps(1_b m) = [b = 0][m = 1].
LinMap crossed_counit(const AlgebraPtr& alg, const GroupPart& g);
/// Delta(1_b) and S(1_b) for every character b of the group part.
std::vector<AlgElement> group_coproducts(const AlgebraPtr& alg, const GroupPart& g);
std::vector<AlgElement> group_antipodes(const AlgebraPtr& alg, const GroupPart& g);

// ---------------------------------------------------------------------------
// H(p, s): C[Z_p] with associator Phi_s.

struct HpsParams {
  int p = 3;
  int s = 1;
  void validate() const;
};

enum class HpsClass { Plus, Minus };
const char* to_string(HpsClass c);

QuasiHopf build_Hps(const HpsParams& params);
HpsClass classify_Hps(const HpsParams& params);
/// The exponent table s*i*carry(j,k) mod p of Phi_s, as a function on Z_p^3.
std::int64_t hps_exponent(int p, int s, std::int64_t i, std::int64_t j, std::int64_t k);

// ---------------------------------------------------------------------------
// A(q): the p^3-dimensional algebras generated by a and x, q = zeta_{p^2}^k.

struct AqParams {
  int p = 3;
  int q_exp = 1;
  void validate() const;
  int order() const { return p * p; }
  /// s with eps^{-s} = q^p, eps = zeta_p.
  int s() const;
};

GradedQuasiHopf build_Aq(const AqParams& params);
/// The same algebra presented on the monomials a^i x^j.
AlgebraPtr aq_monomial_algebra(const AqParams& params);

// ---------------------------------------------------------------------------
// Skew-primitive Hopf algebras from a datum.

/// later * earlier -> sum scalar * q^q_exp * word, on the e-generators.
struct CrossRelation {
  int later = 0;
  int earlier = 0;
  struct Term {
    std::int64_t scalar = 1;
    int q_exp = 0;
    Word word;
  };
  std::vector<Term> rhs;
};

struct SkewPrimitiveDatum {
  int n = 3;
  int q_exp = 1;  // q = zeta_{n^2}^{q_exp}
  int m = 1;
  std::vector<std::vector<int>> a_matrix;
  std::vector<int> nilpotency;
  std::vector<CrossRelation> cross_relations;
  std::vector<std::vector<int>> pbw_basis;  // optional explicit nil basis
  std::string name = "datum";

  int order() const { return n * n; }
  CycloNum q() const { return root_of_unity(order(), q_exp); }
  void validate() const;

  static SkewPrimitiveDatum from_json(const json& j);
  json to_json() const;
};

struct SkewHopf {
  QuasiHopf hopf;
  AlgebraPtr nil;  // algebra of the e-monomials
  SkewPrimitiveDatum datum;
  std::vector<Index> generator_weights;
};

SkewHopf build_skew_primitive_hopf(const SkewPrimitiveDatum& datum);
/// The presentation model on monomials g^u e^v.
AlgebraPtr skew_monomial_algebra(const SkewPrimitiveDatum& datum);
/// g_i -> g_i, e_i -> 0 is an algebra and coalgebra map onto the group algebra.
CheckResult check_group_projection(const SkewHopf& h);
/// The nil algebra of a datum (monomials in the e_i).
AlgebraPtr nil_algebra(const SkewPrimitiveDatum& datum);
/// Element e_i of a crossed algebra built on nil (zero when e_i is truncated away).
AlgElement nil_generator(const AlgebraPtr& alg, const GroupPart& g, const FinAlgebra& nil,
                         std::size_t i);
/// Total e-degree of every basis element of a crossed algebra.
std::vector<int> nil_degrees(const GroupPart& g, const FinAlgebra& nil);

}  // namespace qhopf
