#pragma once

// Twists of quasi-Hopf algebras (Drinfeld conventions, F = sum f1 x f2,
// F^-1 = sum g1 x g2):
//   Delta_F = F Delta F^-1
//   Phi_F   = (1 x F)(id x Delta)(F) Phi (Delta x id)(F^-1)(F^-1 x 1)
//   alpha_F = S(g1) alpha g2,  beta_F = f1 beta S(f2),  S_F = S

#include "qhopf/families.hpp"

namespace qhopf {

/// Exponent -z (y - y') of c(z, y) = q^{-z(y - y')}, with z, y reduced mod n^2
/// and y' the remainder of y mod n.
std::int64_t c_exponent(std::int64_t z, std::int64_t y, int n);
CycloNum c_coeff(const CycloNum& q, std::int64_t z, std::int64_t y, int n);
/// f(i, j) = c(i, j) / c(i - 1, j) q^j is n-periodic in i and in j.
CheckResult check_c_periodicity(const CycloNum& q, int n);

struct TwistElement {
  AlgElement carrier;  // in H^2
  AlgElement inverse;
};

enum class TwistDirection { Forward, Inverse };

/// carrier * inverse = 1 and (eps x id)(F) = (id x eps)(F) = 1.
CheckResult check_twist_element(const QuasiHopf& h, const TwistElement& f);

/// The Hopf algebra C[Z_order] in the idempotent basis, 1_i g = zeta^{q_exp i} 1_i.
QuasiHopf cyclic_group_hopf(int order, int q_exp);
/// J = sum c(i, j) 1_i x 1_j on C[Z_{p^2}].
TwistElement build_J_cyclic(const QuasiHopf& h, int p);
/// J = sum_{b, c} prod_ij c(b_i, c_j)^{a_ij} 1_b x 1_c on the Hopf algebra of a datum.
TwistElement build_big_J(const SkewHopf& h);

LinMap twist_coproduct(const QuasiHopf& h, const TwistElement& f,
                       TwistDirection dir = TwistDirection::Forward);
AlgElement twist_associator(const QuasiHopf& h, const TwistElement& f,
                            TwistDirection dir = TwistDirection::Forward);
/// The twisted algebra H^F (antipode unchanged).
QuasiHopf twist(const QuasiHopf& h, const TwistElement& f,
                TwistDirection dir = TwistDirection::Forward);
/// Gauges (S, alpha, beta) by u = beta: S' = u S u^-1, alpha' = u alpha, beta' = 1.
/// beta must be diagonal in the group idempotents.
QuasiHopf gauge_beta(const QuasiHopf& h);

/// A crossed algebra over a quotient group G/K sitting inside one over G with
/// the same nil part: 1_b m maps to the sum of 1_c m over all c = b mod the
/// sub orders.
class SubalgebraEmbedding {
 public:
  SubalgebraEmbedding(AlgebraPtr sub, GroupPart sub_group, AlgebraPtr ambient,
                      GroupPart ambient_group);

  const AlgebraPtr& sub() const { return sub_; }
  const AlgebraPtr& ambient() const { return ambient_; }
  const GroupPart& sub_group() const { return sub_group_; }

  AlgElement include(const AlgElement& x) const;
  /// The preimage of x, or nullopt when x is not in the image.
  std::optional<AlgElement> restrict(const AlgElement& x) const;
  /// An ambient basis tensor of x outside the image, for witnesses.
  std::optional<std::vector<std::string>> outside_witness(const AlgElement& x) const;

 private:
  std::optional<Index> project(Index flat, int degree) const;

  AlgebraPtr sub_;
  GroupPart sub_group_;
  AlgebraPtr ambient_;
  GroupPart ambient_group_;
  Index fibre_ = 1;
  std::vector<Index> project_;            // ambient basis -> sub basis
  std::vector<std::vector<Index>> lift_;  // sub basis -> ambient basis
};

/// Exponent of q in the closed-form associator at (b, c, d) in Z_n^m.
std::int64_t closed_form_exponent(const SkewPrimitiveDatum& d, const std::vector<int>& b,
                                  const std::vector<int>& c, const std::vector<int>& e);
/// Group part Z_n^m of A, 1_b g_i^n = q^{n b_i} 1_b.
GroupPart subalgebra_group(const SkewPrimitiveDatum& d, Index nil_dim);
AlgElement closed_form_phi(const SkewPrimitiveDatum& d, const AlgebraPtr& a,
                           const GroupPart& ga);

struct ExtractedA {
  GradedQuasiHopf a;
  SubalgebraEmbedding embedding;
  QuasiHopf twisted;         // H^J with beta gauged to 1
  AlgElement computed_phi;   // dJ restricted to A^3
  /// lemma41, closure, lemma42, antipode_in_A, dimension_law.
  Report lemmas;
};

/// A = C[Z_n^m] B inside H^J, with Delta_J, eps, the gauged antipode and the
/// closed-form associator. Throws AlgebraError when a structure map leaves A.
ExtractedA extract_subalgebra_A(const SkewHopf& h);

/// S' and alpha' stay inside A and A satisfies the antipode identities.
CheckResult check_twisted_antipode(const ExtractedA& e);

/// dJ for the cyclic twist on C[Z_{p^2}] restricted to C[Z_p] equals the
/// associator of H(p, s) with eps^-s = q^p.
CheckResult check_dJ_phi_s(int p, int q_exp);

}  // namespace qhopf
