#pragma once

// Quasi-Hopf structures and the exact axiom verifier (Drinfeld conventions):
//   Phi (Delta x id)Delta(h) Phi^-1 = (id x Delta)Delta(h)
//   (id x id x Delta)(Phi) (Delta x id x id)(Phi) = (1 x Phi)(id x Delta x id)(Phi)(Phi x 1)
//   S(h_1) alpha h_2 = eps(h) alpha,  h_1 beta S(h_2) = eps(h) beta
//   Phi^1 beta S(Phi^2) alpha Phi^3 = 1,  S(Phibar^1) alpha Phibar^2 beta S(Phibar^3) = 1

#include <optional>

#include "qhopf/group.hpp"

namespace qhopf {

struct QuasiHopf {
  std::string name;
  AlgebraPtr alg;
  LinMap delta;     // H -> H^2
  LinMap counit;    // H -> H^0
  LinMap antipode;  // H -> H
  AlgElement alpha;
  AlgElement beta;
  AlgElement phi;
  AlgElement phi_inv;
  /// Present when alg is a crossed algebra in the idempotent basis.
  std::optional<GroupPart> group;
  json provenance = json::object();

  Space space(int degree) const { return Space{alg, degree}; }
  AlgElement one(int degree = 1) const { return AlgElement::unit(space(degree)); }
  AlgElement apply_delta(const AlgElement& x) const { return delta.apply(x); }
};

struct GradedQuasiHopf {
  QuasiHopf base;
  std::vector<int> degree;  // per basis element
};

CheckResult check_hom(const QuasiHopf& h);
CheckResult check_counit(const QuasiHopf& h);
CheckResult check_counit_phi(const QuasiHopf& h);
CheckResult check_phi_inverse(const QuasiHopf& h);
CheckResult check_quasi_coassociativity(const QuasiHopf& h);
CheckResult check_pentagon(const QuasiHopf& h);
/// All four identities; the witness names the one that failed.
CheckResult check_antipode(const QuasiHopf& h);
Report verify_all(const QuasiHopf& h);

CheckResult check_grading(const GradedQuasiHopf& g);
/// Dimensions of the graded pieces, indexed by degree.
std::vector<Index> graded_dims(const GradedQuasiHopf& g);
/// dim H[1] / dim H[0].
BigRational rank_degree_one(const GradedQuasiHopf& g);

/// Tensor extensions used by the checks, e.g. delta_at(h, 3, 1) = id x Delta x id.
LinMap delta_at(const QuasiHopf& h, int degree, int position);
LinMap counit_at(const QuasiHopf& h, int degree, int position);

/// Phi^{-1} computed for an associator that is diagonal in the group idempotents.
AlgElement invert_diagonal(const QuasiHopf& h, const AlgElement& x);

}  // namespace qhopf
