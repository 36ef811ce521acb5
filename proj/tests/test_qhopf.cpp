#include <doctest.h>

#include "qhopf/families.hpp"

using namespace qhopf;

namespace {

QuasiHopf with_phi(QuasiHopf h, const AlgElement& phi) {
  h.phi = phi;
  return h;
}

// A copy whose coproduct column i is replaced.
QuasiHopf with_delta_column(QuasiHopf h, Index i, SparseVec col) {
  std::vector<SparseVec> cols;
  for (Index t = 0; t < h.alg->dim(); ++t) cols.push_back(t == i ? col : h.delta.column(t));
  h.delta = LinMap::from_table(h.space(1), h.space(2), std::move(cols));
  return h;
}

}  // namespace

TEST_CASE("H(p,s) has the carry associator") {
  for (int p : {3, 5}) {
    for (int s = 1; s < p; ++s) {
      const QuasiHopf h = build_Hps({p, s});
      CHECK(h.alg->dim() == static_cast<Index>(p));
      const GroupPart& g = *h.group;
      // Phi = sum zeta_p^{s i [j + k >= p]} 1_i x 1_j x 1_k.
      for (int i = 0; i < p; ++i) {
        for (int j = 0; j < p; ++j) {
          for (int k = 0; k < p; ++k) {
            const Index flat = (static_cast<Index>(i) * p + j) * p + k;
            const int carry = (j + k) >= p ? 1 : 0;
            CHECK(h.phi.coeff(flat) == root_of_unity(p, s * i * carry));
            CHECK(h.phi_inv.coeff(flat) == root_of_unity(p, -s * i * carry));
          }
        }
      }
      // alpha = a acts on 1_i by zeta^{-s i}.
      for (int i = 0; i < p; ++i) CHECK(h.alpha.coeff(g.idempotent_index(i)) == root_of_unity(p, -s * i));
      CHECK(h.beta == h.one());
    }
  }
}

TEST_CASE("H(p,s) passes every axiom") {
  for (int p : {3, 5, 7}) {
    for (int s = 1; s < p; ++s) {
      CAPTURE(p);
      CAPTURE(s);
      const Report r = verify_all(build_Hps({p, s}));
      CHECK(r.all_pass());
      CHECK(r.checks.size() == 7);
    }
  }
}

TEST_CASE("negative controls: each corruption is caught by its own check") {
  const QuasiHopf h = build_Hps({3, 1});
  const Space s3 = h.space(3);

  // Phi scaled on one component breaks the pentagon.
  auto terms = h.phi.terms();
  terms[13].second = terms[13].second * root_of_unity(3, 1);
  const QuasiHopf bad_phi = with_phi(h, AlgElement(s3, SparseVec::from_terms(terms)));
  const CheckResult pent = check_pentagon(bad_phi);
  CHECK_FALSE(pent.pass);
  CHECK_FALSE(pent.witness.is_null());
  CHECK_FALSE(check_phi_inverse(bad_phi).pass);

  // Trivial Phi on H(3,1): alpha = a no longer satisfies the antipode identities.
  const QuasiHopf trivial = with_phi(h, h.one(3));
  CHECK(check_pentagon(trivial).pass);
  CHECK_FALSE(check_antipode(trivial).pass);

  // A coproduct that is not multiplicative.
  const QuasiHopf bad_delta = with_delta_column(h, 1, h.delta.column(2));
  CHECK_FALSE(check_hom(bad_delta).pass);

  // alpha scaled by 2.
  QuasiHopf bad_alpha = h;
  bad_alpha.alpha = CycloNum(3, 2) * h.alpha;
  CHECK_FALSE(check_antipode(bad_alpha).pass);
}

TEST_CASE("A(q) for p = 3") {
  for (int k : {1, 2, 4, 5, 7, 8}) {
    CAPTURE(k);
    const GradedQuasiHopf g = build_Aq({3, k});
    CHECK(g.base.alg->dim() == 27);
    CHECK(verify_all(g.base).all_pass());
    CHECK(check_grading(g).pass);
    // C[Z_3] tensor C[x]/x^9 graded by the x-degree.
    CHECK(graded_dims(g) == std::vector<Index>(9, 3));
    CHECK(rank_degree_one(g) == BigRational(1));
  }
  CHECK_THROWS_AS(build_Aq({3, 3}), InputError);
  CHECK_THROWS_AS(build_Aq({4, 1}), InputError);
}

TEST_CASE("a grading broken by hand is reported") {
  GradedQuasiHopf g = build_Aq({3, 1});
  // Relabel the degree of one x element.
  for (std::size_t i = 0; i < g.degree.size(); ++i) {
    if (g.degree[i] == 1) {
      g.degree[i] = 2;
      break;
    }
  }
  CHECK_FALSE(check_grading(g).pass);
}

TEST_CASE("skew-primitive Hopf algebras") {
  SkewPrimitiveDatum d;
  d.n = 3;
  d.q_exp = 1;
  d.a_matrix = {{2}};
  d.nilpotency = {9};
  const SkewHopf h = build_skew_primitive_hopf(d);
  CHECK(h.hopf.alg->dim() == 81);
  CHECK(verify_all(h.hopf).all_pass());
  CHECK(check_group_projection(h).pass);
  CHECK(h.hopf.phi == h.hopf.one(3));

  // The monomial model has the same dimension and is associative.
  const AlgebraPtr mono = skew_monomial_algebra(d);
  CHECK(mono->dim() == 81);
  CHECK(check_associativity(*mono).pass);

  // e^N = 0 needs N = ord(q^a).
  SkewPrimitiveDatum bad = d;
  bad.nilpotency = {3};
  CHECK_THROWS_AS(bad.validate(), InputError);
  bad = d;
  bad.q_exp = 3;
  CHECK_THROWS_AS(bad.validate(), InputError);
  bad = d;
  bad.a_matrix = {{2, 0}};
  CHECK_THROWS_AS(bad.validate(), InputError);
}

TEST_CASE("datum JSON round trip") {
  SkewPrimitiveDatum d;
  d.n = 3;
  d.m = 2;
  d.a_matrix = {{3, 1}, {-1, 3}};
  d.nilpotency = {3, 3};
  d.cross_relations = {{1, 0, {{1, -1, {{0, 1}, {1, 1}}}}}};
  d.name = "qls";
  const json j = d.to_json();
  const SkewPrimitiveDatum e = SkewPrimitiveDatum::from_json(j);
  CHECK(e.to_json() == j);
  CHECK_THROWS_AS(SkewPrimitiveDatum::from_json(json{{"n", 3}}), InputError);
}
