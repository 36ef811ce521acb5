#include <doctest.h>

#include <random>

#include "qhopf/twist.hpp"

using namespace qhopf;

namespace {

SkewPrimitiveDatum sl2(int n) {
  SkewPrimitiveDatum d;
  d.n = n;
  d.q_exp = 1;
  d.a_matrix = {{2}};
  d.nilpotency = {n * n};
  d.name = "sl2";
  return d;
}

// (1 x F)(id x Delta)(F) Phi (Delta x id)(F^-1)(F^-1 x 1), straight from the definition.
AlgElement generic_associator(const QuasiHopf& h, const AlgElement& f, const AlgElement& f_inv) {
  const AlgElement one = h.one(1);
  return tensor_elem(one, f) * delta_at(h, 2, 1).apply(f) * h.phi *
         delta_at(h, 2, 0).apply(f_inv) * tensor_elem(f_inv, one);
}

int carry3(int c, int d) { return (c + d) >= 3 ? 1 : 0; }

}  // namespace

TEST_CASE("c(z, y) and its periodicity") {
  const int n = 3;
  const CycloNum q = root_of_unity(9, 1);
  for (int z = -10; z < 20; ++z) {
    for (int y = -10; y < 20; ++y) {
      const int zr = ((z % 9) + 9) % 9, yr = ((y % 9) + 9) % 9;
      CHECK(c_coeff(q, z, y, n) == root_of_unity(9, -zr * (yr - yr % 3)));
    }
  }
  for (int k : {1, 2, 4, 5, 7, 8}) CHECK(check_c_periodicity(root_of_unity(9, k), 3).pass);
  for (int k : {1, 2, 3, 24}) CHECK(check_c_periodicity(root_of_unity(25, k), 5).pass);
  // q of order 18 is not the intended parameter: the ratio is not 3-periodic.
  CHECK_FALSE(check_c_periodicity(root_of_unity(18, 1), 3).pass);
}

TEST_CASE("cyclic twist: twist element, fast associator and dJ = Phi_s") {
  const QuasiHopf h = cyclic_group_hopf(9, 1);
  CHECK(verify_all(h).all_pass());
  const TwistElement j = build_J_cyclic(h, 3);
  CHECK(check_twist_element(h, j).pass);
  const AlgElement fast = twist_associator(h, j);
  CHECK(fast == generic_associator(h, j.carrier, j.inverse));
  // Reversed direction is the twist by J^-1, whose associator is the inverse here.
  const AlgElement rev = twist_associator(h, j, TwistDirection::Inverse);
  CHECK(rev == generic_associator(h, j.inverse, j.carrier));
  CHECK(rev * fast == h.one(3));
  CHECK(rev != fast);
  const QuasiHopf t = twist(h, j);
  CHECK(verify_all(t).all_pass());
  for (int k : {1, 2, 4, 5, 7, 8}) CHECK(check_dJ_phi_s(3, k).pass);
  for (int k : {1, 2, 3, 24}) CHECK(check_dJ_phi_s(5, k).pass);
}

TEST_CASE("a twist element without counit normalisation is rejected") {
  const QuasiHopf h = cyclic_group_hopf(9, 1);
  TwistElement j = build_J_cyclic(h, 3);
  j.carrier = CycloNum(9, 2) * j.carrier;
  j.inverse = CycloNum(9, BigRational(1, 2)) * j.inverse;
  CHECK_FALSE(check_twist_element(h, j).pass);
}

TEST_CASE("sl2, n = 3: the fast associator agrees with the definition") {
  const SkewHopf h = build_skew_primitive_hopf(sl2(3));
  const TwistElement j = build_big_J(h);
  CHECK(check_twist_element(h.hopf, j).pass);
  CHECK(twist_associator(h.hopf, j) == generic_associator(h.hopf, j.carrier, j.inverse));
}

TEST_CASE("sl2, n = 3: the subalgebra A") {
  const SkewHopf h = build_skew_primitive_hopf(sl2(3));
  const ExtractedA e = extract_subalgebra_A(h);
  CHECK(e.lemmas.all_pass());
  for (const char* name : {"closure", "lemma41", "lemma42", "antipode_in_A", "dimension_law"}) {
    CAPTURE(name);
    REQUIRE(e.lemmas.find(name) != nullptr);
    CHECK(e.lemmas.find(name)->pass);
  }
  const QuasiHopf& a = e.a.base;
  CHECK(a.alg->dim() == 27);
  CHECK(verify_all(a).all_pass());
  CHECK(check_grading(e.a).pass);
  CHECK(check_twisted_antipode(e).pass);

  // Phi(b, c, d) = q^{a b ((c + d) mod n - c - d)} = q^{-6 b carry} = zeta_3^{b carry}.
  const GroupPart& g = *a.group;
  const Index nd = g.nil_dim;
  for (int b = 0; b < 3; ++b) {
    for (int c = 0; c < 3; ++c) {
      for (int d = 0; d < 3; ++d) {
        const Index flat = ((b * nd) * a.alg->dim() + c * nd) * a.alg->dim() + d * nd;
        CHECK(a.phi.coeff(flat) == embed(root_of_unity(3, b * carry3(c, d)), 9));
      }
    }
  }
  CHECK(e.computed_phi == a.phi);
}

TEST_CASE("the closed form pins the twist direction") {
  const SkewHopf h = build_skew_primitive_hopf(sl2(3));
  const ExtractedA e = extract_subalgebra_A(h);
  const TwistElement j = build_big_J(h);
  const AlgElement rev = twist_associator(h.hopf, j, TwistDirection::Inverse);
  const auto restricted = e.embedding.restrict(rev);
  // Twisting by J^-1 gives the reciprocal associator on A, not the closed form.
  REQUIRE(restricted.has_value());
  CHECK(*restricted != e.a.base.phi);
  CHECK(*restricted * e.a.base.phi == e.a.base.one(3));
}

TEST_CASE("the embedding of A: include and restrict are inverse") {
  const ExtractedA e = extract_subalgebra_A(build_skew_primitive_hopf(sl2(3)));
  const SubalgebraEmbedding& emb = e.embedding;
  std::mt19937 rng(7);
  const Space s1{emb.sub(), 1};
  for (int trial = 0; trial < 20; ++trial) {
    AlgElement x(s1);
    for (int t = 0; t < 4; ++t) x += CycloNum(9, static_cast<std::int64_t>(rng() % 5) - 2) *
                                     AlgElement::basis(s1, rng() % s1.dim());
    const AlgElement y = emb.include(x);
    const auto back = emb.restrict(y);
    REQUIRE(back.has_value());
    CHECK(*back == x);
  }
  // A single ambient idempotent is not in A.
  const AlgElement lone = AlgElement::basis(Space{emb.ambient(), 1}, 0);
  CHECK_FALSE(emb.restrict(lone).has_value());
  CHECK(emb.outside_witness(lone).has_value());
  // Inclusion is multiplicative.
  const AlgElement u = AlgElement::basis(s1, 4), v = AlgElement::basis(s1, 10);
  CHECK(emb.include(u * v) == emb.include(u) * emb.include(v));
}

TEST_CASE("other data: trivial, a11 = n, and a rank-2 quantum linear space") {
  SkewPrimitiveDatum triv = sl2(3);
  triv.a_matrix = {{0}};
  triv.nilpotency = {1};
  const ExtractedA t = extract_subalgebra_A(build_skew_primitive_hopf(triv));
  CHECK(t.lemmas.all_pass());
  CHECK(t.a.base.alg->dim() == 3);
  CHECK(t.a.base.phi == t.a.base.one(3));

  SkewPrimitiveDatum a11 = sl2(3);
  a11.a_matrix = {{3}};
  a11.nilpotency = {3};
  const ExtractedA u = extract_subalgebra_A(build_skew_primitive_hopf(a11));
  CHECK(u.lemmas.all_pass());
  CHECK(u.a.base.alg->dim() == 9);
  CHECK(u.a.base.phi == u.a.base.one(3));
  CHECK(verify_all(u.a.base).all_pass());

  SkewPrimitiveDatum qls = sl2(3);
  qls.m = 2;
  qls.a_matrix = {{3, 1}, {-1, 3}};
  qls.nilpotency = {3, 3};
  qls.cross_relations = {{1, 0, {{1, -1, {{0, 1}, {1, 1}}}}}};
  const SkewHopf hq = build_skew_primitive_hopf(qls);
  CHECK(hq.hopf.alg->dim() == 729);
  const ExtractedA v = extract_subalgebra_A(hq);
  CHECK(v.lemmas.all_pass());
  CHECK(v.a.base.alg->dim() == 81);
  CHECK(verify_all(v.a.base).all_pass());
  // The off-diagonal entries still give a non-trivial associator.
  CHECK(v.a.base.phi != v.a.base.one(3));
}
