#include <doctest.h>


#include "qhopf/families.hpp"

using namespace qhopf;

namespace {

AlgebraPtr quantum_plane(int order, int q_exp, int bound) {
  Presentation pres;
  pres.name = "quantum plane";
  pres.scalar_order = order;
  pres.gens = {{"x", bound, false}, {"y", bound, false}};
  pres.rules = {{1, 0, {{root_of_unity(order, q_exp), {{0, 1}, {1, 1}}}}}};
  return normal_form_quotient(pres);
}

}  // namespace

TEST_CASE("normal forms in the quantum plane") {
  Presentation pres;
  pres.scalar_order = 3;
  pres.gens = {{"x", 3, false}, {"y", 3, false}};
  pres.rules = {{1, 0, {{root_of_unity(3, 1), {{0, 1}, {1, 1}}}}}};
  // y^2 x^2: four swaps, each contributing q.
  auto nf = normal_form(pres, {{1, 2}, {0, 2}});
  REQUIRE(nf.size() == 1);
  CHECK(nf[0].first == std::vector<int>{2, 2});
  CHECK(nf[0].second == root_of_unity(3, 4));
  CHECK(normal_form(pres, {{0, 2}, {1, 1}, {0, 1}}).empty());  // x^3 = 0

  auto alg = quantum_plane(3, 1, 3);
  CHECK(alg->dim() == 9);
  CHECK(check_associativity(*alg).pass);
  CHECK(check_unit(*alg).pass);
  const AlgElement x = word_element(alg, {{0, 1}});
  const AlgElement y = word_element(alg, {{1, 1}});
  CHECK(y * x == root_of_unity(3, 1) * (x * y));
  CHECK(power(x, 3).is_zero());
}

TEST_CASE("cyclic generators wrap around") {
  Presentation pres;
  pres.scalar_order = 5;
  pres.gens = {{"g", 5, true}};
  auto alg = normal_form_quotient(pres);
  CHECK(alg->dim() == 5);
  const AlgElement g = word_element(alg, {{0, 1}});
  CHECK(power(g, 5) == AlgElement::unit(Space{alg, 1}));
  CHECK(power(g, 7) == power(g, 2));
}

TEST_CASE("tensor powers encode the first factor most significantly") {
  auto alg = quantum_plane(3, 1, 2);
  const Space s3{alg, 3};
  CHECK(s3.dim() == 64);
  std::vector<Index> t{1, 2, 3};
  CHECK(s3.encode(t) == 1 * 16 + 2 * 4 + 3);
  CHECK(s3.decode(27) == std::vector<Index>{1, 2, 3});
  const Space s1{alg, 1};
  const AlgElement a = AlgElement::basis(s1, 1) + AlgElement::basis(s1, 2);
  const AlgElement b = AlgElement::basis(s1, 3);
  const AlgElement ab = tensor_elem(a, b);
  CHECK(ab.coeff(1 * 4 + 3).is_one());
  CHECK(ab.coeff(2 * 4 + 3).is_one());
  CHECK(ab.terms().size() == 2);
  // (u x v)(u' x v') = uu' x vv'
  const AlgElement u = AlgElement::basis(s1, 1), v = AlgElement::basis(s1, 2);
  CHECK(tensor_elem(u, v) * tensor_elem(v, u) == tensor_elem(u * v, v * u));
}

TEST_CASE("rank over the cyclotomic field") {
  // Vandermonde rows of the 5 distinct 5th roots of unity.
  std::vector<SparseVec> rows;
  for (int i = 0; i < 5; ++i) {
    std::vector<SparseVec::Term> t;
    for (int k = 0; k < 5; ++k) t.emplace_back(k, root_of_unity(5, i * k));
    rows.push_back(SparseVec::from_terms(t));
  }
  CHECK(rank(rows) == 5);
  rows.push_back(rows[2]);
  CHECK(rank(rows) == 5);
  // zeta * row0 is dependent on row0.
  std::vector<SparseVec::Term> t;
  for (const auto& [k, c] : rows[0].terms()) t.emplace_back(k, c * root_of_unity(5, 1));
  CHECK(rank({rows[0], SparseVec::from_terms(t)}) == 1);
  CHECK(rank({}) == 0);
}

TEST_CASE("the idempotent model of A(q) is isomorphic to the monomial model") {
  for (int k : {1, 2, 4}) {
    CAPTURE(k);
    const AqParams params{3, k};
    const int p = params.p, N = params.order();
    const GradedQuasiHopf aq = build_Aq(params);
    const AlgebraPtr idem = aq.base.alg;
    const AlgebraPtr mono = aq_monomial_algebra(params);
    REQUIRE(mono->dim() == idem->dim());
    CHECK(check_associativity(*mono).pass);
    CHECK(check_associativity(*idem).pass);

    // 1_i x^m -> (1/p) sum_k r^{-ik} a^k x^m with r = q^p.
    const Space ms{mono, 1};
    const Index nd = aq.base.group->nil_dim;
    const CycloNum inv_p(N, BigRational(1, p));
    std::vector<AlgElement> image;
    for (Index e = 0; e < idem->dim(); ++e) {
      const int i = static_cast<int>(e / nd);
      const int m = static_cast<int>(e % nd);
      AlgElement y(ms);
      for (int t = 0; t < p; ++t) {
        y += (inv_p * root_of_unity(N, -std::int64_t{p} * k * i * t)) *
             AlgElement::basis(ms, mono->monomial_index({t, m}));
      }
      image.push_back(std::move(y));
    }
    auto apply = [&](const SparseVec& v) {
      AlgElement y(ms);
      for (const auto& [e, c] : v.terms()) y += c * image[e];
      return y;
    };
    bool multiplicative = true;
    for (Index s = 0; s < idem->dim() && multiplicative; ++s) {
      for (Index t = 0; t < idem->dim(); ++t) {
        if (image[s] * image[t] != apply(idem->product(s, t))) {
          multiplicative = false;
          break;
        }
      }
    }
    CHECK(multiplicative);
    CHECK(apply(idem->unit()) == AlgElement::unit(ms));
    std::vector<SparseVec> rows;
    for (const auto& y : image) rows.push_back(y.vec());
    CHECK(rank(rows) == idem->dim());
  }
}

TEST_CASE("linear maps: identity, tables and tensor products") {
  auto alg = quantum_plane(3, 1, 2);
  const Space s1{alg, 1}, s2{alg, 2};
  std::vector<SparseVec> cols;
  for (Index i = 0; i < alg->dim(); ++i) cols.push_back(SparseVec::single((i + 1) % alg->dim(), CycloNum(3, 1)));
  const LinMap shift = LinMap::from_table(s1, s1, cols);
  const LinMap id = LinMap::identity(s1);
  const LinMap both = tensor_map({shift, id});
  const AlgElement u = AlgElement::basis(s1, 1), v = AlgElement::basis(s1, 3);
  CHECK(both.apply(tensor_elem(u, v)) == tensor_elem(shift.apply(u), v));
  CHECK(both.codomain() == s2);
}

TEST_CASE("structure constants that break associativity or the unit are caught") {
  Presentation pres;
  pres.scalar_order = 3;
  pres.gens = {{"g", 3, true}};
  auto alg = normal_form_quotient(pres);
  const Index one = alg->monomial_index({0}), g = alg->monomial_index({1}), g2 = alg->monomial_index({2});
  std::vector<SparseVec> table = alg->table();
  // g * g^2 = 2 while g^2 * g = 1: (g g) g != g (g g).
  table[g * 3 + g2] = SparseVec::single(one, CycloNum(3, 2));
  FinAlgebra bad("bad", 3, alg->labels(), alg->unit(), table);
  const CheckResult r = check_associativity(bad);
  CHECK_FALSE(r.pass);
  CHECK_FALSE(r.witness.is_null());

  std::vector<SparseVec> broken = alg->table();
  broken[one * 3 + g] = SparseVec{};
  FinAlgebra no_unit("no unit", 3, alg->labels(), alg->unit(), broken);
  CHECK_FALSE(check_unit(no_unit).pass);
}
