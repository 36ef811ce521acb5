#include <doctest.h>

#include "qhopf/classify.hpp"
#include "qhopf/families.hpp"
#include "qhopf/twist.hpp"

using namespace qhopf;

namespace {

std::int64_t md(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

// Inverse by search, independent of the extended Euclid used by the library.
std::int64_t brute_inverse(std::int64_t a, std::int64_t m) {
  for (std::int64_t x = 1; x < m; ++x) {
    if (md(a * x, m) == 1) return x;
  }
  return 0;
}

}  // namespace

TEST_CASE("Cartan pair from braiding exponents") {
  const CartanPair c = cartan_from_braiding({5, 1, 6, true});
  CHECK(c.a12 == 7);
  CHECK(c.a21 == 22);
  for (int p : {3, 5, 7}) {
    const std::int64_t m = std::int64_t{p} * p;
    for (std::int64_t b = 1; b < m; ++b) {
      if (b % p == 0) continue;
      for (std::int64_t d = b % p; d < m; d += p) {
        const CartanPair x = cartan_from_braiding({p, b, d, true});
        CHECK(x.a12 == md(b + d, m));
        CHECK(x.a21 == md((b + d) * brute_inverse(md(b * d, m), m), m));
        CHECK(md(x.a12 * x.a21, p) == md(4, p));
      }
    }
  }
  CHECK_THROWS_AS(cartan_from_braiding({5, 1, 2, true}), InputError);
  CHECK_THROWS_AS(cartan_from_braiding({5, 5, 5, true}), InputError);
  CHECK_THROWS_AS(cartan_from_braiding({9, 1, 1, true}), InputError);
}

TEST_CASE("exhaustive arithmetic checks") {
  for (int p : {3, 5, 7}) {
    const CheckResult r = check_product_is_4(p);
    CHECK(r.pass);
    CHECK(r.witness.at("pairs") == (p - 1) * p * p);
  }
  CHECK(check_p3_contradiction().pass);
  // b^2 + b + 1 = 0 mod 9 has no solution at all, mod 7 it does.
  int sols9 = 0, sols7 = 0;
  for (int b = 0; b < 9; ++b) sols9 += (b * b + b + 1) % 9 == 0;
  for (int b = 0; b < 7; ++b) sols7 += (b * b + b + 1) % 7 == 0;
  CHECK(sols9 == 0);
  CHECK(sols7 == 2);
}

TEST_CASE("finite type filter") {
  CHECK(finite_type_filter(0, 5) == FiniteType::A1xA1);
  CHECK(finite_type_filter(1, 1) == FiniteType::A2);
  CHECK(finite_type_filter(1, 2) == FiniteType::B2);
  CHECK(finite_type_filter(3, 1) == FiniteType::G2);
  CHECK(finite_type_filter(2, 2) == FiniteType::NotFiniteType);
  CHECK(finite_type_filter(4, 1) == FiniteType::NotFiniteType);
  CHECK(std::string(to_string(FiniteType::G2)) == "G2");
}

TEST_CASE("eigenspaces of conjugation by a on H[1]") {
  for (int k : {1, 2, 4, 5, 7, 8}) {
    const GradedQuasiHopf g = build_Aq({3, k});
    const auto eig = eigenspace_decomposition(g);
    // a x a^-1 = q^p x and 1_i a = q^{p i} 1_i: all of H[1] sits at r = 1.
    CHECK(eig == std::map<int, Index>{{1, 3}});
  }
  CHECK(eigenspace_decomposition(build_Aq({5, 1})) == std::map<int, Index>{{1, 5}});
}

TEST_CASE("census entries") {
  for (int k : {1, 2, 4}) {
    const CheckResult r = check_census_entry(build_Aq({3, k}));
    CHECK(r.pass);
    CHECK(r.message.empty());
    CHECK(r.witness.at("dim") == 27);
    CHECK(r.witness.at("rank") == "1");
  }
  const QuasiHopf h = build_Hps({5, 2});
  const CheckResult r = check_census_entry(GradedQuasiHopf{h, std::vector<int>(5, 0)});
  CHECK(r.pass);
  CHECK(r.witness.at("rank") == "0");

  // Trivial associator: out of scope.
  SkewPrimitiveDatum d;
  d.n = 3;
  d.a_matrix = {{3}};
  d.nilpotency = {3};
  const ExtractedA e = extract_subalgebra_A(build_skew_primitive_hopf(d));
  const CheckResult t = check_census_entry(e.a);
  CHECK(t.pass);
  CHECK(t.message.find("skipped") != std::string::npos);

  // A rank 2 degree-one part over C[Z_3] with non-trivial associator would fail.
  GradedQuasiHopf fake = build_Aq({3, 1});
  for (auto& deg : fake.degree) deg = deg == 2 ? 1 : deg;
  const CheckResult f = check_census_entry(fake);
  CHECK_FALSE(f.pass);
}
