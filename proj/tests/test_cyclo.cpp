#include <doctest.h>

#include <cmath>
#include <complex>
#include <numeric>
#include <random>

#include "qhopf/cyclo.hpp"

using namespace qhopf;

namespace {

// Phi_n from its roots, rounded: independent of the division-based construction.
std::vector<std::int64_t> numeric_cyclotomic(int n) {
  std::vector<std::complex<double>> p{1.0};
  for (int k = 1; k <= n; ++k) {
    if (std::gcd(k, n) != 1) continue;
    std::complex<double> r = std::polar(1.0, 2 * M_PI * k / n);
    std::vector<std::complex<double>> q(p.size() + 1, 0.0);
    for (std::size_t i = 0; i < p.size(); ++i) {
      q[i + 1] += p[i];
      q[i] -= r * p[i];
    }
    p = q;
  }
  std::vector<std::int64_t> out;
  for (auto c : p) out.push_back(std::llround(c.real()));
  return out;
}

CycloNum random_num(std::mt19937& rng, int order, int height) {
  std::uniform_int_distribution<int> d(-height, height);
  std::vector<BigRational> c(order);
  for (auto& x : c) x = BigRational(d(rng), std::abs(d(rng)) + 1);
  return CycloNum::from_coeffs(order, c);
}

std::complex<double> as_complex(const CycloNum& a) {
  auto [re, im] = a.approx();
  return {re, im};
}

}  // namespace

TEST_CASE("cyclotomic polynomials match the numeric product of primitive roots") {
  CHECK(cyclotomic_polynomial(1) == std::vector<std::int64_t>{-1, 1});
  CHECK(cyclotomic_polynomial(3) == std::vector<std::int64_t>{1, 1, 1});
  CHECK(cyclotomic_polynomial(9) == std::vector<std::int64_t>{1, 0, 0, 1, 0, 0, 1});
  for (int n = 1; n <= 60; ++n) {
    CAPTURE(n);
    CHECK(cyclotomic_polynomial(n) == numeric_cyclotomic(n));
  }
}

TEST_CASE("roots of unity") {
  CycloNum z = root_of_unity(3, 1);
  CHECK(z * z == CycloNum(3, -1) - z);
  CHECK(z.inv() == root_of_unity(3, 2));
  CHECK(embed(z, 9) == root_of_unity(9, 3));
  CHECK(root_of_unity(9, 3) * root_of_unity(9, 3) == root_of_unity(9, 6));
  CHECK(root_of_unity(9, -1) == root_of_unity(9, 8));
  for (int n : {1, 2, 3, 4, 5, 6, 9, 12, 25, 27}) {
    CycloNum sum(n);
    for (int k = 0; k < n; ++k) {
      CycloNum r = root_of_unity(n, k);
      sum += r;
      CHECK(r.root_exponent() == std::optional<int>(k));
      CHECK(r.pow(n).is_one());
    }
    if (n > 1) CHECK(sum.is_zero());
  }
  CHECK_FALSE((CycloNum(9, 2)).root_exponent().has_value());
}

TEST_CASE("field axioms on random elements") {
  std::mt19937 rng(12345);
  for (int order : {3, 5, 8, 9, 12, 25}) {
    for (int trial = 0; trial < 20; ++trial) {
      CycloNum a = random_num(rng, order, 9);
      CycloNum b = random_num(rng, order, 9);
      CycloNum c = random_num(rng, order, 9);
      CHECK(a * b == b * a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a - a == CycloNum(order));
      if (!a.is_zero()) CHECK((a * a.inv()).is_one());
      // Agreement with floating point evaluation.
      auto d = as_complex(a * b) - as_complex(a) * as_complex(b);
      CHECK(std::abs(d) < 1e-6 * (1 + std::abs(as_complex(a) * as_complex(b))));
    }
  }
}

TEST_CASE("large coefficients spill into big integers and come back") {
  CycloNum a = CycloNum(5, std::int64_t{1} << 40) + root_of_unity(5, 1);
  CycloNum p = a.pow(5);
  CycloNum q = p * a.inv().pow(5);
  CHECK(q.is_one());
  CHECK(p.coeff(0).num() > BigInt(1) << 190);
}

TEST_CASE("galois action and embedding are homomorphisms") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    CycloNum a = random_num(rng, 9, 5);
    CycloNum b = random_num(rng, 9, 5);
    CHECK((a * b).galois(2) == a.galois(2) * b.galois(2));
    CHECK(embed(a * b, 27) == embed(a, 27) * embed(b, 27));
    CHECK(embed(a + b, 27) == embed(a, 27) + embed(b, 27));
  }
}

TEST_CASE("mixing orders is an error") {
  CHECK_THROWS_AS(CycloNum(3, 1) + CycloNum(5, 1), ScalarError);
  CHECK_THROWS_AS(CycloNum(3).inv(), ScalarError);
}
