#include <doctest.h>

#include <cstdlib>
#include <random>

#include "qhopf/cohomology.hpp"
#include "qhopf/families.hpp"

using namespace qhopf;

namespace {

std::int64_t md(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

// sum_k w(g, k g, g) on the cyclic subgroup generated by g. Coboundaries
// telescope to zero, and on Z_n it separates the classes.
std::int64_t slant_invariant(const Cocycle3& w, Index g) {
  const AbelianGroup& G = w.group;
  const int n = G.order_of(g);
  std::int64_t sum = 0;
  for (int k = 0; k < n; ++k) sum += w.at(g, G.scale(g, k), g);
  return md(sum, w.value_order);
}

// (d mu)(g,h,k) = mu(h,k) - mu(g+h,k) + mu(g,h+k) - mu(g,h), computed here.
std::vector<std::int64_t> d_of(const Cochain2& mu) {
  const AbelianGroup& G = mu.group;
  const Index n = G.size();
  std::vector<std::int64_t> out;
  for (Index g = 0; g < n; ++g) {
    for (Index h = 0; h < n; ++h) {
      for (Index k = 0; k < n; ++k) {
        out.push_back(md(mu.table[h * n + k] - mu.table[G.add(g, h) * n + k] +
                             mu.table[g * n + G.add(h, k)] - mu.table[g * n + h],
                         mu.value_order));
      }
    }
  }
  return out;
}

// t * (L / d) * g_1 * carry(h_1, k_1) + d(mu) on a group whose first factor is Z_d.
Cocycle3 mixed_cocycle(const AbelianGroup& G, std::int64_t L, std::int64_t t, const Cochain2& mu) {
  Cocycle3 w{G, L, {}};
  const Index n = G.size();
  const int d = G.orders[0];
  const auto dm = d_of(mu);
  for (Index g = 0; g < n; ++g) {
    for (Index h = 0; h < n; ++h) {
      for (Index k = 0; k < n; ++k) {
        const int c = (G.decode(h)[0] + G.decode(k)[0]) >= d ? 1 : 0;
        w.table.push_back(md(t * (L / d) * G.decode(g)[0] * c + dm[(g * n + h) * n + k], L));
      }
    }
  }
  return w;
}

Cochain2 random_cochain(const AbelianGroup& G, std::int64_t L, std::mt19937_64& rng) {
  Cochain2 mu{G, L, {}};
  for (Index i = 0; i < G.size() * G.size(); ++i) mu.table.push_back(static_cast<std::int64_t>(rng() % L));
  return mu;
}

}  // namespace

TEST_CASE("abelian group indexing") {
  const AbelianGroup G{{3, 5}};
  CHECK(G.size() == 15);
  for (Index u = 0; u < 15; ++u) {
    CHECK(G.encode(G.decode(u)) == u);
    CHECK(G.add(u, G.scale(u, 14)) == 0);
  }
  CHECK(G.decode(7) == std::vector<int>{1, 2});
  CHECK(G.order_of(G.encode({1, 0})) == 3);
  CHECK(G.order_of(G.encode({1, 1})) == 15);
}

TEST_CASE("coboundaries are cocycles and are recognised, with checked witnesses") {
  std::mt19937_64 rng(99);
  for (const auto& orders : std::vector<std::vector<int>>{{3}, {5}, {3, 3}, {9}}) {
    const AbelianGroup G{orders};
    for (int trial = 0; trial < 10; ++trial) {
      const Cochain2 mu = random_cochain(G, 15, rng);
      const Cocycle3 w = coboundary(mu);
      CHECK(w.table == d_of(mu));
      CHECK(check_cocycle(w).pass);
      const CoboundaryResult r = is_coboundary(w);
      REQUIRE(r.trivial);
      REQUIRE(r.witness.has_value());
      // d(witness) = w over the witness's value order.
      const std::int64_t scale = r.witness->value_order / w.value_order;
      const auto dw = d_of(*r.witness);
      bool same = true;
      for (std::size_t i = 0; i < dw.size(); ++i) same = same && dw[i] == w.table[i] * scale;
      CHECK(same);
    }
  }
}

TEST_CASE("triviality on Z_n agrees with the slant invariant") {
  std::mt19937_64 rng(5);
  for (int n : {3, 5, 9}) {
    const AbelianGroup G{{n}};
    const std::int64_t L = 3 * n;
    for (int t = 0; t < 2 * n; ++t) {
      const Cocycle3 w = mixed_cocycle(G, L, t, random_cochain(G, L, rng));
      CAPTURE(n);
      CAPTURE(t);
      CHECK(check_cocycle(w).pass);
      const std::int64_t inv = slant_invariant(w, 1);
      CHECK(inv == md(t * (L / n), L));
      const CoboundaryResult r = is_coboundary(w);
      CHECK(r.trivial == (inv == 0));
      if (!r.trivial) CHECK(r.obstruction.contains("prime_power"));
    }
  }
}

TEST_CASE("on Z_3 x Z_3 the mixed class is seen on the diagonal subgroup") {
  const AbelianGroup G{{3, 3}};
  // w(g,h,k) = g_1 carry(h_2, k_2): trivial on both axes, not on the diagonal.
  Cocycle3 w{G, 3, {}};
  for (Index g = 0; g < 9; ++g) {
    for (Index h = 0; h < 9; ++h) {
      for (Index k = 0; k < 9; ++k) {
        const int c = (G.decode(h)[1] + G.decode(k)[1]) >= 3 ? 1 : 0;
        w.table.push_back(md(G.decode(g)[0] * c, 3));
      }
    }
  }
  CHECK(check_cocycle(w).pass);
  CHECK(slant_invariant(w, G.encode({1, 0})) == 0);
  CHECK(slant_invariant(w, G.encode({0, 1})) == 0);
  CHECK(slant_invariant(w, G.encode({1, 1})) != 0);
  CHECK(is_coboundary(restrict_to_cyclic(w, G.encode({1, 0}))).trivial);
  CHECK(is_coboundary(restrict_to_cyclic(w, G.encode({0, 1}))).trivial);
  CHECK_FALSE(is_coboundary(restrict_to_cyclic(w, G.encode({1, 1}))).trivial);
  CHECK_FALSE(is_coboundary(w).trivial);
}

TEST_CASE("non-cocycles fail the identity with a witness") {
  Cocycle3 w = Cocycle3::constant(AbelianGroup{{3}});
  w.value_order = 3;
  w.table.assign(27, 0);
  w.table[(1 * 3 + 2) * 3 + 1] = 1;
  const CheckResult r = check_cocycle(w);
  CHECK_FALSE(r.pass);
  for (const char* key : {"g", "h", "k", "l"}) CHECK(r.witness.contains(key));
}

TEST_CASE("H(p,s): the cocycle, its class and the square classes") {
  for (int p : {3, 5, 7}) {
    for (int s = 1; s < p; ++s) {
      const Cocycle3 w = cocycle_from_phi(build_Hps({p, s}));
      REQUIRE(w.value_order == p);
      for (int i = 0; i < p; ++i) {
        for (int j = 0; j < p; ++j) {
          for (int k = 0; k < p; ++k) CHECK(w.at(i, j, k) == md(s * i * ((j + k) >= p), p));
        }
      }
      CHECK(slant_invariant(w, 1) == s);
      CHECK_FALSE(is_coboundary(w).trivial);
      // Pulling back along x -> m x multiplies the class by m^2.
      for (int m = 1; m < p; ++m) CHECK(slant_invariant(automorphism_pullback(w, m), 1) == md(m * m * s, p));
    }
    // Orbits: s ~ s' iff s' = m^2 s.
    std::vector<std::vector<int>> expected;
    std::vector<bool> used(p, false);
    for (int s = 1; s < p; ++s) {
      if (used[s]) continue;
      std::vector<int> orbit;
      for (int t = 1; t < p; ++t) {
        for (int m = 1; m < p; ++m) {
          if (md(m * m * s, p) == t) {
            orbit.push_back(t);
            used[t] = true;
            break;
          }
        }
      }
      expected.push_back(orbit);
    }
    CHECK(hps_automorphism_orbits(p) == expected);
    CHECK(expected.size() == 2);
  }
}

TEST_CASE("difference of cocycles over different value orders") {
  const Cocycle3 a = cocycle_from_phi(build_Hps({3, 1}));
  const Cocycle3 b = cocycle_from_phi(build_Hps({3, 2}));
  const Cocycle3 d = difference(a, b);
  CHECK(check_cocycle(d).pass);
  CHECK(slant_invariant(d, 1) == md(slant_invariant(a, 1) - slant_invariant(b, 1), 3));
  CHECK(is_coboundary(difference(a, a)).trivial);
  const Cocycle3 lifted = a.lifted(9);
  CHECK(lifted.value_order == 9);
  CHECK(lifted.at(1, 2, 2) == 3);
}

TEST_CASE("cocycle JSON") {
  const Cocycle3 w = cocycle_from_phi(build_Hps({5, 2}));
  const json j = w.to_json();
  CHECK(Cocycle3::from_json(j) == w);
  CHECK(Cocycle3::from_json(json::parse(j.dump())) == w);
  json bad = j;
  bad["value_order"] = 0;
  CHECK_THROWS_AS(Cocycle3::from_json(bad), InputError);
  CHECK_THROWS_AS(Cocycle3::from_json(json{{"orders", {3}}}), InputError);
}

TEST_CASE("non-diagonal associators are rejected") {
  GradedQuasiHopf g = build_Aq({3, 1});
  QuasiHopf& h = g.base;
  const AlgElement x = nil_element(h.alg, *h.group, 1);
  h.phi = h.phi + tensor_elem(tensor_elem(x, h.one()), h.one());
  CHECK_THROWS_AS(cocycle_from_phi(h), AlgebraError);
}

TEST_CASE("the size guard") {
  setenv("QHOPF_SIZE_LIMIT", "4", 1);
  CHECK_THROWS_AS(is_coboundary(cocycle_from_phi(build_Hps({5, 1}))), SizeLimitError);
  unsetenv("QHOPF_SIZE_LIMIT");
  CHECK_NOTHROW(is_coboundary(cocycle_from_phi(build_Hps({5, 1}))));
}
