#include "qhopf/cohomology.hpp"

#include <algorithm>
#include <numeric>

#include "qhopf/families.hpp"

namespace qhopf {

Index AbelianGroup::size() const {
  Index s = 1;
  for (int d : orders) s *= static_cast<Index>(d);
  return s;
}

std::vector<int> AbelianGroup::decode(Index u) const {
  std::vector<int> out(orders.size());
  for (std::size_t i = orders.size(); i-- > 0;) {
    out[i] = static_cast<int>(u % orders[i]);
    u /= orders[i];
  }
  return out;
}

Index AbelianGroup::encode(const std::vector<int>& u) const {
  Index x = 0;
  for (std::size_t i = 0; i < orders.size(); ++i) x = x * orders[i] + static_cast<Index>(mod(u[i], orders[i]));
  return x;
}

Index AbelianGroup::add(Index u, Index v) const {
  auto a = decode(u);
  auto b = decode(v);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return encode(a);
}

Index AbelianGroup::scale(Index u, std::int64_t k) const {
  auto a = decode(u);
  std::vector<int> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = static_cast<int>(mod(a[i] * k, orders[i]));
  return encode(out);
}

int AbelianGroup::order_of(Index u) const {
  const auto a = decode(u);
  std::int64_t o = 1;
  for (std::size_t i = 0; i < a.size(); ++i) o = std::lcm(o, orders[i] / std::gcd(a[i], orders[i]));
  return static_cast<int>(o);
}

// ---------------------------------------------------------------------------

Cocycle3 Cocycle3::constant(const AbelianGroup& g) {
  const Index n = g.size();
  return Cocycle3{g, 1, std::vector<std::int64_t>(n * n * n, 0)};
}

std::int64_t Cocycle3::at(Index g, Index h, Index k) const {
  const Index n = group.size();
  return table[(g * n + h) * n + k];
}

Cocycle3 Cocycle3::lifted(std::int64_t order) const {
  if (order % value_order != 0) throw AlgebraError("cocycle lift needs a multiple of L");
  Cocycle3 w{group, order, table};
  const std::int64_t f = order / value_order;
  for (auto& x : w.table) x *= f;
  return w;
}

json Cocycle3::to_json() const {
  json t = json::array();
  const Index n = group.size();
  for (Index i = 0; i < table.size(); ++i) {
    if (table[i] != 0) t.push_back({i / (n * n), (i / n) % n, i % n, table[i]});
  }
  return json{{"orders", group.orders}, {"value_order", value_order}, {"table", t}};
}

Cocycle3 Cocycle3::from_json(const json& j) {
  try {
    Cocycle3 w;
    w.group.orders = j.at("orders").get<std::vector<int>>();
    for (int d : w.group.orders) {
      if (d < 1) throw InputError("cocycle: group orders must be positive");
    }
    w.value_order = j.at("value_order").get<std::int64_t>();
    if (w.value_order < 1) throw InputError("cocycle: value_order must be positive");
    const Index n = w.group.size();
    w.table.assign(n * n * n, 0);
    for (const auto& e : j.at("table")) {
      const auto g = e.at(0).get<Index>(), h = e.at(1).get<Index>(), k = e.at(2).get<Index>();
      if (g >= n || h >= n || k >= n) throw InputError("cocycle: element out of range");
      w.table[(g * n + h) * n + k] = mod(e.at(3).get<std::int64_t>(), w.value_order);
    }
    return w;
  } catch (const json::exception& e) {
    throw InputError(std::string("cocycle: ") + e.what());
  }
}

json Cochain2::to_json() const {
  json t = json::array();
  const Index n = group.size();
  for (Index i = 0; i < table.size(); ++i) {
    if (table[i] != 0) t.push_back({i / n, i % n, table[i]});
  }
  return json{{"orders", group.orders}, {"value_order", value_order}, {"table", t}};
}

Cocycle3 coboundary(const Cochain2& mu) {
  const AbelianGroup& G = mu.group;
  const Index n = G.size();
  const std::int64_t L = mu.value_order;
  Cocycle3 w{G, L, std::vector<std::int64_t>(n * n * n)};
  auto m = [&](Index a, Index b) { return mu.table[a * n + b]; };
  for (Index g = 0; g < n; ++g) {
    for (Index h = 0; h < n; ++h) {
      for (Index k = 0; k < n; ++k) {
        w.table[(g * n + h) * n + k] =
            mod(m(h, k) - m(G.add(g, h), k) + m(g, G.add(h, k)) - m(g, h), L);
      }
    }
  }
  return w;
}

Cocycle3 cocycle_from_phi(const QuasiHopf& h) {
  if (!h.group) throw AlgebraError("cocycle needs a group part");
  const GroupPart& g = *h.group;
  auto values = diagonal_values(h.phi, g);
  if (!values) throw AlgebraError("associator is not diagonal in the group idempotents");
  const std::int64_t N = g.scalar_order;
  std::vector<std::int64_t> exps;
  exps.reserve(values->size());
  std::int64_t common = N;
  for (const auto& v : *values) {
    auto k = v.root_exponent();
    if (!k) throw AlgebraError("associator value is not a root of unity: " + v.to_string());
    exps.push_back(*k);
    common = std::gcd(common, std::int64_t{*k});
  }
  for (auto& e : exps) e /= common;
  return Cocycle3{AbelianGroup{g.orders}, N / common, std::move(exps)};
}

CheckResult check_cocycle(const Cocycle3& w) {
  Stopwatch sw;
  CheckResult r{"cocycle"};
  r.pass = true;
  const AbelianGroup& G = w.group;
  const Index n = G.size();
  std::vector<Index> sum(n * n);
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) sum[a * n + b] = G.add(a, b);
  }
  for (Index g = 0; g < n && r.pass; ++g) {
    for (Index h = 0; h < n && r.pass; ++h) {
      for (Index k = 0; k < n && r.pass; ++k) {
        for (Index l = 0; l < n; ++l) {
          const std::int64_t lhs = w.at(h, k, l) + w.at(g, sum[h * n + k], l) + w.at(g, h, k);
          const std::int64_t rhs = w.at(sum[g * n + h], k, l) + w.at(g, h, sum[k * n + l]);
          if (mod(lhs - rhs, w.value_order) != 0) {
            r.pass = false;
            r.witness = json{{"g", G.decode(g)}, {"h", G.decode(h)}, {"k", G.decode(k)},
                             {"l", G.decode(l)}};
            break;
          }
        }
      }
    }
  }
  r.timing_ms = sw.ms();
  return r;
}

// ---------------------------------------------------------------------------

namespace {

using i128 = __int128;

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>(static_cast<i128>(a) * b % m);
}

// Inverse of a unit modulo m by the extended Euclidean algorithm.
std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  std::int64_t g = m, x = 0, r = mod(a, m), y = 1;
  while (r != 0) {
    const std::int64_t q = g / r;
    std::tie(g, r) = std::make_pair(r, g - q * r);
    std::tie(x, y) = std::make_pair(y, x - q * y);
  }
  if (g != 1) throw AlgebraError("not a unit");
  return mod(x, m);
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    int k = 0;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    if (k > 0) out.emplace_back(p, k);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

int valuation(std::int64_t x, std::int64_t p, int cap) {
  if (x == 0) return cap;
  int v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

struct LocalSolve {
  std::optional<std::vector<std::int64_t>> x;
  json obstruction;
};

// Solves A x = b over Z/p^k. In a local ring an entry of minimal valuation
// divides every other entry, so full pivoting reaches a diagonal form.
LocalSolve solve_local(std::vector<std::int64_t> a, std::size_t rows, std::size_t cols,
                       std::vector<std::int64_t> b, std::int64_t p, int k) {
  std::int64_t m = 1;
  for (int t = 0; t < k; ++t) m *= p;
  for (auto& x : a) x = mod(x, m);
  for (auto& x : b) x = mod(x, m);
  // x = T y; T starts as the identity and records column operations.
  std::vector<std::int64_t> t(cols * cols, 0);
  for (std::size_t i = 0; i < cols; ++i) t[i * cols + i] = 1;
  auto A = [&](std::size_t i, std::size_t j) -> std::int64_t& { return a[i * cols + j]; };
  auto T = [&](std::size_t i, std::size_t j) -> std::int64_t& { return t[i * cols + j]; };

  std::vector<int> pivots;
  std::size_t r = 0;
  for (; r < std::min(rows, cols); ++r) {
    int best = k;
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = r; i < rows && best > 0; ++i) {
      for (std::size_t j = r; j < cols; ++j) {
        if (A(i, j) == 0) continue;
        const int v = valuation(A(i, j), p, k);
        if (v < best) {
          best = v;
          bi = i;
          bj = j;
          if (v == 0) break;
        }
      }
    }
    if (best == k) break;
    if (bi != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(A(r, j), A(bi, j));
      std::swap(b[r], b[bi]);
    }
    if (bj != r) {
      for (std::size_t i = 0; i < rows; ++i) std::swap(A(i, r), A(i, bj));
      for (std::size_t i = 0; i < cols; ++i) std::swap(T(i, r), T(i, bj));
    }
    std::int64_t pv = 1;
    for (int s = 0; s < best; ++s) pv *= p;
    const std::int64_t u = inverse_mod(A(r, r) / pv, m);
    for (std::size_t j = r; j < cols; ++j) A(r, j) = mulmod(A(r, j), u, m);
    b[r] = mulmod(b[r], u, m);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || A(i, r) == 0) continue;
      const std::int64_t f = A(i, r) / pv;
      for (std::size_t j = r; j < cols; ++j) {
        if (A(r, j) != 0) A(i, j) = mod(A(i, j) - mulmod(f, A(r, j), m), m);
      }
      b[i] = mod(b[i] - mulmod(f, b[r], m), m);
    }
    for (std::size_t j = r + 1; j < cols; ++j) {
      if (A(r, j) == 0) continue;
      const std::int64_t f = A(r, j) / pv;
      A(r, j) = 0;
      for (std::size_t i = 0; i < cols; ++i) {
        if (T(i, r) != 0) T(i, j) = mod(T(i, j) - mulmod(f, T(i, r), m), m);
      }
    }
    pivots.push_back(best);
  }
  auto power = [&](int v) {
    std::int64_t pv = 1;
    for (int s = 0; s < v; ++s) pv *= p;
    return pv;
  };
  std::vector<std::int64_t> y(cols, 0);
  for (std::size_t i = 0; i < rows; ++i) {
    const int v = i < pivots.size() ? pivots[i] : k;
    if (valuation(b[i], p, k) < v) {
      // After elimination row i reads p^v y_i = b_i (or 0 = b_i past the rank).
      return {std::nullopt, json{{"prime_power", m},
                                 {"pivot", v == k ? 0 : power(v)},
                                 {"residual", b[i]}}};
    }
    if (i < pivots.size()) y[i] = b[i] / power(v);
  }
  std::vector<std::int64_t> x(cols, 0);
  for (std::size_t i = 0; i < cols; ++i) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < cols; ++j) {
      if (T(i, j) != 0 && y[j] != 0) s = mod(s + mulmod(T(i, j), y[j], m), m);
    }
    x[i] = s;
  }
  return {std::move(x), json()};
}

}  // namespace

CoboundaryResult is_coboundary(const Cocycle3& w) {
  const AbelianGroup& G = w.group;
  const Index n = G.size();
  const Index limit = size_limit(25);
  if (n > limit) {
    throw SizeLimitError("is_coboundary: |G| = " + std::to_string(n) + " exceeds the limit " +
                         std::to_string(limit) + " (set QHOPF_SIZE_LIMIT)");
  }
  const std::int64_t big = static_cast<std::int64_t>(n) * w.value_order;
  const Cocycle3 target = w.lifted(big);
  const std::size_t rows = n * n * n, cols = n * n;
  std::vector<std::int64_t> a(rows * cols, 0);
  for (Index g = 0; g < n; ++g) {
    for (Index h = 0; h < n; ++h) {
      for (Index k = 0; k < n; ++k) {
        const std::size_t row = ((g * n + h) * n + k) * cols;
        a[row + h * n + k] += 1;
        a[row + G.add(g, h) * n + k] -= 1;
        a[row + g * n + G.add(h, k)] += 1;
        a[row + g * n + h] -= 1;
      }
    }
  }
  CoboundaryResult out;
  std::vector<std::int64_t> x(cols, 0);
  std::int64_t modulus = 1;
  for (auto [p, k] : factorize(big)) {
    LocalSolve s = solve_local(a, rows, cols, target.table, p, k);
    if (!s.x) {
      out.trivial = false;
      out.obstruction = std::move(s.obstruction);
      return out;
    }
    std::int64_t pk = 1;
    for (int t = 0; t < k; ++t) pk *= p;
    // CRT: x = x mod modulus, s.x mod pk.
    const std::int64_t inv = inverse_mod(modulus % pk, pk);
    for (std::size_t i = 0; i < cols; ++i) {
      const std::int64_t step = mulmod(mod((*s.x)[i] - x[i], pk), inv, pk);
      x[i] = x[i] + modulus * step;
    }
    modulus *= pk;
  }
  Cochain2 mu{G, big, std::move(x)};
  for (auto& v : mu.table) v = mod(v, big);
  if (!(coboundary(mu) == target)) throw AlgebraError("coboundary witness failed its self-check");
  out.trivial = true;
  out.witness = std::move(mu);
  return out;
}

Cocycle3 difference(const Cocycle3& a, const Cocycle3& b) {
  if (!(a.group == b.group)) throw AlgebraError("cocycles on different groups");
  const std::int64_t L = std::lcm(a.value_order, b.value_order);
  Cocycle3 x = a.lifted(L);
  const Cocycle3 y = b.lifted(L);
  for (std::size_t i = 0; i < x.table.size(); ++i) x.table[i] = mod(x.table[i] - y.table[i], L);
  return x;
}

Cocycle3 restrict_to_cyclic(const Cocycle3& w, Index generator) {
  const int d = w.group.order_of(generator);
  std::vector<Index> pts(d);
  for (int i = 0; i < d; ++i) pts[i] = w.group.scale(generator, i);
  Cocycle3 r{AbelianGroup{{d}}, w.value_order, std::vector<std::int64_t>(std::size_t(d) * d * d)};
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      for (int k = 0; k < d; ++k) r.table[(i * d + j) * d + k] = w.at(pts[i], pts[j], pts[k]);
    }
  }
  return r;
}

Cocycle3 automorphism_pullback(const Cocycle3& w, std::int64_t m) {
  if (w.group.orders.size() != 1) throw InputError("automorphism pullback needs a cyclic group");
  const int d = w.group.orders[0];
  if (std::gcd(mod(m, d), std::int64_t{d}) != 1) throw InputError("m must be a unit mod the group order");
  return restrict_to_cyclic(w, static_cast<Index>(mod(m, d)));
}

std::vector<std::vector<int>> hps_automorphism_orbits(int p) {
  HpsParams{p, 1}.validate();
  std::vector<Cocycle3> w;
  for (int s = 1; s < p; ++s) w.push_back(cocycle_from_phi(build_Hps({p, s})));
  std::vector<int> parent(p - 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int s = 0; s < p - 1; ++s) {
    for (int m = 1; m < p; ++m) {
      const Cocycle3 pulled = automorphism_pullback(w[s], m);
      for (int t = 0; t < p - 1; ++t) {
        if (find(s) == find(t)) continue;
        if (is_coboundary(difference(pulled, w[t])).trivial) parent[find(s)] = find(t);
      }
    }
  }
  std::map<int, std::vector<int>> classes;
  for (int s = 0; s < p - 1; ++s) classes[find(s)].push_back(s + 1);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : classes) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

json not_twist_equivalent_certificate(const GradedQuasiHopf& a, const SkewPrimitiveDatum& d) {
  const Cocycle3 w = cocycle_from_phi(a.base);
  json axes = json::array();
  bool certified = false;
  for (int i = 0; i < d.m; ++i) {
    json entry{{"axis", i + 1}, {"a_ii", d.a_matrix[i][i]}};
    if (mod(d.a_matrix[i][i], d.n) == 0) {
      entry["status"] = "skipped";
      axes.push_back(std::move(entry));
      continue;
    }
    std::vector<int> e(d.m, 0);
    e[i] = 1;
    const Cocycle3 r = restrict_to_cyclic(w, w.group.encode(e));
    const CoboundaryResult c = is_coboundary(r);
    entry["cocycle"] = r.to_json();
    entry["status"] = c.trivial ? "trivial" : "non-trivial";
    if (!c.trivial) {
      entry["obstruction"] = c.obstruction;
      certified = true;
    }
    axes.push_back(std::move(entry));
  }
  return json{{"datum", d.name},
              {"certificate", certified},
              {"conclusion", certified ? "not twist equivalent to a Hopf algebra" : "no axis certifies"},
              {"axes", axes}};
}

}  // namespace qhopf
