#include "qhopf/classify.hpp"

#include <numeric>

#include "qhopf/cohomology.hpp"
#include "qhopf/families.hpp"

namespace qhopf {

std::map<int, Index> eigenspace_decomposition(const GradedQuasiHopf& gq) {
  const QuasiHopf& h = gq.base;
  if (!h.group || h.group->orders.size() != 1) {
    throw AlgebraError("eigenspace decomposition needs a cyclic degree 0 part");
  }
  const GroupPart& g = *h.group;
  const Space s1 = h.space(1);
  const AlgElement a = group_element(h.alg, g, 1);
  const AlgElement a_inv = group_element(h.alg, g, g.neg(1));
  std::vector<Index> h1;
  for (Index i = 0; i < gq.degree.size(); ++i) {
    if (gq.degree[i] == 1) h1.push_back(i);
  }
  std::vector<AlgElement> conj;
  for (Index i : h1) {
    AlgElement y = a * AlgElement::basis(s1, i) * a_inv;
    for (const auto& [j, c] : y.terms()) {
      if (gq.degree[j] != 1) throw AlgebraError("conjugation by a leaves H[1]");
    }
    conj.push_back(std::move(y));
  }
  std::map<int, Index> out;
  for (int r = 0; r < g.orders[0]; ++r) {
    const CycloNum lambda = g.root_power(0, r);
    std::vector<SparseVec> rows;
    for (std::size_t t = 0; t < h1.size(); ++t) {
      rows.push_back((conj[t] - lambda * AlgElement::basis(s1, h1[t])).vec());
    }
    const Index dim = h1.size() - rank(std::move(rows));
    if (dim > 0) out[r] = dim;
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  std::int64_t g = m, x = 0, r = mod(a, m), y = 1;
  while (r != 0) {
    const std::int64_t q = g / r;
    std::tie(g, r) = std::make_pair(r, g - q * r);
    std::tie(x, y) = std::make_pair(y, x - q * y);
  }
  if (g != 1) throw InputError("b d is not invertible");
  return mod(x, m);
}

}  // namespace

void BraidingData::validate() const {
  if (!is_prime(p) || p == 2) throw InputError("braiding data: p must be an odd prime");
  if (mod(b, p) == 0 || mod(d, p) == 0) throw InputError("braiding data: b and d must be units");
  if (congruent && mod(b - d, p) != 0) throw InputError("braiding data: b = d mod p required");
}

CartanPair cartan_from_braiding(const BraidingData& data) {
  data.validate();
  const std::int64_t m = std::int64_t{data.p} * data.p;
  const std::int64_t s = mod(data.b + data.d, m);
  return {s, mod(s * inverse_mod(mod(data.b * data.d, m), m), m)};
}

CheckResult check_product_is_4(int p) {
  Stopwatch sw;
  CheckResult r{"product_is_4"};
  r.pass = true;
  const std::int64_t m = std::int64_t{p} * p;
  std::int64_t pairs = 0;
  for (std::int64_t b = 1; b < m && r.pass; ++b) {
    if (b % p == 0) continue;
    for (std::int64_t d = b % p; d < m; d += p) {
      const CartanPair c = cartan_from_braiding({p, b, d, true});
      ++pairs;
      if (mod(c.a12 * c.a21 - 4, p) != 0) {
        r.pass = false;
        r.witness = json{{"b", b}, {"d", d}, {"a12", c.a12}, {"a21", c.a21}};
        break;
      }
    }
  }
  if (r.pass) r.witness = json{{"p", p}, {"pairs", pairs}};
  r.timing_ms = sw.ms();
  return r;
}

CheckResult check_p3_contradiction() {
  Stopwatch sw;
  CheckResult r{"p3_contradiction"};
  r.pass = true;
  json values = json::object();
  for (int b = 1; b < 9; b += 3) {
    const int v = (b * b + b + 1) % 9;
    values[std::to_string(b)] = v;
    if (v == 0) r.pass = false;
  }
  r.witness = json{{"b^2+b+1 mod 9", values}};
  r.timing_ms = sw.ms();
  return r;
}

const char* to_string(FiniteType t) {
  switch (t) {
    case FiniteType::A1xA1: return "A1xA1";
    case FiniteType::A2: return "A2";
    case FiniteType::B2: return "B2";
    case FiniteType::G2: return "G2";
    case FiniteType::NotFiniteType: return "NotFiniteType";
  }
  return "?";
}

FiniteType finite_type_filter(std::int64_t a12, std::int64_t a21) {
  switch (a12 * a21) {
    case 0: return FiniteType::A1xA1;
    case 1: return FiniteType::A2;
    case 2: return FiniteType::B2;
    case 3: return FiniteType::G2;
    default: return FiniteType::NotFiniteType;
  }
}

CheckResult check_census_entry(const GradedQuasiHopf& g) {
  Stopwatch sw;
  CheckResult r{"census"};
  r.pass = true;
  const QuasiHopf& h = g.base;
  const bool cyclic_prime = h.group && h.group->orders.size() == 1 && is_prime(h.group->orders[0]);
  if (!cyclic_prime) {
    r.message = "skipped: degree 0 part is not C[Z_p]";
    r.timing_ms = sw.ms();
    return r;
  }
  const int p = h.group->orders[0];
  if (is_coboundary(cocycle_from_phi(h)).trivial) {
    r.message = "skipped: trivial associator";
    r.timing_ms = sw.ms();
    return r;
  }
  const BigRational rk = rank_degree_one(g);
  const Index dim = h.alg->dim();
  const Index p3 = static_cast<Index>(p) * p * p;
  r.pass = rk.num() <= rk.den() && (dim == static_cast<Index>(p) || dim == p3);
  r.witness = json{{"name", h.name}, {"p", p}, {"dim", dim}, {"rank", rk.to_string()}};
  if (!r.pass) r.message = "rank > 1 or dimension outside {p, p^3}";
  r.timing_ms = sw.ms();
  return r;
}

}  // namespace qhopf
