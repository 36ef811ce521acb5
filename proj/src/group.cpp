#include "qhopf/group.hpp"

#include <numeric>
#include <sstream>

namespace qhopf {

Index GroupPart::size() const {
  Index n = 1;
  for (int d : orders) n *= static_cast<Index>(d);
  return n;
}

std::vector<int> GroupPart::decode(Index u) const {
  std::vector<int> out(orders.size());
  for (std::size_t t = orders.size(); t-- > 0;) {
    out[t] = static_cast<int>(u % orders[t]);
    u /= orders[t];
  }
  return out;
}

Index GroupPart::encode(const std::vector<int>& u) const {
  Index flat = 0;
  for (std::size_t t = 0; t < orders.size(); ++t) {
    flat = flat * orders[t] + static_cast<Index>(mod(u[t], orders[t]));
  }
  return flat;
}

Index GroupPart::add(Index u, Index v) const {
  auto a = decode(u);
  auto b = decode(v);
  for (std::size_t t = 0; t < a.size(); ++t) a[t] += b[t];
  return encode(a);
}

Index GroupPart::neg(Index u) const {
  auto a = decode(u);
  for (int& x : a) x = -x;
  return encode(a);
}

CycloNum GroupPart::root_power(std::size_t i, std::int64_t k) const {
  return root_of_unity(scalar_order, std::int64_t{root_exps[i]} * mod(k, orders[i]));
}

CycloNum GroupPart::pairing(Index b, Index u) const {
  auto bb = decode(b);
  auto uu = decode(u);
  std::int64_t e = 0;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    e += std::int64_t{root_exps[i]} * (std::int64_t{bb[i]} * uu[i] % orders[i]);
  }
  return root_of_unity(scalar_order, mod(e, scalar_order));
}

void GroupPart::validate() const {
  if (orders.size() != root_exps.size()) throw AlgebraError("group part: orders/roots mismatch");
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (orders[i] < 1) throw AlgebraError("group part: nonpositive order");
    int e = static_cast<int>(mod(root_exps[i], scalar_order));
    int ord = scalar_order / std::gcd(e, scalar_order);
    if (ord != orders[i]) {
      throw AlgebraError("group part: character root " + std::to_string(i) + " has order " +
                         std::to_string(ord) + ", expected " + std::to_string(orders[i]));
    }
  }
}

namespace {

std::string idempotent_label(const GroupPart& g, Index b) {
  auto c = g.decode(b);
  std::ostringstream os;
  os << "1_";
  if (c.size() == 1) {
    os << c[0];
  } else {
    os << "(";
    for (std::size_t t = 0; t < c.size(); ++t) os << (t ? "," : "") << c[t];
    os << ")";
  }
  return os.str();
}

}  // namespace

std::vector<Index> monomial_weights(const GroupPart& g, const FinAlgebra& nil,
                                    const std::vector<Index>& generator_weights) {
  if (generator_weights.size() != nil.generator_names().size()) {
    throw AlgebraError("one weight per nil generator required");
  }
  std::vector<Index> out;
  for (const auto& exps : nil.monomials()) {
    Index w = 0;
    for (std::size_t t = 0; t < exps.size(); ++t) {
      for (int r = 0; r < exps[t]; ++r) w = g.add(w, generator_weights[t]);
    }
    out.push_back(w);
  }
  return out;
}

AlgebraPtr crossed_algebra(const std::string& name, const GroupPart& g_in, const AlgebraPtr& nil,
                           const std::vector<Index>& weights) {
  const GroupPart& g = g_in;
  if (g.nil_dim != nil->dim()) throw AlgebraError("group part nil_dim does not match nil algebra");
  g.validate();
  if (g.scalar_order != nil->scalar_order()) throw ScalarError("group and nil scalar orders differ");
  if (!(nil->unit() == SparseVec::single(0, CycloNum(g.scalar_order, 1)))) {
    throw AlgebraError("nil algebra unit must be basis element 0");
  }
  if (weights.size() != nil->dim()) throw AlgebraError("one weight per nil monomial required");
  const Index gs = g.size();
  const Index nd = nil->dim();
  const Index dim = gs * nd;

  std::vector<std::string> labels;
  labels.reserve(dim);
  for (Index b = 0; b < gs; ++b) {
    for (Index m = 0; m < nd; ++m) {
      std::string l = idempotent_label(g, b);
      if (m != 0) l += " " + nil->labels()[m];
      labels.push_back(std::move(l));
    }
  }
  std::vector<SparseVec> table(dim * dim);
  std::vector<Index> left(dim), right(dim);
  for (Index b = 0; b < gs; ++b) {
    for (Index m = 0; m < nd; ++m) {
      const Index i = b * nd + m;
      left[i] = b;
      right[i] = g.sub(b, weights[m]);
      // (1_b m)(1_c m') is nonzero only for c = b - w(m).
      const Index c = right[i];
      for (Index m2 = 0; m2 < nd; ++m2) {
        std::vector<SparseVec::Term> terms;
        for (const auto& [k, x] : nil->product(m, m2).terms()) terms.emplace_back(b * nd + k, x);
        table[i * dim + c * nd + m2] = SparseVec::from_terms(std::move(terms));
      }
    }
  }
  std::vector<SparseVec::Term> unit;
  for (Index b = 0; b < gs; ++b) unit.emplace_back(b * nd, CycloNum(g.scalar_order, 1));
  auto alg = std::make_shared<FinAlgebra>(name, g.scalar_order, std::move(labels),
                                          SparseVec::from_terms(std::move(unit)), std::move(table));
  alg->set_blocks(std::move(left), std::move(right), gs);
  return alg;
}

AlgElement idempotent(const AlgebraPtr& alg, const GroupPart& g, Index b) {
  return AlgElement::basis(Space{alg, 1}, g.idempotent_index(b));
}

AlgElement group_element(const AlgebraPtr& alg, const GroupPart& g, Index u) {
  std::vector<SparseVec::Term> terms;
  for (Index b = 0; b < g.size(); ++b) terms.emplace_back(g.idempotent_index(b), g.pairing(b, u));
  return AlgElement(Space{alg, 1}, SparseVec::from_terms(std::move(terms)));
}

AlgElement nil_element(const AlgebraPtr& alg, const GroupPart& g, Index m) {
  std::vector<SparseVec::Term> terms;
  for (Index b = 0; b < g.size(); ++b) {
    terms.emplace_back(b * g.nil_dim + m, CycloNum(g.scalar_order, 1));
  }
  return AlgElement(Space{alg, 1}, SparseVec::from_terms(std::move(terms)));
}

AlgElement diagonal_tensor(const AlgebraPtr& alg, const GroupPart& g, int degree,
                           const DiagonalFn& f) {
  Space s{alg, degree};
  const Index gs = g.size();
  Index total = 1;
  for (int t = 0; t < degree; ++t) total *= gs;
  std::vector<SparseVec::Term> terms;
  std::vector<Index> tuple(degree);
  std::vector<Index> flat(degree);
  for (Index x = 0; x < total; ++x) {
    Index r = x;
    for (int t = degree - 1; t >= 0; --t) {
      tuple[t] = r % gs;
      r /= gs;
      flat[t] = g.idempotent_index(tuple[t]);
    }
    CycloNum c = f(tuple);
    if (!c.is_zero()) terms.emplace_back(s.encode(flat), std::move(c));
  }
  return AlgElement(s, SparseVec::from_terms(std::move(terms)));
}

std::optional<std::vector<CycloNum>> diagonal_values(const AlgElement& x, const GroupPart& g) {
  const int k = x.space().degree;
  const Index gs = g.size();
  Index total = 1;
  for (int t = 0; t < k; ++t) total *= gs;
  std::vector<CycloNum> out(total, CycloNum(g.scalar_order));
  for (const auto& [i, c] : x.terms()) {
    Index key = 0;
    for (Index part : x.space().decode(i)) {
      if (part % g.nil_dim != 0) return std::nullopt;
      key = key * gs + part / g.nil_dim;
    }
    out[key] = c;
  }
  return out;
}

AlgElement diagonal_inverse(const AlgElement& x, const GroupPart& g) {
  Index total = 1;
  for (int t = 0; t < x.space().degree; ++t) total *= g.size();
  if (x.terms().size() != total) throw AlgebraError("diagonal tensor is not invertible");
  std::vector<SparseVec::Term> terms;
  for (const auto& [i, c] : x.terms()) {
    for (Index part : x.space().decode(i)) {
      if (part % g.nil_dim != 0) throw AlgebraError("tensor is not diagonal");
    }
    terms.emplace_back(i, c.inv());
  }
  return AlgElement(x.space(), SparseVec::from_terms(std::move(terms)));
}

AlgElement group_coproduct(const AlgebraPtr& alg, const GroupPart& g, Index b) {
  Space s{alg, 2};
  std::vector<SparseVec::Term> terms;
  for (Index c = 0; c < g.size(); ++c) {
    std::vector<Index> t{g.idempotent_index(c), g.idempotent_index(g.sub(b, c))};
    terms.emplace_back(s.encode(t), CycloNum(g.scalar_order, 1));
  }
  return AlgElement(s, SparseVec::from_terms(std::move(terms)));
}

LinMap extend_crossed(const AlgebraPtr& alg, const GroupPart& g, const FinAlgebra& nil,
                      const std::vector<AlgElement>& idempotent_images,
                      const std::vector<AlgElement>& generator_images, const Space& codomain,
                      bool anti) {
  if (idempotent_images.size() != g.size()) throw AlgebraError("one image per idempotent required");
  if (generator_images.size() != nil.generator_names().size()) {
    throw AlgebraError("one image per nil generator required");
  }
  const Index nd = g.nil_dim;
  if (nd != nil.dim() || alg->dim() != g.size() * nd) throw AlgebraError("nil algebra mismatch");
  std::vector<std::vector<AlgElement>> powers(generator_images.size());
  auto pw = [&](std::size_t t, int e) -> const AlgElement& {
    auto& cache = powers[t];
    if (cache.empty()) cache.push_back(AlgElement::unit(codomain));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * generator_images[t]);
    return cache[e];
  };
  std::vector<AlgElement> mono;
  mono.reserve(nd);
  for (const auto& exps : nil.monomials()) {
    AlgElement x = AlgElement::unit(codomain);
    for (std::size_t r = 0; r < exps.size(); ++r) {
      std::size_t t = anti ? exps.size() - 1 - r : r;
      if (exps[t] > 0) x = x * pw(t, exps[t]);
    }
    mono.push_back(std::move(x));
  }
  std::vector<SparseVec> cols;
  cols.reserve(alg->dim());
  for (Index b = 0; b < g.size(); ++b) {
    for (Index m = 0; m < nd; ++m) {
      AlgElement x = anti ? mono[m] * idempotent_images[b] : idempotent_images[b] * mono[m];
      cols.push_back(x.vec());
    }
  }
  return LinMap::from_table(Space{alg, 1}, codomain, std::move(cols));
}

std::vector<CycloNum> to_characters(const GroupPart& g, int degree,
                                    std::vector<CycloNum> coeffs) {
  const Index gs = g.size();
  std::vector<std::vector<CycloNum>> pair(gs);
  for (Index b = 0; b < gs; ++b) {
    for (Index u = 0; u < gs; ++u) pair[b].push_back(g.pairing(b, u));
  }
  Index stride = 1;
  for (int t = 0; t < degree; ++t) stride *= gs;
  // Transform one tensor axis at a time, last axis first.
  Index inner = 1;
  for (int t = degree - 1; t >= 0; --t) {
    const Index outer = stride / (inner * gs);
    std::vector<CycloNum> next(coeffs.size(), CycloNum(g.scalar_order));
    for (Index o = 0; o < outer; ++o) {
      for (Index in = 0; in < inner; ++in) {
        for (Index u = 0; u < gs; ++u) {
          const CycloNum& c = coeffs[(o * gs + u) * inner + in];
          if (c.is_zero()) continue;
          for (Index b = 0; b < gs; ++b) next[(o * gs + b) * inner + in] += c * pair[b][u];
        }
      }
    }
    coeffs = std::move(next);
    inner *= gs;
  }
  return coeffs;
}

std::vector<CycloNum> from_characters(const GroupPart& g, int degree,
                                      std::vector<CycloNum> values) {
  GroupPart dual = g;
  for (int& e : dual.root_exps) e = static_cast<int>(mod(-e, g.scalar_order));
  auto out = to_characters(dual, degree, std::move(values));
  Index total = 1;
  for (int t = 0; t < degree; ++t) total *= g.size();
  CycloNum scale = CycloNum(g.scalar_order, BigRational(BigInt(1), BigInt(total)));
  for (auto& c : out) {
    if (!c.is_zero()) c *= scale;
  }
  return out;
}

}  // namespace qhopf
