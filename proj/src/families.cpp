#include "qhopf/families.hpp"

#include <numeric>

namespace qhopf {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

int carry(std::int64_t j, std::int64_t k, int n) {
  return static_cast<int>((mod(j, n) + mod(k, n)) / n);
}

AlgebraPtr ground_algebra(int order) {
  Presentation pres;
  pres.name = "C";
  pres.scalar_order = order;
  return normal_form_quotient(pres);
}

namespace {
CycloNum one_at(int order) { return CycloNum(order, 1); }
}  // namespace

LinMap crossed_counit(const AlgebraPtr& alg, const GroupPart& g) {
  Space s0{alg, 0};
  std::vector<SparseVec> cols(alg->dim());
  cols[g.idempotent_index(0)] = SparseVec::single(0, one_at(g.scalar_order));
  return LinMap::from_table(Space{alg, 1}, s0, std::move(cols));
}

std::vector<AlgElement> group_coproducts(const AlgebraPtr& alg, const GroupPart& g) {
  std::vector<AlgElement> out;
  for (Index b = 0; b < g.size(); ++b) out.push_back(group_coproduct(alg, g, b));
  return out;
}

std::vector<AlgElement> group_antipodes(const AlgebraPtr& alg, const GroupPart& g) {
  std::vector<AlgElement> out;
  for (Index b = 0; b < g.size(); ++b) out.push_back(idempotent(alg, g, g.neg(b)));
  return out;
}

namespace {

// Phi_s-shaped associator on a cyclic group part: r^{-i carry(j,k)} with r the
// character root, as a diagonal tensor.
AlgElement carry_associator(const AlgebraPtr& alg, const GroupPart& g, int scale) {
  const int p = g.orders[0];
  return diagonal_tensor(alg, g, 3, [&](const std::vector<Index>& t) {
    return g.root_power(0, -std::int64_t{scale} * static_cast<std::int64_t>(t[0]) *
                               carry(static_cast<std::int64_t>(t[1]),
                                     static_cast<std::int64_t>(t[2]), p));
  });
}

}  // namespace

// ---------------------------------------------------------------------------
// H(p, s)

void HpsParams::validate() const {
  if (p < 3 || !is_prime(p)) throw InputError("H(p,s): p must be an odd prime");
  if (s < 1 || s > p - 1) throw InputError("H(p,s): s must lie in 1..p-1");
}

const char* to_string(HpsClass c) { return c == HpsClass::Plus ? "Plus" : "Minus"; }

std::int64_t hps_exponent(int p, int s, std::int64_t i, std::int64_t j, std::int64_t k) {
  return mod(std::int64_t{s} * mod(i, p) * carry(j, k, p), p);
}

QuasiHopf build_Hps(const HpsParams& params) {
  params.validate();
  const int p = params.p;
  // 1_i a = Q^i 1_i with Q = zeta_p^{-s}.
  GroupPart g{{p}, {static_cast<int>(mod(-params.s, p))}, p, 1};
  auto nil = ground_algebra(p);
  auto alg = crossed_algebra("H(" + std::to_string(p) + "," + std::to_string(params.s) + ")", g,
                             nil, {0});
  const Space s1{alg, 1};
  LinMap delta = extend_crossed(alg, g, *nil, group_coproducts(alg, g), {}, Space{alg, 2});
  LinMap antipode = extend_crossed(alg, g, *nil, group_antipodes(alg, g), {}, s1, true);
  AlgElement phi = carry_associator(alg, g, 1);
  QuasiHopf h{alg->name(),
              alg,
              delta,
              crossed_counit(alg, g),
              antipode,
              group_element(alg, g, 1),
              AlgElement::unit(s1),
              phi,
              diagonal_inverse(phi, g),
              g};
  h.provenance = json{{"family", "hps"}, {"p", p}, {"s", params.s}};
  return h;
}

HpsClass classify_Hps(const HpsParams& params) {
  params.validate();
  // Euler's criterion.
  std::int64_t r = 1;
  for (int t = 0; t < (params.p - 1) / 2; ++t) r = r * params.s % params.p;
  return r == 1 ? HpsClass::Plus : HpsClass::Minus;
}

// ---------------------------------------------------------------------------
// A(q)

void AqParams::validate() const {
  if (p < 3 || !is_prime(p)) throw InputError("A(q): p must be an odd prime");
  if (std::gcd(q_exp, p * p) != 1) throw InputError("A(q): q must be a primitive p^2-th root");
}

int AqParams::s() const { return static_cast<int>(mod(-q_exp, p)); }

GradedQuasiHopf build_Aq(const AqParams& params) {
  params.validate();
  const int p = params.p;
  const int N = params.order();
  const CycloNum q = root_of_unity(N, params.q_exp);
  // a 1_i = q^{p i} 1_i.
  GroupPart g{{p}, {static_cast<int>(mod(std::int64_t{p} * params.q_exp, N))}, N, 0};
  Presentation np;
  np.name = "C[x]/x^" + std::to_string(p * p);
  np.scalar_order = N;
  np.gens = {{"x", p * p, false}};
  auto nil = normal_form_quotient(np);
  g.nil_dim = nil->dim();
  // a x a^-1 = q^p x, so x carries weight 1.
  auto alg = crossed_algebra("A(q=z" + std::to_string(N) + "^" + std::to_string(params.q_exp) + ")",
                             g, nil, monomial_weights(g, *nil, {1}));
  const Space s1{alg, 1};
  const AlgElement one = AlgElement::unit(s1);
  const AlgElement x = nil_element(alg, g, 1);
  const AlgElement a_inv = group_element(alg, g, p - 1);
  const AlgElement e0 = idempotent(alg, g, 0);

  AlgElement sum_qy(s1), sum_s(s1);
  for (int y = 0; y < p; ++y) {
    sum_qy += q.pow(y) * idempotent(alg, g, y);
    sum_s += q.pow(p - y) * idempotent(alg, g, y);
  }
  AlgElement dx = tensor_elem(x, sum_qy) + tensor_elem(one, (one - e0) * x) +
                  tensor_elem(a_inv, e0 * x);
  LinMap delta = extend_crossed(alg, g, *nil, group_coproducts(alg, g), {dx}, Space{alg, 2});
  AlgElement sx = CycloNum(N, -1) * (x * sum_s);
  LinMap antipode = extend_crossed(alg, g, *nil, group_antipodes(alg, g), {sx}, s1, true);
  AlgElement phi = carry_associator(alg, g, 1);

  QuasiHopf h{alg->name(),
              alg,
              delta,
              crossed_counit(alg, g),
              antipode,
              group_element(alg, g, 1),
              one,
              phi,
              diagonal_inverse(phi, g),
              g};
  h.provenance = json{{"family", "aq"}, {"p", p}, {"q_exp", params.q_exp}, {"s", params.s()}};
  return GradedQuasiHopf{std::move(h), nil_degrees(g, *nil)};
}

AlgebraPtr aq_monomial_algebra(const AqParams& params) {
  params.validate();
  const int p = params.p;
  Presentation pres;
  pres.name = "A(q) monomial";
  pres.scalar_order = params.order();
  pres.gens = {{"a", p, true}, {"x", p * p, false}};
  // a x = q^p x a, i.e. x a = q^-p a x.
  pres.rules = {{1, 0, {{root_of_unity(params.order(), -std::int64_t{p} * params.q_exp), {{0, 1}, {1, 1}}}}}};
  return normal_form_quotient(pres);
}

// ---------------------------------------------------------------------------
// Skew-primitive data

void SkewPrimitiveDatum::validate() const {
  if (n < 2) throw InputError("datum: n must be at least 2");
  if (std::gcd(q_exp, order()) != 1) throw InputError("datum: q must have exact order n^2");
  if (m < 1) throw InputError("datum: m must be positive");
  if (a_matrix.size() != static_cast<std::size_t>(m)) throw InputError("datum: a_matrix must be m x m");
  for (const auto& row : a_matrix) {
    if (row.size() != static_cast<std::size_t>(m)) throw InputError("datum: a_matrix must be m x m");
  }
  if (nilpotency.size() != static_cast<std::size_t>(m)) {
    throw InputError("datum: one nilpotency order per generator required");
  }
  for (int i = 0; i < m; ++i) {
    if (nilpotency[i] < 1) throw InputError("datum: nilpotency orders must be positive");
    // e_i^N generates a Hopf ideal only when g e_i g^-1 for g = K_i has order N.
    const int braid = static_cast<int>(order() / std::gcd<std::int64_t>(mod(std::int64_t{a_matrix[i][i]} * q_exp, order()), order()));
    if (nilpotency[i] != 1 && nilpotency[i] != braid) {
      throw InputError("datum: e_" + std::to_string(i + 1) + "^N = 0 needs N = ord(q^a_ii) = " +
                       std::to_string(braid));
    }
  }
  for (const auto& r : cross_relations) {
    if (r.later < 0 || r.earlier < 0 || r.later >= m || r.earlier >= m || r.later <= r.earlier) {
      throw InputError("datum: cross relation must rewrite e_later e_earlier with later > earlier");
    }
    for (const auto& t : r.rhs) {
      for (auto [gen, e] : t.word) {
        if (gen < 0 || gen >= m || e < 0) throw InputError("datum: bad word in cross relation");
      }
    }
  }
  for (const auto& b : pbw_basis) {
    if (b.size() != static_cast<std::size_t>(m)) throw InputError("datum: pbw monomial has wrong length");
  }
}

SkewPrimitiveDatum SkewPrimitiveDatum::from_json(const json& j) {
  try {
    SkewPrimitiveDatum d;
    d.n = j.at("n").get<int>();
    d.q_exp = j.at("q_exponent").get<int>();
    d.m = j.at("m").get<int>();
    d.a_matrix = j.at("a_matrix").get<std::vector<std::vector<int>>>();
    d.nilpotency = j.at("nilpotency").get<std::vector<int>>();
    if (j.contains("name")) d.name = j.at("name").get<std::string>();
    if (j.contains("cross_relations")) {
      for (const auto& r : j.at("cross_relations")) {
        CrossRelation cr;
        cr.later = r.at("later").get<int>();
        cr.earlier = r.at("earlier").get<int>();
        for (const auto& t : r.at("rhs")) {
          CrossRelation::Term term;
          term.scalar = t.value("scalar", std::int64_t{1});
          term.q_exp = t.value("q_exp", 0);
          for (const auto& run : t.at("word")) {
            term.word.emplace_back(run.at(0).get<int>(), run.at(1).get<int>());
          }
          cr.rhs.push_back(std::move(term));
        }
        d.cross_relations.push_back(std::move(cr));
      }
    }
    if (j.contains("pbw_basis")) d.pbw_basis = j.at("pbw_basis").get<std::vector<std::vector<int>>>();
    d.validate();
    return d;
  } catch (const json::exception& e) {
    throw InputError(std::string("datum: ") + e.what());
  }
}

json SkewPrimitiveDatum::to_json() const {
  json j;
  j["name"] = name;
  j["n"] = n;
  j["q_exponent"] = q_exp;
  j["m"] = m;
  j["a_matrix"] = a_matrix;
  j["nilpotency"] = nilpotency;
  j["cross_relations"] = json::array();
  for (const auto& r : cross_relations) {
    json rj{{"later", r.later}, {"earlier", r.earlier}, {"rhs", json::array()}};
    for (const auto& t : r.rhs) {
      json w = json::array();
      for (auto [gen, e] : t.word) w.push_back({gen, e});
      rj["rhs"].push_back({{"scalar", t.scalar}, {"q_exp", t.q_exp}, {"word", w}});
    }
    j["cross_relations"].push_back(rj);
  }
  if (!pbw_basis.empty()) j["pbw_basis"] = pbw_basis;
  return j;
}

namespace {

std::vector<StraighteningRule> datum_rules(const SkewPrimitiveDatum& d, int offset) {
  std::vector<StraighteningRule> rules;
  for (const auto& r : d.cross_relations) {
    StraighteningRule sr{r.later + offset, r.earlier + offset, {}};
    for (const auto& t : r.rhs) {
      Word w;
      for (auto [gen, e] : t.word) w.emplace_back(gen + offset, e);
      sr.rhs.emplace_back(CycloNum(d.order(), t.scalar) * root_of_unity(d.order(), t.q_exp), w);
    }
    rules.push_back(std::move(sr));
  }
  return rules;
}

GroupPart datum_group(const SkewPrimitiveDatum& d, Index nil_dim) {
  GroupPart g;
  g.orders.assign(d.m, d.order());
  g.root_exps.assign(d.m, static_cast<int>(mod(d.q_exp, d.order())));
  g.scalar_order = d.order();
  g.nil_dim = nil_dim;
  return g;
}

}  // namespace

AlgebraPtr nil_algebra(const SkewPrimitiveDatum& d) {
  Presentation np;
  np.name = d.name + " nil part";
  np.scalar_order = d.order();
  for (int i = 0; i < d.m; ++i) np.gens.push_back({"e" + std::to_string(i + 1), d.nilpotency[i], false});
  np.rules = datum_rules(d, 0);
  np.basis = d.pbw_basis;
  return normal_form_quotient(np);
}

AlgElement nil_generator(const AlgebraPtr& alg, const GroupPart& g, const FinAlgebra& nil,
                         std::size_t i) {
  std::vector<int> exps(nil.generator_names().size(), 0);
  exps[i] = 1;
  for (Index m = 0; m < nil.dim(); ++m) {
    if (nil.monomials()[m] == exps) return nil_element(alg, g, m);
  }
  return AlgElement(Space{alg, 1});
}

std::vector<int> nil_degrees(const GroupPart& g, const FinAlgebra& nil) {
  std::vector<int> out;
  out.reserve(g.size() * nil.dim());
  for (Index b = 0; b < g.size(); ++b) {
    for (const auto& exps : nil.monomials()) out.push_back(std::accumulate(exps.begin(), exps.end(), 0));
  }
  return out;
}

SkewHopf build_skew_primitive_hopf(const SkewPrimitiveDatum& d) {
  d.validate();
  auto nil = nil_algebra(d);
  GroupPart g = datum_group(d, nil->dim());
  std::vector<Index> gen_weights;
  for (int i = 0; i < d.m; ++i) {
    std::vector<int> eps(d.m, 0);
    eps[i] = 1;
    gen_weights.push_back(g.encode(eps));
  }
  auto alg = crossed_algebra(d.name + " Hopf", g, nil, monomial_weights(g, *nil, gen_weights));
  const Space s1{alg, 1};
  const AlgElement one = AlgElement::unit(s1);
  std::vector<AlgElement> de, se;
  for (int i = 0; i < d.m; ++i) {
    AlgElement e = nil_generator(alg, g, *nil, i);
    const Index k = g.encode(d.a_matrix[i]);
    AlgElement K = group_element(alg, g, k);
    AlgElement K_inv = group_element(alg, g, g.neg(k));
    de.push_back(tensor_elem(e, K) + tensor_elem(one, e));
    se.push_back(CycloNum(d.order(), -1) * (e * K_inv));
  }
  LinMap delta = extend_crossed(alg, g, *nil, group_coproducts(alg, g), de, Space{alg, 2});
  LinMap antipode = extend_crossed(alg, g, *nil, group_antipodes(alg, g), se, s1, true);
  QuasiHopf h{alg->name(), alg,  delta, crossed_counit(alg, g), antipode, one, one,
              AlgElement::unit(Space{alg, 3}), AlgElement::unit(Space{alg, 3}), g};
  h.provenance = json{{"family", "skew-hopf"}, {"datum", d.to_json()}};
  return SkewHopf{std::move(h), nil, d, gen_weights};
}

AlgebraPtr skew_monomial_algebra(const SkewPrimitiveDatum& d) {
  d.validate();
  Presentation pres;
  pres.name = d.name + " monomial";
  pres.scalar_order = d.order();
  for (int i = 0; i < d.m; ++i) pres.gens.push_back({"g" + std::to_string(i + 1), d.order(), true});
  for (int i = 0; i < d.m; ++i) pres.gens.push_back({"e" + std::to_string(i + 1), d.nilpotency[i], false});
  // g_i e_j g_i^-1 = q^{delta_ij} e_j, i.e. e_j g_i = q^{-delta_ij} g_i e_j.
  for (int j = 0; j < d.m; ++j) {
    for (int i = 0; i < d.m; ++i) {
      CycloNum c = i == j ? root_of_unity(d.order(), -d.q_exp) : CycloNum(d.order(), 1);
      pres.rules.push_back({d.m + j, i, {{c, {{i, 1}, {d.m + j, 1}}}}});
    }
  }
  for (auto& r : datum_rules(d, d.m)) pres.rules.push_back(std::move(r));
  if (!d.pbw_basis.empty()) {
    std::vector<std::vector<int>> group_box{{}};
    for (int i = 0; i < d.m; ++i) {
      std::vector<std::vector<int>> next;
      for (const auto& b : group_box) {
        for (int e = 0; e < d.order(); ++e) {
          auto c = b;
          c.push_back(e);
          next.push_back(std::move(c));
        }
      }
      group_box = std::move(next);
    }
    for (const auto& gb : group_box) {
      for (const auto& nb : d.pbw_basis) {
        auto c = gb;
        c.insert(c.end(), nb.begin(), nb.end());
        pres.basis.push_back(std::move(c));
      }
    }
  }
  return normal_form_quotient(pres);
}

CheckResult check_group_projection(const SkewHopf& sh) {
  Stopwatch sw;
  CheckResult r{"group_projection"};
  r.pass = true;
  const QuasiHopf& h = sh.hopf;
  const GroupPart& g = *h.group;
  std::vector<SparseVec> cols(h.alg->dim());
  for (Index b = 0; b < g.size(); ++b) {
    cols[g.idempotent_index(b)] = SparseVec::single(g.idempotent_index(b), one_at(g.scalar_order));
  }
  LinMap pi = LinMap::from_table(h.space(1), h.space(1), std::move(cols));
  LinMap pi2 = tensor_map({pi, pi});
  const Index n = h.alg->dim();
  for (Index i = 0; i < n && r.pass; ++i) {
    AlgElement pe = pi.apply(AlgElement::basis(h.space(1), i));
    for (Index j = 0; j < n; ++j) {
      AlgElement lhs = pi.apply(AlgElement(h.space(1), h.alg->product(i, j)));
      AlgElement rhs = pe * pi.apply(AlgElement::basis(h.space(1), j));
      if (!(lhs == rhs)) {
        r.pass = false;
        r.witness = json{{"pair", {h.alg->labels()[i], h.alg->labels()[j]}}};
        r.message = "projection is not multiplicative";
        break;
      }
    }
    if (!r.pass) break;
    AlgElement lhs = pi2.apply(AlgElement(h.space(2), h.delta.column(i)));
    AlgElement rhs = h.delta.apply(pe);
    if (!(lhs == rhs)) {
      r.pass = false;
      r.witness = json{{"basis", h.alg->labels()[i]}};
      r.message = "projection does not commute with Delta";
    }
  }
  r.timing_ms = sw.ms();
  return r;
}

}  // namespace qhopf
