#include "qhopf/qhopf.hpp"

namespace qhopf {

namespace {

json tuple_labels(const Space& s, Index flat) {
  json out = json::array();
  if (s.degree == 0) return out;
  for (Index i : s.decode(flat)) out.push_back(s.alg->labels()[i]);
  return out;
}

// First coordinate where a and b differ.
json first_difference(const AlgElement& a, const AlgElement& b) {
  AlgElement d = a - b;
  json w;
  if (d.is_zero()) return w;
  const auto& [i, c] = d.terms().front();
  w["coordinate"] = tuple_labels(d.space(), i);
  w["lhs"] = a.coeff(i).to_string();
  w["rhs"] = b.coeff(i).to_string();
  return w;
}

json basis_witness(const QuasiHopf& h, Index i) {
  json w;
  w["basis"] = i;
  w["label"] = h.alg->labels()[i];
  return w;
}

void fail(CheckResult& r, json witness, std::string message) {
  if (!r.pass) return;
  r.pass = false;
  r.witness = std::move(witness);
  r.message = std::move(message);
}

AlgElement column_element(const LinMap& m, Index i) { return AlgElement(m.codomain(), m.column(i)); }

CycloNum scalar_of(const AlgElement& x) {
  if (x.is_zero()) return CycloNum(x.space().scalar_order());
  return x.terms()[0].second;
}

void guard(const QuasiHopf& h, const char* what) {
  const Index limit = size_limit(1000);
  if (h.alg->dim() > limit) {
    throw SizeLimitError(std::string(what) + " on dim " + std::to_string(h.alg->dim()) +
                         " exceeds size limit " + std::to_string(limit));
  }
}

}  // namespace

LinMap delta_at(const QuasiHopf& h, int degree, int position) {
  std::vector<LinMap> maps;
  for (int t = 0; t < degree; ++t) {
    maps.push_back(t == position ? h.delta : LinMap::identity(h.space(1)));
  }
  return tensor_map(maps);
}

LinMap counit_at(const QuasiHopf& h, int degree, int position) {
  std::vector<LinMap> maps;
  for (int t = 0; t < degree; ++t) {
    maps.push_back(t == position ? h.counit : LinMap::identity(h.space(1)));
  }
  return tensor_map(maps);
}

AlgElement invert_diagonal(const QuasiHopf& h, const AlgElement& x) {
  if (!h.group) throw AlgebraError("diagonal inverse needs a group part");
  return diagonal_inverse(x, *h.group);
}

CheckResult check_hom(const QuasiHopf& h) {
  Stopwatch sw;
  CheckResult r{"hom"};
  r.pass = true;
  guard(h, "check_hom");
  const Index n = h.alg->dim();
  const Space s1 = h.space(1);
  std::vector<AlgElement> d;
  std::vector<CycloNum> e;
  d.reserve(n);
  for (Index i = 0; i < n; ++i) {
    d.push_back(column_element(h.delta, i));
    e.push_back(scalar_of(column_element(h.counit, i)));
  }
  AlgElement one = h.one(1);
  if (!(h.delta.apply(one) == h.one(2))) fail(r, json{{"identity", "Delta(1)"}}, "Delta(1) != 1x1");
  if (!scalar_of(h.counit.apply(one)).is_one()) fail(r, json{{"identity", "eps(1)"}}, "eps(1) != 1");
  for (Index i = 0; i < n && r.pass; ++i) {
    for (Index j = 0; j < n; ++j) {
      AlgElement prod(s1, h.alg->product(i, j));
      AlgElement lhs = h.delta.apply(prod);
      AlgElement rhs = d[i] * d[j];
      if (!(lhs == rhs)) {
        json w{{"pair", {h.alg->labels()[i], h.alg->labels()[j]}}, {"map", "Delta"}};
        w["difference"] = first_difference(lhs, rhs);
        fail(r, w, "Delta(e_i e_j) != Delta(e_i) Delta(e_j)");
        break;
      }
      CycloNum el = scalar_of(h.counit.apply(prod));
      if (!(el == e[i] * e[j])) {
        fail(r, json{{"pair", {h.alg->labels()[i], h.alg->labels()[j]}}, {"map", "eps"}},
             "eps(e_i e_j) != eps(e_i) eps(e_j)");
        break;
      }
    }
  }
  r.timing_ms = sw.ms();
  return r;
}

CheckResult check_counit(const QuasiHopf& h) {
  Stopwatch sw;
  CheckResult r{"counit"};
  r.pass = true;
  const LinMap left = counit_at(h, 2, 0);
  const LinMap right = counit_at(h, 2, 1);
  for (Index i = 0; i < h.alg->dim() && r.pass; ++i) {
    AlgElement e = AlgElement::basis(h.space(1), i);
    AlgElement d = column_element(h.delta, i);
    if (!(left.apply(d) == e)) fail(r, basis_witness(h, i), "(eps x id)Delta(h) != h");
    if (!(right.apply(d) == e)) fail(r, basis_witness(h, i), "(id x eps)Delta(h) != h");
  }
  r.timing_ms = sw.ms();
  return r;
}

CheckResult check_counit_phi(const QuasiHopf& h) {
  Stopwatch sw;
  CheckResult r{"counit_phi"};
  r.pass = true;
  const AlgElement one2 = h.one(2);
  for (int pos = 0; pos < 3; ++pos) {
    AlgElement x = counit_at(h, 3, pos).apply(h.phi);
    if (!(x == one2)) {
      json w{{"leg", pos + 1}};
      w["difference"] = first_difference(x, one2);
      fail(r, w, "counit applied to a leg of Phi is not 1x1");
    }
  }
  r.timing_ms = sw.ms();
  return r;
}

CheckResult check_phi_inverse(const QuasiHopf& h) {
  Stopwatch sw;
  CheckResult r{"phi_inverse"};
  r.pass = true;
  const AlgElement one3 = h.one(3);
  if (!(h.phi * h.phi_inv == one3)) fail(r, json{{"side", "right"}}, "Phi Phi^-1 != 1");
  if (!(h.phi_inv * h.phi == one3)) fail(r, json{{"side", "left"}}, "Phi^-1 Phi != 1");
  r.timing_ms = sw.ms();
  return r;
}

CheckResult check_quasi_coassociativity(const QuasiHopf& h) {
  Stopwatch sw;
  CheckResult r{"quasi_coassociativity"};
  r.pass = true;
  const LinMap dl = delta_at(h, 2, 0);
  const LinMap dr = delta_at(h, 2, 1);
  for (Index i = 0; i < h.alg->dim() && r.pass; ++i) {
    AlgElement d = column_element(h.delta, i);
    AlgElement lhs = h.phi * dl.apply(d) * h.phi_inv;
    AlgElement rhs = dr.apply(d);
    if (!(lhs == rhs)) {
      json w = basis_witness(h, i);
      w["difference"] = first_difference(lhs, rhs);
      fail(r, w, "Phi (Delta x id)Delta(h) Phi^-1 != (id x Delta)Delta(h)");
    }
  }
  r.timing_ms = sw.ms();
  return r;
}

CheckResult check_pentagon(const QuasiHopf& h) {
  Stopwatch sw;
  CheckResult r{"pentagon"};
  const AlgElement one = h.one(1);
  AlgElement lhs = delta_at(h, 3, 2).apply(h.phi) * delta_at(h, 3, 0).apply(h.phi);
  AlgElement rhs = tensor_elem(one, h.phi) * delta_at(h, 3, 1).apply(h.phi) *
                   tensor_elem(h.phi, one);
  r.pass = lhs == rhs;
  if (!r.pass) {
    r.witness = first_difference(lhs, rhs);
    r.message = "pentagon identity fails";
  }
  r.timing_ms = sw.ms();
  return r;
}

CheckResult check_antipode(const QuasiHopf& h) {
  Stopwatch sw;
  CheckResult r{"antipode"};
  r.pass = true;
  const Space s1 = h.space(1);
  const Index n = h.alg->dim();
  std::vector<AlgElement> S;
  S.reserve(n);
  for (Index i = 0; i < n; ++i) S.push_back(column_element(h.antipode, i));
  auto basis = [&](Index i) { return AlgElement::basis(s1, i); };
  const Space s2 = h.space(2);

  for (Index i = 0; i < n && r.pass; ++i) {
    AlgElement d = column_element(h.delta, i);
    CycloNum eps = scalar_of(column_element(h.counit, i));
    AlgElement lhs1(s1), lhs2(s1);
    for (const auto& [flat, c] : d.terms()) {
      auto t = s2.decode(flat);
      lhs1 += c * (S[t[0]] * h.alpha * basis(t[1]));
      lhs2 += c * (basis(t[0]) * h.beta * S[t[1]]);
    }
    if (!(lhs1 == eps * h.alpha)) {
      json w = basis_witness(h, i);
      w["identity"] = "S(h1) alpha h2 = eps(h) alpha";
      fail(r, w, "first antipode identity fails");
    } else if (!(lhs2 == eps * h.beta)) {
      json w = basis_witness(h, i);
      w["identity"] = "h1 beta S(h2) = eps(h) beta";
      fail(r, w, "second antipode identity fails");
    }
  }
  if (r.pass) {
    const Space s3 = h.space(3);
    AlgElement x(s1), y(s1);
    for (const auto& [flat, c] : h.phi.terms()) {
      auto t = s3.decode(flat);
      x += c * (basis(t[0]) * h.beta * S[t[1]] * h.alpha * basis(t[2]));
    }
    for (const auto& [flat, c] : h.phi_inv.terms()) {
      auto t = s3.decode(flat);
      y += c * (S[t[0]] * h.alpha * basis(t[1]) * h.beta * S[t[2]]);
    }
    const AlgElement one = h.one(1);
    if (!(x == one)) {
      json w{{"identity", "Phi1 beta S(Phi2) alpha Phi3 = 1"}};
      w["difference"] = first_difference(x, one);
      fail(r, w, "third antipode identity fails");
    } else if (!(y == one)) {
      json w{{"identity", "S(Phibar1) alpha Phibar2 beta S(Phibar3) = 1"}};
      w["difference"] = first_difference(y, one);
      fail(r, w, "fourth antipode identity fails");
    }
  }
  r.timing_ms = sw.ms();
  return r;
}

Report verify_all(const QuasiHopf& h) {
  Report rep;
  rep.checks.push_back(check_hom(h));
  rep.checks.push_back(check_counit(h));
  rep.checks.push_back(check_phi_inverse(h));
  rep.checks.push_back(check_counit_phi(h));
  rep.checks.push_back(check_quasi_coassociativity(h));
  rep.checks.push_back(check_pentagon(h));
  rep.checks.push_back(check_antipode(h));
  return rep;
}

std::vector<Index> graded_dims(const GradedQuasiHopf& g) {
  std::vector<Index> dims;
  for (int d : g.degree) {
    if (d < 0) throw AlgebraError("negative degree");
    if (static_cast<std::size_t>(d) >= dims.size()) dims.resize(d + 1, 0);
    ++dims[d];
  }
  return dims;
}

CheckResult check_grading(const GradedQuasiHopf& g) {
  Stopwatch sw;
  CheckResult r{"grading"};
  r.pass = true;
  const QuasiHopf& h = g.base;
  const Index n = h.alg->dim();
  if (g.degree.size() != n) {
    r.pass = false;
    r.message = "degree vector has wrong length";
    return r;
  }
  auto deg_of = [&](const Space& s, Index flat) {
    int d = 0;
    if (s.degree == 0) return 0;
    for (Index i : s.decode(flat)) d += g.degree[i];
    return d;
  };
  for (Index i = 0; i < n && r.pass; ++i) {
    for (Index j = 0; j < n && r.pass; ++j) {
      for (const auto& [k, c] : h.alg->product(i, j).terms()) {
        if (g.degree[k] != g.degree[i] + g.degree[j]) {
          fail(r, json{{"pair", {h.alg->labels()[i], h.alg->labels()[j]}}},
               "multiplication is not graded");
          break;
        }
      }
    }
  }
  for (Index i = 0; i < n && r.pass; ++i) {
    const SparseVec dcol = h.delta.column(i);
    const SparseVec scol = h.antipode.column(i);
    for (const auto& [flat, c] : dcol.terms()) {
      if (deg_of(h.space(2), flat) != g.degree[i]) {
        fail(r, basis_witness(h, i), "Delta is not degree preserving");
        break;
      }
    }
    for (const auto& [k, c] : scol.terms()) {
      if (g.degree[k] != g.degree[i]) {
        fail(r, basis_witness(h, i), "S is not degree preserving");
        break;
      }
    }
    if (!h.counit.column(i).empty() && g.degree[i] != 0) {
      fail(r, basis_witness(h, i), "eps is nonzero in positive degree");
    }
  }
  auto in_degree_zero = [&](const AlgElement& x) {
    for (const auto& [flat, c] : x.terms()) {
      if (deg_of(x.space(), flat) != 0) return false;
    }
    return true;
  };
  if (r.pass && !in_degree_zero(h.phi)) fail(r, json{{"element", "phi"}}, "Phi not in degree 0");
  if (r.pass && !in_degree_zero(h.phi_inv)) {
    fail(r, json{{"element", "phi_inv"}}, "Phi^-1 not in degree 0");
  }
  if (r.pass && (!in_degree_zero(h.alpha) || !in_degree_zero(h.beta))) {
    fail(r, json{{"element", "alpha/beta"}}, "distinguished elements not in degree 0");
  }
  if (r.pass) {
    // Degree 0 must be exactly the span of the group idempotents.
    if (!h.group) {
      fail(r, json{{"degree", 0}}, "degree 0 part has no group structure");
    } else {
      for (Index i = 0; i < n; ++i) {
        bool is_idem = i % h.group->nil_dim == 0;
        if ((g.degree[i] == 0) != is_idem) {
          fail(r, basis_witness(h, i), "degree 0 part is not spanned by group idempotents");
          break;
        }
      }
    }
  }
  json dims = json::array();
  for (Index d : graded_dims(g)) dims.push_back(d);
  if (r.pass) {
    r.witness = json{{"dims", dims}};
  } else {
    r.witness["dims"] = dims;
  }
  r.timing_ms = sw.ms();
  return r;
}

BigRational rank_degree_one(const GradedQuasiHopf& g) {
  auto dims = graded_dims(g);
  if (dims.empty() || dims[0] == 0) throw AlgebraError("empty degree 0 part");
  if (g.base.group && dims[0] != g.base.group->size()) {
    throw AlgebraError("degree 0 part is not the group algebra");
  }
  Index d1 = dims.size() > 1 ? dims[1] : 0;
  return BigRational(BigInt(d1), BigInt(dims[0]));
}

}  // namespace qhopf
