#include "qhopf/algebra.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace qhopf {

// ---------------------------------------------------------------------------
// SparseVec / Accumulator

SparseVec SparseVec::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  SparseVec v;
  for (auto& t : terms) {
    if (!v.terms_.empty() && v.terms_.back().first == t.first) {
      v.terms_.back().second += t.second;
      if (v.terms_.back().second.is_zero()) v.terms_.pop_back();
    } else if (!t.second.is_zero()) {
      v.terms_.push_back(std::move(t));
    }
  }
  return v;
}

SparseVec SparseVec::single(Index i, CycloNum c) {
  SparseVec v;
  if (!c.is_zero()) v.terms_.emplace_back(i, std::move(c));
  return v;
}

const CycloNum* SparseVec::find(Index i) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), i,
                             [](const Term& t, Index k) { return t.first < k; });
  if (it == terms_.end() || it->first != i) return nullptr;
  return &it->second;
}

void Accumulator::add(Index i, const CycloNum& c) {
  auto [it, inserted] = map_.try_emplace(i, c);
  if (!inserted) it->second += c;
}

void Accumulator::add_scaled(const SparseVec& v, const CycloNum& c) {
  if (c.is_one()) {
    for (const auto& [i, x] : v.terms()) add(i, x);
  } else {
    for (const auto& [i, x] : v.terms()) add(i, x * c);
  }
}

SparseVec Accumulator::finish() {
  std::vector<SparseVec::Term> terms;
  terms.reserve(map_.size());
  for (auto& [i, c] : map_) {
    if (!c.is_zero()) terms.emplace_back(i, std::move(c));
  }
  map_.clear();
  return SparseVec::from_terms(std::move(terms));
}

// ---------------------------------------------------------------------------
// FinAlgebra

FinAlgebra::FinAlgebra(std::string name, int scalar_order, std::vector<std::string> labels,
                       SparseVec unit, std::vector<SparseVec> table)
    : name_(std::move(name)),
      scalar_order_(scalar_order),
      dim_(labels.size()),
      labels_(std::move(labels)),
      unit_(std::move(unit)),
      table_(std::move(table)) {
  if (dim_ == 0) throw AlgebraError("algebra must have positive dimension");
  if (table_.size() != dim_ * dim_) throw AlgebraError("structure constant table has wrong size");
  auto check = [&](const SparseVec& v) {
    for (const auto& [i, c] : v.terms()) {
      if (i >= dim_) throw AlgebraError("basis index out of range in " + name_);
      if (c.order() != scalar_order_) throw ScalarError("coefficient order mismatch in " + name_);
    }
  };
  check(unit_);
  for (const auto& v : table_) check(v);
}

void FinAlgebra::set_monomials(std::vector<std::string> generator_names,
                               std::vector<std::vector<int>> monomials) {
  if (monomials.size() != dim_) throw AlgebraError("monomial list has wrong size");
  generator_names_ = std::move(generator_names);
  monomials_ = std::move(monomials);
  monomial_lookup_.clear();
  for (Index i = 0; i < dim_; ++i) monomial_lookup_.emplace(monomials_[i], i);
}

Index FinAlgebra::monomial_index(const std::vector<int>& exps) const {
  auto it = monomial_lookup_.find(exps);
  if (it == monomial_lookup_.end()) throw AlgebraError("monomial not in basis of " + name_);
  return it->second;
}

void FinAlgebra::set_blocks(std::vector<Index> left, std::vector<Index> right, Index count) {
  if (left.size() != dim_ || right.size() != dim_) throw AlgebraError("block labels have wrong size");
  for (Index i = 0; i < dim_; ++i) {
    if (left[i] >= count || right[i] >= count) throw AlgebraError("block label out of range");
    for (Index j = 0; j < dim_; ++j) {
      if (right[i] != left[j] && !product(i, j).empty()) {
        throw AlgebraError("block labels inconsistent with structure constants of " + name_);
      }
    }
  }
  left_block_ = std::move(left);
  right_block_ = std::move(right);
  block_count_ = count;
}

// ---------------------------------------------------------------------------
// Space

Index Space::dim() const {
  Index d = 1;
  for (int t = 0; t < degree; ++t) d *= alg->dim();
  return d;
}

std::vector<Index> Space::decode(Index flat) const {
  std::vector<Index> tuple(degree);
  const Index n = alg->dim();
  for (int t = degree - 1; t >= 0; --t) {
    tuple[t] = flat % n;
    flat /= n;
  }
  return tuple;
}

Index Space::encode(std::span<const Index> tuple) const {
  Index flat = 0;
  const Index n = alg->dim();
  for (Index i : tuple) flat = flat * n + i;
  return flat;
}

// ---------------------------------------------------------------------------
// AlgElement

AlgElement::AlgElement(Space space, SparseVec vec) : space_(std::move(space)), vec_(std::move(vec)) {
  const Index d = space_.dim();
  for (const auto& [i, c] : vec_.terms()) {
    if (i >= d) throw AlgebraError("element index out of range");
    if (c.order() != space_.scalar_order()) throw ScalarError("incompatible scalars in element");
  }
}

AlgElement AlgElement::basis(const Space& space, Index i) {
  return AlgElement(space, SparseVec::single(i, CycloNum(space.scalar_order(), 1)));
}

AlgElement AlgElement::unit(const Space& space) {
  if (space.degree == 0) return scalar(space, CycloNum(space.scalar_order(), 1));
  AlgElement u(Space{space.alg, 1}, space.alg->unit());
  AlgElement r = u;
  for (int t = 1; t < space.degree; ++t) r = tensor_elem(r, u);
  return r;
}

AlgElement AlgElement::scalar(const Space& space, const CycloNum& c) {
  if (space.degree == 0) return AlgElement(space, SparseVec::single(0, c));
  return c * unit(space);
}

CycloNum AlgElement::coeff(Index i) const {
  if (const CycloNum* c = vec_.find(i)) return *c;
  return CycloNum(space_.scalar_order());
}

namespace {
void require_same(const Space& a, const Space& b, const char* what) {
  if (!(a == b)) {
    throw AlgebraError(std::string("algebra mismatch in ") + what + ": " + a.alg->name() + "^" +
                       std::to_string(a.degree) + " vs " + b.alg->name() + "^" +
                       std::to_string(b.degree));
  }
}
}  // namespace

AlgElement& AlgElement::operator+=(const AlgElement& b) {
  require_same(space_, b.space_, "addition");
  if (b.is_zero()) return *this;
  std::vector<SparseVec::Term> terms = vec_.terms();
  terms.insert(terms.end(), b.vec_.terms().begin(), b.vec_.terms().end());
  vec_ = SparseVec::from_terms(std::move(terms));
  return *this;
}

AlgElement& AlgElement::operator-=(const AlgElement& b) { return *this += -b; }

AlgElement AlgElement::operator-() const {
  std::vector<SparseVec::Term> terms;
  terms.reserve(vec_.size());
  for (const auto& [i, c] : vec_.terms()) terms.emplace_back(i, -c);
  return AlgElement(space_, SparseVec::from_terms(std::move(terms)));
}

AlgElement operator*(const CycloNum& c, const AlgElement& a) {
  if (c.order() != a.space_.scalar_order()) throw ScalarError("incompatible scalars in scaling");
  std::vector<SparseVec::Term> terms;
  terms.reserve(a.vec_.size());
  for (const auto& [i, x] : a.vec_.terms()) terms.emplace_back(i, x * c);
  return AlgElement(a.space_, SparseVec::from_terms(std::move(terms)));
}

AlgElement operator*(const AlgElement& a, const AlgElement& b) { return multiply(a, b); }

bool operator==(const AlgElement& a, const AlgElement& b) {
  return a.space_ == b.space_ && a.vec_ == b.vec_;
}

std::string AlgElement::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, c] : vec_.terms()) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")*";
    if (space_.degree == 0) {
      os << "1";
      continue;
    }
    auto tuple = space_.decode(i);
    for (std::size_t t = 0; t < tuple.size(); ++t) {
      if (t) os << "⊗";
      os << space_.alg->labels()[tuple[t]];
    }
  }
  return os.str();
}

AlgElement multiply(const AlgElement& u, const AlgElement& v) {
  require_same(u.space(), v.space(), "multiplication");
  const Space& s = u.space();
  const int k = s.degree;
  if (u.is_zero() || v.is_zero()) return AlgElement(s);
  const FinAlgebra& alg = *s.alg;
  if (k == 0) {
    return AlgElement(s, SparseVec::single(0, u.terms()[0].second * v.terms()[0].second));
  }
  std::vector<std::vector<Index>> ud, vd;
  ud.reserve(u.terms().size());
  vd.reserve(v.terms().size());
  for (const auto& t : u.terms()) ud.push_back(s.decode(t.first));
  for (const auto& t : v.terms()) vd.push_back(s.decode(t.first));

  const Index n = alg.dim();
  Accumulator acc;
  std::vector<const SparseVec*> parts(k);
  auto handle = [&](std::size_t a, std::size_t b) {
    bool single = true;
    for (int t = 0; t < k; ++t) {
      parts[t] = &alg.product(ud[a][t], vd[b][t]);
      if (parts[t]->empty()) return;
      single = single && parts[t]->size() == 1;
    }
    CycloNum coeff = u.terms()[a].second * v.terms()[b].second;
    if (single) {
      Index flat = 0;
      for (int t = 0; t < k; ++t) {
        const auto& [idx, c] = parts[t]->terms()[0];
        flat = flat * n + idx;
        if (!c.is_one()) coeff *= c;
      }
      acc.add(flat, coeff);
      return;
    }
    // Cartesian expansion of the component products.
    std::vector<std::pair<Index, CycloNum>> cur{{0, coeff}};
    for (int t = 0; t < k; ++t) {
      std::vector<std::pair<Index, CycloNum>> next;
      next.reserve(cur.size() * parts[t]->size());
      for (const auto& [flat, c] : cur) {
        for (const auto& [idx, x] : parts[t]->terms()) next.emplace_back(flat * n + idx, c * x);
      }
      cur = std::move(next);
    }
    for (const auto& [flat, c] : cur) acc.add(flat, c);
  };

  if (!alg.has_blocks()) {
    for (std::size_t a = 0; a < ud.size(); ++a) {
      for (std::size_t b = 0; b < vd.size(); ++b) handle(a, b);
    }
    return AlgElement(s, acc.finish());
  }
  // Join on block labels: only pairs whose inner blocks agree in every factor.
  const Index nb = alg.block_count();
  std::unordered_map<Index, std::vector<std::size_t>> by_left;
  for (std::size_t b = 0; b < vd.size(); ++b) {
    Index key = 0;
    for (int t = 0; t < k; ++t) key = key * nb + alg.left_block(vd[b][t]);
    by_left[key].push_back(b);
  }
  for (std::size_t a = 0; a < ud.size(); ++a) {
    Index key = 0;
    for (int t = 0; t < k; ++t) key = key * nb + alg.right_block(ud[a][t]);
    auto it = by_left.find(key);
    if (it == by_left.end()) continue;
    for (std::size_t b : it->second) handle(a, b);
  }
  return AlgElement(s, acc.finish());
}

AlgElement tensor_elem(const AlgElement& u, const AlgElement& v) {
  if (u.space().alg.get() != v.space().alg.get()) {
    throw AlgebraError("tensor product of elements of different algebras");
  }
  if (u.space().scalar_order() != v.space().scalar_order()) {
    throw ScalarError("incompatible scalars in tensor product");
  }
  Space s{u.space().alg, u.space().degree + v.space().degree};
  const Index scale = Space{u.space().alg, v.space().degree}.dim();
  std::vector<SparseVec::Term> terms;
  terms.reserve(u.terms().size() * v.terms().size());
  for (const auto& [i, ci] : u.terms()) {
    for (const auto& [j, cj] : v.terms()) terms.emplace_back(i * scale + j, ci * cj);
  }
  return AlgElement(s, SparseVec::from_terms(std::move(terms)));
}

AlgElement power(const AlgElement& u, std::int64_t k) {
  if (k < 0) throw AlgebraError("negative power of an algebra element");
  AlgElement result = AlgElement::unit(u.space());
  AlgElement base = u;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

// ---------------------------------------------------------------------------
// LinMap

LinMap LinMap::from_table(Space domain, Space codomain, std::vector<SparseVec> columns) {
  if (columns.size() != domain.dim()) throw AlgebraError("linear map table has wrong size");
  const Index cd = codomain.dim();
  for (const auto& col : columns) {
    for (const auto& [i, c] : col.terms()) {
      if (i >= cd) throw AlgebraError("linear map image index out of range");
      if (c.order() != codomain.scalar_order()) throw ScalarError("incompatible scalars in map");
    }
  }
  LinMap m(Kind::Table, std::move(domain), std::move(codomain));
  m.table_ = std::make_shared<const std::vector<SparseVec>>(std::move(columns));
  return m;
}

LinMap LinMap::identity(const Space& domain) { return LinMap(Kind::Identity, domain, domain); }

SparseVec LinMap::column(Index i) const {
  switch (kind_) {
    case Kind::Table:
      return (*table_)[i];
    case Kind::Identity:
      return SparseVec::single(i, CycloNum(domain_.scalar_order(), 1));
    case Kind::Tensor: {
      // Split i into per-factor indices, most significant factor first.
      std::vector<Index> parts(factors_.size());
      for (std::size_t f = factors_.size(); f-- > 0;) {
        Index d = factors_[f].domain_.dim();
        parts[f] = i % d;
        i /= d;
      }
      std::vector<SparseVec::Term> cur{{0, CycloNum(domain_.scalar_order(), 1)}};
      for (std::size_t f = 0; f < factors_.size(); ++f) {
        SparseVec col = factors_[f].column(parts[f]);
        if (col.empty()) return {};
        const Index cd = factors_[f].codomain_.dim();
        std::vector<SparseVec::Term> next;
        next.reserve(cur.size() * col.size());
        for (const auto& [flat, c] : cur) {
          for (const auto& [idx, x] : col.terms()) next.emplace_back(flat * cd + idx, c * x);
        }
        cur = std::move(next);
      }
      return SparseVec::from_terms(std::move(cur));
    }
  }
  return {};
}

AlgElement LinMap::apply(const AlgElement& u) const {
  if (!(u.space() == domain_)) throw AlgebraError("linear map applied outside its domain");
  if (kind_ == Kind::Identity) return u;
  Accumulator acc;
  for (const auto& [i, c] : u.terms()) acc.add_scaled(column(i), c);
  return AlgElement(codomain_, acc.finish());
}

LinMap tensor_map(const std::vector<LinMap>& maps) {
  if (maps.empty()) throw AlgebraError("tensor_map of no maps");
  const AlgebraPtr& alg = maps[0].domain_.alg;
  int dom_deg = 0;
  int cod_deg = 0;
  bool all_identity = true;
  for (const auto& m : maps) {
    if (m.domain_.alg.get() != alg.get() || m.codomain_.alg.get() != alg.get()) {
      throw AlgebraError("tensor_map over different algebras");
    }
    dom_deg += m.domain_.degree;
    cod_deg += m.codomain_.degree;
    all_identity = all_identity && m.kind_ == LinMap::Kind::Identity;
  }
  Space dom{alg, dom_deg};
  if (all_identity) return LinMap::identity(dom);
  LinMap r(LinMap::Kind::Tensor, dom, Space{alg, cod_deg});
  r.factors_ = maps;
  return r;
}

LinMap extend_from_generators(const AlgebraPtr& alg, const std::vector<AlgElement>& images,
                              const Space& codomain, bool anti) {
  const auto& monos = alg->monomials();
  if (monos.empty()) throw AlgebraError("algebra " + alg->name() + " has no monomial basis");
  if (images.size() != alg->generator_names().size()) {
    throw AlgebraError("wrong number of generator images");
  }
  for (const auto& im : images) {
    if (!(im.space() == codomain)) throw AlgebraError("generator image outside codomain");
  }
  // Powers are computed incrementally and cached per generator.
  std::vector<std::vector<AlgElement>> powers(images.size());
  auto pw = [&](std::size_t g, int e) -> const AlgElement& {
    auto& cache = powers[g];
    if (cache.empty()) cache.push_back(AlgElement::unit(codomain));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[g]);
    return cache[e];
  };
  std::vector<SparseVec> cols;
  cols.reserve(monos.size());
  for (const auto& exps : monos) {
    AlgElement x = AlgElement::unit(codomain);
    for (std::size_t t = 0; t < exps.size(); ++t) {
      std::size_t g = anti ? exps.size() - 1 - t : t;
      if (exps[g] > 0) x = x * pw(g, exps[g]);
    }
    cols.push_back(x.vec());
  }
  return LinMap::from_table(Space{alg, 1}, codomain, std::move(cols));
}

CheckResult check_associativity(const FinAlgebra& a) {
  Stopwatch sw;
  CheckResult r{"associativity"};
  const Index n = a.dim();
  const Index limit = size_limit(1000);
  if (n > limit) {
    throw SizeLimitError("associativity check on dim " + std::to_string(n) +
                         " exceeds size limit " + std::to_string(limit));
  }
  auto alg = std::shared_ptr<const FinAlgebra>(std::shared_ptr<const FinAlgebra>{}, &a);
  Space s{alg, 1};
  r.pass = true;
  for (Index i = 0; i < n && r.pass; ++i) {
    for (Index j = 0; j < n && r.pass; ++j) {
      AlgElement ij(s, a.product(i, j));
      for (Index k = 0; k < n; ++k) {
        AlgElement ek = AlgElement::basis(s, k);
        AlgElement lhs = ij * ek;
        AlgElement rhs = AlgElement::basis(s, i) * AlgElement(s, a.product(j, k));
        if (!(lhs == rhs)) {
          r.pass = false;
          r.witness = json::array({i, j, k});
          r.message = "(e_i e_j) e_k != e_i (e_j e_k)";
          break;
        }
      }
    }
  }
  r.timing_ms = sw.ms();
  return r;
}

CheckResult check_unit(const FinAlgebra& a) {
  Stopwatch sw;
  CheckResult r{"unit"};
  auto alg = std::shared_ptr<const FinAlgebra>(std::shared_ptr<const FinAlgebra>{}, &a);
  Space s{alg, 1};
  AlgElement one(s, a.unit());
  r.pass = true;
  for (Index i = 0; i < a.dim(); ++i) {
    AlgElement e = AlgElement::basis(s, i);
    if (!(one * e == e) || !(e * one == e)) {
      r.pass = false;
      r.witness = json::array({i});
      break;
    }
  }
  r.timing_ms = sw.ms();
  return r;
}

std::size_t rank(std::vector<SparseVec> rows) {
  // Dense elimination over the column support; sizes here are tiny.
  std::map<Index, std::size_t> col_of;
  for (const auto& r : rows) {
    for (const auto& [i, c] : r.terms()) col_of.emplace(i, 0);
  }
  std::size_t ncols = 0;
  for (auto& [i, k] : col_of) k = ncols++;
  if (rows.empty() || ncols == 0) return 0;
  const int order = rows.front().terms().empty() ? 1 : rows.front().terms()[0].second.order();
  int ord = order;
  for (const auto& r : rows) {
    if (!r.empty()) ord = r.terms()[0].second.order();
  }
  std::vector<std::vector<CycloNum>> m(rows.size(), std::vector<CycloNum>(ncols, CycloNum(ord)));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const auto& [i, c] : rows[r].terms()) m[r][col_of[i]] = c;
  }
  std::size_t rk = 0;
  for (std::size_t c = 0; c < ncols && rk < m.size(); ++c) {
    std::size_t piv = rk;
    while (piv < m.size() && m[piv][c].is_zero()) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rk]);
    CycloNum inv_p = m[rk][c].inv();
    for (std::size_t r = rk + 1; r < m.size(); ++r) {
      if (m[r][c].is_zero()) continue;
      CycloNum f = m[r][c] * inv_p;
      for (std::size_t cc = c; cc < ncols; ++cc) {
        if (!m[rk][cc].is_zero()) m[r][cc] -= f * m[rk][cc];
      }
    }
    ++rk;
  }
  return rk;
}

}  // namespace qhopf
