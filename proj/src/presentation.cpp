#include <map>
#include <sstream>

#include "qhopf/algebra.hpp"

namespace qhopf {

namespace {

struct RuleTable {
  // rules[later][earlier], null when the pair commutes.
  std::vector<std::vector<const StraighteningRule*>> rules;
  // Coefficient c when the rule is later*earlier = c * earlier*later.
  std::vector<std::vector<std::optional<CycloNum>>> monomial;
};

RuleTable index_rules(const Presentation& pres) {
  const std::size_t g = pres.gens.size();
  RuleTable t;
  t.rules.assign(g, std::vector<const StraighteningRule*>(g, nullptr));
  t.monomial.assign(g, std::vector<std::optional<CycloNum>>(g));
  for (const auto& r : pres.rules) {
    if (r.later < 0 || r.earlier < 0 || static_cast<std::size_t>(r.later) >= g ||
        static_cast<std::size_t>(r.earlier) >= g || r.later <= r.earlier) {
      throw AlgebraError("straightening rule must rewrite later*earlier with later > earlier");
    }
    t.rules[r.later][r.earlier] = &r;
    if (r.rhs.size() == 1) {
      const Word& w = r.rhs[0].second;
      if (w.size() == 2 && w[0] == std::pair{r.earlier, 1} && w[1] == std::pair{r.later, 1}) {
        t.monomial[r.later][r.earlier] = r.rhs[0].first;
      }
    }
  }
  return t;
}

// Cleans a word in place: drops empty runs, merges equal neighbours and
// applies the truncation bounds. Returns false when the word is zero.
bool tidy(const Presentation& pres, Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto [g, e] : w) {
    const auto& spec = pres.gens[g];
    if (!out.empty() && out.back().first == g) {
      out.back().second += e;
    } else {
      out.emplace_back(g, e);
    }
    auto& back = out.back();
    if (spec.cyclic) {
      back.second = static_cast<int>(mod(back.second, spec.bound));
    } else if (back.second < 0) {
      throw AlgebraError("negative power of nilpotent generator " + spec.name);
    } else if (back.second >= spec.bound) {
      return false;
    }
    if (back.second == 0) out.pop_back();
  }
  w = std::move(out);
  return true;
}

}  // namespace

std::vector<std::pair<std::vector<int>, CycloNum>> normal_form(const Presentation& pres,
                                                               const Word& word) {
  const RuleTable rt = index_rules(pres);
  const int ord = pres.scalar_order;
  std::map<Word, CycloNum> pending;
  std::map<std::vector<int>, CycloNum> done;
  pending.emplace(word, CycloNum(ord, 1));
  std::size_t steps = 0;

  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    Word w = std::move(node.key());
    CycloNum c = std::move(node.mapped());
    if (c.is_zero()) continue;
    if (++steps > pres.step_budget) {
      throw SizeLimitError("rewriting step budget exhausted for " + pres.name);
    }
    if (!tidy(pres, w)) continue;

    std::size_t pos = 0;
    while (pos + 1 < w.size() && w[pos].first < w[pos + 1].first) ++pos;
    if (pos + 1 >= w.size()) {
      std::vector<int> exps(pres.gens.size(), 0);
      for (auto [g, e] : w) exps[g] = e;
      auto [it, inserted] = done.try_emplace(std::move(exps), c);
      if (!inserted) it->second += c;
      continue;
    }

    auto [later, e1] = w[pos];
    auto [earlier, e2] = w[pos + 1];
    auto push = [&](Word nw, const CycloNum& k) {
      auto [it, inserted] = pending.try_emplace(std::move(nw), k);
      if (!inserted) it->second += k;
    };
    if (rt.rules[later][earlier] == nullptr || rt.monomial[later][earlier]) {
      // later^e1 earlier^e2 = c^{e1 e2} earlier^e2 later^e1
      CycloNum k = c;
      if (const auto& m = rt.monomial[later][earlier]) k *= m->pow(std::int64_t{e1} * e2);
      Word nw = w;
      std::swap(nw[pos], nw[pos + 1]);
      push(std::move(nw), k);
      continue;
    }
    // Peel one letter from each side and substitute the rule.
    const StraighteningRule& rule = *rt.rules[later][earlier];
    for (const auto& [coef, rhs] : rule.rhs) {
      Word nw(w.begin(), w.begin() + pos);
      nw.emplace_back(later, e1 - 1);
      nw.insert(nw.end(), rhs.begin(), rhs.end());
      nw.emplace_back(earlier, e2 - 1);
      nw.insert(nw.end(), w.begin() + pos + 2, w.end());
      push(std::move(nw), c * coef);
    }
  }

  std::vector<std::pair<std::vector<int>, CycloNum>> out;
  for (auto& [e, c] : done) {
    if (!c.is_zero()) out.emplace_back(e, std::move(c));
  }
  return out;
}

namespace {

std::vector<std::vector<int>> box_basis(const Presentation& pres) {
  std::vector<std::vector<int>> basis{{}};
  for (const auto& g : pres.gens) {
    std::vector<std::vector<int>> next;
    for (const auto& m : basis) {
      for (int e = 0; e < g.bound; ++e) {
        auto n = m;
        n.push_back(e);
        next.push_back(std::move(n));
      }
    }
    basis = std::move(next);
  }
  return basis;
}

std::string monomial_label(const Presentation& pres, const std::vector<int>& exps) {
  std::ostringstream os;
  bool any = false;
  for (std::size_t g = 0; g < exps.size(); ++g) {
    if (exps[g] == 0) continue;
    if (any) os << " ";
    any = true;
    os << pres.gens[g].name;
    if (exps[g] != 1) os << "^" << exps[g];
  }
  return any ? os.str() : "1";
}

Word monomial_word(const std::vector<int>& exps) {
  Word w;
  for (std::size_t g = 0; g < exps.size(); ++g) {
    if (exps[g]) w.emplace_back(static_cast<int>(g), exps[g]);
  }
  return w;
}

}  // namespace

AlgebraPtr normal_form_quotient(const Presentation& pres) {
  auto basis = pres.basis.empty() ? box_basis(pres) : pres.basis;
  std::map<std::vector<int>, Index> lookup;
  std::vector<std::string> labels;
  for (Index i = 0; i < basis.size(); ++i) {
    if (basis[i].size() != pres.gens.size()) throw AlgebraError("basis monomial has wrong length");
    lookup.emplace(basis[i], i);
    labels.push_back(monomial_label(pres, basis[i]));
  }
  const Index n = basis.size();
  auto to_vec = [&](const std::vector<std::pair<std::vector<int>, CycloNum>>& nf) {
    std::vector<SparseVec::Term> terms;
    for (const auto& [e, c] : nf) {
      auto it = lookup.find(e);
      if (it == lookup.end()) {
        throw AlgebraError("normal form " + monomial_label(pres, e) + " outside the basis of " +
                           pres.name);
      }
      terms.emplace_back(it->second, c);
    }
    return SparseVec::from_terms(std::move(terms));
  };

  std::vector<Word> words;
  words.reserve(n);
  for (const auto& m : basis) words.push_back(monomial_word(m));
  std::vector<SparseVec> table;
  table.reserve(n * n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      Word w = words[i];
      w.insert(w.end(), words[j].begin(), words[j].end());
      table.push_back(to_vec(normal_form(pres, w)));
    }
  }
  SparseVec unit = to_vec(normal_form(pres, {}));
  std::vector<std::string> names;
  for (const auto& g : pres.gens) names.push_back(g.name);
  auto alg = std::make_shared<FinAlgebra>(pres.name, pres.scalar_order, std::move(labels),
                                          std::move(unit), std::move(table));
  alg->set_monomials(std::move(names), std::move(basis));
  return alg;
}

AlgElement word_element(const AlgebraPtr& alg, const Word& word) {
  Space s{alg, 1};
  const auto& names = alg->generator_names();
  AlgElement r = AlgElement::unit(s);
  for (auto [g, e] : word) {
    if (g < 0 || static_cast<std::size_t>(g) >= names.size()) {
      throw AlgebraError("generator index out of range");
    }
    std::vector<int> exps(names.size(), 0);
    exps[g] = 1;
    int order = 0;
    // A cyclic generator has inverse g^{order-1}; recover its order from the basis.
    for (const auto& m : alg->monomials()) order = std::max(order, m[g] + 1);
    const AlgElement ge = AlgElement::basis(s, alg->monomial_index(exps));
    const bool cyclic = power(ge, order) == AlgElement::unit(s);
    if (e < 0) {
      if (!cyclic) throw AlgebraError("negative power of non-invertible generator " + names[g]);
      e = static_cast<int>(mod(e, order));
    }
    r = r * power(ge, e);
  }
  return r;
}

}  // namespace qhopf
