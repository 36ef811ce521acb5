#pragma once

// Finite-dimensional associative algebras given by sparse structure
// constants, their elements, virtual tensor powers and linear maps.

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qhopf/cyclo.hpp"
#include "qhopf/report.hpp"

namespace qhopf {

using Index = std::uint64_t;

/// Sorted (index, coefficient) pairs with no stored zeros.
class SparseVec {
 public:
  using Term = std::pair<Index, CycloNum>;

  SparseVec() = default;
  /// Sorts, merges duplicates and drops zeros.
  static SparseVec from_terms(std::vector<Term> terms);
  static SparseVec single(Index i, CycloNum c);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  const CycloNum* find(Index i) const;

  friend bool operator==(const SparseVec& a, const SparseVec& b) { return a.terms_ == b.terms_; }

 private:
  std::vector<Term> terms_;
};

/// Hash-map accumulator for building SparseVecs.
class Accumulator {
 public:
  void add(Index i, const CycloNum& c);
  void add_scaled(const SparseVec& v, const CycloNum& c);
  SparseVec finish();
  std::size_t size() const { return map_.size(); }

 private:
  std::unordered_map<Index, CycloNum> map_;
};

class FinAlgebra;
using AlgebraPtr = std::shared_ptr<const FinAlgebra>;

class FinAlgebra {
 public:
  /// table[i * dim + j] = e_i e_j.
  FinAlgebra(std::string name, int scalar_order, std::vector<std::string> labels, SparseVec unit,
             std::vector<SparseVec> table);

  const std::string& name() const { return name_; }
  Index dim() const { return dim_; }
  int scalar_order() const { return scalar_order_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const SparseVec& unit() const { return unit_; }
  const SparseVec& product(Index i, Index j) const { return table_[i * dim_ + j]; }
  const std::vector<SparseVec>& table() const { return table_; }

  /// Monomial exponents per basis element, when built from a presentation.
  const std::vector<std::vector<int>>& monomials() const { return monomials_; }
  const std::vector<std::string>& generator_names() const { return generator_names_; }
  void set_monomials(std::vector<std::string> generator_names,
                     std::vector<std::vector<int>> monomials);
  /// Basis index of a monomial; throws if absent.
  Index monomial_index(const std::vector<int>& exps) const;

  /// Optional block labels: e_i e_j = 0 unless right_block(i) == left_block(j).
  /// Multiplication uses them to skip products known to vanish.
  void set_blocks(std::vector<Index> left, std::vector<Index> right, Index count);
  bool has_blocks() const { return block_count_ > 0; }
  Index block_count() const { return block_count_; }
  Index left_block(Index i) const { return left_block_[i]; }
  Index right_block(Index i) const { return right_block_[i]; }

 private:
  std::string name_;
  int scalar_order_;
  Index dim_;
  std::vector<std::string> labels_;
  SparseVec unit_;
  std::vector<SparseVec> table_;
  std::vector<std::string> generator_names_;
  std::vector<std::vector<int>> monomials_;
  std::map<std::vector<int>, Index> monomial_lookup_;
  std::vector<Index> left_block_;
  std::vector<Index> right_block_;
  Index block_count_ = 0;
};

/// The k-th tensor power of an algebra (k = 0 is the ground field).
/// Flat index of (i_1, ..., i_k) is sum i_t dim^{k-t}: first factor most significant.
struct Space {
  AlgebraPtr alg;
  int degree = 1;

  Index dim() const;
  int scalar_order() const { return alg->scalar_order(); }
  std::vector<Index> decode(Index flat) const;
  Index encode(std::span<const Index> tuple) const;
  friend bool operator==(const Space& a, const Space& b) {
    return a.alg.get() == b.alg.get() && a.degree == b.degree;
  }
};

class AlgElement {
 public:
  explicit AlgElement(Space space) : space_(std::move(space)) {}
  AlgElement(Space space, SparseVec vec);

  static AlgElement basis(const Space& space, Index i);
  static AlgElement unit(const Space& space);
  static AlgElement scalar(const Space& space, const CycloNum& c);

  const Space& space() const { return space_; }
  const SparseVec& vec() const { return vec_; }
  const std::vector<SparseVec::Term>& terms() const { return vec_.terms(); }
  bool is_zero() const { return vec_.empty(); }
  CycloNum coeff(Index i) const;

  AlgElement& operator+=(const AlgElement& b);
  AlgElement& operator-=(const AlgElement& b);
  friend AlgElement operator+(AlgElement a, const AlgElement& b) { return a += b; }
  friend AlgElement operator-(AlgElement a, const AlgElement& b) { return a -= b; }
  AlgElement operator-() const;
  friend AlgElement operator*(const CycloNum& c, const AlgElement& a);
  friend AlgElement operator*(const AlgElement& a, const AlgElement& b);
  friend bool operator==(const AlgElement& a, const AlgElement& b);

  std::string to_string() const;

 private:
  Space space_;
  SparseVec vec_;
};

AlgElement multiply(const AlgElement& u, const AlgElement& v);
AlgElement tensor_elem(const AlgElement& u, const AlgElement& v);
AlgElement power(const AlgElement& u, std::int64_t k);

/// Linear map between tensor powers, given by a column table, the identity,
/// or lazily as a tensor product of maps.
class LinMap {
 public:
  static LinMap from_table(Space domain, Space codomain, std::vector<SparseVec> columns);
  static LinMap identity(const Space& domain);

  const Space& domain() const { return domain_; }
  const Space& codomain() const { return codomain_; }
  /// Image of the basis vector i.
  SparseVec column(Index i) const;
  AlgElement apply(const AlgElement& u) const;
  bool is_table() const { return kind_ == Kind::Table; }

  friend LinMap tensor_map(const std::vector<LinMap>& maps);

 private:
  enum class Kind { Table, Identity, Tensor };
  LinMap(Kind kind, Space domain, Space codomain)
      : kind_(kind), domain_(std::move(domain)), codomain_(std::move(codomain)) {}

  Kind kind_;
  Space domain_;
  Space codomain_;
  std::shared_ptr<const std::vector<SparseVec>> table_;
  std::vector<LinMap> factors_;
};

LinMap tensor_map(const std::vector<LinMap>& maps);

/// Multiplicative extension of generator images along the basis monomials
/// (order-reversing when anti is set).
LinMap extend_from_generators(const AlgebraPtr& alg, const std::vector<AlgElement>& images,
                              const Space& codomain, bool anti = false);

CheckResult check_associativity(const FinAlgebra& a);
CheckResult check_unit(const FinAlgebra& a);

/// Rank over Q(zeta_N) of a family of vectors (Gaussian elimination).
std::size_t rank(std::vector<SparseVec> rows);

// ---------------------------------------------------------------------------
// Presentations by generators, truncation bounds and straightening rules.

/// A word as runs (generator, exponent).
using Word = std::vector<std::pair<int, int>>;

struct GeneratorSpec {
  std::string name;
  int bound = 1;       // x^bound = 1 (cyclic) or x^bound = 0 (nilpotent)
  bool cyclic = false;
};

/// later * earlier -> sum coeff * word, with later > earlier in generator order.
struct StraighteningRule {
  int later = 0;
  int earlier = 0;
  std::vector<std::pair<CycloNum, Word>> rhs;
};

struct Presentation {
  std::string name;
  int scalar_order = 1;
  std::vector<GeneratorSpec> gens;
  std::vector<StraighteningRule> rules;
  /// Ordered monomial basis; defaults to the exponent box.
  std::vector<std::vector<int>> basis;
  std::size_t step_budget = std::size_t{1} << 26;
};

/// Normal form of a word as (exponent vector, coefficient) pairs.
std::vector<std::pair<std::vector<int>, CycloNum>> normal_form(const Presentation& pres,
                                                               const Word& word);

AlgebraPtr normal_form_quotient(const Presentation& pres);

/// The element given by a word, e.g. {{0, 2}, {1, 1}} for g0^2 g1.
AlgElement word_element(const AlgebraPtr& alg, const Word& word);

}  // namespace qhopf
