#pragma once

// Finite abelian group parts of algebras written in the idempotent basis.
//
// A crossed algebra has basis 1_b m, where 1_b runs over the primitive
// idempotents of C[G] and m over the monomial basis of a "nil" algebra B on
// which G acts diagonally: g m g^-1 = chi_m(g) m. Then m 1_c = 1_{c+w(m)} m,
// so products of basis elements are single terms or zero.

#include <functional>
#include <vector>

#include "qhopf/algebra.hpp"

namespace qhopf {

/// G = Z_{d_1} x ... x Z_{d_k} with character roots r_i = zeta_N^{root_exps[i]}
/// of exact order d_i, so that 1_b g_i = r_i^{b_i} 1_b.
struct GroupPart {
  std::vector<int> orders;
  std::vector<int> root_exps;
  int scalar_order = 1;
  Index nil_dim = 1;  // basis index of 1_b m is b * nil_dim + m

  Index size() const;
  /// Mixed radix, first component most significant.
  std::vector<int> decode(Index u) const;
  Index encode(const std::vector<int>& u) const;
  Index add(Index u, Index v) const;
  Index neg(Index u) const;
  Index sub(Index u, Index v) const { return add(u, neg(v)); }
  /// r_i^k
  CycloNum root_power(std::size_t i, std::int64_t k) const;
  /// prod_i r_i^{b_i u_i}: the value of character b on the element u.
  CycloNum pairing(Index b, Index u) const;
  Index idempotent_index(Index b) const { return b * nil_dim; }

  /// Throws unless the roots have the declared orders.
  void validate() const;
};

/// Builds the crossed algebra of G and nil with weights w(m) (as group
/// indices) for every nil basis monomial.
AlgebraPtr crossed_algebra(const std::string& name, const GroupPart& g, const AlgebraPtr& nil,
                           const std::vector<Index>& weights);

/// Weights of all nil monomials from the weights of the nil generators.
std::vector<Index> monomial_weights(const GroupPart& g, const FinAlgebra& nil,
                                    const std::vector<Index>& generator_weights);

AlgElement idempotent(const AlgebraPtr& alg, const GroupPart& g, Index b);
/// The group element u = sum_b pairing(b, u) 1_b.
AlgElement group_element(const AlgebraPtr& alg, const GroupPart& g, Index u);
/// sum_b 1_b m.
AlgElement nil_element(const AlgebraPtr& alg, const GroupPart& g, Index m);

using DiagonalFn = std::function<CycloNum(const std::vector<Index>&)>;

/// sum over b_1..b_k of f(b) 1_{b_1} x ... x 1_{b_k}; zero values are skipped.
AlgElement diagonal_tensor(const AlgebraPtr& alg, const GroupPart& g, int degree,
                           const DiagonalFn& f);
/// Dense table of coefficients of a diagonal tensor, indexed by the flat
/// character tuple; nullopt when some term is not a tensor of idempotents.
std::optional<std::vector<CycloNum>> diagonal_values(const AlgElement& x, const GroupPart& g);

/// Inverse of a diagonal tensor, coefficient by coefficient.
AlgElement diagonal_inverse(const AlgElement& x, const GroupPart& g);

/// Coproduct, counit and antipode of the group part: Delta(1_b) = sum 1_c x 1_{b-c},
/// eps(1_b) = [b = 0], S(1_b) = 1_{-b}.
AlgElement group_coproduct(const AlgebraPtr& alg, const GroupPart& g, Index b);

/// Linear map on a crossed algebra, multiplicative from the images of the
/// idempotents and of the nil generators. With anti set, the image of 1_b m
/// is img(m_r) ... img(m_1) img(1_b).
LinMap extend_crossed(const AlgebraPtr& alg, const GroupPart& g, const FinAlgebra& nil,
                      const std::vector<AlgElement>& idempotent_images,
                      const std::vector<AlgElement>& generator_images, const Space& codomain,
                      bool anti = false);

/// Separable transforms between group-basis coefficients phi(u_1..u_k) and
/// character values f(b_1..b_k) = sum_u phi(u) prod r^{b u}.
std::vector<CycloNum> to_characters(const GroupPart& g, int degree,
                                    std::vector<CycloNum> group_coeffs);
std::vector<CycloNum> from_characters(const GroupPart& g, int degree,
                                      std::vector<CycloNum> values);

}  // namespace qhopf
