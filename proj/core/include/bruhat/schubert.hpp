// SPDX-License-Identifier: Apache-2.0
//
// Schubert polynomials built from x^rho by the divided-difference recursion
// S_{s_i w} = N_i S_w (left multiplication, applied whenever s_i w < w), and
// their padded versions.
//
// Note on conventions: with left multiplication in the recursion, schubert(w)
// is the polynomial the wider literature indexes by w^{-1}.
// schubert_standard(w) = schubert(w^{-1}) is the usual one, whose
// distinguished monomial is x^{code(w)}. Every weight identity in this
// library is stated with schubert(w) and right covers w s_i, w t_ij.
#pragma once

#include "bruhat/int_matrix.hpp"
#include "bruhat/permutation.hpp"
#include "bruhat/polynomial.hpp"

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

namespace bruhat {

IntPolynomial schubert(const Permutation& w);
IntPolynomial schubert_standard(const Permutation& w);

/// Expansion coefficients, zero entries omitted.
using BasisExpansion = std::map<Permutation, BigInt>;

/// Every Schubert polynomial of S_n plus, per rank, the change of basis
/// between padded Schubert polynomials and padded monomials. Immutable after
/// construction.
class SchubertTable {
 public:
  explicit SchubertTable(int n);

  int n() const { return n_; }
  int top_rank() const { return max_length(n_); }

  const IntPolynomial& polynomial(const Permutation& w) const;
  PaddedPolynomial padded(const Permutation& w) const { return pad(polynomial(w)); }

  /// Canonical (lex) permutations of rank k.
  const std::vector<Permutation>& permutations(int k) const;
  std::size_t index_in_rank(const Permutation& w) const;

  /// Staircase exponents of degree k, decreasing lex.
  const std::vector<Exponent>& monomials(int k) const;
  std::size_t monomial_index(const Exponent& alpha) const;

  /// Row w holds the coefficients of S_w against monomials(k).
  const IntMatrix& change_of_basis(int k) const;

  /// Integer inverse of change_of_basis(k).
  const IntMatrix& inverse_change_of_basis(int k) const;

  /// Coefficient vector of p against monomials(k).
  std::vector<BigInt> monomial_coordinates(const PaddedPolynomial& p, int k) const;

  /// Coefficient vector of p against permutations(k).
  std::vector<BigInt> schubert_coordinates(const PaddedPolynomial& p, int k) const;

  /// p = sum c_w S~_w. Throws std::invalid_argument for non-homogeneous input.
  BasisExpansion expand(const PaddedPolynomial& p) const;

  /// Descriptions of every pair of recursion steps that disagreed while the
  /// table was filled. Empty when the recursion is path-independent.
  const std::vector<std::string>& recursion_conflicts() const { return conflicts_; }

  /// Number of (w, i) recursion steps that were cross-checked.
  std::size_t recursion_steps() const { return steps_; }

 private:
  int n_;
  std::vector<std::vector<Permutation>> ranks_;
  std::unordered_map<Permutation, IntPolynomial, PermutationHash> polys_;
  std::unordered_map<Permutation, std::size_t, PermutationHash> rank_index_;
  std::vector<std::vector<Exponent>> monomials_;
  std::map<Exponent, std::size_t> monomial_index_;
  std::vector<IntMatrix> basis_;
  std::vector<IntMatrix> inverse_;
  std::vector<std::string> conflicts_;
  std::size_t steps_ = 0;
};

/// Process-wide table for S_n, built once under a lock and then shared
/// read-only.
const SchubertTable& schubert_table(int n);

/// Unique expansion of a homogeneous padded polynomial in the padded
/// Schubert basis of its rank.
BasisExpansion expand_in_padded_schubert_basis(const PaddedPolynomial& p);

}  // namespace bruhat
