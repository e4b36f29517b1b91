// SPDX-License-Identifier: Apache-2.0
//
// Products of chains P^M = {x^a : 0 <= a <= M}, their standard raising and
// lowering operators, and the recursive integral basis on which powers of the
// raising operator become diagonal.
#pragma once

#include "bruhat/bigint.hpp"
#include "bruhat/int_matrix.hpp"
#include "bruhat/polynomial.hpp"
#include "bruhat/report.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace bruhat {

class ChainProfile {
 public:
  ChainProfile() = default;
  /// Throws std::invalid_argument on a negative length.
  explicit ChainProfile(std::vector<int> lengths);

  /// "3,2,1"
  static ChainProfile parse(std::string_view text);

  const std::vector<int>& lengths() const { return lengths_; }
  std::size_t size() const { return lengths_.size(); }
  int total() const;

  /// Lengths sorted weakly decreasing with zeros dropped.
  ChainProfile normalized() const;

  /// normalized().lengths()[t] == lengths()[normalization_order()[t]].
  /// Ties keep their original relative order.
  std::vector<std::size_t> normalization_order() const;

  std::string to_string() const;
  friend bool operator==(const ChainProfile&, const ChainProfile&) = default;

 private:
  std::vector<int> lengths_;
};

/// Exponents a <= M with |a| = n, decreasing lex.
std::vector<Exponent> chain_rank_monomials(const ChainProfile& m, int n);

/// #P_n^M for n = 0..|M|.
std::vector<BigInt> chain_rank_sizes(const ChainProfile& m);

/// U_M(x^a) = sum_i (a_i + 1) x_i x^a, terms leaving the box dropped.
/// Layer layout: rows P_lo, columns P_hi, entry = coefficient of the column
/// monomial in U^(hi-lo) applied to the row monomial. Throws
/// std::out_of_range unless 0 <= lo <= hi <= |M|.
IntMatrix um_layer_matrix(const ChainProfile& m, int lo, int hi);

/// D_M(x^b) = sum_i (M_i - b_i + 1) x^b / x_i. Same layout as
/// um_layer_matrix: entry = coefficient of the row monomial in D^(hi-lo)
/// applied to the column monomial.
IntMatrix dm_layer_matrix(const ChainProfile& m, int lo, int hi);

/// The recursively constructed set A_n^M of #P_n - #P_{n-1} monomials, in the
/// caller's variable labels. Throws std::invalid_argument unless
/// 0 <= 2n <= |M|.
std::vector<Exponent> construct_A(const ChainProfile& m, int n);

/// B_n^M as coordinate vectors against chain_rank_monomials(m, n): for every
/// admissible m' and f in A_{m'}^M, U^(n-m') f / (n-m')!. Throws
/// std::invalid_argument unless 0 <= n <= |M|.
std::vector<std::vector<BigInt>> construct_B(const ChainProfile& m, int n);

/// True iff B_n^M expressed in the monomial basis is square with
/// determinant +-1.
bool base_change_unimodular_check(const ChainProfile& m, int n);

/// tilde-SNF of U^[lo,hi] and U^[|M|-hi,|M|-lo] against
/// (hi-lo)! snf(D). Throws std::invalid_argument unless 0 <= lo < hi <= |M|
/// and lo + hi <= |M|.
Report um_snf_check(const ChainProfile& m, int lo, int hi);

/// prod_{t=0..n} ((n'-t)!/(n-t)!)^(#P_t - #P_{t-1}).
BigInt um_determinant_formula(const ChainProfile& m, int n, int n_prime);

/// |det U^[n,n']| equals um_determinant_formula. Throws
/// std::invalid_argument unless n' = |M| - n and 2n <= |M|.
bool um_determinant_check(const ChainProfile& m, int n, int n_prime);

/// U^[lo,hi] and D^[|M|-hi,|M|-lo] are transposes under a -> M - a.
bool chain_transpose_check(const ChainProfile& m, int lo, int hi);

/// Every rank: A-set cardinality and unimodularity of B_n^M.
Report chains_basis_suite(const ChainProfile& m);

/// um_snf_check over every valid (lo, hi).
Report chains_snf_suite(const ChainProfile& m, int jobs = 1);

/// um_determinant_check over every square rank pair.
Report chains_det_suite(const ChainProfile& m);

/// [U_M, D_M] acts on rank n as (2n - |M|) times the identity.
Report chains_sl2_suite(const ChainProfile& m);

}  // namespace bruhat
