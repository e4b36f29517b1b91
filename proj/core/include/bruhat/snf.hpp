// SPDX-License-Identifier: Apache-2.0
//
// Smith normal form over the integers. Two independent routes are provided:
// elimination, and determinantal divisors (gcds of k x k minors). Only the
// invariant factors are computed, never the transforming matrices.
#pragma once

#include "bruhat/bigint.hpp"
#include "bruhat/int_matrix.hpp"
#include "bruhat/report.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace bruhat {

/// Invariant factors b_1 | b_2 | ... | b_min(rows, cols), all nonnegative.
/// This is the trimmed square form: zero rows and columns beyond min(rows,
/// cols) are dropped.
struct SnfResult {
  std::vector<BigInt> invariants;

  std::string to_string() const;  // "(1,2)"
  std::string to_json() const;    // {"invariants": ["1", "2"]}
  friend bool operator==(const SnfResult&, const SnfResult&) = default;
};

/// Elimination with smallest-absolute-value pivoting, followed by a
/// gcd/lcm repair pass that enforces the divisibility chain.
SnfResult snf(const IntMatrix& a);

inline constexpr std::size_t kMinorGcdMaxSize = 8;

/// b_k = d_k / d_{k-1}, d_k the gcd of all k x k minors. Exponential in the
/// size, so throws std::invalid_argument when min(rows, cols) exceeds
/// kMinorGcdMaxSize.
SnfResult snf_via_minor_gcd(const IntMatrix& a);

/// Number of permutations of S_n with k inversions (Mahonian number), from
/// the product (1)(1+q)(1+q+q^2)...; throws std::out_of_range unless
/// 0 <= k <= N.
BigInt rank_size(int n, int k);

/// All Mahonian numbers for S_n, indices 0..N.
std::vector<BigInt> rank_sizes(int n);

/// (hi - lo)! snf(D), where D carries sizes[i] - sizes[i-1] copies of
/// C(hi - i, lo - i) for i = 0..lo. Requires lo < hi and lo + hi <= top rank
/// of the rank-symmetric poset whose rank sizes are given.
SnfResult predicted_snf_from_rank_sizes(const std::vector<BigInt>& sizes, int lo, int hi);

/// Predicted tilde-SNF of the lo -> hi powers of the lowering and raising
/// operators on S_n. Throws std::invalid_argument unless 0 <= lo < hi <= N
/// and lo + hi <= N.
SnfResult predicted_snf(int n, int lo, int hi);

/// Computes the four matrices Delta^[lo,hi], Delta^[N-hi,N-lo],
/// Nabla^[lo,hi], Nabla^[N-hi,N-lo] in the padded Schubert basis and compares
/// each tilde-SNF against predicted_snf.
Report verify_snf_theorem(int n, int lo, int hi);

/// Every valid (lo, hi) pair for S_n, run with up to `jobs` threads.
Report verify_snf_theorem_all(int n, int jobs = 1);

/// A fixed sample of (lo, hi) pairs used by default at n = 5.
std::vector<std::pair<int, int>> snf_sample_pairs(int n);

}  // namespace bruhat
