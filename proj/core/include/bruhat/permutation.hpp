// SPDX-License-Identifier: Apache-2.0
//
// Permutations of {1..n} in one-line notation, together with the statistics
// and cover relations of the weak and strong Bruhat orders.
#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace bruhat {

/// A sequence of nonnegative integers. Lehmer codes and exponent vectors
/// both use this type; for S_n they have length n - 1.
using Composition = std::vector<int>;

class Permutation {
 public:
  Permutation() = default;

  /// Takes a one-line word on {1..n}; throws std::invalid_argument unless it
  /// is a bijection.
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);

  /// Accepts "2143" (one digit per entry) or "2,10,1,...".
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(word_.size()); }

  /// Entry at 1-based position `pos`.
  int at(int pos) const { return word_[static_cast<std::size_t>(pos - 1)]; }

  const std::vector<int>& word() const { return word_; }

  /// Digit string for n <= 9, comma-separated otherwise.
  std::string to_string() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> word_;
};

/// N = n(n-1)/2, the length of the longest element.
int max_length(int n);

/// Number of inversions.
int length(const Permutation& w);

/// c_i = #{j > i : w_j < w_i} for i = 1..n-1.
Composition lehmer_code(const Permutation& w);

Permutation inverse(const Permutation& w);

/// w t_{ij}: exchanges the entries at positions i < j.
Permutation right_multiply_transposition(const Permutation& w, int i, int j);

/// s_i w: exchanges the values i and i + 1.
Permutation left_multiply_simple(const Permutation& w, int i);

/// w0 w: replaces every entry v by n + 1 - v.
Permutation left_multiply_longest(const Permutation& w);

struct WeakCover {
  Permutation target;
  int index;  // target = w s_index
  friend bool operator==(const WeakCover&, const WeakCover&) = default;
};

struct StrongCover {
  Permutation target;
  int i;  // target = w t_{ij}
  int j;
  friend bool operator==(const StrongCover&, const StrongCover&) = default;
};

/// Right weak covers w < w s_i, ordered by i.
std::vector<WeakCover> weak_covers_up(const Permutation& w);

/// Strong covers w < w t_{ij}, ordered by (i, j).
std::vector<StrongCover> strong_covers_up(const Permutation& w);

bool is_weak_cover(const Permutation& w, int i);
bool is_strong_cover(const Permutation& w, int i, int j);

Permutation longest_element(int n);

/// All w in S_n with length k, lexicographic by one-line word.
/// Throws std::out_of_range unless 0 <= k <= N.
std::vector<Permutation> permutations_of_rank(int n, int k);

/// Every rank of S_n at once; entry k equals permutations_of_rank(n, k).
std::vector<std::vector<Permutation>> permutations_by_rank(int n);

struct PermutationHash {
  std::size_t operator()(const Permutation& w) const noexcept;
};

}  // namespace bruhat
